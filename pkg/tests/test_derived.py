import itertools
import math

import pytest

from mclusters import (DerivedObject, build_root_system, derived_category,
                       parse_type, shift)
from mclusters.orbit_category import mcluster_category


@pytest.fixture(scope="module")
def da2(a2):
    return derived_category(a2)


@pytest.fixture(scope="module")
def da3(a3):
    return derived_category(a3)


class TestFineTable:
    def test_a2_values(self, da2):
        assert da2.phi[(0, 1)] == 0
        assert da2.phi[(1, 1)] == -1
        assert da2.phi[(1, 0)] == -2

    def test_a3_window(self, a3, da3):
        assert len(da3.phi) == 6
        assert set(da3.phi.values()) <= set(range(-3, 1))

    @pytest.mark.parametrize("name", ["A4", "D4", "E6"])
    def test_window_filled(self, name):
        rs = build_root_system(parse_type(name))
        d = derived_category(rs)
        assert len(d.phi) == len(rs.positive_roots)
        assert all(-rs.h + 1 <= v <= 0 for v in d.phi.values())
        for i in range(rs.n):
            assert d.phi[d.proj_dims[i]] == (0 if i in rs.I_minus else -1)

    def test_reducible_rejected(self, a3):
        from mclusters.root_system import parabolic
        with pytest.raises(ValueError):
            derived_category(parabolic(a3, [0, 2]))


class TestDegrees:
    def test_module_slice_coarse_zero(self, a2, da2):
        for beta in a2.positive_roots:
            assert da2.coarse_degree(DerivedObject(beta, 0)) == 0

    def test_negative_simple_fine_degrees(self, a2, da2):
        # minus-side vertex sits in fine degree 2, plus-side in degree 1
        assert da2.fine_degree(da2.V((0, -1))) == 2
        assert da2.fine_degree(da2.V((-1, 0))) == 1

    def test_coarse_is_ceil_of_fine(self, a3, da3):
        for beta in a3.positive_roots:
            for s in range(-2, 3):  # 5-slice window
                x = DerivedObject(beta, s)
                assert da3.coarse_degree(x) == math.ceil(da3.fine_degree(x) / a3.h)


class TestTau:
    def test_simple_nonprojective(self, da2):
        assert da2.tau(DerivedObject((1, 0), 0)) == DerivedObject((0, 1), 0)

    def test_projective_rule(self, da2):
        # tau of the big projective is the injective at its vertex, shifted
        assert da2.tau(DerivedObject((1, 1), 0)) == DerivedObject((1, 0), -1)

    def test_shift_identity(self, da2):
        x = DerivedObject((1, 1), 2)
        assert shift(x, 0) == x
        assert shift(shift(x, 3), -3) == x

    def test_tau_raises_fine_by_two(self, a3, da3):
        for beta in a3.positive_roots:
            for s in (-1, 0, 1):
                x = DerivedObject(beta, s)
                assert da3.fine_degree(da3.tau(x)) == da3.fine_degree(x) + 2
                assert da3.fine_degree(shift(x, 1)) == da3.fine_degree(x) - a3.h

    def test_tau_bijective(self, a3, da3):
        for beta in a3.positive_roots:
            for s in (-1, 0, 1):
                x = DerivedObject(beta, s)
                assert da3.tau_inverse(da3.tau(x)) == x
                assert da3.tau(da3.tau_inverse(x)) == x

    def test_tau_commutes_with_shift(self, da3, a3):
        for beta in a3.positive_roots:
            x = DerivedObject(beta, 0)
            assert da3.tau(shift(x, 2)) == shift(da3.tau(x), 2)


class TestHomDerived:
    def test_module_hom(self, da2):
        assert da2.hom(DerivedObject((1, 1), 0), DerivedObject((1, 0), 0)) == 1

    def test_identity_endomorphisms(self, a3, da3):
        for beta in a3.positive_roots:
            x = DerivedObject(beta, 0)
            assert da3.hom(x, x) == 1

    def test_two_slice_support(self, a2, da2):
        for beta, gamma in itertools.product(a2.positive_roots, repeat=2):
            assert da2.hom(DerivedObject(beta, 0), DerivedObject(gamma, 2)) == 0
            assert da2.hom(DerivedObject(beta, 0), DerivedObject(gamma, -1)) == 0

    def test_serre_duality_three_slices(self, a3, da3):
        objs = [DerivedObject(beta, s)
                for beta in a3.positive_roots for s in (0, 1, 2)]
        for x, y in itertools.product(objs, repeat=2):
            assert da3.hom(x, shift(y, 1)) == da3.hom(y, da3.tau(x))


class TestV:
    def test_positive_clause(self, da2):
        assert da2.V((1, 1)) == DerivedObject((1, 1), 0)

    def test_negative_simple(self, da2):
        assert da2.V((0, -1)) == DerivedObject((1, 1), -1)

    def test_image_in_fundamental_domain(self, a3, da3):
        ground = list(a3.positive_roots) + [a3.negative_simple(i) for i in range(a3.n)]
        degrees = [da3.fine_degree(da3.V(a)) for a in ground]
        assert all(-a3.h + 1 <= d <= 2 for d in degrees)
        assert len({da3.V(a) for a in ground}) == len(ground)

    @pytest.mark.parametrize("name", ["A2", "A3", "D4"])
    def test_rotation_becomes_shift(self, name):
        # V(R(alpha)) equals V(alpha)[1] once both are reduced into the
        # fundamental domain of the m=1 orbit automorphism.
        from mclusters.coloured_roots import rotation_R
        rs = build_root_system(parse_type(name))
        d = derived_category(rs)
        cat = mcluster_category(rs, 1)
        ground = list(rs.positive_roots) + [rs.negative_simple(i) for i in range(rs.n)]
        for alpha in ground:
            assert cat.reduce(shift(d.V(alpha), 1)) == d.V(rotation_R(rs, alpha))


class TestDotExport:
    def test_a2_single_slice(self, da2):
        dot = da2.export_zq_dot(0, 0)
        assert dot.count("[label=") == 3
        assert dot.count("->") == 2

    def test_empty_window(self, da2):
        dot = da2.export_zq_dot(1, 0)
        assert "label" not in dot and "->" not in dot

    def test_a3_slice_counts(self, a3, da3):
        dot = da3.export_zq_dot(0, 0)
        assert dot.count("[label=") == len(a3.positive_roots)

    def test_deterministic(self, da3):
        assert da3.export_zq_dot(-1, 1) == da3.export_zq_dot(-1, 1)
