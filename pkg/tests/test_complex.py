import pytest

from conftest import fuss_catalan, naive_maximal_cliques
from mclusters import (ColouredRoot, build_graph, build_root_system, complements,
                       complex_to_json, enumerate_facets, f_vector, parse_type,
                       verify_complement_counts, verify_facet_sizes,
                       verify_parabolic_restriction)


@pytest.fixture(scope="module")
def ga2(a2):
    return build_graph(a2, 1)


class TestBuildGraph:
    def test_a1_m1(self):
        rs = build_root_system(parse_type("A1"))
        g = build_graph(rs, 1)
        assert len(g.nodes) == 2
        assert not g.adjacency[0][1]
        assert g.adjacency[0][0] and g.adjacency[1][1]

    def test_a2_m1_pentagon(self, ga2):
        assert len(ga2.nodes) == 5
        facets = enumerate_facets(ga2)
        assert len(facets) == 5
        assert all(len(f.indices) == 2 for f in facets)

    def test_adjacency_symmetric(self, ga2):
        size = len(ga2.nodes)
        for i in range(size):
            for j in range(size):
                assert ga2.adjacency[i][j] == ga2.adjacency[j][i]

    def test_oracles_agree_entrywise(self, a2):
        g_comb = build_graph(a2, 2, "combinatorial")
        g_cat = build_graph(a2, 2, "categorical")
        assert g_comb.adjacency == g_cat.adjacency

    def test_bad_oracle(self, a2):
        with pytest.raises(ValueError):
            build_graph(a2, 1, "guesswork")

    def test_thread_env(self, a2, monkeypatch):
        monkeypatch.setenv("MCLUSTER_THREADS", "4")
        g = build_graph(a2, 2)
        assert g.adjacency == build_graph(a2, 2).adjacency


class TestFacets:
    @pytest.mark.parametrize("name,m,count", [("A2", 1, 5), ("A2", 2, 12), ("A3", 1, 14)])
    def test_fixture_counts(self, name, m, count):
        rs = build_root_system(parse_type(name))
        facets = enumerate_facets(build_graph(rs, m))
        assert len(facets) == count
        assert count == fuss_catalan(rs, m)

    @pytest.mark.parametrize("name,m", [("A2", 1), ("A2", 3), ("A3", 2), ("D4", 1)])
    def test_matches_naive_enumeration(self, name, m):
        rs = build_root_system(parse_type(name))
        g = build_graph(rs, m)
        assert len(g.nodes) <= 40
        assert [f.indices for f in enumerate_facets(g)] == naive_maximal_cliques(g.adjacency)

    def test_facet_sizes(self, d4):
        facets = enumerate_facets(build_graph(d4, 1))
        report = verify_facet_sizes(facets, d4.n)
        assert report.passed and report.checked == len(facets)

    def test_a3_m2_sizes(self, a3):
        report = verify_facet_sizes(enumerate_facets(build_graph(a3, 2)), a3.n)
        assert report.passed

    def test_a1_singletons(self):
        rs = build_root_system(parse_type("A1"))
        for m in (1, 2, 5):
            facets = enumerate_facets(build_graph(rs, m))
            assert len(facets) == m + 1
            assert all(len(f.indices) == 1 for f in facets)


class TestComplements:
    def test_a2_m1_two_complements(self, ga2):
        for f in enumerate_facets(ga2):
            for drop in f.indices:
                t = tuple(i for i in f.indices if i != drop)
                assert len(complements(ga2, t)) == 2

    def test_a2_m2_three_complements(self, a2):
        g = build_graph(a2, 2)
        report = verify_complement_counts(g, enumerate_facets(g))
        assert report.passed

    def test_a1_m3_empty_set(self):
        rs = build_root_system(parse_type("A1"))
        g = build_graph(rs, 3)
        assert complements(g, ()) == [0, 1, 2, 3]

    def test_rejects_wrong_size(self, a3):
        g = build_graph(a3, 1)
        with pytest.raises(ValueError):
            complements(g, (0,))

    def test_rejects_incompatible_input(self, a2):
        g = build_graph(a2, 2)
        bad = (g.nodes.index(ColouredRoot((1, 0), 1)),)
        incompatible = bad + (g.nodes.index(ColouredRoot((1, 0), 2)),)
        with pytest.raises(ValueError):
            complements(g, incompatible[:1] + incompatible[1:])


class TestFVector:
    def test_a1_m1(self):
        rs = build_root_system(parse_type("A1"))
        assert f_vector(build_graph(rs, 1)) == [1, 2]

    def test_empty_face_counted(self, ga2):
        assert f_vector(ga2)[0] == 1

    @pytest.mark.parametrize("name,m", [("A2", 1), ("A2", 2), ("A3", 1)])
    def test_top_entry_is_facet_count(self, name, m):
        rs = build_root_system(parse_type(name))
        g = build_graph(rs, m)
        fv = f_vector(g)
        assert len(fv) == rs.n + 1
        assert fv[rs.n] == len(enumerate_facets(g))


class TestParabolicRestriction:
    @pytest.mark.parametrize("m", [1, 2])
    def test_a3_drop_end(self, a3, m):
        report = verify_parabolic_restriction(a3, m, [0, 1])
        assert report.passed and report.checked > 0

    def test_a3_drop_middle(self, a3):
        report = verify_parabolic_restriction(a3, 1, [0, 2])
        assert report.passed

    def test_identity_keep(self, a3):
        assert verify_parabolic_restriction(a3, 1, range(3)).passed

    @pytest.mark.parametrize("name,m", [("A4", 1), ("D4", 1)])
    def test_single_vertex_deletions(self, name, m):
        rs = build_root_system(parse_type(name))
        for drop in range(rs.n):
            keep = [v for v in range(rs.n) if v != drop]
            assert verify_parabolic_restriction(rs, m, keep).passed


class TestJson:
    def test_schema(self, a2):
        data = complex_to_json(a2, 1, "combinatorial")
        assert data["type"] == "A2" and data["rank"] == 2 and data["m"] == 1
        assert len(data["facets"]) == 5
        assert data["f_vector"] == [1, 5, 5]
        assert data["verification"]["theorem2"] == "pass"
        assert data["verification"]["theorem3"] == "pass"
        assert all(entry["result"] == "pass" for entry in data["verification"]["theorem4"])

    def test_deterministic(self, a2):
        import json
        one = json.dumps(complex_to_json(a2, 2, "combinatorial"), indent=2)
        two = json.dumps(complex_to_json(a2, 2, "combinatorial"), indent=2)
        assert one == two
