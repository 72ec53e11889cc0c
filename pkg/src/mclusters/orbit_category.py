"""Orbit-category model: the W bijection, orbit Ext dimensions, and the
categorical compatibility oracle.

Objects are canonical derived representatives in the fundamental domain
for the automorphism G = (inverse translate) o [m], i.e. with fine degree
in [-mh+1, 2].  Ext^i between orbits is the finite sum of derived Hom
spaces Hom(G^p X, Y[i]); hereditary support kills all but a short window
of powers p.
"""

from __future__ import annotations

import functools
from typing import List

from .coloured_roots import ColouredRoot, check_coloured, coloured_ground_set
from .derived import DerivedCategory, DerivedObject, derived_category, shift
from .root_system import RootSystem


class MClusterCategory:
    def __init__(self, rs: RootSystem, m: int):
        if m < 1:
            raise ValueError("m must be >= 1")
        self.rs = rs
        self.m = m
        self.D: DerivedCategory = derived_category(rs)

    # -- fundamental domain --------------------------------------------

    def in_domain(self, x: DerivedObject) -> bool:
        return -self.m * self.rs.h + 1 <= self.D.fine_degree(x) <= 2

    def W(self, x: ColouredRoot) -> DerivedObject:
        """Coloured root beta^j -> V(beta)[j-1]; negative simple -> I_i[-1]."""
        check_coloured(self.rs, self.m, x)
        i = self.rs.negative_simple_index(x.root)
        if i is not None:
            return DerivedObject(self.D.inj_dims[i], -1)
        return DerivedObject(x.root, x.colour - 1)

    def W_inverse(self, obj: DerivedObject) -> ColouredRoot:
        if obj.shift == -1:
            i = self.D._inj_index.get(obj.beta)
            if i is None:
                raise ValueError(f"{obj} is not in the image of W")
            return ColouredRoot(self.rs.negative_simple(i), 1)
        if 0 <= obj.shift <= self.m - 1:
            return ColouredRoot(obj.beta, obj.shift + 1)
        raise ValueError(f"{obj} is not in the image of W")

    def objects(self) -> List[DerivedObject]:
        return [self.W(x) for x in coloured_ground_set(self.rs, self.m)]

    # -- orbit automorphism --------------------------------------------

    def G(self, x: DerivedObject) -> DerivedObject:
        return shift(self.D.tau_inverse(x), self.m)

    def G_inverse(self, x: DerivedObject) -> DerivedObject:
        return self.D.tau(shift(x, -self.m))

    def reduce(self, x: DerivedObject) -> DerivedObject:
        """Canonical fundamental-domain representative of the G-orbit."""
        guard = 0
        while self.D.fine_degree(x) > 2:
            x = self.G(x)
            guard += 1
            if guard > 2 * len(self.rs.positive_roots) + 4:
                raise RuntimeError("fundamental-domain reduction failed to land (bug)")
        while self.D.fine_degree(x) < -self.m * self.rs.h + 1:
            x = self.G_inverse(x)
            guard += 1
            if guard > 2 * len(self.rs.positive_roots) + 4:
                raise RuntimeError("fundamental-domain reduction failed to land (bug)")
        return x

    # -- Ext dimensions -------------------------------------------------

    def ext(self, x: DerivedObject, y: DerivedObject, i: int, slack: int = 0) -> int:
        """dim Ext^i between the orbits of x and y, as the orbit sum of
        derived Hom spaces.  The shift of G^p x is strictly increasing in
        p, so only powers whose shift lands next to y[i] contribute;
        ``slack`` widens the scanned window for soundness checks."""
        if not 1 <= i <= self.m:
            raise ValueError(f"Ext degree {i} out of range [1, {self.m}]")
        target = DerivedObject(y.beta, y.shift + i)
        total = 0
        obj, past = x, 0
        while True:
            if obj.shift > target.shift:
                past += 1
                if past > slack:
                    break
            total += self.D.hom(obj, target)
            obj = self.G(obj)
        obj, past = self.G_inverse(x), 0
        while True:
            if obj.shift < target.shift - 1:
                past += 1
                if past > slack:
                    break
            total += self.D.hom(obj, target)
            obj = self.G_inverse(obj)
        return total

    def compatible(self, x: ColouredRoot, y: ColouredRoot) -> bool:
        X, Y = self.W(x), self.W(y)
        return all(self.ext(X, Y, i) == 0 for i in range(1, self.m + 1))

    # -- executable lemma checks ---------------------------------------

    def shift_matches_rotation(self, x: ColouredRoot) -> bool:
        """Whether W of the rotated root equals W(x)[1] reduced into the
        fundamental domain."""
        from .coloured_roots import rotation_Rm

        rotated = self.W(rotation_Rm(self.rs, self.m, x))
        return self.reduce(shift(self.W(x), 1)) == rotated

    def ext_symmetry(self, x: DerivedObject, y: DerivedObject, i: int) -> bool:
        """Calabi-Yau style dimension symmetry Ext^i(X,Y) = Ext^{m+1-i}(Y,X)."""
        return self.ext(x, y, i) == self.ext(y, x, self.m + 1 - i)


@functools.lru_cache(maxsize=None)
def mcluster_category(rs: RootSystem, m: int) -> MClusterCategory:
    return MClusterCategory(rs, m)


def compatible_categorical(rs: RootSystem, m: int, x: ColouredRoot, y: ColouredRoot) -> bool:
    return mcluster_category(rs, m).compatible(x, y)


def ext_orbit(rs: RootSystem, m: int, x: DerivedObject, y: DerivedObject, i: int) -> int:
    return mcluster_category(rs, m).ext(x, y, i)
