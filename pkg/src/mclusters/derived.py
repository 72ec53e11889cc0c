"""Indecomposables of the bounded derived category as shifted modules.

Every indecomposable is written canonically as ``V(beta)[s]`` with ``beta``
a positive root and ``s`` an integer: each coarse-degree slice is a copy
of the module category, so this form is unique.  The fine grading places
the projectives at degrees 0 (sinks) and -1 (sources) and extends along
inverse-translate orbits, dropping by 2 per step.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Dict, List, Tuple

from . import quiver_rep
from .quiver_rep import BipartiteQuiver, Representation
from .root_system import Root, RootSystem


@dataclass(frozen=True, order=True)
class DerivedObject:
    beta: Root
    shift: int

    def __str__(self) -> str:
        coeffs = ",".join(str(c) for c in self.beta)
        return f"V({coeffs})[{self.shift}]"


def shift(x: DerivedObject, k: int) -> DerivedObject:
    return DerivedObject(x.beta, x.shift + k)


class DerivedCategory:
    """Computational context for one irreducible root system: fine-degree
    table, translate, Hom dimensions, and the bijection with the almost
    positive roots.  Built once, then read-only."""

    def __init__(self, rs: RootSystem):
        if not rs.irreducible:
            raise ValueError("derived-category model requires an irreducible system")
        self.rs = rs
        self.quiver = BipartiteQuiver.from_root_system(rs)
        self.proj_dims: Tuple[Root, ...] = tuple(
            quiver_rep.projective(self.quiver, i).dims for i in range(rs.n))
        self.inj_dims: Tuple[Root, ...] = tuple(
            quiver_rep.injective(self.quiver, i).dims for i in range(rs.n))
        self._proj_index = {d: i for i, d in enumerate(self.proj_dims)}
        self._inj_index = {d: i for i, d in enumerate(self.inj_dims)}
        self.phi: Dict[Root, int] = self._build_fine_table()
        self._modules: Dict[Root, Representation] = {}
        self._hom_cache: Dict[Tuple[Root, Root, int], int] = {}

    def _build_fine_table(self) -> Dict[Root, int]:
        rs = self.rs
        phi: Dict[Root, int] = {}
        for i in range(rs.n):
            phi[self.proj_dims[i]] = 0 if i in rs.I_minus else -1
        for i in range(rs.n):
            gamma = self.proj_dims[i]
            d = phi[gamma]
            while True:
                gamma = quiver_rep.coxeter_tau_inverse(rs, gamma)
                if not rs.is_positive_root(gamma):
                    break
                d -= 2
                if d < -rs.h + 1:
                    raise RuntimeError("fine-degree window underflow (bug)")
                phi[gamma] = d
        if len(phi) != len(rs.positive_roots):
            raise RuntimeError("fine-degree table incomplete (bug)")
        return phi

    def module(self, beta: Root) -> Representation:
        rep = self._modules.get(beta)
        if rep is None:
            rep = quiver_rep.indecomposable_for_root(self.rs, beta)
            self._modules[beta] = rep
        return rep

    def _check(self, x: DerivedObject) -> None:
        if not self.rs.is_positive_root(x.beta):
            raise ValueError(f"{x.beta} is not a positive root")

    def fine_degree(self, x: DerivedObject) -> int:
        self._check(x)
        return self.phi[x.beta] - x.shift * self.rs.h

    def coarse_degree(self, x: DerivedObject) -> int:
        self._check(x)
        return -x.shift

    def tau(self, x: DerivedObject) -> DerivedObject:
        self._check(x)
        i = self._proj_index.get(x.beta)
        if i is not None:
            return DerivedObject(self.inj_dims[i], x.shift - 1)
        gamma = quiver_rep.coxeter_tau(self.rs, x.beta)
        if not self.rs.is_positive_root(gamma):
            raise RuntimeError("translate of a non-projective left the positive roots (bug)")
        return DerivedObject(gamma, x.shift)

    def tau_inverse(self, x: DerivedObject) -> DerivedObject:
        self._check(x)
        i = self._inj_index.get(x.beta)
        if i is not None:
            return DerivedObject(self.proj_dims[i], x.shift + 1)
        gamma = quiver_rep.coxeter_tau_inverse(self.rs, x.beta)
        if not self.rs.is_positive_root(gamma):
            raise RuntimeError("inverse translate of a non-injective left the positive roots (bug)")
        return DerivedObject(gamma, x.shift)

    def hom(self, x: DerivedObject, y: DerivedObject) -> int:
        """Hom(V(beta)[s], V(gamma)[t]); hereditary, so supported only on
        shift differences 0 and 1."""
        diff = y.shift - x.shift
        if diff not in (0, 1):
            self._check(x)
            self._check(y)
            return 0
        key = (x.beta, y.beta, diff)
        value = self._hom_cache.get(key)
        if value is None:
            m, n = self.module(x.beta), self.module(y.beta)
            if diff == 0:
                value = quiver_rep.hom_dim(m, n)
            else:
                value = quiver_rep.ext1_dim(self.rs, m, n)
            self._hom_cache[key] = value
        return value

    def V(self, alpha: Root) -> DerivedObject:
        """Bijection from almost positive roots onto the fundamental
        domain with fine degrees in [-h+1, 2]."""
        i = self.rs.negative_simple_index(alpha)
        if i is not None:
            return DerivedObject(self.inj_dims[i], -1)
        if not self.rs.is_positive_root(alpha):
            raise ValueError(f"{alpha} is not an almost positive root")
        return DerivedObject(alpha, 0)

    # -- translation-quiver export -------------------------------------

    def _zq_object(self, i: int, p: int) -> DerivedObject:
        obj = DerivedObject(self.proj_dims[i], 0)
        for _ in range(p):
            obj = self.tau(obj)
        for _ in range(-p):
            obj = self.tau_inverse(obj)
        return obj

    def _zq_vertices(self, coarse_min: int, coarse_max: int) -> Dict[Tuple[int, int], DerivedObject]:
        verts: Dict[Tuple[int, int], DerivedObject] = {}
        if coarse_min > coarse_max:
            return verts
        for i in range(self.rs.n):
            # walk upward from p=0 (coarse degree is nondecreasing in p)
            for direction in (1, -1):
                p = 0 if direction == 1 else -1
                while True:
                    obj = self._zq_object(i, p)
                    d_c = self.coarse_degree(obj)
                    if direction == 1 and d_c > coarse_max:
                        break
                    if direction == -1 and d_c < coarse_min:
                        break
                    if coarse_min <= d_c <= coarse_max:
                        verts[(i, p)] = obj
                    p += direction
        return verts

    def export_zq_dot(self, coarse_min: int, coarse_max: int) -> str:
        """DOT digraph of the translation quiver restricted to a window of
        coarse degrees.  For each bipartite arrow s->t there is an edge
        (t,p)->(s,p) and an edge (s,p)->(t,p-1)."""
        verts = self._zq_vertices(coarse_min, coarse_max)
        lines = ["digraph ZQ {"]
        for (i, p) in sorted(verts):
            obj = verts[(i, p)]
            label = f"({i + 1},{p}) dF={self.fine_degree(obj)} {obj}"
            lines.append(f'  "v{i + 1}_p{p}" [label="{label}"];')
        for (s, t) in self.quiver.arrows:
            for (i, p) in sorted(verts):
                if i == t and (s, p) in verts:
                    lines.append(f'  "v{t + 1}_p{p}" -> "v{s + 1}_p{p}";')
                if i == s and (t, p - 1) in verts:
                    lines.append(f'  "v{s + 1}_p{p}" -> "v{t + 1}_p{p - 1}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


@functools.lru_cache(maxsize=None)
def derived_category(rs: RootSystem) -> DerivedCategory:
    return DerivedCategory(rs)
