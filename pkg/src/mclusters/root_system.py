"""Simply-laced root systems with bipartition and parabolic subsystems.

Vertices are indexed 0..n-1 internally; serialized output uses 1-based
labels.  Diagram shapes:

* ``A_n``: path 0-1-...-(n-1)
* ``D_n``: path 0-...-(n-3) with both n-2 and n-1 attached to n-3
* ``E_r``: path 0-...-(r-2) with vertex r-1 attached to vertex 2

Roots are integer coefficient vectors over the simple roots, stored as
tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

Root = Tuple[int, ...]

_RANK_BOUNDS = {"A": 1, "D": 4}
_E_RANKS = {6, 7, 8}


@dataclass(frozen=True)
class DynkinType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "D", "E"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "E":
            if self.rank not in _E_RANKS:
                raise ValueError(f"E rank must be 6, 7 or 8, got {self.rank}")
        elif self.rank < _RANK_BOUNDS[self.family]:
            raise ValueError(f"{self.family} rank must be >= {_RANK_BOUNDS[self.family]}, got {self.rank}")

    def edges(self) -> Tuple[Tuple[int, int], ...]:
        n = self.rank
        if self.family == "A":
            return tuple((i, i + 1) for i in range(n - 1))
        if self.family == "D":
            path = [(i, i + 1) for i in range(n - 3)]
            return tuple(path + [(n - 3, n - 2), (n - 3, n - 1)])
        path = [(i, i + 1) for i in range(n - 2)]
        return tuple(path + [(2, n - 1)])

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_type(text: str) -> DynkinType:
    text = text.strip()
    if len(text) < 2 or text[0].upper() not in "ADE":
        raise ValueError(f"cannot parse Dynkin type {text!r}")
    return DynkinType(text[0].upper(), int(text[1:]))


class RootSystem:
    """A (possibly reducible) simply-laced root system on a fixed diagram.

    Instances are immutable after construction and hash by identity, so
    they are safe to share across threads and usable as cache keys.
    """

    def __init__(self, n: int, edges: Sequence[Tuple[int, int]],
                 dynkin_type: Optional[DynkinType] = None,
                 I_plus: Optional[Iterable[int]] = None):
        self.type = dynkin_type
        self.n = n
        self.edges: Tuple[Tuple[int, int], ...] = tuple(sorted(tuple(sorted(e)) for e in edges))
        self.cartan: Tuple[Tuple[int, ...], ...] = self._build_cartan()
        self.components: Tuple[FrozenSet[int], ...] = self._components()
        if I_plus is None:
            self.I_plus, self.I_minus = self._bipartition()
        else:
            self.I_plus = frozenset(I_plus)
            self.I_minus = frozenset(range(n)) - self.I_plus
        self._check_bipartition()
        self.positive_roots: Tuple[Root, ...] = self._closure()
        self._positive_set = frozenset(self.positive_roots)
        self.coxeter_numbers: Tuple[int, ...] = tuple(
            2 * sum(1 for b in self.positive_roots if any(b[v] for v in comp)) // len(comp)
            for comp in self.components)

    @property
    def h(self) -> int:
        """Coxeter number; defined only for irreducible systems."""
        if len(self.components) != 1:
            raise ValueError("Coxeter number is per-component for reducible systems")
        return self.coxeter_numbers[0]

    @property
    def irreducible(self) -> bool:
        return len(self.components) == 1

    def _build_cartan(self) -> Tuple[Tuple[int, ...], ...]:
        c = [[2 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        for i, j in self.edges:
            c[i][j] = c[j][i] = -1
        return tuple(tuple(r) for r in c)

    def _components(self) -> Tuple[FrozenSet[int], ...]:
        seen = set()
        comps = []
        adj: Dict[int, List[int]] = {v: [] for v in range(self.n)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for v in range(self.n):
            if v in seen:
                continue
            stack, comp = [v], set()
            while stack:
                u = stack.pop()
                if u in comp:
                    continue
                comp.add(u)
                stack.extend(adj[u])
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(comps)

    def _bipartition(self) -> Tuple[FrozenSet[int], FrozenSet[int]]:
        # 2-colour each component, lowest vertex of the component on the plus side.
        colour: Dict[int, int] = {}
        adj: Dict[int, List[int]] = {v: [] for v in range(self.n)}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        for comp in self.components:
            start = min(comp)
            colour[start] = 0
            stack = [start]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in colour:
                        colour[w] = 1 - colour[u]
                        stack.append(w)
        plus = frozenset(v for v in range(self.n) if colour[v] == 0)
        return plus, frozenset(range(self.n)) - plus

    def _check_bipartition(self) -> None:
        if self.I_plus | self.I_minus != frozenset(range(self.n)):
            raise ValueError("bipartition does not cover the vertex set")
        for i, j in self.edges:
            if (i in self.I_plus) == (j in self.I_plus):
                raise ValueError(f"edge {{{i},{j}}} joins two vertices of the same part")

    def _closure(self) -> Tuple[Root, ...]:
        simples = [self.simple_root(i) for i in range(self.n)]
        out: List[Root] = list(simples)
        seen = set(out)
        k = 0
        while k < len(out):
            beta = out[k]
            k += 1
            for i in range(self.n):
                gamma = self.reflect(i, beta)
                if gamma not in seen and all(c >= 0 for c in gamma):
                    seen.add(gamma)
                    out.append(gamma)
        return tuple(out)

    def simple_root(self, i: int) -> Root:
        return tuple(1 if j == i else 0 for j in range(self.n))

    def negative_simple(self, i: int) -> Root:
        return tuple(-1 if j == i else 0 for j in range(self.n))

    def reflect(self, i: int, beta: Root) -> Root:
        """Simple reflection s_i applied to a coefficient vector."""
        if not 0 <= i < self.n:
            raise ValueError(f"vertex {i} out of range")
        c = sum(self.cartan[i][j] * beta[j] for j in range(self.n))
        return tuple(b - c if j == i else b for j, b in enumerate(beta))

    def is_positive_root(self, beta: Root) -> bool:
        return beta in self._positive_set

    def negative_simple_index(self, beta: Root) -> Optional[int]:
        """Vertex i if beta == -alpha_i, else None."""
        idx = None
        for j, c in enumerate(beta):
            if c == -1 and idx is None:
                idx = j
            elif c != 0:
                return None
        return idx

    def is_almost_positive(self, beta: Root) -> bool:
        return self.is_positive_root(beta) or self.negative_simple_index(beta) is not None

    def component_of(self, vertex: int) -> FrozenSet[int]:
        for comp in self.components:
            if vertex in comp:
                return comp
        raise ValueError(f"vertex {vertex} out of range")

    def exponents(self) -> Tuple[int, ...]:
        """Exponents, from the height distribution of the positive roots."""
        if not self.irreducible:
            raise ValueError("exponents are per-component for reducible systems")
        heights = [sum(b) for b in self.positive_roots]
        counts: Dict[int, int] = {}
        for height in heights:
            counts[height] = counts.get(height, 0) + 1
        exps = [sum(1 for c in counts.values() if c >= i) for i in range(1, self.n + 1)]
        return tuple(sorted(exps))

    def to_json(self) -> dict:
        return {
            "type": str(self.type) if self.type else None,
            "rank": self.n,
            "cartan": [list(r) for r in self.cartan],
            "positive_roots": [list(b) for b in self.positive_roots],
            "I_plus": sorted(v + 1 for v in self.I_plus),
            "I_minus": sorted(v + 1 for v in self.I_minus),
            "h": self.h if self.irreducible else list(self.coxeter_numbers),
        }

    def __repr__(self) -> str:
        name = str(self.type) if self.type else f"diagram(n={self.n})"
        return f"RootSystem({name})"


def build_root_system(t: DynkinType) -> RootSystem:
    rs = RootSystem(t.rank, t.edges(), dynkin_type=t)
    assert 2 * len(rs.positive_roots) == rs.n * rs.h
    return rs


def reflect(rs: RootSystem, i: int, beta: Root) -> Root:
    return rs.reflect(i, beta)


def parabolic(rs: RootSystem, keep: Iterable[int]) -> RootSystem:
    """Sub-root-system on the induced subdiagram, possibly reducible.

    Local vertex i corresponds to the i-th smallest kept parent vertex.
    Bipartition is inherited.  ``keep`` equal to the full vertex set
    returns ``rs`` itself.
    """
    kept = sorted(set(keep))
    if not kept:
        raise ValueError("keep set must be nonempty")
    if any(v < 0 or v >= rs.n for v in kept):
        raise ValueError("keep set contains out-of-range vertices")
    if len(kept) == rs.n:
        return rs
    local = {v: i for i, v in enumerate(kept)}
    edges = [(local[i], local[j]) for i, j in rs.edges if i in local and j in local]
    plus = [local[v] for v in kept if v in rs.I_plus]
    return RootSystem(len(kept), edges, I_plus=plus)


def restrict_root(beta: Root, kept: Sequence[int]) -> Root:
    """Project a parent-coordinate root supported on ``kept`` to local coordinates."""
    if any(c != 0 for v, c in enumerate(beta) if v not in set(kept)):
        raise ValueError("root not supported on the kept vertices")
    return tuple(beta[v] for v in kept)
