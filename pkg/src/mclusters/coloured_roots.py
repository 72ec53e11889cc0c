"""Coloured almost-positive roots, rotations, and the combinatorial oracle.

The ground set for the generalized cluster complex consists of the
positive roots in ``m`` colours (1..m) together with the negative simple
roots, which always carry colour 1.  The rotation acting on this set
increments the colour of a positive root until colour ``m`` and otherwise
falls back to the deformed Coxeter rotation with colour reset to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from .root_system import Root, RootSystem


@dataclass(frozen=True, order=True)
class ColouredRoot:
    root: Root
    colour: int = 1

    def __str__(self) -> str:
        coeffs = ",".join(str(c) for c in self.root)
        return f"({coeffs})^{self.colour}"


def _check_almost_positive(rs: RootSystem, beta: Root) -> None:
    if not rs.is_almost_positive(beta):
        raise ValueError(f"{beta} is not an almost positive root")


def check_coloured(rs: RootSystem, m: int, x: ColouredRoot) -> None:
    if rs.negative_simple_index(x.root) is not None:
        if x.colour != 1:
            raise ValueError("negative simple roots have colour 1")
        return
    if not rs.is_positive_root(x.root):
        raise ValueError(f"{x.root} is not a root of the system")
    if not 1 <= x.colour <= m:
        raise ValueError(f"colour {x.colour} out of range [1, {m}]")


def tau_eps(rs: RootSystem, eps: int, beta: Root) -> Root:
    """Deformed half-rotation: fixes -alpha_i for i in the opposite part,
    otherwise applies the product of the simple reflections of one part
    (which commute)."""
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    _check_almost_positive(rs, beta)
    fixed_part = rs.I_minus if eps == 1 else rs.I_plus
    neg = rs.negative_simple_index(beta)
    if neg is not None and neg in fixed_part:
        return beta
    part = rs.I_plus if eps == 1 else rs.I_minus
    for i in sorted(part):
        beta = rs.reflect(i, beta)
    return beta


def rotation_R(rs: RootSystem, beta: Root) -> Root:
    return tau_eps(rs, 1, tau_eps(rs, -1, beta))


def rotation_Rm(rs: RootSystem, m: int, x: ColouredRoot) -> ColouredRoot:
    check_coloured(rs, m, x)
    if rs.is_positive_root(x.root) and x.colour < m:
        return ColouredRoot(x.root, x.colour + 1)
    return ColouredRoot(rotation_R(rs, x.root), 1)


def coloured_ground_set(rs: RootSystem, m: int) -> List[ColouredRoot]:
    """Fixed node order: positive roots in closure-enumeration order with
    colours ascending, then negative simples in vertex order."""
    out = [ColouredRoot(b, c) for b in rs.positive_roots for c in range(1, m + 1)]
    out.extend(ColouredRoot(rs.negative_simple(i), 1) for i in range(rs.n))
    return out


def _rotation_cap(rs: RootSystem, m: int) -> int:
    return m * len(rs.positive_roots) + rs.n + 1


def compatibility_degree(rs: RootSystem, beta: Root, alpha: Root) -> int:
    """Rotate the pair jointly until one entry is a negative simple, then
    read off the corresponding coefficient of the other entry."""
    _check_almost_positive(rs, beta)
    _check_almost_positive(rs, alpha)
    for _ in range(_rotation_cap(rs, 1)):
        i = rs.negative_simple_index(alpha)
        if i is None:
            i = rs.negative_simple_index(beta)
            other = alpha
        else:
            other = beta
        if i is not None:
            return other[i] if rs.is_positive_root(other) else 0
        beta = rotation_R(rs, beta)
        alpha = rotation_R(rs, alpha)
    raise RuntimeError("rotation cap exceeded; no negative simple reached (bug)")


def compatible_combinatorial(rs: RootSystem, m: int, x: ColouredRoot, y: ColouredRoot) -> bool:
    """Joint-rotation compatibility test on coloured roots."""
    check_coloured(rs, m, x)
    check_coloured(rs, m, y)
    for _ in range(_rotation_cap(rs, m)):
        i = rs.negative_simple_index(x.root)
        other = y
        if i is None:
            i = rs.negative_simple_index(y.root)
            other = x
        if i is not None:
            return rs.negative_simple_index(other.root) is not None or other.root[i] == 0
        x = rotation_Rm(rs, m, x)
        y = rotation_Rm(rs, m, y)
    raise RuntimeError("rotation cap exceeded; no negative simple reached (bug)")


def coloured_to_json(x: ColouredRoot) -> dict:
    return {"coeffs": list(x.root), "colour": x.colour}


def coloured_from_json(data: dict) -> ColouredRoot:
    return ColouredRoot(tuple(int(c) for c in data["coeffs"]), int(data["colour"]))
