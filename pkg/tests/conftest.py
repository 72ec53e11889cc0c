from fractions import Fraction

import pytest

from mclusters import build_root_system, parse_type


@pytest.fixture(scope="session")
def a2():
    return build_root_system(parse_type("A2"))


@pytest.fixture(scope="session")
def a3():
    return build_root_system(parse_type("A3"))


@pytest.fixture(scope="session")
def a4():
    return build_root_system(parse_type("A4"))


@pytest.fixture(scope="session")
def d4():
    return build_root_system(parse_type("D4"))


def naive_maximal_cliques(adjacency):
    """Exponential-scan oracle for maximal cliques, for cross-checking the
    pivoting enumerator on small graphs."""
    size = len(adjacency)
    cliques = []
    for mask in range(1, 1 << size):
        members = [i for i in range(size) if mask >> i & 1]
        if all(adjacency[a][b] for a in members for b in members if a != b):
            if all(any(not adjacency[u][v] for v in members)
                   for u in range(size) if u not in members):
                cliques.append(tuple(members))
    cliques.sort()
    return cliques


def fuss_catalan(rs, m):
    """Facet-count product over the exponents; independent cross-check."""
    value = Fraction(1)
    for e in rs.exponents():
        value *= Fraction(m * rs.h + e + 1, e + 1)
    assert value.denominator == 1
    return int(value)
