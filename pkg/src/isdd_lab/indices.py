"""Degree-based topological indices.

Five of the six indices are computed in exact arithmetic (``fractions.Fraction``
for the two rational ones, plain integers for the Zagreb and forgotten
indices); only the geometric-arithmetic index uses floating point, since its
edge terms are irrational.  Exactness is what makes downstream equality
detection trustworthy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import sqrt

from .graphs import Graph, GraphError

GA_ABS_TOL = 1e-9


def fraction_str(x: Fraction) -> str:
    """Lossless "p/q" text (plain "p" when q is 1); lowest terms by construction."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def _term(a: int, b: int) -> Fraction:
    return Fraction(a * b, a * a + b * b)


def _degrees(g: Graph) -> list[int]:
    deg = [0] * g.n
    for i, j in g.edges:
        deg[i] += 1
        deg[j] += 1
    return deg


def edge_term_isdd(di: int, dj: int) -> Fraction:
    """Per-edge contribution di*dj/(di^2+dj^2); symmetric and ratio-invariant."""
    if di < 1 or dj < 1:
        raise GraphError(f"edge endpoint degrees must be >= 1, got ({di}, {dj})")
    return _term(di, dj) if di <= dj else _term(dj, di)


def isdd(g: Graph) -> Fraction:
    """Inverse symmetric division deg index, exact; 0 for edgeless graphs."""
    deg = _degrees(g)
    total = Fraction(0)
    for i, j in g.edges:
        total += edge_term_isdd(deg[i], deg[j])
    return total


def sdd(g: Graph) -> Fraction:
    """Symmetric division deg index: sum of (di^2+dj^2)/(di*dj), exact."""
    deg = _degrees(g)
    total = Fraction(0)
    for i, j in g.edges:
        a, b = deg[i], deg[j]
        total += Fraction(a * a + b * b, a * b)
    return total


def zagreb1(g: Graph) -> int:
    """First Zagreb index: sum of squared degrees.

    Both the vertex-sum and edge-sum forms are evaluated; a mismatch would
    mean a degree-bookkeeping bug, so it is asserted.
    """
    deg = _degrees(g)
    by_vertex = sum(d * d for d in deg)
    by_edge = sum(deg[i] + deg[j] for i, j in g.edges)
    assert by_vertex == by_edge, "zagreb1 vertex/edge sums disagree"
    return by_vertex


def zagreb2(g: Graph) -> int:
    """Second Zagreb index: sum of di*dj over edges."""
    deg = _degrees(g)
    return sum(deg[i] * deg[j] for i, j in g.edges)


def forgotten(g: Graph) -> int:
    """Forgotten index: sum of cubed degrees (edge-sum form asserted equal)."""
    deg = _degrees(g)
    by_vertex = sum(d ** 3 for d in deg)
    by_edge = sum(deg[i] * deg[i] + deg[j] * deg[j] for i, j in g.edges)
    assert by_vertex == by_edge, "forgotten vertex/edge sums disagree"
    return by_vertex


def geometric_arithmetic(g: Graph) -> float:
    """Geometric-arithmetic index: sum of 2*sqrt(di*dj)/(di+dj), double precision."""
    deg = _degrees(g)
    total = 0.0
    for i, j in g.edges:
        a, b = deg[i], deg[j]
        total += 2.0 * sqrt(a * b) / (a + b)
    return total


@dataclass(frozen=True)
class IndexVector:
    """The six index values of one graph (five exact, ga approximate)."""

    isdd: Fraction
    sdd: Fraction
    m1: int
    m2: int
    forgotten: int
    ga: float


def index_vector(g: Graph) -> IndexVector:
    """All six indices in one pass over the edges."""
    deg = _degrees(g)
    m = g.m
    v_isdd = Fraction(0)
    v_sdd = Fraction(0)
    v_m2 = 0
    v_ga = 0.0
    for i, j in g.edges:
        a, b = deg[i], deg[j]
        sq = a * a + b * b
        v_isdd += Fraction(a * b, sq)
        v_sdd += Fraction(sq, a * b)
        v_m2 += a * b
        v_ga += 2.0 * sqrt(a * b) / (a + b)
    v_m1 = sum(d * d for d in deg)
    v_f = sum(d ** 3 for d in deg)
    assert v_isdd <= Fraction(m, 2), "each edge term is at most 1/2"
    assert v_sdd >= 2 * m, "each edge term is at least 2"
    assert -GA_ABS_TOL <= v_ga <= m + GA_ABS_TOL, "ga must lie in [0, m]"
    return IndexVector(v_isdd, v_sdd, v_m1, v_m2, v_f, v_ga)
