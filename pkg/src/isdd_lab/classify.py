"""Structural detection of the extremal graph families.

The families: regular graphs, (r, s)-semiregular bipartite graphs, and three
classes of connected graphs defined by their edge degree-pair composition
(gamma1, gamma2) or by a bipartite two-valued degree pattern (gamma3).  The
constant-edge-ratio predicate tests whether (di+dj)/(di^2+dj^2) takes a single
value over all edges; for connected graphs that is equivalent to membership in
regular / semiregular bipartite / gamma3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, GraphError, bipartition, degree_data, is_connected
from .indices import _degrees


@dataclass(frozen=True)
class GraphClassLabel:
    regular: bool
    regular_degree: int | None
    semiregular_bipartite: bool
    semiregular_pair: tuple[int, int] | None
    gamma1: bool
    gamma2: bool
    gamma3: bool
    constant_edge_ratio: bool
    edge_ratio: Fraction | None


def is_regular(g: Graph) -> int | None:
    """The common degree when all degrees are equal, else None."""
    dd = degree_data(g)
    return dd.max_degree if dd.max_degree == dd.min_degree else None


def _component_vertex_sets(g: Graph) -> list[list[int]]:
    adj = g.neighbors()
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(comp)
    return comps


def is_semiregular_bipartite(g: Graph) -> tuple[int, int] | None:
    """The degree pair (r, s), r >= s, of a semiregular bipartite graph.

    Every side-U vertex must have degree r and every side-W vertex degree s
    under some bipartition.  Regular bipartite graphs report (r, r).  For
    disconnected graphs each component may flip its own sides, so both
    orientations are tried for global consistency.  Edgeless graphs and
    graphs with isolated vertices (degree 0 against r, s >= 1) report None.
    """
    if g.n < 2:
        raise GraphError(f"semiregular test needs at least 2 vertices, got {g.n}")
    if g.m == 0:
        return None
    bip = bipartition(g)
    if bip is None:
        return None
    deg = _degrees(g)
    # per component: the set of degrees on each side; each must be a single value
    comp_sides: list[tuple[set[int], set[int]]] = []
    for comp in _component_vertex_sets(g):
        d0 = {deg[v] for v in comp if bip.side_of[v] == 0}
        d1 = {deg[v] for v in comp if bip.side_of[v] == 1}
        if len(d0) > 1 or len(d1) > 1:
            return None
        comp_sides.append((d0, d1))

    def unify(first_flip: bool) -> tuple[int, int] | None:
        r = s = None
        for idx, (d0, d1) in enumerate(comp_sides):
            options = [(d0, d1), (d1, d0)]
            if idx == 0:
                options = [options[1]] if first_flip else [options[0]]
            for u_side, w_side in options:
                ru = next(iter(u_side)) if u_side else None
                sw = next(iter(w_side)) if w_side else None
                if (ru is None or r is None or ru == r) and (sw is None or s is None or sw == s):
                    r = r if ru is None else ru
                    s = s if sw is None else sw
                    break
            else:
                return None
        if r is None or s is None or r < 1 or s < 1:
            return None
        return (r, s) if r >= s else (s, r)

    return unify(False) or unify(True)


def in_gamma1(g: Graph) -> bool:
    """Connected, with ell > 0 extreme-pair edges, m-ell > 0 edges on the
    (max_degree-1, min_degree) pair, and nothing else."""
    if g.n == 0 or g.m == 0 or not is_connected(g):
        return False
    deg = _degrees(g)
    dmax, dmin = max(deg), min(deg)
    ell = 0
    second = 0
    want2 = (dmax - 1, dmin) if dmax - 1 >= dmin else (dmin, dmax - 1)
    for i, j in g.edges:
        a, b = deg[i], deg[j]
        pair = (a, b) if a >= b else (b, a)
        if pair == (dmax, dmin):
            ell += 1
        elif pair == want2:
            second += 1
        else:
            return False
    return ell > 0 and second > 0


def in_gamma2(g: Graph) -> bool:
    """Connected, with k > 0 equal-degree edges of common degree max_degree or
    max_degree-1, m-k > 0 edges on the (max_degree, max_degree-1) pair, and
    nothing else."""
    if g.n == 0 or g.m == 0 or not is_connected(g):
        return False
    deg = _degrees(g)
    dmax = max(deg)
    k = 0
    cross = 0
    for i, j in g.edges:
        a, b = deg[i], deg[j]
        if a == b and (a == dmax or a == dmax - 1):
            k += 1
        elif (a, b) in ((dmax, dmax - 1), (dmax - 1, dmax)):
            cross += 1
        else:
            return False
    return k > 0 and cross > 0


def in_gamma3(g: Graph) -> bool:
    """Connected bipartite, one side all max_degree, other side split between
    min_degree and the derived middle degree max*(max-min)/(max+min).

    Both W-side values must occur (a single value is the semiregular case),
    and the middle degree must be a positive integer.
    """
    if g.n == 0 or g.m == 0 or not is_connected(g):
        return False
    bip = bipartition(g)
    if bip is None:
        return False
    deg = _degrees(g)
    dmax, dmin = max(deg), min(deg)
    if dmax <= dmin:
        return False
    mid_num = dmax * (dmax - dmin)
    if mid_num % (dmax + dmin) != 0:
        return False
    mid = mid_num // (dmax + dmin)
    if mid < 1:
        return False
    sides = (set(bip.u), set(bip.w))
    for u_set, w_set in (sides, sides[::-1]):
        if not u_set or not w_set:
            continue
        if any(deg[v] != dmax for v in u_set):
            continue
        w_degrees = {deg[v] for v in w_set}
        if w_degrees == {dmin, mid}:
            return True
    return False


def edge_ratio_constant(g: Graph) -> Fraction | None:
    """The common value of (di+dj)/(di^2+dj^2) over all edges, if constant."""
    if g.m == 0:
        raise GraphError("edge ratio undefined for an edgeless graph")
    deg = _degrees(g)
    i0, j0 = g.edges[0]
    a0, b0 = deg[i0], deg[j0]
    num0, den0 = a0 + b0, a0 * a0 + b0 * b0
    for i, j in g.edges:
        a, b = deg[i], deg[j]
        if (a + b) * den0 != num0 * (a * a + b * b):
            return None
    return Fraction(num0, den0)


def classify(g: Graph) -> GraphClassLabel:
    """All membership verdicts for one graph, with consistency asserted."""
    if g.n == 0:
        return GraphClassLabel(False, None, False, None, False, False, False, False, None)
    r = is_regular(g)
    pair = is_semiregular_bipartite(g) if g.n >= 2 else None
    g1 = in_gamma1(g)
    g2 = in_gamma2(g)
    g3 = in_gamma3(g)
    ratio = edge_ratio_constant(g) if g.m >= 1 else None

    if r is not None and g.m >= 1:
        assert ratio == Fraction(1, r), "regular graphs have constant ratio 1/r"
        assert not (g1 or g2 or g3), "regular graphs are outside the gamma families"
    if pair is not None:
        assert ratio == Fraction(pair[0] + pair[1], pair[0] ** 2 + pair[1] ** 2), (
            "semiregular graphs have constant ratio (r+s)/(r^2+s^2)"
        )
    return GraphClassLabel(
        regular=r is not None,
        regular_degree=r,
        semiregular_bipartite=pair is not None,
        semiregular_pair=pair,
        gamma1=g1,
        gamma2=g2,
        gamma3=g3,
        constant_edge_ratio=ratio is not None,
        edge_ratio=ratio,
    )
