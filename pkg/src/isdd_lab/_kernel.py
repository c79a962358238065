"""Integer fast path behind the exhaustive sweeps.

The public bound/classification modules work on Graph objects with Fraction
arithmetic, which is the readable reference implementation.  Scanning the
full 2^21 edge subsets at n=7 (and up to 4.8M labeled trees) needs something
leaner: this module re-derives the same verdicts from degree-pair counts with
plain integer cross-multiplication, using one precomputed common denominator
per vertex count so the exact index value is a single integer dot product.

Everything here is cross-validated against the reference path by the test
suite (exhaustively for small n); any divergence is a bug, not a policy.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import sqrt

from .bounds import REL_TOL, STRICT_MARGIN, ga_m2_rhs, ga_simple_rhs
from .classify import in_gamma3
from .graphs import Graph
from .indices import fraction_str

KERNEL_MAX_N = 10  # above this, sweeps fall back to the reference path

# Classes whose membership is expected to coincide with equality, per check id.
# RATIO_CONSTANT is the classification-equivalence check (not a numeric bound):
# a constant (di+dj)/(di^2+dj^2) over edges should coincide with membership in
# one of the three structural families, for connected graphs.
EXPECTED_EQUALITY_CLASSES: dict[str, tuple[str, ...]] = {
    "LOWER_ELL": ("regular", "semiregular_bipartite", "gamma1"),
    "UPPER_K": ("regular", "semiregular_bipartite_consecutive", "gamma2"),
    "UPPER_NDELTA": ("regular",),
    "GA_M2": ("regular",),
    "M1_F": ("constant_edge_ratio",),
    "RATIO_CONSTANT": ("regular", "semiregular_bipartite", "gamma3"),
    "EDGE_MIN": ("attaining_pair_max_min",),
    "EDGE_SECOND_MIN": ("attaining_pair_maxminus1_min",),
}

CLASS_CHECK_IDS = ("LOWER_ELL", "UPPER_K", "UPPER_NDELTA", "GA_M2", "M1_F")


@lru_cache(maxsize=None)
def edge_table(n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Bit slot k -> endpoints, in graph6 column-major order."""
    ei, ej = [], []
    for j in range(1, n):
        for i in range(j):
            ei.append(i)
            ej.append(j)
    return tuple(ei), tuple(ej)


@lru_cache(maxsize=None)
def pair_tables(n: int):
    """Per-degree-pair tables for graphs on n vertices (degrees <= n-1).

    Returns (D, inum, ga, m2) where D is the lcm of all di^2+dj^2 values,
    inum[(a, b)] = a*b*D/(a^2+b^2) so the exact index is sum(count*inum)/D,
    ga[(a, b)] is the float GA edge term and m2[(a, b)] = a*b.
    """
    keys = [(a, b) for a in range(1, n) for b in range(1, a + 1)]
    d = math.lcm(*(a * a + b * b for a, b in keys))
    inum = {}
    ga = {}
    m2 = {}
    for a, b in keys:
        sq = a * a + b * b
        inum[(a, b)] = a * b * (d // sq)
        ga[(a, b)] = 2.0 * sqrt(a * b) / (a + b)
        m2[(a, b)] = a * b
    return d, inum, ga, m2


def mask_to_graph6(n: int, mask: int) -> str:
    """graph6 text for an edge bitmask (bit k = slot k of the bit stream)."""
    nbits = n * (n - 1) // 2
    out = [chr(63 + n)]
    for q in range(0, nbits, 6):
        v = 0
        for r in range(6):
            t = q + r
            v = (v << 1) | ((mask >> t) & 1 if t < nbits else 0)
        out.append(chr(63 + v))
    return "".join(out)


def edges_to_mask(edges) -> int:
    mask = 0
    for i, j in edges:
        mask |= 1 << (j * (j - 1) // 2 + i)
    return mask


def prufer_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    """Decode one length-(n-2) sequence into the edges of its labeled tree."""
    deg = [1] * n
    for s in seq:
        deg[s] += 1
    edges = []
    ptr = 0
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for s in seq:
        edges.append((leaf, s) if leaf < s else (s, leaf))
        deg[s] -= 1
        if deg[s] == 1 and s < ptr:
            leaf = s
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n - 1))
    return edges


class Selection:
    """Which checks a sweep runs; hoisted out of the per-graph loop."""

    def __init__(self, bounds: tuple[str, ...], check_classes: bool):
        sel = frozenset(bounds)
        self.edge_min = "EDGE_MIN" in sel
        self.edge_second_min = "EDGE_SECOND_MIN" in sel
        self.tree_edge = "TREE_EDGE" in sel
        self.lower_ell = "LOWER_ELL" in sel
        self.upper_k = "UPPER_K" in sel
        self.upper_ndelta = "UPPER_NDELTA" in sel
        self.ga_simple = "GA_SIMPLE" in sel
        self.ga_m2 = "GA_M2" in sel
        self.m1_f = "M1_F" in sel
        self.claim1 = "CLAIM1" in sel
        self.remark_order = "REMARK_ORDER" in sel
        self.check_classes = check_classes
        self.needs_isdd = (
            self.lower_ell or self.upper_k or self.upper_ndelta
            or self.ga_simple or self.ga_m2 or self.m1_f
        )


def _actual_class_names(regular, semireg, consecutive, g1, g2, g3, ratio_const):
    names = []
    if regular:
        names.append("regular")
    if semireg:
        names.append("semiregular_bipartite")
    if consecutive:
        names.append("semiregular_bipartite_consecutive")
    if g1:
        names.append("gamma1")
    if g2:
        names.append("gamma2")
    if g3:
        names.append("gamma3")
    if ratio_const:
        names.append("constant_edge_ratio")
    return tuple(names)


def _pair_names(pairs) -> tuple[str, ...]:
    return tuple(f"pair({a},{b})" for a, b in sorted(pairs))


def check_pair_stats(
    n: int,
    m: int,
    deg,
    pc: dict[tuple[int, int], int],
    connected: bool,
    sel: Selection,
    tables,
    g6_fn,
    violations: list,
    discrepancies: list,
) -> None:
    """Run every selected check on one graph given its degree-pair counts.

    Appends (graph6, check_id, lhs, rhs) violation records and
    (graph6, check_id, expected_classes, actual, equality) discrepancy records.
    Identical verdict semantics to the reference path built on the public API.
    """
    d_common, inum_t, ga_t, m2_t = tables
    dmax = max(deg)
    dmin = min(deg)
    has_min_deg = dmin >= 1

    q1 = dmax * dmax + dmin * dmin
    p1 = dmax * dmin
    dm1 = dmax - 1
    q2 = dm1 * dm1 + dmin * dmin
    p2 = dm1 * dmin
    ell = pc.get((dmax, dmin), 0)

    inum = 0
    if sel.needs_isdd:
        for key, cnt in pc.items():
            inum += cnt * inum_t[key]

    if sel.edge_min and has_min_deg:
        # min edge term over present pairs, tracked by cross-multiplication
        ma, mb = next(iter(pc))
        for a, b in pc:
            if a * b * (ma * ma + mb * mb) < ma * mb * (a * a + b * b):
                ma, mb = a, b
        lhs_cmp = ma * mb * q1
        rhs_cmp = p1 * (ma * ma + mb * mb)
        if lhs_cmp < rhs_cmp:
            violations.append(
                (g6_fn(), "EDGE_MIN",
                 fraction_str(Fraction(ma * mb, ma * ma + mb * mb)),
                 fraction_str(Fraction(p1, q1)))
            )
        elif lhs_cmp == rhs_cmp and sel.check_classes and connected:
            bad = [
                (a, b) for a, b in pc
                if (a, b) != (dmax, dmin) and a * b * q1 == p1 * (a * a + b * b)
            ]
            if bad:
                discrepancies.append(
                    (g6_fn(), "EDGE_MIN", EXPECTED_EQUALITY_CLASSES["EDGE_MIN"],
                     _pair_names(bad), True)
                )

    if sel.edge_second_min and has_min_deg and m > ell:
        off = [(a, b) for a, b in pc if (a, b) != (dmax, dmin)]
        ma, mb = off[0]
        for a, b in off:
            if a * b * (ma * ma + mb * mb) < ma * mb * (a * a + b * b):
                ma, mb = a, b
        lhs_cmp = ma * mb * q2
        rhs_cmp = p2 * (ma * ma + mb * mb)
        if lhs_cmp < rhs_cmp:
            violations.append(
                (g6_fn(), "EDGE_SECOND_MIN",
                 fraction_str(Fraction(ma * mb, ma * ma + mb * mb)),
                 fraction_str(Fraction(p2, q2)))
            )
        elif lhs_cmp == rhs_cmp and sel.check_classes and connected:
            want = (dm1, dmin) if dm1 >= dmin else (dmin, dm1)
            bad = [
                (a, b) for a, b in off
                if (a, b) != want and a * b * q2 == p2 * (a * a + b * b)
            ]
            if bad:
                discrepancies.append(
                    (g6_fn(), "EDGE_SECOND_MIN",
                     EXPECTED_EQUALITY_CLASSES["EDGE_SECOND_MIN"],
                     _pair_names(bad), True)
                )

    if sel.tree_edge and connected and m == n - 1 and n >= 4:
        tn, td = n - 2, (n - 2) * (n - 2) + 1
        applicable = [(a, b) for a, b in pc if (a, b) != (n - 1, 1)]
        if applicable:
            ma, mb = applicable[0]
            for a, b in applicable:
                if a * b * (ma * ma + mb * mb) < ma * mb * (a * a + b * b):
                    ma, mb = a, b
            if ma * mb * td < tn * (ma * ma + mb * mb):
                violations.append(
                    (g6_fn(), "TREE_EDGE",
                     fraction_str(Fraction(ma * mb, ma * ma + mb * mb)),
                     fraction_str(Fraction(tn, td)))
                )

    el_eq = uk_eq = und_eq = m1f_eq = gam2_eq = False

    if sel.lower_ell and has_min_deg:
        if m == ell:
            rnum, rden = ell * p1, q1
        else:
            rnum, rden = ell * p1 * q2 + (m - ell) * p2 * q1, q1 * q2
        left = inum * rden
        right = rnum * d_common
        if left < right:
            violations.append(
                (g6_fn(), "LOWER_ELL",
                 fraction_str(Fraction(inum, d_common)),
                 fraction_str(Fraction(rnum, rden)))
            )
        el_eq = left == right

    k = 0
    if sel.upper_k or sel.upper_ndelta:
        k = sum(cnt for (a, b), cnt in pc.items() if a == b)
        qk = dmax * dmax + dm1 * dm1
        pk = dmax * dm1

    if sel.upper_k:
        rnum, rden = k * qk + 2 * pk * (m - k), 2 * qk
        left = inum * rden
        right = rnum * d_common
        if left > right:
            violations.append(
                (g6_fn(), "UPPER_K",
                 fraction_str(Fraction(inum, d_common)),
                 fraction_str(Fraction(rnum, rden)))
            )
        uk_eq = left == right

    if sel.upper_ndelta:
        rnum, rden = k * qk + pk * (n * dmax - 2 * k), 2 * qk
        left = inum * rden
        right = rnum * d_common
        if left > right:
            violations.append(
                (g6_fn(), "UPPER_NDELTA",
                 fraction_str(Fraction(inum, d_common)),
                 fraction_str(Fraction(rnum, rden)))
            )
        und_eq = left == right

    m1 = f = 0
    if sel.m1_f:
        for d in deg:
            m1 += d * d
            f += d * d * d
        rnum, rden = m1 * m1 - m * f, 2 * f
        left = inum * rden
        right = rnum * d_common
        if left < right:
            violations.append(
                (g6_fn(), "M1_F",
                 fraction_str(Fraction(inum, d_common)),
                 fraction_str(Fraction(rnum, rden)))
            )
        m1f_eq = left == right

    if sel.ga_simple or sel.ga_m2 or sel.remark_order:
        ga = 0.0
        for key, cnt in pc.items():
            ga += cnt * ga_t[key]
        isdd_f = inum / d_common if sel.needs_isdd else 0.0
        rhs_simple = ga_simple_rhs(ga, m)
        if sel.ga_simple and isdd_f < rhs_simple - REL_TOL * max(1.0, abs(rhs_simple)):
            violations.append((g6_fn(), "GA_SIMPLE", repr(isdd_f), repr(rhs_simple)))
        if sel.ga_m2 or sel.remark_order:
            m2 = 0
            for key, cnt in pc.items():
                m2 += cnt * m2_t[key]
            rhs_m2 = ga_m2_rhs(ga, m, dmax, m2)
            if sel.ga_m2:
                if isdd_f < rhs_m2 - REL_TOL * max(1.0, abs(rhs_m2)):
                    violations.append((g6_fn(), "GA_M2", repr(isdd_f), repr(rhs_m2)))
                gam2_eq = abs(isdd_f - rhs_m2) <= REL_TOL * max(1.0, abs(rhs_m2))
            if sel.remark_order and not (rhs_m2 - rhs_simple > STRICT_MARGIN):
                violations.append((g6_fn(), "REMARK_ORDER", repr(rhs_m2), repr(rhs_simple)))

    if sel.claim1 and has_min_deg and dmax >= dmin + 1:
        pm = dmax * (dmin + 1)
        qm = dmax * dmax + (dmin + 1) * (dmin + 1)
        ok = p2 * qm <= pm * q2
        if ok and dmax >= dmin + 2:
            pr = dm1 * (dmin + 1)
            qr = dm1 * dm1 + (dmin + 1) * (dmin + 1)
            ok = pm * qr <= pr * qm
        if not ok:
            violations.append(
                (g6_fn(), "CLAIM1",
                 fraction_str(Fraction(p2, q2)),
                 fraction_str(Fraction(pm, qm)))
            )

    if not (sel.check_classes and connected and has_min_deg):
        return

    regular = dmax == dmin
    semireg = False
    consecutive = False
    if len(pc) == 1:
        (a, b), = pc.keys()
        if a != b:
            semireg = True
            consecutive = a - b == 1
    g1 = False
    if not regular:
        want2 = (dm1, dmin) if dm1 >= dmin else (dmin, dm1)
        c2 = pc.get(want2, 0)
        g1 = ell > 0 and c2 > 0 and ell + c2 == m
    g2 = False
    k1 = pc.get((dmax, dmax), 0) + (pc.get((dm1, dm1), 0) if dm1 >= 1 else 0)
    cross = pc.get((dmax, dm1), 0)
    if k1 > 0 and cross > 0 and k1 + cross == m:
        g2 = True

    first = next(iter(pc))
    rn0 = first[0] + first[1]
    rd0 = first[0] * first[0] + first[1] * first[1]
    ratio_const = all(
        (a + b) * rd0 == rn0 * (a * a + b * b) for a, b in pc
    )

    gamma3 = None  # computed lazily; only reachable via constant-ratio graphs

    def actual():
        nonlocal gamma3
        if gamma3 is None:
            gamma3 = _lazy_gamma3(n, g6_fn(), ratio_const, regular, semireg)
        return _actual_class_names(regular, semireg, consecutive, g1, g2, gamma3, ratio_const)

    if sel.lower_ell and el_eq != (regular or semireg or g1):
        discrepancies.append(
            (g6_fn(), "LOWER_ELL", EXPECTED_EQUALITY_CLASSES["LOWER_ELL"], actual(), el_eq)
        )
    if sel.upper_k and uk_eq != (regular or (semireg and consecutive) or g2):
        discrepancies.append(
            (g6_fn(), "UPPER_K", EXPECTED_EQUALITY_CLASSES["UPPER_K"], actual(), uk_eq)
        )
    if sel.upper_ndelta and und_eq != regular:
        discrepancies.append(
            (g6_fn(), "UPPER_NDELTA", EXPECTED_EQUALITY_CLASSES["UPPER_NDELTA"], actual(), und_eq)
        )
    if sel.ga_m2 and gam2_eq != regular:
        discrepancies.append(
            (g6_fn(), "GA_M2", EXPECTED_EQUALITY_CLASSES["GA_M2"], actual(), gam2_eq)
        )
    if sel.m1_f and m1f_eq != ratio_const:
        discrepancies.append(
            (g6_fn(), "M1_F", EXPECTED_EQUALITY_CLASSES["M1_F"], actual(), m1f_eq)
        )
    if ratio_const:
        if gamma3 is None:
            gamma3 = _lazy_gamma3(n, g6_fn(), ratio_const, regular, semireg)
        if not (regular or semireg or gamma3):
            discrepancies.append(
                (g6_fn(), "RATIO_CONSTANT",
                 EXPECTED_EQUALITY_CLASSES["RATIO_CONSTANT"], actual(), True)
            )
    # a non-constant ratio rules out all three families: regular/semiregular
    # force constancy directly, and gamma3 membership forces the common value
    # (max+min)/(max^2+min^2) on both edge types
    elif regular or semireg:
        discrepancies.append(
            (g6_fn(), "RATIO_CONSTANT",
             EXPECTED_EQUALITY_CLASSES["RATIO_CONSTANT"], actual(), False)
        )


def _lazy_gamma3(n: int, g6: str, ratio_const: bool, regular: bool, semireg: bool) -> bool:
    if not ratio_const or regular or semireg:
        return False
    from .graphs import parse_graph6

    return in_gamma3(parse_graph6(g6))


def scan_graph_masks(
    n: int,
    lo: int,
    hi: int,
    bounds: tuple[str, ...],
    connected_only: bool,
    check_classes: bool,
) -> dict:
    """Check every edge-bitmask graph in [lo, hi) on n vertices."""
    ei, ej = edge_table(n)
    tables = pair_tables(n)
    sel = Selection(bounds, check_classes)
    full = (1 << n) - 1
    seen = checked = 0
    violations: list = []
    discrepancies: list = []
    for mask in range(lo, hi):
        seen += 1
        if mask == 0:
            continue
        deg = [0] * n
        adj = [0] * n
        ebits = []
        eb = mask
        while eb:
            low = eb & -eb
            k = low.bit_length() - 1
            eb ^= low
            i = ei[k]
            j = ej[k]
            deg[i] += 1
            deg[j] += 1
            adj[i] |= 1 << j
            adj[j] |= 1 << i
            ebits.append(k)
        reached = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= adj[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~reached
            reached |= frontier
        connected = reached == full
        if connected_only and not connected:
            continue
        m = len(ebits)
        pc: dict[tuple[int, int], int] = {}
        for kk in ebits:
            a = deg[ei[kk]]
            b = deg[ej[kk]]
            key = (a, b) if a >= b else (b, a)
            pc[key] = pc.get(key, 0) + 1
        checked += 1
        check_pair_stats(
            n, m, deg, pc, connected, sel, tables,
            lambda n=n, mask=mask: mask_to_graph6(n, mask),
            violations, discrepancies,
        )
    return {
        "seen": seen,
        "checked": checked,
        "violations": violations,
        "discrepancies": discrepancies,
    }


def scan_tree_ranks(
    n: int,
    lo: int,
    hi: int,
    bounds: tuple[str, ...],
    check_classes: bool,
) -> dict:
    """Check the labeled trees with Pruefer-sequence ranks in [lo, hi)."""
    tables = pair_tables(n)
    sel = Selection(bounds, check_classes)
    seen = checked = 0
    violations: list = []
    discrepancies: list = []
    length = max(n - 2, 0)
    for rank in range(lo, hi):
        seen += 1
        r = rank
        seq = [0] * length
        for idx in range(length - 1, -1, -1):
            seq[idx] = r % n
            r //= n
        edges = prufer_edges(tuple(seq), n)
        deg = [1] * n
        for s in seq:
            deg[s] += 1
        pc: dict[tuple[int, int], int] = {}
        for i, j in edges:
            a = deg[i]
            b = deg[j]
            key = (a, b) if a >= b else (b, a)
            pc[key] = pc.get(key, 0) + 1
        checked += 1
        check_pair_stats(
            n, n - 1, deg, pc, True, sel, tables,
            lambda n=n, edges=edges: mask_to_graph6(n, edges_to_mask(edges)),
            violations, discrepancies,
        )
    return {
        "seen": seen,
        "checked": checked,
        "violations": violations,
        "discrepancies": discrepancies,
    }


def check_graph_kernel(g: Graph, bounds: tuple[str, ...], connected_only: bool,
                       check_classes: bool) -> dict:
    """Kernel checks for one externally supplied graph (n <= KERNEL_MAX_N)."""
    from .graphs import is_connected, write_graph6

    violations: list = []
    discrepancies: list = []
    connected = g.n >= 1 and is_connected(g)
    if (connected_only and not connected) or g.m == 0:
        return {"seen": 1, "checked": 0, "violations": [], "discrepancies": []}
    deg = [0] * g.n
    for i, j in g.edges:
        deg[i] += 1
        deg[j] += 1
    pc: dict[tuple[int, int], int] = {}
    for i, j in g.edges:
        a, b = deg[i], deg[j]
        key = (a, b) if a >= b else (b, a)
        pc[key] = pc.get(key, 0) + 1
    sel = Selection(bounds, check_classes)
    check_pair_stats(
        g.n, g.m, deg, pc, connected, sel, pair_tables(g.n),
        lambda: write_graph6(g), violations, discrepancies,
    )
    return {"seen": 1, "checked": 1, "violations": violations, "discrepancies": discrepancies}


def isdd_exact(n: int, mask: int) -> Fraction:
    """Exact index value straight from the integer tables (test hook)."""
    ei, ej = edge_table(n)
    d_common, inum_t, _, _ = pair_tables(n)
    deg = [0] * n
    bits = []
    eb = mask
    while eb:
        low = eb & -eb
        k = low.bit_length() - 1
        eb ^= low
        deg[ei[k]] += 1
        deg[ej[k]] += 1
        bits.append(k)
    total = 0
    for k in bits:
        a, b = deg[ei[k]], deg[ej[k]]
        key = (a, b) if a >= b else (b, a)
        total += inum_t[key]
    return Fraction(total, d_common)
