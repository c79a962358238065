"""Exhaustive generation of small graphs/trees and the brute-force sweep.

``labeled_graphs`` walks every edge subset on n <= 7 vertices in bitmask
order; ``labeled_trees`` decodes every Pruefer sequence for n <= 9.  The
sweep runs every selected bound on every generated (or externally streamed)
graph, recording violations and equality-characterization discrepancies.
Work is partitioned into contiguous index chunks whose partial reports merge
associatively, so the final report does not depend on the worker count.
"""

from __future__ import annotations

import itertools
import multiprocessing
import time
from dataclasses import dataclass, field

from . import _kernel
from .bounds import ALL_BOUND_IDS, SkippedBound, evaluate_all
from .classify import classify
from .graphs import Graph, GraphError, parse_graph6, write_graph6
from .indices import fraction_str

CHUNK_BITS = 15  # mask-range chunk size 2**15; small enough for even balance

EXPECTED_EQUALITY_CLASSES = _kernel.EXPECTED_EQUALITY_CLASSES


@dataclass(frozen=True)
class StreamError:
    """One unparseable line of a graph6 stream."""

    line_no: int
    message: str


@dataclass(frozen=True)
class Violation:
    graph6: str
    bound_id: str
    lhs: str
    rhs: str


@dataclass(frozen=True)
class EqualityDiscrepancy:
    graph6: str
    bound_id: str
    expected_classes: tuple[str, ...]
    actual_classification: tuple[str, ...]
    equality: bool


@dataclass(frozen=True)
class SweepConfig:
    """What to enumerate and which checks to run.

    ``trees`` switches from all-edge-subset enumeration to labeled trees.
    ``dedup`` keeps one representative per isomorphism class (serial only).
    ``check_classes`` controls the equality-characterization cross-checks;
    they never affect the violation list.
    """

    n_min: int
    n_max: int
    connected_only: bool = True
    dedup: bool = False
    bounds: tuple[str, ...] = ALL_BOUND_IDS
    max_graphs: int | None = None
    trees: bool = False
    check_classes: bool = True

    def validate(self):
        if self.n_min > self.n_max:
            raise ValueError(f"n_min {self.n_min} exceeds n_max {self.n_max}")
        if self.trees:
            if not 2 <= self.n_min <= self.n_max <= 9:
                raise ValueError("tree sweeps support 2 <= n <= 9")
        elif not 1 <= self.n_min <= self.n_max <= 7:
            raise ValueError("graph sweeps enumerate internally only for 1 <= n <= 7")
        unknown = set(self.bounds) - set(ALL_BOUND_IDS)
        if unknown:
            raise ValueError(f"unknown bound ids: {sorted(unknown)}")
        if self.max_graphs is not None and self.max_graphs < 0:
            raise ValueError("max_graphs must be non-negative")


@dataclass
class SweepReport:
    graphs_seen: int = 0
    graphs_checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    equality_discrepancies: list[EqualityDiscrepancy] = field(default_factory=list)
    wall_time: float = 0.0

    def merge(self, partial: dict):
        self.graphs_seen += partial["seen"]
        self.graphs_checked += partial["checked"]
        self.violations.extend(Violation(*v) for v in partial["violations"])
        self.equality_discrepancies.extend(
            EqualityDiscrepancy(*d) for d in partial["discrepancies"]
        )

    def finalize(self):
        self.violations.sort(key=lambda v: (v.graph6, v.bound_id, v.lhs, v.rhs))
        self.equality_discrepancies.sort(key=lambda d: (d.graph6, d.bound_id))

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "graphs_seen": self.graphs_seen,
            "graphs_checked": self.graphs_checked,
            "violations": [
                {"graph6": v.graph6, "bound_id": v.bound_id, "lhs": v.lhs, "rhs": v.rhs}
                for v in self.violations
            ],
            "equality_discrepancies": [
                {
                    "graph6": d.graph6,
                    "bound_id": d.bound_id,
                    "expected_classes": list(d.expected_classes),
                    "actual_classification": list(d.actual_classification),
                    "equality": d.equality,
                }
                for d in self.equality_discrepancies
            ],
        }
        if include_timing:
            out["wall_time"] = self.wall_time
        return out


def labeled_graphs(n: int):
    """Every graph on vertices 0..n-1, one per edge subset, in bitmask order."""
    if not 1 <= n <= 7:
        raise ValueError(f"labeled enumeration supports 1 <= n <= 7, got {n}")
    ei, ej = _kernel.edge_table(n)
    nbits = n * (n - 1) // 2
    pairs = tuple(zip(ei, ej))
    for mask in range(1 << nbits):
        edges = tuple(sorted(
            pairs[k] for k in range(nbits) if (mask >> k) & 1
        ))
        yield Graph(n, edges)


def labeled_trees(n: int):
    """Every labeled tree on n vertices via Pruefer decoding, n^(n-2) total."""
    if not 2 <= n <= 9:
        raise ValueError(f"tree enumeration supports 2 <= n <= 9, got {n}")
    for seq in itertools.product(range(n), repeat=n - 2):
        edges = _kernel.prufer_edges(seq, n)
        yield Graph(n, tuple(sorted(edges)))


def canonical_form(g: Graph) -> bytes:
    """Minimal upper-triangle adjacency bit string over all vertex relabelings.

    Equal byte strings <=> isomorphic graphs (the leading byte pins n).
    Uses a prefix-pruned search over vertex images; practical for n <= 10.
    """
    n = g.n
    if n > 10:
        raise GraphError(f"canonical form limited to n <= 10, got {n}")
    if n == 0:
        return bytes([0])
    adjset = [0] * n
    for i, j in g.edges:
        adjset[i] |= 1 << j
        adjset[j] |= 1 << i
    # candidate order low degree first: minimal bit strings open with sparse columns
    order = sorted(range(n), key=lambda v: (bin(adjset[v]).count("1"), v))
    best: list[int] | None = None

    def search(mapped: list[int], used: int, cols: list[int]):
        nonlocal best
        pos = len(mapped)
        if pos == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        for v in order:
            bit = 1 << v
            if used & bit:
                continue
            col = 0
            av = adjset[v]
            for q in range(pos):
                col = (col << 1) | ((av >> mapped[q]) & 1)
            if best is not None:
                prefix = best[:pos + 1]
                if cols + [col] > prefix:
                    continue
            mapped.append(v)
            cols.append(col)
            search(mapped, used | bit, cols)
            mapped.pop()
            cols.pop()

    search([], 0, [])
    assert best is not None
    bits = 0
    width = 0
    for pos in range(1, n):
        bits = (bits << pos) | best[pos]
        width += pos
    pad = (-width) % 8
    packed = (bits << pad).to_bytes((width + pad) // 8, "big") if width else b""
    return bytes([n]) + packed


def stream_graph6(lines):
    """Parse a line stream of graph6 text; bad lines yield StreamError records."""
    for line_no, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            yield parse_graph6(text)
        except GraphError as exc:
            yield StreamError(line_no, str(exc))


def check_graph_reference(g: Graph, bounds: tuple[str, ...], connected_only: bool,
                          check_classes: bool) -> dict:
    """Reference per-graph checking built on the public bound/classify API.

    Produces records identical to the kernel path; used for externally
    streamed graphs too large for the kernel tables and, in tests, to
    cross-validate the kernel itself.
    """
    from .graphs import is_connected

    violations: list = []
    discrepancies: list = []
    connected = g.n >= 1 and is_connected(g)
    if (connected_only and not connected) or g.m == 0:
        return {"seen": 1, "checked": 0, "violations": [], "discrepancies": []}
    sel = set(bounds)
    g6 = write_graph6(g)
    reports = {r.bound_id.value: r for r in evaluate_all(g) if not isinstance(r, SkippedBound)}

    def fmt(x):
        return repr(x) if isinstance(x, float) else fraction_str(x)

    for bid, rep in reports.items():
        if bid in sel and not rep.holds:
            violations.append((g6, bid, fmt(rep.lhs), fmt(rep.rhs)))

    if check_classes and connected:
        label = classify(g)
        from .indices import _degrees, edge_term_isdd

        deg = _degrees(g)
        pairs = set()
        for i, j in g.edges:
            a, b = deg[i], deg[j]
            pairs.add((a, b) if a >= b else (b, a))
        dmax, dmin = max(deg), min(deg)
        consecutive = (
            label.semiregular_bipartite
            and label.semiregular_pair[0] - label.semiregular_pair[1] == 1
        )
        actual = _kernel._actual_class_names(
            label.regular, label.semiregular_bipartite, consecutive,
            label.gamma1, label.gamma2, label.gamma3, label.constant_edge_ratio,
        )
        expectations = {
            "LOWER_ELL": label.regular or label.semiregular_bipartite or label.gamma1,
            "UPPER_K": label.regular or (label.semiregular_bipartite and consecutive)
            or label.gamma2,
            "UPPER_NDELTA": label.regular,
            "GA_M2": label.regular,
            "M1_F": label.constant_edge_ratio,
        }
        for bid in _kernel.CLASS_CHECK_IDS:
            if bid in sel and bid in reports:
                eq = reports[bid].equality
                if eq != expectations[bid]:
                    discrepancies.append(
                        (g6, bid, EXPECTED_EQUALITY_CLASSES[bid], actual, eq)
                    )
        families = label.regular or label.semiregular_bipartite or label.gamma3
        if label.constant_edge_ratio != families:
            discrepancies.append(
                (g6, "RATIO_CONSTANT", EXPECTED_EQUALITY_CLASSES["RATIO_CONSTANT"],
                 actual, label.constant_edge_ratio)
            )
        if "EDGE_MIN" in sel and "EDGE_MIN" in reports and reports["EDGE_MIN"].equality:
            bound = reports["EDGE_MIN"].rhs
            bad = [p for p in pairs if p != (dmax, dmin) and edge_term_isdd(*p) == bound]
            if bad:
                discrepancies.append(
                    (g6, "EDGE_MIN", EXPECTED_EQUALITY_CLASSES["EDGE_MIN"],
                     _kernel._pair_names(bad), True)
                )
        if ("EDGE_SECOND_MIN" in sel and "EDGE_SECOND_MIN" in reports
                and reports["EDGE_SECOND_MIN"].equality):
            bound = reports["EDGE_SECOND_MIN"].rhs
            want = (dmax - 1, dmin) if dmax - 1 >= dmin else (dmin, dmax - 1)
            bad = [
                p for p in pairs
                if p != (dmax, dmin) and p != want and edge_term_isdd(*p) == bound
            ]
            if bad:
                discrepancies.append(
                    (g6, "EDGE_SECOND_MIN", EXPECTED_EQUALITY_CLASSES["EDGE_SECOND_MIN"],
                     _kernel._pair_names(bad), True)
                )
    return {"seen": 1, "checked": 1, "violations": violations, "discrepancies": discrepancies}


def _graph_chunk_worker(args):
    return _kernel.scan_graph_masks(*args)


def _tree_chunk_worker(args):
    return _kernel.scan_tree_ranks(*args)


def _chunk_jobs(cfg: SweepConfig):
    """Deterministic list of (worker, args) chunks covering the configured range."""
    jobs = []
    budget = cfg.max_graphs
    chunk = 1 << CHUNK_BITS
    for n in range(cfg.n_min, cfg.n_max + 1):
        if cfg.trees:
            total = n ** (n - 2) if n >= 2 else 0
            worker = _tree_chunk_worker
            extra = (cfg.bounds, cfg.check_classes)
        else:
            total = 1 << (n * (n - 1) // 2)
            worker = _graph_chunk_worker
            extra = (cfg.bounds, cfg.connected_only, cfg.check_classes)
        if budget is not None:
            total = min(total, budget)
            budget -= total
        for lo in range(0, total, chunk):
            jobs.append((worker, (n, lo, min(lo + chunk, total)) + extra))
        if budget == 0:
            break
    return jobs


def _run_dedup_sweep(cfg: SweepConfig, report: SweepReport):
    """Serial sweep keeping one representative per isomorphism class."""
    seen_forms: set[bytes] = set()
    budget = cfg.max_graphs
    source = labeled_trees if cfg.trees else labeled_graphs
    for n in range(cfg.n_min, cfg.n_max + 1):
        for g in source(n):
            if budget is not None and report.graphs_seen >= budget:
                return
            report.graphs_seen += 1
            form = canonical_form(g)
            if form in seen_forms:
                continue
            seen_forms.add(form)
            partial = _kernel.check_graph_kernel(
                g, cfg.bounds, cfg.connected_only, cfg.check_classes
            )
            partial["seen"] = 0  # already counted above
            report.merge(partial)


def run_sweep(cfg: SweepConfig, jobs: int = 1, graphs=None, engine: str = "fast") -> SweepReport:
    """Execute a sweep and return its report.

    ``graphs``: optional external iterable (mix of Graph and StreamError, as
    produced by :func:`stream_graph6`) replacing internal enumeration; stream
    errors count as seen-but-unchecked.  ``engine`` selects the fast kernel or
    the reference path ("reference"); both produce identical reports and the
    test suite holds them to that.
    """
    if engine not in ("fast", "reference"):
        raise ValueError(f"unknown engine {engine!r}")
    report = SweepReport()
    start = time.perf_counter()

    if graphs is not None:
        unknown = set(cfg.bounds) - set(ALL_BOUND_IDS)
        if unknown:
            raise ValueError(f"unknown bound ids: {sorted(unknown)}")
        budget = cfg.max_graphs
        for item in graphs:
            if budget is not None and report.graphs_seen >= budget:
                break
            if isinstance(item, StreamError):
                report.graphs_seen += 1
                continue
            if engine == "fast" and item.n <= _kernel.KERNEL_MAX_N:
                partial = _kernel.check_graph_kernel(
                    item, cfg.bounds, cfg.connected_only, cfg.check_classes
                )
            else:
                partial = check_graph_reference(
                    item, cfg.bounds, cfg.connected_only, cfg.check_classes
                )
            report.merge(partial)
    else:
        cfg.validate()
        if cfg.dedup:
            _run_dedup_sweep(cfg, report)
        elif engine == "reference":
            source = labeled_trees if cfg.trees else labeled_graphs
            stream = itertools.chain.from_iterable(
                source(n) for n in range(cfg.n_min, cfg.n_max + 1)
            )
            if cfg.max_graphs is not None:
                stream = itertools.islice(stream, cfg.max_graphs)
            for g in stream:
                report.merge(check_graph_reference(
                    g, cfg.bounds, cfg.connected_only, cfg.check_classes
                ))
        else:
            chunk_jobs = _chunk_jobs(cfg)
            if jobs > 1 and len(chunk_jobs) > 1:
                with multiprocessing.Pool(jobs) as pool:
                    for partial in pool.imap_unordered(_dispatch_chunk, chunk_jobs, chunksize=1):
                        report.merge(partial)
            else:
                for job in chunk_jobs:
                    report.merge(_dispatch_chunk(job))

    report.finalize()
    report.wall_time = time.perf_counter() - start
    return report


def _dispatch_chunk(job):
    worker, args = job
    return worker(args)
