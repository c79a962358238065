"""Named graphs and independent oracles shared by the test modules."""

from __future__ import annotations

from isdd_lab.graphs import Graph


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])


def star_graph(leaves: int) -> Graph:
    """Hub at vertex 0 with the given number of leaves."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def diamond_graph() -> Graph:
    """Complete graph on 4 vertices minus one edge."""
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def h1_graph() -> Graph:
    """19 vertices: 12 of degree 2 joined to four degree-3 hubs (triples)
    and three degree-4 hubs (quadruples); every edge is (4,2) or (3,2)."""
    edges = []
    for k in range(4):
        for b in range(3 * k, 3 * k + 3):
            edges.append((b, 12 + k))
    for k in range(3):
        for b in range(4 * k, 4 * k + 4):
            edges.append((b, 16 + k))
    return Graph.from_edges(19, edges)


def h2_graph() -> Graph:
    """14 vertices, degrees 5 and 6; equal-degree edges plus (6,5) edges only."""
    edges = [
        (0, 10), (0, 12), (1, 10), (1, 12), (2, 10), (2, 11), (3, 10), (3, 11),
        (4, 10), (4, 12), (5, 12), (5, 13), (6, 11), (6, 13), (7, 12), (7, 13),
        (8, 11), (8, 13), (9, 11), (9, 13),
        (0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9),
        (10, 11), (12, 13),
        (0, 2), (0, 3), (1, 3), (4, 7), (5, 8), (4, 9), (6, 9),
    ]
    return Graph.from_edges(14, edges)


def h3_graph() -> Graph:
    """30-vertex bipartite graph: 9 hubs of degree 18 against a rim of nine
    degree-6 vertices (cyclic window of six hubs each) and twelve degree-9
    vertices joined to every hub."""
    edges = []
    for i in range(9):
        for d in range(6):
            edges.append((9 + i, (i + d) % 9))
    for v in range(18, 30):
        for u in range(9):
            edges.append((v, u))
    return Graph.from_edges(30, edges)


def oracle_decode_graph6(s: str) -> tuple[int, set[tuple[int, int]]]:
    """Independent string-based graph6 decoder used as the codec oracle."""
    vals = [ord(c) - 63 for c in s]
    if vals[0] == 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        rest = vals[4:]
    else:
        n = vals[0]
        rest = vals[1:]
    bits = "".join(format(v, "06b") for v in rest)
    edges = set()
    t = 0
    for j in range(1, n):
        for i in range(j):
            if bits[t] == "1":
                edges.add((i, j))
            t += 1
    return n, edges


def oracle_encode_prufer(g: Graph) -> list[int]:
    """Independent tree-to-sequence encoder (repeatedly strip smallest leaf)."""
    adj = {v: set() for v in range(g.n)}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    seq = []
    for _ in range(g.n - 2):
        leaf = min(v for v, nb in adj.items() if len(nb) == 1)
        parent = next(iter(adj[leaf]))
        seq.append(parent)
        adj[parent].discard(leaf)
        del adj[leaf]
    return seq
