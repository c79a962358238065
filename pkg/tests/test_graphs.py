import pytest
from hypothesis import given, settings, strategies as st

from isdd_lab.graphs import (
    EdgeListError,
    Graph,
    Graph6Error,
    GraphError,
    bipartition,
    count_degree_pair_edges,
    degree_data,
    is_connected,
    parse_edge_list,
    parse_graph6,
    write_graph6,
)
from helpers import complete_graph, oracle_decode_graph6, path_graph, star_graph


def mask_graph(n: int, mask: int) -> Graph:
    pairs = [(i, j) for j in range(n) for i in range(j)]
    return Graph(n, tuple(sorted(p for k, p in enumerate(pairs) if (mask >> k) & 1)))


class TestGraphType:
    def test_rejects_loop(self):
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            Graph.from_edges(3, [(0, 3)])

    def test_from_edges_normalizes_and_dedups(self):
        g = Graph.from_edges(3, [(2, 0), (0, 2), (1, 0)])
        assert g.edges == ((0, 1), (0, 2))

    def test_direct_construction_requires_canonical_order(self):
        with pytest.raises(GraphError):
            Graph(3, ((1, 0),))
        with pytest.raises(GraphError):
            Graph(3, ((0, 1), (0, 1)))


class TestGraph6:
    def test_k4_all_bits_set(self):
        g = parse_graph6("C~")
        assert g.n == 4 and g.m == 6

    def test_two_vertices_no_edges(self):
        g = parse_graph6("A?")
        assert g.n == 2 and g.edges == ()

    def test_dqc_round_trip(self):
        g = parse_graph6("DQc")
        assert g.n == 5
        assert set(g.edges) == {(0, 2), (0, 4), (1, 3), (3, 4)}
        assert write_graph6(g) == "DQc"

    def test_k4_encodes_to_tilde(self):
        assert write_graph6(complete_graph(4)) == "C~"

    def test_empty_graph(self):
        assert write_graph6(Graph(0)) == "?"
        assert parse_graph6("?") == Graph(0)

    def test_p4_round_trips(self):
        g = path_graph(4)
        assert parse_graph6(write_graph6(g)) == g

    def test_long_form_header(self):
        g = star_graph(69)  # n = 70 needs the 4-byte header
        text = write_graph6(g)
        assert text.startswith("~")
        assert parse_graph6(text) == g

    def test_non_canonical_long_header_rejected(self):
        with pytest.raises(Graph6Error):
            parse_graph6("~??A?")  # long form for n = 2

    def test_character_out_of_range_names_offset(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("C" + chr(30))
        assert exc.value.offset == 1

    def test_trailing_bits_must_be_zero(self):
        # n=2 has one adjacency bit; '_' sets a padding bit as well
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("A" + chr(63 + 0b000001))
        assert exc.value.offset == 1

    def test_length_mismatch_rejected(self):
        with pytest.raises(Graph6Error):
            parse_graph6("C~~")  # one byte too many for n=4
        with pytest.raises(Graph6Error):
            parse_graph6("E~")  # too few bytes for n=6

    def test_oversized_order_rejected(self):
        with pytest.raises(Graph6Error):
            parse_graph6("~~??????")
        with pytest.raises(Graph6Error):
            parse_graph6("~~???")  # 8-byte form rejected before length checks

    def test_write_rejects_orders_beyond_long_header(self):
        with pytest.raises(GraphError):
            write_graph6(Graph(258048))

    @given(st.integers(min_value=1, max_value=8), st.data())
    @settings(max_examples=200)
    def test_round_trip_random(self, n, data):
        mask = data.draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
        g = mask_graph(n, mask)
        assert parse_graph6(write_graph6(g)) == g

    @given(st.integers(min_value=1, max_value=8), st.data())
    @settings(max_examples=200)
    def test_encoder_matches_independent_decoder(self, n, data):
        mask = data.draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
        g = mask_graph(n, mask)
        dn, dedges = oracle_decode_graph6(write_graph6(g))
        assert dn == g.n and dedges == set(g.edges)


class TestEdgeList:
    def test_p4(self):
        assert parse_edge_list("4 3\n0 1\n1 2\n2 3") == path_graph(4)

    def test_triangle(self):
        assert parse_edge_list("3 3\n0 1\n1 2\n0 2") == complete_graph(3)

    def test_loop_rejected(self):
        with pytest.raises(EdgeListError) as exc:
            parse_edge_list("2 1\n0 0")
        assert exc.value.line_no == 2

    def test_duplicate_rejected(self):
        with pytest.raises(EdgeListError):
            parse_edge_list("3 2\n0 1\n1 0")

    def test_out_of_range_rejected(self):
        with pytest.raises(EdgeListError):
            parse_edge_list("2 1\n0 2")

    def test_count_mismatch_rejected(self):
        with pytest.raises(EdgeListError):
            parse_edge_list("4 3\n0 1\n1 2")


class TestStructure:
    def test_degree_data_p4(self):
        dd = degree_data(path_graph(4))
        assert dd.degrees == (1, 2, 2, 1)
        assert (dd.max_degree, dd.min_degree) == (2, 1)

    def test_degree_data_k4(self):
        dd = degree_data(complete_graph(4))
        assert dd.degrees == (3, 3, 3, 3)
        assert dd.max_degree == dd.min_degree == 3

    def test_degree_data_star(self):
        dd = degree_data(star_graph(3))
        assert dd.degrees == (3, 1, 1, 1)

    def test_degree_data_empty_vertex_set(self):
        with pytest.raises(GraphError):
            degree_data(Graph(0))

    def test_connectivity(self):
        assert is_connected(path_graph(4))
        assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
        assert is_connected(Graph(1))

    def test_bipartition_c4(self):
        bip = bipartition(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]))
        assert bip is not None
        assert set(bip.u) == {0, 2} and set(bip.w) == {1, 3}

    def test_bipartition_odd_cycle_absent(self):
        assert bipartition(complete_graph(3)) is None

    def test_bipartition_p4(self):
        bip = bipartition(path_graph(4))
        assert set(bip.u) == {0, 2} and set(bip.w) == {1, 3}

    def test_count_degree_pair_edges_p4(self):
        g = path_graph(4)
        assert count_degree_pair_edges(g, 2, 1) == 2
        assert count_degree_pair_edges(g, 1, 2) == 2
        assert count_degree_pair_edges(g, 2, 2) == 1

    def test_count_degree_pair_edges_k4(self):
        assert count_degree_pair_edges(complete_graph(4), 3, 3) == 6

    @given(st.integers(min_value=1, max_value=8), st.data())
    @settings(max_examples=150)
    def test_handshake_and_pair_totals(self, n, data):
        mask = data.draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
        g = mask_graph(n, mask)
        if g.n == 0:
            return
        dd = degree_data(g)
        assert sum(dd.degrees) == 2 * g.m
        pairs = {
            (max(dd.degrees[i], dd.degrees[j]), min(dd.degrees[i], dd.degrees[j]))
            for i, j in g.edges
        }
        assert sum(count_degree_pair_edges(g, a, b) for a, b in pairs) == g.m

    @given(st.integers(min_value=1, max_value=8), st.data())
    @settings(max_examples=150)
    def test_bipartition_edges_cross(self, n, data):
        mask = data.draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
        g = mask_graph(n, mask)
        bip = bipartition(g)
        two_colorable = any(
            all((colors >> i) & 1 != (colors >> j) & 1 for i, j in g.edges)
            for colors in range(1 << g.n)
        )
        if bip is not None:
            assert all(bip.side_of[i] != bip.side_of[j] for i, j in g.edges)
            assert two_colorable
        else:
            assert not two_colorable
