import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hcoloring.catalog import named, two_circuit_edges
from hcoloring.multigraph import (
    EdgeOutOfRange,
    EmptyGraph,
    LoopRejected,
    ResourceLimit,
    VertexOutOfRange,
    bridges,
    build,
    chromatic_index,
    circuit_lengths,
    connected_components,
    edge_coloring,
    edge_induced_subgraph,
    find_perfect_matching,
    is_k_regular,
    is_matching,
    iter_circuits,
    star,
    without_edges,
)

from fixtures import barbell, cube, cycle
from oracles import (
    bridges_by_removal,
    chromatic_index_by_product,
    circuit_lengths_by_subsets,
    components_count,
    has_perfect_matching_by_combinations,
)


@st.composite
def multigraphs(draw, max_n=8, max_m=12):
    n = draw(st.integers(2, max_n))
    pairs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1]),
            max_size=max_m,
        )
    )
    return build(n, pairs)


# --- build -----------------------------------------------------------------


def test_build_two_circuit():
    g = build(2, [(0, 1), (0, 1)])
    assert g.n == 2 and g.m == 2
    assert g.incidence == ((0, 1), (0, 1))
    assert circuit_lengths(g) == {2}


def test_build_rejects_loop():
    with pytest.raises(LoopRejected):
        build(1, [(0, 0)])


def test_build_rejects_out_of_range():
    with pytest.raises(VertexOutOfRange):
        build(3, [(0, 3)])


def test_petersen_is_cubic():
    p = named("P").graph
    # recount from the adjacency list
    deg = [0] * 10
    for a, b in p.edges:
        deg[a] += 1
        deg[b] += 1
    assert deg == [3] * 10
    assert p.degrees() == deg


def test_degree_zero_vertices_allowed():
    g = build(3, [(0, 1)])
    assert g.degrees() == [1, 1, 0]


# --- star / subgraphs --------------------------------------------------------


def test_star_of_w_in_s10():
    s10 = named("S10")
    assert star(s10.graph, s10["w"]) == {s10.edge("w", f"z{i}") for i in (1, 2, 3)}


def test_star_of_parallel_pair():
    assert star(build(2, [(0, 1), (0, 1)]), 0) == {0, 1}


def test_star_of_u_in_g_star():
    g = named("GSTAR")
    want = {g.edge("u", "s1"), g.edge("u", "s2"), g.edge("u", "t1")}
    assert star(g.graph, g["u"]) == want


def test_star_out_of_range():
    with pytest.raises(VertexOutOfRange):
        star(named("K4").graph, 4)


def test_induced_by_two_circuit_edges_of_s10():
    g = named("S10").graph
    sub = edge_induced_subgraph(g, two_circuit_edges(g))
    assert (sub.n, sub.m) == (6, 6)
    assert is_k_regular(sub, 2)
    assert len(connected_components(sub)) == 3
    assert circuit_lengths(sub) == {2}


def test_induced_by_empty_set():
    sub = edge_induced_subgraph(named("P").graph, [])
    assert (sub.n, sub.m) == (0, 0)


def test_induced_by_a2_is_tree():
    g = named("S10").graph
    a2 = set(range(g.m)) - two_circuit_edges(g)
    sub = edge_induced_subgraph(g, a2)
    assert (sub.n, sub.m) == (10, 9)
    assert len(connected_components(sub)) == 1
    assert max(sub.degrees()) <= 3
    # a2 keeps 9 edges on all 10 vertices -> spanning tree of S10


def test_induced_origin_tables():
    g = named("P").graph
    sub = edge_induced_subgraph(g, [14, 3])
    assert sub.edge_origin == (3, 14)
    for local, parent in enumerate(sub.edge_origin):
        a, b = sub.edges[local]
        assert {sub.vertex_origin[a], sub.vertex_origin[b]} == set(g.edges[parent])


def test_induced_rejects_bad_edge():
    with pytest.raises(EdgeOutOfRange):
        edge_induced_subgraph(named("K4").graph, [6])


@given(multigraphs(), st.data())
def test_induced_subgraph_definition(g, data):
    es = data.draw(st.sets(st.integers(0, max(g.m - 1, 0))) if g.m else st.just(set()))
    sub = edge_induced_subgraph(g, es)
    assert sorted(sub.edge_origin) == sorted(es)
    assert all(sub.degree(v) > 0 for v in range(sub.n))


# --- components / bridges ----------------------------------------------------


def test_components_of_s10():
    assert connected_components(named("S10").graph) == [list(range(10))]


def test_components_edgeless():
    assert connected_components(build(3, [])) == [[0], [1], [2]]


def test_components_of_s10_minus_bridges():
    g = named("S10").graph
    assert len(connected_components(without_edges(g, bridges(g)))) == 4


@pytest.mark.parametrize("name", ["P", "S10", "S12", "S4", "GSTAR", "K4", "PRISM"])
def test_bridges_match_removal_oracle(name):
    g = named(name).graph
    assert bridges(g) == bridges_by_removal(g.n, list(g.edges))


def test_bridge_values():
    assert bridges(named("P").graph) == set()
    s10 = named("S10")
    assert bridges(s10.graph) == {s10.edge("w", f"z{i}") for i in (1, 2, 3)}
    assert len(bridges(barbell())) == 1


def test_g_star_bridges_are_s4_attachments():
    g = named("GSTAR")
    want = {g.edge("s1", "z1'"), g.edge("s2", "z2'"), g.edge("t3", "z3'")}
    assert bridges(g.graph) == want


@settings(max_examples=200)
@given(multigraphs())
def test_bridge_iff_component_increase(g):
    base = len(connected_components(g))
    for e in range(g.m):
        split = len(connected_components(without_edges(g, [e]))) > base
        assert (e in bridges(g)) == split


@given(multigraphs())
def test_parallel_edges_never_bridges(g):
    assert not (two_circuit_edges(g) & bridges(g))


# --- regularity / circuits --------------------------------------------------


def test_is_k_regular():
    assert is_k_regular(named("GSTAR").graph, 3)
    assert not is_k_regular(named("S4").graph, 3)
    assert named("S4").graph.degrees() == [3, 3, 3, 1]
    for k in range(4):
        assert is_k_regular(build(0, []), k)


def test_circuit_lengths_petersen():
    assert circuit_lengths(named("P").graph) == {5, 6, 8, 9}


def test_even_circuits_of_petersen_minus_vertex():
    lengths = circuit_lengths(named("P_MINUS_V").graph)
    assert {k for k in lengths if k % 2 == 0} == {6, 8}


@pytest.mark.parametrize("name", ["P", "P_MINUS_V", "S10", "S4", "K4", "K33", "PRISM"])
def test_circuit_lengths_match_subset_oracle(name):
    g = named(name).graph
    assert circuit_lengths(g) == circuit_lengths_by_subsets(g.n, list(g.edges))


def test_circuit_counts_petersen():
    # 12 pentagons, 10 hexagons, 15 octagons, 20 nonagons
    lengths = [len(c) for c in iter_circuits(named("P").graph)]
    assert {k: lengths.count(k) for k in set(lengths)} == {5: 12, 6: 10, 8: 15, 9: 20}


def test_circuits_are_distinct_and_2_regular():
    g = named("S12").graph
    cs = list(iter_circuits(g))
    assert len(cs) == len(set(cs))
    for c in cs:
        sub = edge_induced_subgraph(g, c)
        assert is_k_regular(sub, 2) and len(connected_components(sub)) == 1


def test_circuit_cap():
    with pytest.raises(ResourceLimit):
        circuit_lengths(named("P").graph, cap=10)


@settings(max_examples=100)
@given(multigraphs(max_n=6, max_m=9))
def test_circuit_lengths_random(g):
    got = circuit_lengths(g)
    assert got == circuit_lengths_by_subsets(g.n, list(g.edges))
    if two_circuit_edges(g):
        assert 2 in got


# --- chromatic index ---------------------------------------------------------


def test_chromatic_index_values():
    assert chromatic_index(named("P_MINUS_V").graph) == 4
    s10 = named("S10").graph
    a2 = set(range(s10.m)) - two_circuit_edges(s10)
    assert chromatic_index(edge_induced_subgraph(s10, a2)) == 3
    assert chromatic_index(build(2, [(0, 1), (0, 1)])) == 2
    assert chromatic_index(named("P").graph) == 4
    assert chromatic_index(named("K4").graph) == 3


def test_chromatic_index_empty():
    with pytest.raises(EmptyGraph):
        chromatic_index(build(3, []))


@pytest.mark.parametrize(
    "g", [named("P_MINUS_V").graph, named("K4").graph, named("S4").graph, cycle(5), named("PRISM").graph]
)
def test_chromatic_index_matches_product_oracle(g):
    assert chromatic_index(g) == chromatic_index_by_product(g.n, list(g.edges))


@settings(max_examples=60)
@given(multigraphs(max_n=6, max_m=8))
def test_edge_coloring_certificate(g):
    if not g.m:
        return
    k = chromatic_index(g)
    assert k >= g.max_degree()
    col = edge_coloring(g, k)
    for v in range(g.n):
        cs = [col[e] for e in g.incidence[v]]
        assert len(cs) == len(set(cs))
    assert edge_coloring(g, k - 1) is None
    if k ** g.m <= 10**5:
        assert k == chromatic_index_by_product(g.n, list(g.edges))


# --- perfect matchings -------------------------------------------------------


def test_perfect_matching_g_star():
    g = named("GSTAR").graph
    pm = find_perfect_matching(g)
    assert len(pm) == g.n // 2 == 12
    assert is_matching(g, pm)


def test_perfect_matching_odd_order():
    assert find_perfect_matching(cycle(5)) is None


def test_perfect_matching_petersen():
    pm = find_perfect_matching(named("P").graph)
    assert len(pm) == 5


def test_perfect_matching_absent_on_s10():
    # 10 vertices but w's three neighbours each need a partner among 7 vertices
    assert find_perfect_matching(named("S10").graph) is None
    assert not has_perfect_matching_by_combinations(10, list(named("S10").graph.edges))


@settings(max_examples=100)
@given(multigraphs(max_n=8, max_m=10))
def test_perfect_matching_agrees_with_oracle(g):
    pm = find_perfect_matching(g)
    assert (pm is not None) == has_perfect_matching_by_combinations(g.n, list(g.edges))
    if pm is not None:
        assert is_matching(g, pm) and 2 * len(pm) == g.n


# --- purity ------------------------------------------------------------------


def test_operations_leave_graph_untouched():
    g = named("GSTAR").graph
    before = (g.n, g.edges, g.incidence)
    bridges(g), circuit_lengths(g), find_perfect_matching(g), chromatic_index(g)
    edge_induced_subgraph(g, range(10)), without_edges(g, [0])
    assert (g.n, g.edges, g.incidence) == before


def test_components_oracle_random():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 9)
        pairs = [tuple(rng.sample(range(n), 2)) for _ in range(rng.randint(0, 8))] if n > 1 else []
        g = build(n, pairs)
        assert len(connected_components(g)) == components_count(n, pairs)


def test_cube_is_bipartite_cubic():
    g = cube()
    assert is_k_regular(g, 3) and chromatic_index(g) == 3
    assert all(k % 2 == 0 for k in circuit_lengths(g))
