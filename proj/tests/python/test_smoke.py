import pytest

import edgebetti as eb


def test_complete_graph_table():
    table = eb.betti_table(eb.complete_graph(4))
    assert table == {(0, 2): 6, (1, 3): 8, (2, 4): 3}


def test_cycle_and_field():
    assert eb.betti_table(eb.cycle_graph(4))[(2, 4)] == 1
    assert eb.betti_table(eb.cycle_graph(5), field=2)[(2, 5)] == 1
    assert eb.betti_table(eb.Graph(3, [])) == {}


def test_graph_basics():
    g = eb.Graph(4, [(1, 2), (2, 3), (3, 4), (4, 1)])
    assert g == eb.cycle_graph(4)
    assert g.vertex_count == 4 and g.edge_count == 4
    assert g.degree(1) == 2
    assert eb.complement(g).edges() == [(1, 3), (2, 4)]
    sub, labels = eb.induced_subgraph(g, [1, 2, 3])
    assert sub.edge_count == 2 and labels == [1, 2, 3]
    assert eb.has_induced_c4(g) and not eb.is_chordal(g)
    assert eb.wheel_graph(4).degree(1) == 4


def test_errors():
    with pytest.raises(eb.InputError):
        eb.Graph(3, [(1, 1)])
    with pytest.raises(eb.InputError):
        eb.parse_edge_list("n 4\n1 2\n2 1\n")
    with pytest.raises(eb.ResourceError):
        eb.betti_table(eb.complete_graph(15))
    with pytest.raises(eb.UnsupportedPattern):
        eb.count_induced_cycles(eb.cycle_graph(6), 6)


def test_formulas_and_bounds():
    assert eb.beta_3_5_exact(eb.wheel_graph(4)) == 2
    assert eb.linear_strand_no_c4(eb.path_graph(4), 1) == (2, True)
    assert eb.linear_strand_components(eb.complete_bipartite_graph(2, 3), 1) == 9
    assert eb.upper_bound(eb.complete_graph(4), 1) == 9
    assert eb.lower_bound(eb.cycle_graph(4), 2) == 1
    assert eb.triangle_lower_bound(eb.complete_graph(4)) == 3
    assert eb.lex_segment(6, 4)["u"] == [1, 2, 3, 4, 2, 3]
    assert [eb.closed_form_complete_bipartite(2, 3, i) for i in range(4)] == [6, 9, 5, 1]
    assert eb.closed_form_complete(4, 1) == 8


def test_census_and_reports():
    c = eb.census(eb.graph_d())
    assert c["d"] == 1 and c["k"]["2"] == 7
    assert eb.count_wheels_w4(eb.wheel_graph(4)) == 1
    report = eb.strand_report(eb.complete_bipartite_graph(2, 3))
    assert [row["oracle"] for row in report["rows"]] == [6, 9, 5, 1]
    res = eb.has_linear_resolution(eb.cycle_graph(5), certify=True)
    assert res["complement_chordal"] is False and res["oracle_linear"] is False
    assert eb.check_graph(eb.random_graph(7, 0.5, 3)) == []


def test_homology_and_rank():
    assert eb.clique_complex_homology(eb.cycle_graph(4)) == [0, 0, 1]
    assert eb.rank_exact([[2]]) == 1
    assert eb.rank_exact([[2]], field=2) == 0
