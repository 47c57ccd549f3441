import pytest

import regpow


def test_cycle_regularity():
    c5 = regpow.cycle_graph(5)
    assert c5.edges == [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]
    I = regpow.edge_ideal(c5)
    assert regpow.regularity(I) == 3
    assert regpow.regularity(I, method="both") == 3
    assert regpow.regularity(regpow.power(I, 2)) == 4
    assert regpow.regularity(regpow.symbolic_power(I, 2), field="q") == 4


def test_linear_resolution_and_gaps():
    c4 = regpow.cycle_graph(4)
    assert regpow.has_linear_resolution(regpow.edge_ideal(c4))
    two_edges = regpow.Graph(4, [(1, 2), (3, 4)])
    assert not regpow.is_gap_free(two_edges)
    assert not regpow.has_linear_resolution(regpow.edge_ideal(two_edges))
    assert regpow.betti_numbers(regpow.edge_ideal(two_edges)) == {(0, 2): 2, (1, 4): 1}


def test_ideals_and_symbolic_powers():
    tri = regpow.edge_ideal(regpow.complete_graph(3))
    sym = regpow.symbolic_power(tri, 2)
    assert sym.contains([1, 1, 1])
    assert not regpow.power(tri, 2).contains([1, 1, 1])
    assert regpow.Ideal(2, [[1, 1], [1, 2]]) == regpow.Ideal(2, [[1, 1]])
    for cert in regpow.extremal_certificates(sym):
        assert cert["value"] == cert["i"] + sum(cert["a"])


def test_text_round_trip():
    text = "3 2\n1 2\n2 3\n"
    assert regpow.graph_to_text(regpow.graph_from_text(text)) == text


def test_errors():
    with pytest.raises(ValueError):
        regpow.graph_from_text("3 2\n1 2\n1 2\n")
    with pytest.raises(ValueError):
        regpow.Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        regpow.regularity(regpow.edge_ideal(regpow.Graph(3, [])))


def test_suite():
    assert "pow2" in regpow.suite_names()
    records, summary = regpow.run_suite("froberg", nmax=4, samples=5)
    assert summary["failures"] == 0
    assert len(records) == summary["items"]
