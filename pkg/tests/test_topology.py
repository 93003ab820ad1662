from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balmat.hypergraph import Multigraph, PartiteHypergraph, WeightFunction
from balmat.topology import (INFINITE, Graph, SimplicialComplex, betti,
                             con_certificate, con_lower_bound, eta, hall_check,
                             independence_complex, line_graph,
                             matching_complex, psi)


def circle():
    return SimplicialComplex(3, [{1, 2}, {2, 3}, {1, 3}])


def test_betti_circle():
    assert betti(circle(), -1) == 0
    assert betti(circle(), 0) == 0
    assert betti(circle(), 1) == 1


def test_betti_two_points():
    c = SimplicialComplex(2, [{1}, {2}])
    assert betti(c, 0) == 1  # one extra component in reduced homology


def test_betti_full_simplex_vanishes():
    c = SimplicialComplex(4, [{1, 2, 3, 4}])
    for j in range(-1, 4):
        assert betti(c, j) == 0


def test_betti_empty_complex():
    # the complex whose only face is the empty set: H~_{-1} is nontrivial
    c = SimplicialComplex(0, [frozenset()])
    assert betti(c, -1) == 1


def test_eta_conventions():
    assert eta(SimplicialComplex(0, []), 6).value == 0          # void
    assert eta(SimplicialComplex(0, [frozenset()]), 6).value == 0
    assert eta(SimplicialComplex(2, [{1}, {2}]), 6).value == 1  # disconnected
    assert eta(circle(), 6) .value == 2
    capped = eta(SimplicialComplex(3, [{1, 2, 3}]), 6)
    assert capped.value == 6 and not capped.exact


def test_euler_characteristic():
    assert circle().euler_characteristic_reduced() == -1  # 1 - 3 + 3 ... reduced
    sphere = SimplicialComplex(4, [{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}])
    # reduced chi of S^2 is 1
    assert sphere.euler_characteristic_reduced() == 1
    assert betti(sphere, 2) == 1


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sets(st.integers(1, 5), min_size=1, max_size=3),
                min_size=1, max_size=6))
def test_euler_equals_alternating_betti(facets):
    c = SimplicialComplex(5, facets)
    top = max(len(f) for f in c.facets) - 1
    chi = sum((-1) ** j * betti(c, j) for j in range(-1, top + 1))
    assert chi == c.euler_characteristic_reduced()


def test_independence_complex_path():
    g = Graph(3, [(1, 2), (2, 3)])
    c = independence_complex(g)
    assert frozenset({1, 3}) in c.facets
    assert frozenset({2}) in c.facets


def test_matching_complex_is_independence_of_line_graph():
    mg = Multigraph(2, 2, [(1, 1, 0), (1, 2, 0), (2, 1, 0), (2, 2, 0)])
    assert matching_complex(mg) == independence_complex(line_graph(mg))
    # the 4-cycle's matching complex is two disjoint edges of pairings
    assert eta(matching_complex(mg), 6).value == 1


def test_psi_basics():
    assert psi(Graph(0, [])) == 0
    assert psi(Graph(2, [(1, 2)])) == 1
    assert psi(Graph(3, [(1, 2), (2, 3)])) == 1
    assert psi(Graph(4, [(1, 2), (3, 4)])) == 2
    assert psi(Graph(3, [(1, 2)])) is INFINITE  # isolated vertex


def test_psi_matching_of_m_edges():
    for m in range(1, 4):
        edges = [(2 * i + 1, 2 * i + 2) for i in range(m)]
        assert psi(Graph(2 * m, edges)) == m


def test_psi_isomorphism_invariance():
    g1 = Graph(4, [(1, 2), (2, 3), (3, 4)])
    g2 = Graph(4, [(4, 3), (3, 2), (2, 1)])
    assert psi(g1) == psi(g2)


def test_psi_lower_bounds_eta_of_independence_complex():
    g = Graph(4, [(1, 2), (3, 4)])
    val = psi(g)
    assert eta(independence_complex(g), cap=4).at_least(val)


def test_hall_check_pasch_deficiency():
    h = PartiteHypergraph((2, 2, 2),
                          [(1, 1, 1), (1, 2, 2), (2, 1, 2), (2, 2, 1)])
    report = hall_check(h, deficiency=1)
    assert report.all_K_pass
    assert len(report.matching) == 1
    # with deficiency 0 the full K = {1,2} demands eta >= 2, which fails
    report0 = hall_check(h, deficiency=0)
    assert not report0.all_K_pass
    assert report0.failing_K == (1, 2)


def test_con_certificate_bound_and_errors():
    g = Multigraph(1, 2, [(1, 1, 0), (1, 2, 0)])
    f = WeightFunction({(1, 1, 0): 2, (1, 2, 0): 2})
    s = 2
    assert con_certificate(g, f, s) >= con_lower_bound(f.total(), s)
    with pytest.raises(ValueError):
        con_certificate(g, WeightFunction({(1, 1, 0): 3}), 2)
    with pytest.raises(ValueError):
        con_certificate(g, f, Fraction(1, 2))


def test_con_certificate_single_heavy_cell():
    g = Multigraph(1, 1, [(1, 1, 0)])
    f = WeightFunction({(1, 1, 0): 2})
    assert con_certificate(g, f, 1) == 1


def test_con_lower_bound_values():
    assert con_lower_bound(8, 1) == 2
    assert con_lower_bound(9, 1) == 3
