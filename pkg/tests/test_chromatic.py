import math
from fractions import Fraction

import pytest

from pultr import engine
from pultr.adjoints import omega_odd_path
from pultr.chromatic import (
    chromatic_number,
    circular_bound_via_powers,
    circular_chromatic_number,
    circular_colouring,
    circular_gallai_roy_check,
    digraph_chromatic_number,
    gallai_roy_orientation,
    greedy_clique,
    k_colourable,
    reversal_path_specs,
    reversal_paths,
)
from pultr.errors import BudgetExceededError, ParameterError
from pultr.graphs import (
    Graph,
    circular_complete,
    complete_graph,
    cycle_graph,
    directed_path,
    enumerate_graphs,
    is_connected,
    kneser_pairs,
    lexicographic_product,
    orient_edges,
    oriented_path,
    path_graph,
    sorted_edges,
    symmetrization,
    transitive_tournament,
)

from conftest import random_graph


def iso_classes(n, connected_only=False):
    out = []
    for g in enumerate_graphs(
        n, directed=False, loops=False, all_orders=True, up_to_iso=True
    ):
        if connected_only and not is_connected(g):
            continue
        out.append(g)
    return out


def test_chromatic_basics():
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(complete_graph(4)) == 4
    assert chromatic_number(path_graph(4)) == 2
    assert chromatic_number(Graph(3)) == 1
    assert chromatic_number(Graph(0)) == 0
    with pytest.raises(ParameterError):
        chromatic_number(Graph(1, [(0, 0)]))


def test_chromatic_matches_hom_search():
    # the colouring search and the raw engine must agree: least n with a
    # homomorphism into K_n
    for g in iso_classes(5):
        if g.arc_count == 0:
            continue
        chi = chromatic_number(g)
        assert engine.hom_exists(g, complete_graph(chi)) is not None
        assert engine.hom_exists(g, complete_graph(chi - 1)) is None


def test_k_colourable_returns_proper_colouring(rng):
    for _ in range(30):
        g = random_graph(rng, 7, 0.5)
        chi = chromatic_number(g)
        col = k_colourable(g, chi)
        assert col is not None
        assert all(col[u] != col[v] for u, v in g.edges() if u != v)
        assert max(col, default=-1) < chi


def test_greedy_clique_is_clique():
    g = lexicographic_product(cycle_graph(5), complete_graph(2))
    q = greedy_clique(g)
    assert all(g.has_arc(u, v) for u in q for v in q if u != v)


def test_chromatic_examples_from_powers():
    assert chromatic_number(
        lexicographic_product(cycle_graph(5), complete_graph(2))
    ) == 5
    assert chromatic_number(omega_odd_path(3, complete_graph(4))) == 4


def test_budget_propagates():
    with pytest.raises(BudgetExceededError):
        chromatic_number(kneser_pairs(5), budget=2)


def test_circular_chromatic_values():
    assert circular_chromatic_number(cycle_graph(5)) == Fraction(5, 2)
    assert circular_chromatic_number(cycle_graph(7)) == Fraction(7, 3)
    assert circular_chromatic_number(complete_graph(4)) == Fraction(4)
    for n, m in ((5, 2), (7, 3), (8, 3), (4, 1)):
        assert circular_chromatic_number(circular_complete(n, m)) == Fraction(n, m)


def test_circular_chromatic_edge_cases():
    assert circular_chromatic_number(Graph(3)) == Fraction(1)
    assert circular_chromatic_number(complete_graph(1)) == Fraction(1)
    frac, witness = circular_colouring(cycle_graph(9))
    assert frac == Fraction(9, 4)
    assert engine.verify_witness(cycle_graph(9), circular_complete(9, 4), witness.mapping)


def test_chi_c_between_chi_minus_one_and_chi():
    for g in iso_classes(6, connected_only=True):
        chi = chromatic_number(g)
        chi_c = circular_chromatic_number(g)
        assert chi - 1 < chi_c <= chi, g


def test_denominator_bound_is_safe():
    # scanning with denominators up to 2|V| finds nothing smaller than the
    # bounded scan (empirical justification for the m <= |V| bound);
    # ascending order with first-success cutoff, by monotonicity
    for g in iso_classes(5, connected_only=True):
        if g.arc_count == 0:
            continue
        chi_c = circular_chromatic_number(g)
        chi = chromatic_number(g)
        fracs = sorted(
            (Fraction(n, m), n, m)
            for m in range(1, 11)
            for n in range(2 * m, chi * m + 1)
            if math.gcd(n, m) == 1
        )
        best = None
        for value, n, m in fracs:
            if engine.hom_exists(g, circular_complete(n, m)) is not None:
                best = value
                break
        assert best == chi_c, g


def test_digraph_chromatic_is_symmetrization():
    d = transitive_tournament(4)
    assert digraph_chromatic_number(d) == 4


def test_gallai_roy_certificates():
    cert = gallai_roy_orientation(cycle_graph(5), 3)
    assert cert is not None
    oriented = orient_edges(cycle_graph(5), cert.orientation)
    assert engine.hom_exists(directed_path(3), oriented) is None
    assert cert.family == (("dP3", False),)
    assert gallai_roy_orientation(complete_graph(3), 2) is None
    vac = gallai_roy_orientation(complete_graph(1), 1)
    assert vac is not None and vac.orientation == ""


def test_gallai_roy_exact_threshold():
    for g in iso_classes(5):
        if g.arc_count == 0:
            continue
        chi = chromatic_number(g)
        assert gallai_roy_orientation(g, chi) is not None
        if chi > 1:
            assert gallai_roy_orientation(g, chi - 1) is None


def test_reversal_paths():
    assert len(reversal_paths(5, 1)) == 6
    assert list(reversal_path_specs(3, 0)) == ["111"]
    assert len(reversal_paths(7, 2)) == 1 + 7 + 21
    # every member maps onto the symmetrized path
    target = symmetrization(directed_path(4))
    for p in reversal_paths(4, 2):
        assert engine.hom_exists(p, target) is not None
    # mirrors of <=1-reversal strings have >=3 reversals, so dedupe keeps
    # all of P_{4,1}; in P_{3,2} the mirror pairs 011/001, 101/010 and
    # 110/100 collapse, leaving 4 of 7
    assert len(reversal_paths(4, 1, dedupe=True)) == 5
    assert len(reversal_paths(3, 2, dedupe=True)) == 4
    with pytest.raises(ParameterError):
        list(reversal_path_specs(3, 3))


def test_circular_gallai_roy_examples():
    cert = circular_gallai_roy_check(cycle_graph(5), 5, 2)
    assert cert is not None
    assert all(not hit for _, hit in cert.family)
    assert len(cert.family) == 6  # 1 + 5 reversal paths
    assert circular_gallai_roy_check(cycle_graph(5), 7, 3) is None
    k2 = complete_graph(2)
    cert = circular_gallai_roy_check(k2, 2, 1)
    assert cert is not None and cert.orientation == "1"
    with pytest.raises(ParameterError):
        circular_gallai_roy_check(cycle_graph(5), 6, 2)


def test_circular_gallai_roy_iff_hom_small():
    # module-level slice of the exhaustive acceptance check
    for g in iso_classes(4):
        for n, m in ((5, 2), (3, 1)):
            cert = circular_gallai_roy_check(g, n, m)
            hom = engine.hom_exists(g, circular_complete(n, m)) is not None
            assert (cert is not None) == hom, (g, n, m)


def test_powers_bound():
    rep = circular_bound_via_powers(cycle_graph(5), 2, 1)
    assert rep.value == Fraction(5, 2) and rep.attained_at == (2, 1)
    rep = circular_bound_via_powers(complete_graph(3), 1, 1)
    assert rep.value == Fraction(3) and rep.attained_at == (0, 0)
    # skipped grid points are reported: (0, 1) has denominator 0
    rep = circular_bound_via_powers(complete_graph(2), 0, 1)
    assert (0, 1) in rep.skipped


def test_powers_bound_is_certified_upper_value():
    # every success value certifies chi_c <= value, so the minimum success
    # sits at or above chi_c, with equality when the grid hits it
    for g in (cycle_graph(5), cycle_graph(7), complete_graph(3)):
        rep = circular_bound_via_powers(g, 2, 1)
        assert rep.value >= circular_chromatic_number(g)
