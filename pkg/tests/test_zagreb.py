"""Graphs, the three Zagreb routes, decompositions, and verdicts."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupzagreb.build import FamilySpec, build_family, special_group
from groupzagreb.grp import AbelianGroupError, FiniteGroup
from groupzagreb.zagreb import (
    CliqueDecomposition,
    GraphFormatError,
    SimpleGraph,
    Verdict,
    ZagrebReport,
    commuting_graph,
    conjecture_verdict,
    extract_clique_decomposition,
    group_report,
    non_commuting_graph,
    read_edge_list,
    zagreb_complement,
    zagreb_direct,
    zagreb_from_decomposition,
)

B = lambda fam, *ps: build_family(FamilySpec(fam, tuple(ps)))

K15_K3_EDGES = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (6, 7), (6, 8), (7, 8)]


def union_of_cliques(parts):
    """Materialize l copies of K_s for each (l, s) part."""
    edges, n = [], 0
    for copies, size in parts:
        for _ in range(copies):
            vs = range(n, n + size)
            edges += [(u, v) for u in vs for v in vs if u < v]
            n += size
    return SimpleGraph.from_edges(n, edges)


# -- commuting graphs --------------------------------------------------------

def test_commuting_graph_d10():
    g = commuting_graph(B("dihedral", 5))
    assert g.vertex_count == 9
    assert extract_clique_decomposition(g).parts == ((5, 1), (1, 4))


def test_commuting_graph_q8():
    g = commuting_graph(B("dicyclic", 2))
    assert extract_clique_decomposition(g).parts == ((3, 2),)


def test_commuting_graph_heisenberg27():
    g = commuting_graph(B("hanaki_a2", 1, 3))
    assert extract_clique_decomposition(g).parts == ((4, 6),)


def test_commuting_graph_rejects_abelian():
    Z6 = FiniteGroup([[(i + j) % 6 for j in range(6)] for i in range(6)], label="Z_6")
    with pytest.raises(AbelianGroupError):
        commuting_graph(Z6)
    with pytest.raises(AbelianGroupError):
        non_commuting_graph(Z6)


def test_commuting_graph_vertex_order_is_ascending_noncentral():
    G = B("dicyclic", 2)  # center = {0, 2}
    g = commuting_graph(G)
    # vertex 0 of the graph is element 1 = f, whose non-central commuters
    # are f^3 (element 3): graph vertex 1
    assert g.adjacent(0, 1)
    assert not g.adjacent(0, 2)


def test_non_commuting_graph_counts():
    assert non_commuting_graph(B("dihedral", 3)).edge_count == 9
    assert non_commuting_graph(B("dicyclic", 2)).edge_count == 12
    # true S_4 complement count (25 commuting-graph edges on 23 vertices)
    assert non_commuting_graph(special_group("S_4")).edge_count == 253 - 25


# -- zagreb_direct --------------------------------------------------------------

def test_direct_edgeless():
    g = SimpleGraph.from_edges(7, [])
    assert zagreb_direct(g) == ZagrebReport(0, 0, 7, 0)


def test_direct_a4():
    rep = zagreb_direct(commuting_graph(special_group("A_4")))
    assert rep == ZagrebReport(20, 16, 11, 7)


def test_direct_counterexample_graph():
    rep = zagreb_direct(SimpleGraph.from_edges(9, K15_K3_EDGES))
    assert rep == ZagrebReport(42, 37, 9, 8)


# -- zagreb_from_decomposition ----------------------------------------------------

def test_decomposition_route_d10():
    rep = zagreb_from_decomposition(CliqueDecomposition(((5, 1), (1, 4))))
    assert (rep.m1, rep.m2) == (36, 54)
    assert (rep.vertices, rep.edges) == (9, 6)


def test_decomposition_route_isolated_vertices():
    rep = zagreb_from_decomposition(CliqueDecomposition(((9, 1),)))
    assert rep == ZagrebReport(0, 0, 9, 0)


def test_decomposition_route_sl23():
    rep = zagreb_from_decomposition(CliqueDecomposition(((3, 2), (4, 4))))
    assert (rep.m1, rep.m2) == (150, 219)


def test_decomposition_type_invariants():
    with pytest.raises(ValueError):
        CliqueDecomposition(((1, 4), (3, 2)))  # not sorted by size
    with pytest.raises(ValueError):
        CliqueDecomposition(((1, 2), (3, 2)))  # duplicate size
    with pytest.raises(ValueError):
        CliqueDecomposition(((0, 2),))


# -- zagreb_complement ---------------------------------------------------------------

def test_complement_of_complete_graph():
    base = zagreb_direct(union_of_cliques([(1, 6)]))
    comp = zagreb_complement(base)
    assert comp == ZagrebReport(0, 0, 6, 0)


def test_complement_a4():
    comp = zagreb_complement(ZagrebReport(20, 16, 11, 7))
    assert comp == ZagrebReport(840, 3672, 11, 48)


def test_complement_formula_on_given_s4_inputs():
    # formula check on the inputs (M1, M2, V, E) = (86, 115, 23, 19):
    # 23*22^2 - 4*19*22 + 86 = 9546 (not 9456, a frequent miscopy)
    comp = zagreb_complement(ZagrebReport(86, 115, 23, 19))
    assert comp == ZagrebReport(9546, 97320, 23, 234)


def test_complement_rejects_odd_m1():
    with pytest.raises(ValueError):
        zagreb_complement(ZagrebReport(3, 0, 4, 1))


# -- extraction --------------------------------------------------------------------------

def test_extract_d12():
    parts = extract_clique_decomposition(commuting_graph(B("dihedral", 6)))
    assert parts.parts == ((3, 2), (1, 4))


def test_extract_path_graph_is_none():
    path = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
    assert extract_clique_decomposition(path) is None


def test_extract_gl2_3():
    parts = extract_clique_decomposition(commuting_graph(B("gl2", 3)))
    assert parts.parts == ((6, 2), (4, 4), (3, 6))


def test_extract_s4_is_none():
    assert extract_clique_decomposition(commuting_graph(special_group("S_4"))) is None


# -- verdicts ------------------------------------------------------------------------------

def test_verdict_d8_equality():
    rep = zagreb_direct(commuting_graph(B("dihedral", 4)))
    v = conjecture_verdict(rep)
    assert v.status is Verdict.HOLDS_WITH_EQUALITY
    assert v.gap_numerator == 0
    assert v.gap_string() == "0/1"


def test_verdict_counterexample():
    v = conjecture_verdict(ZagrebReport(42, 37, 9, 8))
    assert v.status is Verdict.FAILS
    assert (v.gap_numerator, v.gap_denominator) == (-3, 72)
    assert v.gap_string() == "-1/24"


@pytest.mark.parametrize("n", [2, 3, 5, 9])
def test_verdict_complete_graphs_equality(n):
    rep = zagreb_direct(union_of_cliques([(1, n)]))
    assert conjecture_verdict(rep).status is Verdict.HOLDS_WITH_EQUALITY


def test_verdict_undefined_edgeless():
    assert conjecture_verdict(ZagrebReport(0, 0, 4, 0)).status is Verdict.UNDEFINED
    assert conjecture_verdict(ZagrebReport(0, 0, 4, 0)).gap_string() == "NA"


def test_verdict_cycle_equality():
    cyc = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)])
    assert conjecture_verdict(zagreb_direct(cyc)).status is Verdict.HOLDS_WITH_EQUALITY


# -- group_report ---------------------------------------------------------------------------

GOLDEN_REPORTS = [
    ("sz2", (), (96, 114, 4740, 37440), (19, 21, 150)),
    ("dihedral", (4,), (6, 3, 96, 192), (6, 3, 12)),
    ("v8n", (2,), (108, 162, 768, 3072), (12, 18, 48)),
    ("sd8n", (2,), (158, 379, 1536, 8064), (14, 19, 72)),
]


@pytest.mark.parametrize("fam,params,indices,counts", GOLDEN_REPORTS)
def test_group_report_goldens(fam, params, indices, counts):
    rep = group_report(build_family(FamilySpec(fam, params)))
    assert (rep.c.m1, rep.c.m2, rep.nc.m1, rep.nc.m2) == indices
    assert (rep.c.vertices, rep.c.edges, rep.nc.edges) == counts


def test_group_report_toroidal_products():
    rep = group_report(special_group("D_6xZ_3"))
    assert (rep.c.m1, rep.c.m2, rep.nc.m1, rep.nc.m2) == (186, 411, 1782, 9720)
    rep = group_report(special_group("A_4xZ_2"))
    assert (rep.c.m1, rep.c.m2, rep.nc.m1, rep.nc.m2) == (294, 591, 6720, 58752)


def test_group_report_has_edge_for_all_small_families():
    # any non-abelian group has a commuting pair of non-central elements
    for fam, params in [("dihedral", (3,)), ("dihedral", (4,)), ("dicyclic", (2,)),
                        ("pq", (2, 3)), ("sz2", ()), ("v8n", (1,))]:
        rep = group_report(build_family(FamilySpec(fam, params)))
        assert rep.c.edges >= 1
        assert rep.nc.edges >= 1


# -- random-graph properties -----------------------------------------------------------------

def random_graph(rng, max_n=40):
    n = rng.randint(1, max_n)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < rng.random()]
    return SimpleGraph.from_edges(n, edges)


def test_complement_properties_on_200_random_graphs():
    rng = random.Random(20250808)
    for _ in range(200):
        g = random_graph(rng)
        base = zagreb_direct(g)
        via_formula = zagreb_complement(base)
        via_direct = zagreb_direct(g.complement())
        assert via_formula == via_direct
        assert zagreb_complement(via_formula) == base  # double complement
        assert sum(g.degrees()) == 2 * g.edge_count  # handshake


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 24), st.randoms(use_true_random=False))
def test_complement_roundtrip_property(n, rng):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
    g = SimpleGraph.from_edges(n, edges)
    base = zagreb_direct(g)
    assert zagreb_complement(zagreb_complement(base)) == base
    assert zagreb_complement(base) == zagreb_direct(g.complement())


@settings(max_examples=40, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 4), st.integers(1, 8)), min_size=1, max_size=4))
def test_decomposition_route_matches_direct(parts):
    g = union_of_cliques(parts)
    merged: dict[int, int] = {}
    for copies, size in parts:
        merged[size] = merged.get(size, 0) + copies
    d = CliqueDecomposition(tuple((merged[s], s) for s in sorted(merged)))
    assert zagreb_from_decomposition(d) == zagreb_direct(g)
    assert extract_clique_decomposition(g) == d


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(2, 9))
def test_uniform_clique_unions_give_equality(copies, size):
    rep = zagreb_from_decomposition(CliqueDecomposition(((copies, size),)))
    assert conjecture_verdict(rep).status is Verdict.HOLDS_WITH_EQUALITY
    if copies * size > size:  # complement has edges
        comp = zagreb_complement(rep)
        assert conjecture_verdict(comp).status is Verdict.HOLDS_WITH_EQUALITY


# -- edge-list parsing -------------------------------------------------------------------------

def test_read_edge_list(tmp_path):
    p = tmp_path / "g.edges"
    p.write_text("3 2\n0 1\n1 2\n", encoding="utf-8")
    g = read_edge_list(p)
    assert g.vertex_count == 3 and g.edge_count == 2


def test_read_edge_list_errors():
    with pytest.raises(GraphFormatError):
        read_edge_list("3\n0 1\n")  # bad header
    with pytest.raises(GraphFormatError):
        read_edge_list("3 2\n0 1\n")  # missing edge line
    with pytest.raises(GraphFormatError):
        read_edge_list("3 1\n1 0\n")  # u >= v
    with pytest.raises(GraphFormatError):
        read_edge_list("3 2\n0 1\n0 1\n")  # duplicate
    with pytest.raises(GraphFormatError):
        read_edge_list("3 1\n0 5\n")  # out of range


def test_simple_graph_rejects_self_loop():
    with pytest.raises(GraphFormatError):
        SimpleGraph.from_edges(3, [(1, 1)])
