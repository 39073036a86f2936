import itertools

import pytest
from hypothesis import given

from conftest import K4, TRIANGLE, const, cycle, graph_and_pair, multigraphs, parallel
from ghcolor.graph import INF, DegreeFunction, FunctionPair, InvalidPairError, Multigraph, degeneracy_order
from ghcolor.oracle import OrientationTable, brute_orientable, is_forest, orientability_conditions
from ghcolor.orientation import (
    Certificate,
    Orientation,
    degenerate_acyclic_orientation,
    forests_from_acyclic,
    is_orientable,
    max_partial_orientation,
    orient_pseudoforest,
    unicyclic_structure,
    verify_orientation,
)


def test_triangle_max_partial_is_directed_cycle():
    D = max_partial_orientation(TRIANGLE, const(TRIANGLE, 1, 1))
    assert D.is_full
    assert D.indegree == (1, 1, 1) and D.outdegree == (1, 1, 1)


def test_three_parallel_edges_orients_two():
    D = max_partial_orientation(parallel(3), const(parallel(3), 1, 1))
    assert len(D.oriented) == 2 and len(D.unoriented) == 1


def test_single_loop_orients():
    G = Multigraph(1, ((0, 0),))
    D = max_partial_orientation(G, const(G, 1, 1))
    assert D.is_full and D.indegree == (1,) and D.outdegree == (1,)


def test_three_parallel_edges_density_certificate():
    G = parallel(3)
    cert = is_orientable(G, const(G, 1, 1))
    assert isinstance(cert, Certificate)
    assert cert.kind == "density" and cert.vertices == (0, 1)
    assert (cert.count, cert.g_sum, cert.h_sum) == (3, 2, 2)
    assert cert.holds(G, const(G, 1, 1))


def test_path_orients_as_directed_path():
    G = Multigraph(3, ((0, 1), (1, 2)))
    D = is_orientable(G, const(G, 1, 1))
    assert isinstance(D, Orientation)
    assert D.indegree[1] == 1 and D.outdegree[1] == 1


def test_forced_star():
    G = Multigraph(4, ((0, 1), (0, 2), (0, 3)))
    p = FunctionPair((0, 1, 1, 1), (3, 0, 0, 0))
    D = is_orientable(G, p)
    assert [D.tail(e) for e in range(3)] == [0, 0, 0]


def test_degree_certificate():
    G = star_of(3)
    p = FunctionPair((1, 1, 1, 1), (1, 1, 1, 1))
    cert = is_orientable(G, p)
    assert cert.holds(G, p)


def star_of(k):
    return Multigraph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def test_loop_needs_both_slots():
    G = Multigraph(1, ((0, 0),))
    assert not brute_orientable(G, FunctionPair((1,), (0,)))
    with pytest.raises(InvalidPairError):
        is_orientable(G, FunctionPair((1,), (0,)))


def test_verify_orientation_examples():
    D = Orientation(TRIANGLE, (1, 2, 0))
    assert verify_orientation(TRIANGLE, const(TRIANGLE, 1, 1), D)
    G = Multigraph(3, ((0, 1), (2, 1)))
    rep = verify_orientation(G, const(G, 1, 1), Orientation(G, (1, 1)))
    assert not rep and rep.vertex == 1
    loose = FunctionPair(G.degrees, G.degrees)
    assert verify_orientation(G, loose, Orientation(G, (1, 1)))
    with pytest.raises(ValueError):
        verify_orientation(G, loose, Orientation(G, (1, None)))


def test_orientation_json_round_trip():
    D = Orientation(TRIANGLE, (1, None, 0))
    doc = D.to_json()
    assert doc["unoriented"] == [1]
    assert Orientation.from_json(TRIANGLE, doc) == D


def test_orientation_rejects_non_endpoint_head():
    with pytest.raises(ValueError):
        Orientation(TRIANGLE, (2, 2, 0))


def test_pseudoforest_triangle_with_pendant():
    G = Multigraph(4, ((0, 1), (1, 2), (2, 0), (0, 3)))
    f = DegreeFunction.constant(4, 3, 2)
    D = orient_pseudoforest(G, f)
    assert D.tail(3) == 0
    assert verify_orientation(G, FunctionPair((1,) * 4, (2,) * 4), D)


def test_pseudoforest_path_rooted_at_leaf():
    G = Multigraph(4, ((0, 1), (1, 2), (2, 3)))
    D = orient_pseudoforest(G, DegreeFunction.constant(4, 2, 2))
    assert [D.tail(e) for e in range(3)] == [0, 1, 2]


def test_pseudoforest_loop_and_edge():
    G = Multigraph(2, ((0, 0), (0, 1)))
    D = orient_pseudoforest(G, DegreeFunction((3, 2), 2))
    assert D.indegree[0] == 1 and D.outdegree[0] == 2 and D.head(1) == 1


def test_pseudoforest_errors():
    with pytest.raises(ValueError):
        orient_pseudoforest(parallel(3), DegreeFunction.constant(2, 3, 2))
    with pytest.raises(ValueError):
        orient_pseudoforest(star_of(3), DegreeFunction.constant(4, 2, 2))


def test_unicyclic_structure_walk_starts_low():
    G = Multigraph(4, ((2, 3), (3, 1), (1, 2), (0, 1)))
    _, comps, cycles = unicyclic_structure(G)
    start, walk = cycles[0]
    assert start == 1 and sorted(walk) == [0, 1, 2]


def test_degenerate_examples():
    for order in itertools.permutations(range(4)):
        D = degenerate_acyclic_orientation(K4, order)
        assert max(D.indegree) <= 3
    chorded = Multigraph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)))
    k, order = degeneracy_order(chorded)
    D = degenerate_acyclic_orientation(chorded, order)
    forests = forests_from_acyclic(D)
    assert len(forests) == k == 2
    assert all(is_forest(chorded, F) for F in forests)
    with pytest.raises(ValueError):
        degenerate_acyclic_orientation(chorded, [0, 1, 2])


@given(multigraphs(loops=False))
def test_degenerate_forests_property(G):
    k, order = degeneracy_order(G)
    D = degenerate_acyclic_orientation(G, order)
    assert max(D.indegree, default=0) <= k
    forests = forests_from_acyclic(D)
    assert len(forests) <= k
    assert all(is_forest(G, F) for F in forests)


@given(graph_and_pair(max_n=6, max_m=12))
def test_engine_matches_exhaustive_enumeration(Gp):
    G, p = Gp
    res = is_orientable(G, p)
    assert isinstance(res, Orientation) == brute_orientable(G, p)
    if isinstance(res, Orientation):
        assert verify_orientation(G, p, res)
    else:
        assert res.holds(G, p)


@given(graph_and_pair())
def test_orientability_conditions_match_brute_force(Gp):
    G, p = Gp
    assert brute_orientable(G, p) == orientability_conditions(G, p)


@given(graph_and_pair())
def test_canonical_form_keeps_verdict(Gp):
    G, p = Gp
    a = is_orientable(G, p)
    b = is_orientable(G, p.canonical(G))
    assert type(a) is type(b)


@given(graph_and_pair(max_n=6, max_m=10))
def test_monotone_in_the_pair(Gp):
    G, p = Gp
    res = is_orientable(G, p)
    if isinstance(res, Orientation):
        bigger = FunctionPair(tuple(x + 1 for x in p.g), p.h)
        assert verify_orientation(G, bigger, res)
        assert isinstance(is_orientable(G, bigger), Orientation)


@given(graph_and_pair(max_n=4, max_m=6))
def test_max_partial_is_closed_and_full_when_orientable(Gp):
    G, p = Gp
    D = max_partial_orientation(G, p)
    assert verify_orientation(G, p, D, edges=D.oriented)
    assert D.is_full == brute_orientable(G, p)


@given(graph_and_pair(max_n=4, max_m=6))
def test_max_partial_is_maximum_when_degree_condition_holds(Gp):
    G, p = Gp
    d = G.degrees
    if any(d[v] > p.g[v] + p.h[v] for v in range(G.n)):
        return
    D = max_partial_orientation(G, p)
    if G.m == 0:
        return
    table = OrientationTable(G)
    best = max(bin(int(x)).count("1") for x in table.feasible_masks(p))
    assert len(D.oriented) == best


@given(multigraphs(max_n=6, max_m=8))
def test_pseudoforest_orientation_property(G):
    try:
        _, comps, cycles = unicyclic_structure(G)
    except ValueError:
        return
    f = DegreeFunction(tuple(max(2, d) for d in G.degrees), 2)
    D = orient_pseudoforest(G, f)
    assert D.is_full
    assert verify_orientation(G, FunctionPair((1,) * G.n, tuple(x - 1 for x in f.f)), D)
