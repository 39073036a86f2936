import itertools
import random

import pytest

from conftest import K4, TRIANGLE, const, parallel
from ghcolor.decompositions import DecompositionResult, pa_f_decompose
from ghcolor.graph import FunctionPair, Multigraph
from ghcolor.oracle import (
    CapExceeded,
    ClassPredicate,
    OrientationTable,
    all_multigraphs,
    all_valid_pairs,
    brute_min_colors,
    brute_orientable,
    edge_types,
    random_multigraph,
    random_valid_pair,
    subset_max,
    verify_classes,
)


def test_brute_orientable_examples():
    assert brute_orientable(TRIANGLE, const(TRIANGLE, 1, 1))
    assert not brute_orientable(parallel(3), const(parallel(3), 1, 1))
    assert not brute_orientable(Multigraph(1, ((0, 0),)), FunctionPair((1,), (0,)))


def test_caps():
    with pytest.raises(CapExceeded):
        brute_orientable(parallel(15), const(parallel(15), 8, 8))
    with pytest.raises(CapExceeded):
        brute_min_colors(parallel(10), ClassPredicate("matching"))
    with pytest.raises(CapExceeded):
        subset_max(Multigraph(21, ()), "pa")
    assert brute_min_colors(parallel(10), ClassPredicate("matching"), max_m=10) == 10


def test_brute_min_colors_examples():
    assert brute_min_colors(TRIANGLE, ClassPredicate("gh-orientable", pair=const(TRIANGLE, 1, 1))) == 1
    assert brute_min_colors(K4, ClassPredicate("degree-f-pseudoforest", f=(2,) * 4)) == 2
    assert brute_min_colors(parallel(4), ClassPredicate("degree-f-subgraph", f=(3, 3))) == 2


def naive_min_colors(G, pred):
    """Plain search over all labelings, for cross-checking the cover DP."""
    for k in range(G.m + 1):
        for labels in itertools.product(range(k), repeat=G.m):
            parts = [[e for e in range(G.m) if labels[e] == c] for c in range(k)]
            if all(pred.holds(G, p) for p in parts):
                return k
    raise AssertionError


def test_cover_dp_matches_labeling_search():
    rng = random.Random(3)
    kinds = [
        ClassPredicate("pseudoforest"),
        ClassPredicate("forest"),
        ClassPredicate("matching"),
        ClassPredicate("linear-forest"),
    ]
    for _ in range(60):
        G = random_multigraph(rng, rng.randint(2, 4), rng.randint(0, 5))
        p = random_valid_pair(rng, G)
        for pred in kinds + [ClassPredicate("gh-orientable", pair=p)]:
            assert brute_min_colors(G, pred) == naive_min_colors(G, pred)


def test_subset_max_examples():
    assert subset_max(K4, "pa") == (2, (0, 1, 2, 3))
    assert subset_max(K4, "nash-williams") == (2, (0, 1, 2, 3))
    assert subset_max(TRIANGLE, "nash-williams") == (2, (0, 1, 2))
    assert subset_max(Multigraph(2, ()), "pa") == (0, None)
    assert subset_max(parallel(4), "half_f", f=(3, 3))[0] == 2
    with pytest.raises(ValueError):
        subset_max(K4, "nope")


def test_half_f_density_counts_single_looped_vertex():
    G = Multigraph(1, ((0, 0),) * 3)
    assert subset_max(G, "half_f", f=(3,))[0] == 3
    assert brute_min_colors(G, ClassPredicate("degree-f-subgraph", f=(3,))) == 3


def test_verify_classes_examples():
    assert verify_classes(K4, pa_f_decompose(K4, 2))
    bad = DecompositionResult("degree-f-forest", [[0, 1, 3], [2, 4, 5]], [None, None], None, f=(2,) * 4)
    check = verify_classes(K4, bad)
    assert not check and check.index == 0
    empty = Multigraph(3, ())
    assert verify_classes(empty, DecompositionResult("pseudoforest", [], [], 0))


def test_verify_classes_partition_defects():
    with pytest.raises(ValueError):
        verify_classes(TRIANGLE, DecompositionResult("pseudoforest", [[0, 1]], [None], 1))
    with pytest.raises(ValueError):
        verify_classes(TRIANGLE, DecompositionResult("pseudoforest", [[0, 1, 2], [2]], [None, None], 1))


def test_verify_classes_rejects_bad_witness():
    res = pa_f_decompose(K4, 2)
    w = res.witnesses[0]
    flipped = list(w.heads)
    e = res.classes[0][0]
    flipped[e] = None
    res.witnesses[0] = flipped
    assert not verify_classes(K4, res)


def test_verify_classes_rejects_bad_roots():
    res = DecompositionResult("linear-forest", [[0, 1, 2]], [{"roots": [0, 3]}], 1)
    path = Multigraph(4, ((0, 1), (1, 2), (2, 3)))
    assert verify_classes(path, DecompositionResult("linear-forest", [[0, 1, 2]], [{"roots": [0]}], 1))
    assert not verify_classes(path, res)


def test_generators():
    assert len(edge_types(3, False)) == 3 and len(edge_types(3, True)) == 6
    graphs = list(all_multigraphs(2, 2, loops=True))
    assert len(graphs) == 1 + 3 + 6
    G = Multigraph(2, ((0, 1),))
    pairs = list(all_valid_pairs(G, (0, 1)))
    assert FunctionPair((0, 1), (1, 0)) in pairs and FunctionPair((1, 1), (1, 1)) in pairs
    rng = random.Random(0)
    H = random_multigraph(rng, 3, 20, max_mult=2)
    assert H.m == 6 and H.multiplicity == 2


def test_orientation_table_agrees_with_brute():
    rng = random.Random(9)
    for _ in range(100):
        G = random_multigraph(rng, rng.randint(1, 4), rng.randint(1, 6), loops=True)
        p = random_valid_pair(rng, G)
        assert OrientationTable(G).orientable(p) == brute_orientable(G, p)
