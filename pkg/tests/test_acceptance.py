"""The nine acceptance criteria, each printing one PASS/FAIL line.

Criteria 1 and 2 share one instance family (see ``ACCEPTANCE_FAMILY``);
it takes about five minutes on one core.
"""

import math
import random

import pytest

from ghcolor.bipartite import BipartiteMultigraph, galvin_list_color, konig_color, verify_matching_classes
from ghcolor.decompositions import a_f_decompose, f_color, linear_arboricity_decompose, pa_f_decompose
from ghcolor.experiments import (
    ACCEPTANCE_FAMILY,
    check_list_trial,
    check_round_trip,
    random_instance,
    run_family,
)
from ghcolor.graph import DegreeFunction, Multigraph, ceil_div
from ghcolor.oracle import (
    ClassPredicate,
    all_multigraphs,
    brute_min_colors,
    random_bipartite,
    random_multigraph,
    subset_max,
    verify_classes,
)


@pytest.fixture
def report(capsys):
    def emit(number, ok, text):
        with capsys.disabled():
            print(f"\n[acceptance {number}] {'PASS' if ok else 'FAIL'}  {text}")

    return emit


@pytest.fixture(scope="module")
def family():
    return run_family(ACCEPTANCE_FAMILY)


def _summ(results, which):
    checked = sum(r[which].checked for r in results.values())
    failures = [f for r in results.values() for f in r[which].failures]
    return checked, failures


def test_1_index_formula_exact(family, report):
    checked, failures = _summ(family, 0)
    slices = ", ".join(f"{name}: {r[0].checked}" for name, r in family.items())
    report(1, not failures, f"chi_gh = max(delta, W) = brute minimum on {checked} instances ({slices}); {len(failures)} mismatches")
    assert not failures, failures[:5]


def test_2_orientability_characterization(family, report):
    checked, failures = _summ(family, 1)
    report(2, not failures, f"brute force = two conditions = engine, certificates re-validate, on {checked} instances; {len(failures)} failures")
    assert not failures, failures[:5]


def test_3_split_merge_round_trip(report):
    rng = random.Random(3)
    failures = []
    for i in range(1000):
        G, p = random_instance(rng)
        err = check_round_trip(G, p)
        if err:
            failures.append(f"trial {i}: {G} {p}: {err}")
    report(3, not failures, f"1000 random decompositions with chi_gh.k classes, verified witnesses and union; {len(failures)} failures")
    assert not failures, failures[:5]


def test_4_konig_and_galvin(report):
    rng = random.Random(4)
    failures = []
    list_trials = 0
    for i in range(500):
        nx = rng.randint(1, 11)
        ny = rng.randint(1, 12 - nx)
        H = BipartiteMultigraph(*random_bipartite(rng, nx, ny, rng.randint(0, nx * ny * 4), max_mult=4))
        colors = konig_color(H)
        if not verify_matching_classes(H, colors) or len(set(colors)) != H.max_degree:
            failures.append(f"graph {i}: konig gave {len(set(colors))} classes, delta {H.max_degree}")
        delta = H.max_degree
        palette = list(range(delta + 4))
        for _ in range(20):
            lists = [tuple(rng.sample(palette, delta)) for _ in range(H.m)]
            got = galvin_list_color(H, lists)
            list_trials += 1
            if not verify_matching_classes(H, got) or any(c not in L for c, L in zip(got, lists)):
                failures.append(f"graph {i}: list colouring invalid")
    report(4, not failures, f"500 bipartite multigraphs coloured with delta matchings, {list_trials} list colourings; {len(failures)} failures")
    assert not failures, failures[:5]


def test_5_degree_f_pseudoarboricity(report):
    failures = []
    count = 0
    for G in all_multigraphs(5, 7, loops=False):
        for t in (2, 3):
            res = pa_f_decompose(G, t)
            delta_f = max((ceil_div(d, t) for d in G.degrees), default=0)
            brute = brute_min_colors(G, ClassPredicate("degree-f-pseudoforest", f=(t,) * G.n))
            if not res.count == max(delta_f, res.info["pa"]) == brute or not verify_classes(G, res):
                failures.append(f"{G} f={t}: count {res.count}, formula {max(delta_f, res.info['pa'])}, brute {brute}")
            count += 1
    report(5, not failures, f"count = max(delta_f, pa) = brute minimum on {count} (graph, f) pairs; {len(failures)} failures")
    assert not failures, failures[:5]


def _sparse_graph(rng, residue):
    """Random loopless multigraph that tends to satisfy delta >= 4 pa - 2,
    with a hub whose degree has the requested residue mod 4."""
    delta = 4 * rng.randint(0, 3) + residue
    if delta < 2:
        delta += 4
    n = delta + 1 + rng.randint(0, 10)
    edges = [(0, i) for i in range(1, delta + 1)]
    for v in range(delta + 1, n):
        edges.append((rng.randrange(1, v), v))
    for _ in range(rng.randint(0, n)):
        u, v = rng.sample(range(1, n), 2)
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def test_6_linear_arboricity(report):
    rng = random.Random(6)
    failures = []
    per_residue = {r: 0 for r in range(4)}
    while min(per_residue.values()) < 125:
        r = min(per_residue, key=per_residue.get)
        G = _sparse_graph(rng, r)
        res = linear_arboricity_decompose(G)
        if not res.info["guarantee_applies"] or G.max_degree % 4 != r:
            continue
        per_residue[r] += 1
        if res.count > math.ceil((G.max_degree + 1) / 2) or not verify_classes(G, res):
            failures.append(f"{G}: {res.count} classes, delta {G.max_degree}")
    star = Multigraph(6, tuple((0, i) for i in range(1, 6)))
    spot = linear_arboricity_decompose(star).count
    ok = not failures and spot == 3
    report(6, ok, f"{sum(per_residue.values())} graphs (per residue of delta mod 4: {per_residue}) within ceil((delta+1)/2); star K1,5 -> {spot}; {len(failures)} failures")
    assert not failures, failures[:5]
    assert spot == 3


def test_7_degree_f_forests(report):
    failures = []
    count = 0

    def check(G, f):
        nonlocal count
        res = a_f_decompose(G, f)
        bound = 2 * max(res.info["delta_2f"], res.info["pa"]) if G.m else 0
        if res.count > bound or not verify_classes(G, res):
            failures.append(f"{G} f={f}: {res.count} classes, bound {bound}")
        count += 1

    for G in all_multigraphs(4, 7, loops=False):
        for t in (2, 3):
            check(G, t)
    rng = random.Random(7)
    for _ in range(300):
        G = random_multigraph(rng, rng.randint(2, 12), rng.randint(1, 30))
        check(G, DegreeFunction(tuple(rng.randint(2, 4) for _ in range(G.n)), 2))
    tight = a_f_decompose(Multigraph(2, ((0, 1),) * 4), 2).count
    ok = not failures and tight == 4
    report(7, ok, f"count <= max(2 delta_2f, 2 pa) on {count} instances; 4 parallel edges, f=2 -> {tight}; {len(failures)} failures")
    assert not failures, failures[:5]
    assert tight == 4


def test_8_f_colorings(report):
    rng = random.Random(8)
    failures = []
    equal = total_general = 0
    for _ in range(300):
        nx, ny = rng.randint(1, 5), rng.randint(1, 5)
        _, _, edges = random_bipartite(rng, nx, ny, rng.randint(0, 16), max_mult=4)
        G = Multigraph(nx + ny, tuple((x, nx + y) for x, y in edges))
        f = tuple(rng.randint(1, 3) for _ in range(G.n))
        res = f_color(G, f, "bipartite", parts=(list(range(nx)), list(range(nx, nx + ny))))
        if res.count != res.info["delta_f"] or not verify_classes(G, res):
            failures.append(f"bipartite {G} f={f}: {res.count} vs {res.info['delta_f']}")
    for _ in range(300):
        G = random_multigraph(rng, rng.randint(1, 7), rng.randint(0, 14), loops=True)
        f = tuple(2 * rng.randint(1, 3) for _ in range(G.n))
        res = f_color(G, f, "even")
        if res.count != res.info["delta_f"] or not verify_classes(G, res):
            failures.append(f"even {G} f={f}: {res.count} vs {res.info['delta_f']}")
    for _ in range(300):
        G = random_multigraph(rng, rng.randint(1, 5), rng.randint(0, 9), loops=True)
        f = tuple(rng.randint(2, 5) for _ in range(G.n))
        res = f_color(G, f, "general")
        delta_f = max((ceil_div(d, f[v]) for v, d in enumerate(G.degrees)), default=0)
        bound = max(delta_f, subset_max(G, "half_f", f=f)[0])
        brute = brute_min_colors(G, ClassPredicate("degree-f-subgraph", f=f))
        total_general += 1
        equal += res.count == brute
        if not brute <= res.count <= bound or not verify_classes(G, res):
            failures.append(f"general {G} f={f}: count {res.count}, brute {brute}, bound {bound}")
    report(8, not failures, f"bipartite/even counts = delta_f on 300+300 graphs; general within bound on {total_general} (equals brute minimum on {equal}); {len(failures)} failures")
    assert not failures, failures[:5]


def test_9_list_version(report):
    rng = random.Random(9)
    failures = []
    for i in range(1000):
        G, p = random_instance(rng)
        err = check_list_trial(rng, G, p)
        if err:
            failures.append(f"trial {i}: {G} {p}: {err}")
    report(9, not failures, f"1000 random list assignments of size k coloured from their lists with verified witnesses; {len(failures)} failures")
    assert not failures, failures[:5]
