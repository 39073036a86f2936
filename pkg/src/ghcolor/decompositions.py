"""Decompositions derived from oriented colourings.

Pseudoforests are the (1, inf)-orientable graphs and degree-f pseudoforests
the (1, f-1)-orientable ones, so their minimum decompositions come straight
from ``decompose_gh``.  Forest, linear-forest and f-colouring bounds are
built on top of those.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .chromatic import DESK_LIMIT, EdgeColoring, chi_gh, decompose_gh, delta_gh, weighted_density_max
from .graph import INF, DegreeFunction, FunctionPair, Multigraph, bipartition, ceil_div
from .orientation import Orientation, unicyclic_structure

KINDS = ("pseudoforest", "degree-f-pseudoforest", "degree-f-forest", "linear-forest", "degree-f-subgraph")
MODES = ("bipartite", "even", "general")


@dataclass
class DecompositionResult:
    """Edge-id classes of one kind, with a witness per class.

    A witness is an ``Orientation`` (checked against ``pair``) or a dict with
    the roots of the class's trees and, for the extracted linear forest, the
    cycle edges that were removed.
    """

    kind: str
    classes: list
    witnesses: list
    bound: int | None
    pair: FunctionPair | None = None
    f: tuple | None = None
    info: dict = field(default_factory=dict)

    @property
    def count(self) -> int:
        return len(self.classes)

    def to_json(self):
        out = []
        for cls, w in zip(self.classes, self.witnesses):
            kw = {"orientation": w.to_json()} if isinstance(w, Orientation) else dict(w)
            out.append({"edges": list(cls), "kind_witness": kw})
        return {
            "kind": self.kind,
            "count": self.count,
            "bound": self.bound,
            "pair": None if self.pair is None else self.pair.to_json(),
            "f": None if self.f is None else list(self.f),
            "classes": out,
            "info": self.info,
        }


def _as_function(G: Multigraph, f, minimum: int) -> DegreeFunction:
    if isinstance(f, int):
        return DegreeFunction.constant(G.n, f, minimum)
    if isinstance(f, DegreeFunction):
        if len(f) != G.n:
            raise ValueError(f"f defined on {len(f)} vertices, graph has {G.n}")
        return DegreeFunction(f.f, minimum)
    return DegreeFunction(tuple(f), minimum)


def _from_coloring(kind, coloring: EdgeColoring, pair, f, bound, info):
    classes = coloring.classes()
    labels = coloring.labels
    return DecompositionResult(
        kind,
        [classes[c] for c in labels],
        [coloring.witnesses[c] for c in labels],
        bound,
        pair,
        None if f is None else tuple(f.f),
        info,
    )


def forest_roots(G: Multigraph, edge_ids) -> list:
    """Lowest vertex of every component that has an edge."""
    parent = list(range(G.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    touched = set()
    for e in edge_ids:
        u, v = G.edges[e]
        touched.update((u, v))
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    return sorted({find(v) for v in touched})


# ------------------------------------------------------------- pseudoforests


def pseudoarboricity(G: Multigraph) -> DecompositionResult:
    pair = FunctionPair.constant(G.n, 1, INF)
    report = chi_gh(G, pair, exact_limit=0)
    coloring = decompose_gh(G, pair, report)
    return _from_coloring("pseudoforest", coloring, pair, None, report.k, {"pa": report.k})


def pseudoarboricity_value(G: Multigraph) -> int:
    return chi_gh(G, FunctionPair.constant(G.n, 1, INF), exact_limit=0).k


def pa_f_decompose(G: Multigraph, f) -> DecompositionResult:
    """Fewest degree-f pseudoforests, via (1, f-1)-oriented colouring."""
    f = _as_function(G, f, 2)
    pair = FunctionPair(tuple(1 for _ in range(G.n)), tuple(x - 1 for x in f.f))
    report = chi_gh(G, pair, exact_limit=0)
    coloring = decompose_gh(G, pair, report)
    d = G.degrees
    delta_f = max((ceil_div(d[v], f[v]) for v in range(G.n)), default=0)
    pa = pseudoarboricity_value(G)
    info = {"delta_f": delta_f, "pa": pa}
    return _from_coloring("degree-f-pseudoforest", coloring, pair, f, max(delta_f, pa), info)


# ------------------------------------------------------------------- forests


def split_pseudoforest_two_forests(G: Multigraph, edge_ids, f):
    """Colour a degree-2f pseudoforest (the edges ``edge_ids`` of G) with two
    degree-f forests.  Returns the two edge lists."""
    f = _as_function(G, f, 2)
    edge_ids = sorted(edge_ids)
    d = [0] * G.n
    for e in edge_ids:
        u, v = G.edges[e]
        if u == v:
            raise ValueError(f"edge {e} is a loop")
        d[u] += 1
        d[v] += 1
    for v in range(G.n):
        if d[v] > 2 * f[v]:
            raise ValueError(f"degree {d[v]} at vertex {v} exceeds 2f = {2 * f[v]}")
    adj, comps, cycles = unicyclic_structure(G, edge_ids)

    color = {}
    used = [[0, 0] for _ in range(G.n)]

    def paint(e, c):
        color[e] = c
        for x in G.edges[e]:
            used[x][c] += 1

    roots = []
    for verts, cyc in zip(comps, cycles):
        if cyc is not None:
            _, walk = cyc
            for i, e in enumerate(walk):
                paint(e, i % 2)
            roots.extend(sorted({x for e in walk for x in G.edges[e]}))
        elif adj[verts[0]] or len(verts) > 1:
            roots.append(verts[0])
    seen = set(roots)
    queue = deque(roots)
    while queue:
        x = queue.popleft()
        for e in sorted(adj[x]):
            if e in color:
                continue
            y = G.other_end(e, x)
            if y in seen:
                continue
            room = [f[x] - used[x][0], f[x] - used[x][1]]
            c = 0 if room[0] >= room[1] else 1
            if room[c] <= 0:
                raise AssertionError("capacity argument failed")
            paint(e, c)
            seen.add(y)
            queue.append(y)
    for v in range(G.n):
        if used[v][0] > f[v] or used[v][1] > f[v]:
            raise AssertionError(f"colour class exceeds f at vertex {v}")
    return [e for e in edge_ids if color[e] == 0], [e for e in edge_ids if color[e] == 1]


def _is_degree_f_forest(G, ids, f):
    d = [0] * G.n
    for e in ids:
        for x in G.edges[e]:
            d[x] += 1
    if any(d[v] > f[v] for v in range(G.n)):
        return False
    _, _, cycles = unicyclic_structure(G, ids)
    return all(c is None for c in cycles)


def a_f_decompose(G: Multigraph, f) -> DecompositionResult:
    """Degree-f forests: 2f-pseudoforests split in two.  Not optimal in general."""
    if G.has_loops:
        raise ValueError("forest decompositions need a loopless graph")
    f = _as_function(G, f, 2)
    base = pa_f_decompose(G, f.scaled(2))
    classes = []
    for cls in base.classes:
        if _is_degree_f_forest(G, cls, f):
            classes.append(cls)  # nothing to split
            continue
        for part in split_pseudoforest_two_forests(G, cls, f):
            if part:
                classes.append(part)
    d = G.degrees
    pa = base.info["pa"]
    delta_f = max((ceil_div(d[v], f[v]) for v in range(G.n)), default=0)
    info = {
        "pa": pa,
        "pa_2f": base.count,
        "delta_2f": base.info["delta_f"],
        "upper_bound": max(delta_f + 1, 2 * pa) if G.m else 0,
    }
    if len(set(f.f)) <= 1 and G.n:
        t = f.f[0]
        info["constant_f_bound"] = max(ceil_div(G.max_degree, t) + 1, 2 * pa) if G.m else 0
    witnesses = [{"roots": forest_roots(G, c)} for c in classes]
    return DecompositionResult("degree-f-forest", classes, witnesses, 2 * base.count, None, tuple(f.f), info)


def extract_spanning_linear_forest(G: Multigraph):
    """A linear forest touching every vertex of maximum degree.

    The first class of a (1, 1)-oriented colouring with ceil(Δ/2) classes has
    degree <= 2 everywhere and degree >= 1 at each maximum-degree vertex;
    dropping the lowest edge of each of its cycles keeps that property.
    Returns (forest edges, removed cycle edges).
    """
    if G.has_loops:
        raise ValueError("linear forests need a loopless graph")
    if G.m == 0:
        raise ValueError("graph has no edges")
    pair = FunctionPair.constant(G.n, 1, 1)
    coloring = decompose_gh(G, pair)
    assert coloring.k == ceil_div(G.max_degree, 2)
    first = coloring.classes()[coloring.labels[0]]
    _, _, cycles = unicyclic_structure(G, first)
    removed = sorted(min(walk) for c in cycles if c is not None for _, walk in [c])
    forest = [e for e in first if e not in set(removed)]
    return forest, removed


def linear_arboricity_decompose(G: Multigraph) -> DecompositionResult:
    """Linear forests, at most ceil((Δ+1)/2) of them when Δ >= 4 pa - 2."""
    if G.has_loops:
        raise ValueError("linear forests need a loopless graph")
    delta = G.max_degree
    pa = pseudoarboricity_value(G)
    two = DegreeFunction.constant(G.n, 2, 2)
    info = {"delta": delta, "pa": pa, "guarantee_applies": G.m > 0 and delta >= 4 * pa - 2}
    if delta % 4 != 1:
        res = a_f_decompose(G, two)
        classes, witnesses = res.classes, res.witnesses
        info["construction_bound"] = 2 * res.info["pa_2f"]
        info["residue_bound"] = 2 * ceil_div(delta, 4)
    else:
        forest, removed = extract_spanning_linear_forest(G)
        keep = set(forest)
        rest, old_ids = G.subgraph([e for e in range(G.m) if e not in keep])
        res = a_f_decompose(rest, DegreeFunction.constant(rest.n, 2, 2))
        classes = [[old_ids[e] for e in c] for c in res.classes]
        witnesses = [{"roots": forest_roots(G, c)} for c in classes]
        classes.append(sorted(forest))
        witnesses.append({"roots": forest_roots(G, forest), "removed_cycle_edges": removed})
        info["construction_bound"] = 2 * res.info["pa_2f"] + 1
        info["residue_bound"] = (delta + 1) // 2
    bound = ceil_div(delta + 1, 2) if G.m else 0
    info["count"] = len(classes)
    return DecompositionResult("linear-forest", classes, witnesses, bound, None, None, info)


# ------------------------------------------------------------- f-colourings


def _check_parts(G, parts):
    X, Y = (sorted(part) for part in parts)
    if sorted(X + Y) != list(range(G.n)):
        raise ValueError("parts must partition the vertex set")
    side = {v: 0 for v in X}
    side.update({v: 1 for v in Y})
    for e, (u, v) in enumerate(G.edges):
        if side[u] == side[v]:
            raise ValueError(f"edge {e} = ({u}, {v}) lies inside one part")
    return X, Y


def f_color(G: Multigraph, f, mode: str, parts=None) -> DecompositionResult:
    """Partition E(G) into degree-f subgraphs.

    bipartite: (0, f) on X and (f, 0) on Y, count Δ_f.  even: (f/2, f/2),
    count Δ_f.  general: (floor(f/2), ceil(f/2)), count at most the larger
    of Δ_f and max_S ceil(e(S) / sum floor(f(v)/2)).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if mode == "bipartite":
        f = _as_function(G, f, 1)
        if parts is None:
            parts = bipartition(G)
            if parts is None:
                raise ValueError("graph is not bipartite")
        X, Y = _check_parts(G, parts)
        inX = set(X)
        g = tuple(0 if v in inX else f[v] for v in range(G.n))
        h = tuple(f[v] if v in inX else 0 for v in range(G.n))
    elif mode == "even":
        f = _as_function(G, f, 2)
        odd = [v for v in range(G.n) if f[v] % 2]
        if odd:
            raise ValueError(f"even mode needs even f, f({odd[0]}) = {f[odd[0]]}")
        g = h = tuple(x // 2 for x in f.f)
    else:
        f = _as_function(G, f, 2)
        g = tuple(x // 2 for x in f.f)
        h = tuple(x - x // 2 for x in f.f)
    pair = FunctionPair(g, h)
    report = chi_gh(G, pair, exact_limit=0)
    coloring = decompose_gh(G, pair, report)
    d = G.degrees
    delta_f = max((ceil_div(d[v], f[v]) for v in range(G.n)), default=0)
    info = {"delta_f": delta_f, "mode": mode}
    bound = delta_f
    if mode == "general":
        if G.n <= DESK_LIMIT:
            dens, S = weighted_density_max(G, [x // 2 for x in f.f])
            info["density"] = dens
            info["density_witness"] = None if S is None else list(S)
            bound = max(delta_f, dens)
        else:
            bound = None
    if mode == "bipartite":
        info["parts"] = [X, Y]
    return _from_coloring("degree-f-subgraph", coloring, pair, f, bound, info)
