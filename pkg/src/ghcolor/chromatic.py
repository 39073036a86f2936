"""The (g, h)-oriented chromatic index and optimal oriented colourings.

The index is the least k for which G has a (kg, kh)-orientation.  Such an
orientation is turned into k colour classes by splitting every vertex into
copies of degree at most k, colouring the resulting bipartite multigraph
properly, and merging the copies back.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bipartite import BipartiteMultigraph, galvin_list_color, konig_color, token_key
from .graph import FunctionPair, Multigraph, ceil_div, require_valid
from .orientation import Certificate, Orientation, is_orientable, verify_orientation

DESK_LIMIT = 20


@dataclass(frozen=True)
class EdgeColoring:
    """Colour label per edge, plus a (g, h)-orientation witnessing each class."""

    graph: Multigraph
    colors: tuple
    witnesses: dict

    @property
    def labels(self) -> list:
        return sorted(set(self.colors), key=token_key)

    @property
    def k(self) -> int:
        return len(set(self.colors))

    def classes(self) -> dict:
        out = {c: [] for c in self.labels}
        for e, c in enumerate(self.colors):
            out[c].append(e)
        return out


@dataclass
class IndexReport:
    k: int
    delta: int
    certificate: Certificate | None = None
    binding_value: int | None = None
    w_exact: int | None = None
    w_witness: tuple | None = None
    probes: list = field(default_factory=list)
    orientation: Orientation | None = None

    @property
    def density_bound(self):
        if self.w_exact is not None:
            return self.w_exact
        if self.certificate is not None and self.certificate.kind == "density":
            return self.binding_value
        return None

    def to_json(self):
        return {
            "k": self.k,
            "delta": self.delta,
            "density_bound": self.density_bound,
            "certificate": None if self.certificate is None else self.certificate.to_json(),
            "w_exact": self.w_exact,
            "w_witness": None if self.w_witness is None else list(self.w_witness),
            "probes": [{"k": k, "orientable": ok} for k, ok in self.probes],
        }


def delta_gh(G: Multigraph, p: FunctionPair) -> int:
    """max over v of ceil(d(v) / (g(v) + h(v))), 0 when edgeless."""
    pc = require_valid(G, p)
    return max((ceil_div(d, pc.g[v] + pc.h[v]) for v, d in enumerate(G.degrees) if d), default=0)


def _subset_tables(G: Multigraph):
    masks = np.arange(1 << G.n, dtype=np.int64)
    bits = [((masks >> v) & 1).astype(np.int64) for v in range(G.n)]
    inside = np.zeros(len(masks), dtype=np.int64)
    for u, v in G.edges:
        inside += bits[u] & bits[v]
    return masks, bits, inside


def _best_subset(masks, value, ok):
    """Largest value; ties broken by larger |S|, then smaller bitmask."""
    if not ok.any():
        return 0, None
    value = np.where(ok, value, -1)
    best = int(value.max())
    cand = masks[value == best]
    sizes = np.array([bin(int(x)).count("1") for x in cand])
    top = cand[sizes == sizes.max()].min()
    return best, tuple(v for v in range(64) if (int(top) >> v) & 1)


def w_gh_exhaustive(G: Multigraph, p: FunctionPair, limit: int = DESK_LIMIT):
    """Weighted maximum density by enumerating all vertex subsets.

    Returns (value, maximizing S) or (0, None) for edgeless graphs.
    """
    pc = require_valid(G, p)
    if G.n > limit:
        raise ValueError(f"n = {G.n} exceeds the enumeration limit {limit}; use chi_gh")
    if G.m == 0:
        return 0, None
    masks, bits, inside = _subset_tables(G)
    gs = sum(pc.g[v] * bits[v] for v in range(G.n))
    hs = sum(pc.h[v] * bits[v] for v in range(G.n))
    den = np.minimum(gs, hs)
    ok = (gs >= 1) & (hs >= 1) & (inside >= 1)
    value = -(-inside // np.maximum(den, 1))
    return _best_subset(masks, value, ok)


def weighted_density_max(G: Multigraph, weights, limit: int = DESK_LIMIT):
    """max over S with e(S) >= 1 of ceil(e(S) / sum of weights over S)."""
    if G.n > limit:
        raise ValueError(f"n = {G.n} exceeds the enumeration limit {limit}")
    if G.m == 0:
        return 0, None
    masks, bits, inside = _subset_tables(G)
    ws = sum(int(weights[v]) * bits[v] for v in range(G.n))
    ok = (inside >= 1) & (ws >= 1)
    value = -(-inside // np.maximum(ws, 1))
    return _best_subset(masks, value, ok)


def chi_gh(G: Multigraph, p: FunctionPair, exact_limit: int = DESK_LIMIT) -> IndexReport:
    """Least k such that G is (kg, kh)-orientable, by binary search.

    The report carries the obstruction found at k - 1 (a vertex or a dense
    set, with sums of the canonical bounds) and, for n <= ``exact_limit``, the exact density parameter.
    """
    pc = require_valid(G, p)
    if G.m == 0:
        w = 0 if G.n <= exact_limit else None
        return IndexReport(0, 0, w_exact=w, orientation=Orientation(G, ()))
    delta = delta_gh(G, pc)
    cache = {}

    def probe(k):
        if k not in cache:
            cache[k] = is_orientable(G, pc.scaled(k))
        return cache[k]

    lo = max(delta, 1)
    hi = max(G.m, lo)
    if not isinstance(probe(hi), Orientation):
        raise AssertionError("a valid pair always admits an (m g, m h)-orientation")
    while lo < hi:
        mid = (lo + hi) // 2
        if isinstance(probe(mid), Orientation):
            hi = mid
        else:
            lo = mid + 1
    k = lo
    report = IndexReport(k, delta, orientation=probe(k))
    if k > 1:
        cert = probe(k - 1)
        S = cert.vertices
        if cert.kind == "degree":
            (v,) = S
            value = ceil_div(G.degrees[v], pc.g[v] + pc.h[v])
        else:
            value = ceil_div(G.induced_edge_count(S), min(sum(pc.g[v] for v in S), sum(pc.h[v] for v in S)))
        report.certificate = Certificate(
            cert.kind,
            S,
            cert.count,
            sum(pc.g[v] for v in S),
            sum(pc.h[v] for v in S),
        )
        report.binding_value = value
    if G.n <= exact_limit:
        report.w_exact, report.w_witness = w_gh_exhaustive(G, pc, limit=exact_limit)
    report.probes = sorted((j, isinstance(r, Orientation)) for j, r in cache.items())
    return report


def split_to_bipartite(G: Multigraph, D: Orientation, k: int, p: FunctionPair):
    """Auxiliary bipartite multigraph of a (kg, kh)-orientation.

    Vertex v gets min(ceil(d(v)/k), h(v)) copies in X and min(ceil(d(v)/k),
    g(v)) copies in Y.  Out-arcs (in-arcs) at v, in edge-id order, are dealt
    k at a time to successive X (Y) copies, so every copy has degree <= k.
    Returns (H, x_owner, y_owner); ``H.origin[i]`` is the edge id of G.
    """
    pc = require_valid(G, p)
    if k < 1:
        raise ValueError("k must be positive")
    if not D.is_full:
        raise ValueError("split needs a full orientation")
    check = verify_orientation(G, pc.scaled(k), D)
    if not check:
        raise ValueError(f"orientation is not a (kg, kh)-orientation: {check.message}")
    d = G.degrees
    nx_copies = [min(ceil_div(d[v], k), pc.h[v]) for v in range(G.n)]
    ny_copies = [min(ceil_div(d[v], k), pc.g[v]) for v in range(G.n)]
    x_start, y_start = [0] * G.n, [0] * G.n
    x_owner, y_owner = [], []
    for v in range(G.n):
        x_start[v] = len(x_owner)
        x_owner += [v] * nx_copies[v]
        y_start[v] = len(y_owner)
        y_owner += [v] * ny_copies[v]
    out_seen, in_seen = [0] * G.n, [0] * G.n
    edges = []
    for e in range(G.m):
        head, tail = D.head(e), D.tail(e)
        i, j = out_seen[tail] // k, in_seen[head] // k
        assert i < nx_copies[tail] and j < ny_copies[head]
        out_seen[tail] += 1
        in_seen[head] += 1
        edges.append((x_start[tail] + i, y_start[head] + j))
    H = BipartiteMultigraph(len(x_owner), len(y_owner), tuple(edges), tuple(range(G.m)))
    return H, tuple(x_owner), tuple(y_owner)


def _merge(G, D, H, hcolors):
    colors = [None] * G.m
    for i, c in enumerate(hcolors):
        colors[H.origin[i]] = c
    classes = {}
    for e, c in enumerate(colors):
        classes.setdefault(c, []).append(e)
    witnesses = {c: D.restricted(es) for c, es in classes.items()}
    return EdgeColoring(G, tuple(colors), witnesses)


def decompose_gh(G: Multigraph, p: FunctionPair, report: IndexReport | None = None) -> EdgeColoring:
    """Optimal (g, h)-oriented colouring with classes 0..k-1."""
    pc = require_valid(G, p)
    report = report or chi_gh(G, pc, exact_limit=0)
    k = report.k
    if k == 0:
        return EdgeColoring(G, (), {})
    D = report.orientation
    H, _, _ = split_to_bipartite(G, D, k, pc)
    coloring = _merge(G, D, H, konig_color(H))
    assert coloring.k == k
    return coloring


def list_decompose_gh(G: Multigraph, p: FunctionPair, lists, report: IndexReport | None = None) -> EdgeColoring:
    """Colour every edge from its own list so each class is (g, h)-orientable.

    Lists need at least chi_gh(G, p) distinct colours each.
    """
    pc = require_valid(G, p)
    if len(lists) != G.m:
        raise ValueError("one list per edge required")
    for e, L in enumerate(lists):
        if len(set(L)) != len(L):
            raise ValueError(f"list of edge {e} repeats a colour")
    report = report or chi_gh(G, pc, exact_limit=0)
    k = report.k
    short = [e for e, L in enumerate(lists) if len(L) < k]
    if short:
        raise ValueError(f"list of edge {short[0]} has fewer than k = {k} colours")
    if k == 0:
        return EdgeColoring(G, (), {})
    D = report.orientation
    H, _, _ = split_to_bipartite(G, D, k, pc)
    hlists = [tuple(lists[H.origin[i]]) for i in range(H.m)]
    return _merge(G, D, H, galvin_list_color(H, hlists))


def verify_coloring(G: Multigraph, p: FunctionPair, coloring: EdgeColoring) -> bool:
    """Every class witness is a (g, h)-orientation of exactly that class."""
    for c, es in coloring.classes().items():
        D = coloring.witnesses.get(c)
        if D is None or not verify_orientation(G, p, D, edges=es):
            return False
    return True
