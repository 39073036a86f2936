"""Brute-force ground truth at desk scale.

Nothing here calls the solvers in ``orientation``/``chromatic``/
``decompositions``; every answer comes from enumeration of orientations,
edge partitions or vertex subsets.  Size caps keep the enumerations to
seconds and can be raised per call.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .graph import INF, FunctionPair, Multigraph

MAX_M_ORIENT = 14
MAX_M_COLORS = 9
MAX_N_SUBSETS = 20

PREDICATE_KINDS = (
    "gh-orientable",
    "pseudoforest",
    "forest",
    "degree-f-pseudoforest",
    "degree-f-forest",
    "linear-forest",
    "matching",
    "degree-f-subgraph",
)


class CapExceeded(ValueError):
    pass


def _cap(value, cap, what):
    if value > cap:
        raise CapExceeded(f"{what} = {value} exceeds the oracle cap {cap}")


# ---------------------------------------------------------------- orientations


def brute_orientable(G: Multigraph, p: FunctionPair, max_m: int = MAX_M_ORIENT) -> bool:
    """Try all 2^m orientations (a loop has only one)."""
    _cap(G.m, max_m, "m")
    base_in = [0] * G.n
    base_out = [0] * G.n
    free = []
    for u, v in G.edges:
        if u == v:
            base_in[u] += 1
            base_out[u] += 1
        else:
            free.append((u, v))
    for choice in itertools.product((0, 1), repeat=len(free)):
        ind, outd = base_in[:], base_out[:]
        for (u, v), c in zip(free, choice):
            t, hd = (u, v) if c == 0 else (v, u)
            outd[t] += 1
            ind[hd] += 1
        if all(ind[x] <= p.g[x] and outd[x] <= p.h[x] for x in range(G.n)):
            return True
    return False


class OrientationTable:
    """Every partial orientation of G (3 states per edge, 2 per loop), with
    in/out-degree vectors and the bitmask of oriented edges."""

    def __init__(self, G: Multigraph, max_m: int = MAX_M_COLORS):
        _cap(G.m, max_m, "m")
        self.G = G
        states = [(0, 1) if u == v else (0, 1, 2) for u, v in G.edges]
        S = np.array(list(itertools.product(*states)), dtype=np.int8).reshape(-1, G.m)
        ind = np.zeros((len(S), G.n), dtype=np.int64)
        outd = np.zeros((len(S), G.n), dtype=np.int64)
        mask = np.zeros(len(S), dtype=np.int64)
        for e, (u, v) in enumerate(G.edges):
            fwd = (S[:, e] == 1).astype(np.int64)
            bwd = (S[:, e] == 2).astype(np.int64)
            outd[:, u] += fwd
            ind[:, v] += fwd
            outd[:, v] += bwd
            ind[:, u] += bwd
            mask |= (S[:, e] > 0).astype(np.int64) << e
        self.ind, self.outd, self.mask = ind, outd, mask

    def feasible_masks(self, p: FunctionPair) -> np.ndarray:
        g = np.array([float(x) for x in p.g])
        h = np.array([float(x) for x in p.h])
        ok = (self.ind <= g).all(axis=1) & (self.outd <= h).all(axis=1)
        return np.unique(self.mask[ok])

    def orientable(self, p: FunctionPair) -> bool:
        full = (1 << self.G.m) - 1
        return bool((self.feasible_masks(p) == full).any())


def orientability_conditions(G: Multigraph, p: FunctionPair, max_n: int = MAX_N_SUBSETS) -> bool:
    """d(v) <= g(v) + h(v) for all v and e(S) <= min(g(S), h(S)) for all S."""
    _cap(G.n, max_n, "n")
    d = G.degrees
    if any(d[v] > p.g[v] + p.h[v] for v in range(G.n)):
        return False
    for mask in range(1, 1 << G.n):
        S = [v for v in range(G.n) if mask >> v & 1]
        e = _inside(G, mask)
        if e > min(sum(p.g[v] for v in S), sum(p.h[v] for v in S)):
            return False
    return True


# ------------------------------------------------------------- class predicates


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))
        self.verts = [1] * n
        self.edges = [0] * n

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b) -> bool:
        """Add edge ab; False if it closes a cycle."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self.edges[ra] += 1
            return False
        self.parent[rb] = ra
        self.verts[ra] += self.verts[rb]
        self.edges[ra] += self.edges[rb] + 1
        return True


def _sub_degrees(G, ids):
    d = [0] * G.n
    for e in ids:
        u, v = G.edges[e]
        d[u] += 1
        d[v] += 1
    return d


def is_forest(G, ids) -> bool:
    dsu = _DSU(G.n)
    return all(dsu.union(*G.edges[e]) for e in ids)


def is_pseudoforest(G, ids) -> bool:
    dsu = _DSU(G.n)
    for e in ids:
        dsu.union(*G.edges[e])
    return all(dsu.edges[r] <= dsu.verts[r] for r in range(G.n) if dsu.find(r) == r)


@dataclass(frozen=True)
class ClassPredicate:
    """A property of an edge subset of a host graph."""

    kind: str
    pair: FunctionPair | None = None
    f: tuple | None = None

    def __post_init__(self):
        if self.kind not in PREDICATE_KINDS:
            raise ValueError(f"unknown class kind {self.kind!r}")
        if self.kind == "gh-orientable" and self.pair is None:
            raise ValueError("gh-orientable needs a pair")
        if self.kind.startswith("degree-f") and self.f is None:
            raise ValueError(f"{self.kind} needs f")

    def holds(self, G: Multigraph, ids) -> bool:
        ids = list(ids)
        kind = self.kind
        if kind == "gh-orientable":
            sub = Multigraph(G.n, tuple(G.edges[e] for e in ids))
            return brute_orientable(sub, self.pair, max_m=max(MAX_M_ORIENT, len(ids)))
        d = _sub_degrees(G, ids)
        if kind == "matching":
            return max(d, default=0) <= 1
        if kind.startswith("degree-f") and any(d[v] > self.f[v] for v in range(G.n)):
            return False
        if kind == "linear-forest" and max(d, default=0) > 2:
            return False
        if kind in ("forest", "degree-f-forest", "linear-forest"):
            return is_forest(G, ids)
        if kind in ("pseudoforest", "degree-f-pseudoforest"):
            return is_pseudoforest(G, ids)
        return True  # degree-f-subgraph


def _cover_number(m, feasible) -> int:
    """Fewest feasible masks whose union is everything (family is down-closed)."""
    full = (1 << m) - 1
    if m == 0:
        return 0
    feas = np.asarray(sorted(set(int(x) for x in feasible)), dtype=np.int64)
    if full in set(feas.tolist()):
        return 1
    reach = feas
    for k in range(2, m + 1):
        reach = np.unique(np.bitwise_or.outer(reach, feas).ravel())
        if reach[-1] == full:
            return k
    raise ValueError("edge set cannot be covered: some single edge is infeasible")


def brute_min_colors(G: Multigraph, pred: ClassPredicate, max_m: int = MAX_M_COLORS) -> int:
    """Minimum number of classes in a partition of E(G) into pred-classes.

    All predicates are closed under taking subsets, so this equals the least
    number of feasible edge sets covering E(G).
    """
    _cap(G.m, max_m, "m")
    if G.m == 0:
        return 0
    if pred.kind == "gh-orientable":
        return _cover_number(G.m, OrientationTable(G, max_m).feasible_masks(pred.pair))
    feasible = {0}
    for mask in range(1, 1 << G.m):
        if any((mask & ~(1 << e)) not in feasible for e in range(G.m) if mask >> e & 1):
            continue
        if pred.holds(G, [e for e in range(G.m) if mask >> e & 1]):
            feasible.add(mask)
    return _cover_number(G.m, feasible)


@dataclass(frozen=True)
class ClassCheck:
    ok: bool
    index: int | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def predicate_for(result) -> ClassPredicate:
    """The class property a decomposition claims, from its kind tag."""
    kind = result.kind
    if kind == "gh-orientable":
        return ClassPredicate(kind, pair=result.pair)
    return ClassPredicate(kind, f=None if result.f is None else tuple(result.f))


def _check_orientation_witness(G, ids, w, pair):
    heads = w.heads if hasattr(w, "heads") else w
    if len(heads) != G.m:
        return "witness orientation has the wrong length"
    ind = [0] * G.n
    outd = [0] * G.n
    chosen = set(ids)
    for e, hd in enumerate(heads):
        if (hd is None) == (e in chosen):
            return f"witness orients edge {e} wrongly (class membership mismatch)"
        if hd is None:
            continue
        u, v = G.edges[e]
        if hd not in (u, v):
            return f"head {hd} of edge {e} is not an endpoint"
        tail = v if hd == u else u
        ind[hd] += 1
        outd[tail] += 1
    for x in range(G.n):
        if ind[x] > pair.g[x] or outd[x] > pair.h[x]:
            return f"witness violates the bounds at vertex {x}"
    return None


def _check_roots(G, ids, roots):
    dsu = _DSU(G.n)
    touched = set()
    for e in ids:
        dsu.union(*G.edges[e])
        touched.update(G.edges[e])
    comps = {dsu.find(v) for v in touched}
    got = [dsu.find(r) for r in roots if r in touched]
    if len(got) != len(roots) or sorted(got) != sorted(comps):
        return "root list does not name one vertex per component"
    return None


def verify_classes(G: Multigraph, result) -> ClassCheck:
    """Re-check every class of a decomposition from first principles.

    ``result`` needs ``kind``, ``classes``, ``witnesses`` and, depending on
    the kind, ``pair`` and ``f``.  A partition defect raises ValueError.
    """
    seen = [0] * G.m
    for cls in result.classes:
        for e in cls:
            if not 0 <= e < G.m:
                raise ValueError(f"edge id {e} out of range")
            seen[e] += 1
    missing = [e for e in range(G.m) if seen[e] == 0]
    dup = [e for e in range(G.m) if seen[e] > 1]
    if missing or dup:
        raise ValueError(f"classes do not partition E(G): missing {missing}, repeated {dup}")
    pred = predicate_for(result)
    witnesses = list(result.witnesses) if result.witnesses is not None else [None] * len(result.classes)
    for i, (cls, w) in enumerate(zip(result.classes, witnesses)):
        # an orientation witness settles (g, h)-orientability on its own
        if not (pred.kind == "gh-orientable" and w is not None) and not pred.holds(G, cls):
            return ClassCheck(False, i, f"class {i} is not a {pred.kind}")
        if w is None:
            continue
        if isinstance(w, dict):
            if "roots" in w:
                msg = _check_roots(G, cls, w["roots"])
                if msg:
                    return ClassCheck(False, i, f"class {i}: {msg}")
            if "orientation" in w:
                heads = [None] * G.m
                for arc in w["orientation"]["arcs"]:
                    heads[arc["edge"]] = arc["head"]
                w = heads
            else:
                continue
        if result.pair is None:
            return ClassCheck(False, i, "orientation witness without a pair")
        msg = _check_orientation_witness(G, cls, w, result.pair)
        if msg:
            return ClassCheck(False, i, f"class {i}: {msg}")
    return ClassCheck(True)


# ---------------------------------------------------------------- subset maxima

SUBSET_FORMULAS = ("pa", "nash-williams", "w_gh", "w_f", "half_f")


def _inside(G, mask):
    return sum(1 for u, v in G.edges if mask >> u & 1 and mask >> v & 1)


def subset_max(G: Multigraph, formula: str, pair: FunctionPair | None = None, f=None, max_n: int = MAX_N_SUBSETS):
    """Exact maximum of a density formula over vertex subsets.

    pa: ceil(e(S)/|S|); nash-williams: ceil(e(S)/(|S|-1)), |S| >= 2;
    w_gh: ceil(e(S)/min(g(S), h(S))), g(S), h(S) >= 1, infinite values
    replaced by Δ(G); w_f: ceil(e(S)/floor(f(S)/2)), |S| >= 2;
    half_f: ceil(e(S)/sum floor(f(v)/2)).  Only sets spanning an edge count.
    Returns (value, S) with ties going to larger S, then smaller bitmask;
    (0, None) if G has no edges.
    """
    if formula not in SUBSET_FORMULAS:
        raise ValueError(f"unknown formula {formula!r}")
    _cap(G.n, max_n, "n")
    if formula == "w_gh":
        big = G.max_degree
        g = [big if x == INF else x for x in pair.g]
        h = [big if x == INF else x for x in pair.h]
    best, best_key, best_S = 0, None, None
    for mask in range(1, 1 << G.n):
        e = _inside(G, mask)
        if e == 0:
            continue
        S = [v for v in range(G.n) if mask >> v & 1]
        if formula == "pa":
            den = len(S)
        elif formula == "nash-williams":
            den = len(S) - 1
        elif formula == "w_gh":
            gs, hs = sum(g[v] for v in S), sum(h[v] for v in S)
            den = min(gs, hs) if gs >= 1 and hs >= 1 else 0
        elif formula == "w_f":
            den = sum(f[v] for v in S) // 2 if len(S) >= 2 else 0
        else:
            den = sum(f[v] // 2 for v in S)
        if den <= 0:
            continue
        val = math.ceil(e / den)
        key = (val, len(S), -mask)
        if best_key is None or key > best_key:
            best, best_key, best_S = val, key, tuple(S)
    return best, best_S


# ------------------------------------------------------------------ generators


def edge_types(n: int, loops: bool):
    return [(u, v) for u in range(n) for v in range(u, n) if loops or u != v]


def all_multigraphs(n: int, max_m: int, loops: bool = False):
    """Every multigraph on vertex set 0..n-1 with at most ``max_m`` edges
    (no isomorphism reduction), in a fixed order."""
    types = edge_types(n, loops)
    for m in range(max_m + 1):
        for combo in itertools.combinations_with_replacement(types, m):
            yield Multigraph(n, combo)


def random_multigraph(rng, n: int, m: int, loops: bool = False, max_mult: int | None = None) -> Multigraph:
    types = edge_types(n, loops)
    if m and not types:
        raise ValueError(f"no room for edges on {n} vertices without loops")
    counts: dict = {}
    edges = []
    while len(edges) < m:
        t = types[rng.randrange(len(types))]
        if max_mult is not None and counts.get(t, 0) >= max_mult:
            if all(counts.get(x, 0) >= max_mult for x in types):
                break
            continue
        counts[t] = counts.get(t, 0) + 1
        edges.append(t if rng.random() < 0.5 else t[::-1])
    return Multigraph(n, tuple(edges))


def _valid(G, g, h):
    if any(g[v] + h[v] < 1 for v in range(G.n)):
        return False
    return all(g[u] + g[v] >= 1 and h[u] + h[v] >= 1 for u, v in G.edges)


def all_valid_pairs(G: Multigraph, values=(0, 1, 2, 3)):
    """Every valid per-vertex pair with entries from ``values``, one
    representative per canonical form (entries capped at max(d(v), 1))."""
    d = [max(x, 1) for x in G.degrees]
    options = []
    for v in range(G.n):
        opts = sorted({(min(a, d[v]), min(b, d[v])) for a in values for b in values if a + b >= 1})
        options.append(opts)
    for combo in itertools.product(*options):
        g = tuple(a for a, _ in combo)
        h = tuple(b for _, b in combo)
        if _valid(G, g, h):
            yield FunctionPair(g, h)


def random_valid_pair(rng, G: Multigraph, values=(0, 1, 2, 3, INF), tries: int = 1000) -> FunctionPair:
    for _ in range(tries):
        g = tuple(rng.choice(values) for _ in range(G.n))
        h = tuple(rng.choice(values) for _ in range(G.n))
        if _valid(G, g, h):
            return FunctionPair(g, h)
    # fall back to a pair that is valid on every graph
    return FunctionPair.constant(G.n, 1, 1)


def random_bipartite(rng, nx: int, ny: int, m: int, max_mult: int = 4):
    """Random bipartite multigraph as (nx, ny, edges) with bounded multiplicity."""
    counts: dict = {}
    edges = []
    cells = nx * ny
    m = min(m, cells * max_mult)
    while len(edges) < m:
        t = (rng.randrange(nx), rng.randrange(ny))
        if counts.get(t, 0) >= max_mult:
            continue
        counts[t] = counts.get(t, 0) + 1
        edges.append(t)
    return nx, ny, tuple(edges)
