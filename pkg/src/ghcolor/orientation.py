"""Orientations with per-vertex indegree/outdegree caps.

The core routine grows a partial orientation edge by edge.  When an edge
cannot be oriented directly, a directed path ending (or starting) at one of
its endpoints is reversed to free a slot.  If no such path exists, the set of
vertices reached by the search is a dense set that certifies that no full
orientation exists.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .graph import INF, DegreeFunction, FunctionPair, Multigraph, require_valid


@dataclass(frozen=True)
class Orientation:
    """Head vertex per edge id; ``None`` marks an unoriented edge.

    The tail is the other endpoint; a directed loop has head = tail.
    """

    graph: Multigraph
    heads: tuple

    def __post_init__(self):
        heads = tuple(self.heads)
        object.__setattr__(self, "heads", heads)
        if len(heads) != self.graph.m:
            raise ValueError("one head per edge required")
        for e, x in enumerate(heads):
            if x is not None and x not in self.graph.edges[e]:
                raise ValueError(f"head {x} is not an endpoint of edge {e}")

    def head(self, e):
        return self.heads[e]

    def tail(self, e):
        x = self.heads[e]
        return None if x is None else self.graph.other_end(e, x)

    @property
    def oriented(self) -> tuple[int, ...]:
        return tuple(e for e, x in enumerate(self.heads) if x is not None)

    @property
    def unoriented(self) -> tuple[int, ...]:
        return tuple(e for e, x in enumerate(self.heads) if x is None)

    @property
    def is_full(self) -> bool:
        return all(x is not None for x in self.heads)

    @cached_property
    def indegree(self) -> tuple[int, ...]:
        d = [0] * self.graph.n
        for x in self.heads:
            if x is not None:
                d[x] += 1
        return tuple(d)

    @cached_property
    def outdegree(self) -> tuple[int, ...]:
        d = [0] * self.graph.n
        for e, x in enumerate(self.heads):
            if x is not None:
                d[self.graph.other_end(e, x)] += 1
        return tuple(d)

    def restricted(self, edge_ids) -> "Orientation":
        keep = set(edge_ids)
        return Orientation(self.graph, tuple(x if e in keep else None for e, x in enumerate(self.heads)))

    def to_json(self):
        arcs = [{"edge": e, "tail": self.tail(e), "head": self.heads[e]} for e in self.oriented]
        return {"arcs": arcs, "unoriented": list(self.unoriented)}

    @classmethod
    def from_json(cls, G: Multigraph, data) -> "Orientation":
        heads = [None] * G.m
        for arc in data["arcs"]:
            e = arc["edge"]
            if not 0 <= e < G.m:
                raise ValueError(f"arc refers to unknown edge {e}")
            if {arc["tail"], arc["head"]} != set(G.edges[e]):
                raise ValueError(f"arc {arc} does not match edge {e} = {G.edges[e]}")
            heads[e] = arc["head"]
        return cls(G, tuple(heads))


@dataclass(frozen=True)
class Certificate:
    """Witness that a graph has no (g, h)-orientation.

    ``kind == "degree"``: a vertex with d(v) > g(v) + h(v).
    ``kind == "density"``: a vertex set S with e(S) > min(g(S), h(S)).
    """

    kind: str
    vertices: tuple[int, ...]
    count: int
    g_sum: float
    h_sum: float

    @property
    def capacity(self):
        if self.kind == "degree":
            return self.g_sum + self.h_sum
        return min(self.g_sum, self.h_sum)

    def holds(self, G: Multigraph, p: FunctionPair) -> bool:
        """Re-evaluate the violated inequality on ``G`` from scratch."""
        S = self.vertices
        if not S:
            return False
        if self.kind == "degree":
            (v,) = S
            return G.degrees[v] > p.g[v] + p.h[v]
        gs = sum(p.g[v] for v in S)
        hs = sum(p.h[v] for v in S)
        return G.induced_edge_count(S) > min(gs, hs)

    def to_json(self):
        enc = lambda x: "inf" if x == INF else x
        out = {"kind": self.kind, "vertices": list(self.vertices)}
        if self.kind == "degree":
            out.update(degree=self.count, g=enc(self.g_sum), h=enc(self.h_sum))
        else:
            out.update(edges_inside=self.count, g_sum=enc(self.g_sum), h_sum=enc(self.h_sum))
        return out


def degree_certificate(G: Multigraph, p: FunctionPair) -> Certificate | None:
    d = G.degrees
    for v in range(G.n):
        if d[v] > p.g[v] + p.h[v]:
            return Certificate("degree", (v,), d[v], p.g[v], p.h[v])
    return None


class _Orienter:
    """Mutable state for the path-reversal construction (canonical bounds)."""

    def __init__(self, G: Multigraph, g, h):
        self.G = G
        self.g = g
        self.h = h
        self.heads = [None] * G.m
        self.ind = [0] * G.n
        self.outd = [0] * G.n
        # non-loop arcs only; loops never lie on a reversal path
        self.arcs_in = [set() for _ in range(G.n)]
        self.arcs_out = [set() for _ in range(G.n)]

    def _set(self, e, tail, head):
        self.heads[e] = head
        self.ind[head] += 1
        self.outd[tail] += 1
        if tail != head:
            self.arcs_in[head].add(e)
            self.arcs_out[tail].add(e)

    def _unset(self, e):
        head = self.heads[e]
        tail = self.G.other_end(e, head)
        self.heads[e] = None
        self.ind[head] -= 1
        self.outd[tail] -= 1
        if tail != head:
            self.arcs_in[head].discard(e)
            self.arcs_out[tail].discard(e)

    def _reverse(self, e):
        head = self.heads[e]
        tail = self.G.other_end(e, head)
        self._unset(e)
        self._set(e, head, tail)

    def _search(self, sources, backward):
        """BFS over arcs (against their direction if ``backward``).

        Stops at the first vertex with a free in-slot (backward) or out-slot
        (forward).  Returns (found vertex or None, parent map, visited order).
        """
        slack = (lambda w: self.ind[w] < self.g[w]) if backward else (lambda w: self.outd[w] < self.h[w])
        parent = {s: None for s in sources}
        queue = deque(sources)
        while queue:
            x = queue.popleft()
            arcs = self.arcs_in[x] if backward else self.arcs_out[x]
            steps = sorted((self.G.other_end(e, x), e) for e in arcs)
            for w, e in steps:
                if w in parent:
                    continue
                parent[w] = (e, x)
                if slack(w):
                    return w, parent, list(parent)
                queue.append(w)
        return None, parent, list(parent)

    def closure(self, sources, backward):
        """Vertices reaching (backward) or reached from ``sources`` along
        arcs, provided all of them are saturated on that side; else None."""
        full = (lambda w: self.ind[w] >= self.g[w]) if backward else (lambda w: self.outd[w] >= self.h[w])
        if not all(full(s) for s in sources):
            return None
        w, _, visited = self._search(sources, backward)
        return None if w is not None else visited

    def _reverse_path(self, w, parent):
        """Reverse the path from ``w`` back to its BFS source; return the source."""
        x = w
        while parent[x] is not None:
            e, nxt = parent[x]
            self._reverse(e)
            x = nxt
        return x

    def add(self, e):
        """Try to orient edge ``e``.  Returns None on success, else the
        searched vertex set and which side ("in" or "out") it saturates;
        ``("stuck", endpoints)`` when no reversal search applies."""
        u, v = self.G.edges[e]
        g, h, ind, outd = self.g, self.h, self.ind, self.outd
        if u == v:
            if ind[v] < g[v] and outd[v] < h[v]:
                self._set(e, v, v)
                return None
            # the loop takes one more in- and out-slot after the reversal
            if outd[v] + 2 <= h[v]:
                backward = True
            elif ind[v] + 2 <= g[v]:
                backward = False
            else:
                return "stuck", [v]
            sources = [v]
        else:
            fwd = outd[u] < h[u] and ind[v] < g[v]
            bwd = outd[v] < h[v] and ind[u] < g[u]
            if fwd and bwd:
                lo, hi = (u, v) if u < v else (v, u)
                self._set(e, lo, hi)
                return None
            if fwd:
                self._set(e, u, v)
                return None
            if bwd:
                self._set(e, v, u)
                return None
            # Either both indegrees are saturated (free an in-slot by reversing
            # a path into an endpoint) or both outdegrees are.  Anything else
            # can only happen when some d(x) > g(x) + h(x).
            if outd[u] < h[u] and outd[v] < h[v]:
                backward = True
            elif ind[u] < g[u] and ind[v] < g[v]:
                backward = False
            else:
                return "stuck", sorted({u, v})
            sources = sorted({u, v})
        w, parent, visited = self._search(sources, backward)
        if w is None:
            return visited, ("in" if backward else "out")
        root = self._reverse_path(w, parent)
        other = self.G.other_end(e, root)
        if backward:
            self._set(e, other, root)
        else:
            self._set(e, root, other)
        return None


def _density_certificate(G, p, pc, S, side):
    # Vertices whose bound was capped at d(w) are saturated by all of their
    # edges; dropping them keeps the inequality and makes it hold for p too.
    vals, capped = (p.g, pc.g) if side == "in" else (p.h, pc.h)
    d = G.degrees
    S = sorted(w for w in S if not (vals[w] > d[w] and capped[w] == d[w]))
    gs = sum(p.g[w] for w in S)
    hs = sum(p.h[w] for w in S)
    return Certificate("density", tuple(S), G.induced_edge_count(S), gs, hs)


def _run(G, p, stop_on_failure=False):
    pc = require_valid(G, p)
    state = _Orienter(G, pc.g, pc.h)
    first_failure = None
    for e in range(G.m):
        fail = state.add(e)
        if fail is not None and first_failure is None:
            first_failure = fail
            if stop_on_failure:
                break
    return pc, state, first_failure


def max_partial_orientation(G: Multigraph, p: FunctionPair) -> Orientation:
    """Partial (g, h)-orientation to which no edge can be added, even after
    reversing a directed path.  Full whenever G is (g, h)-orientable."""
    _, state, _ = _run(G, p)
    return Orientation(G, tuple(state.heads))


def is_orientable(G: Multigraph, p: FunctionPair):
    """Return a full (g, h)-orientation, or a ``Certificate`` that none exists.

    The certificate is a saturated reachability set when one exists
    (indegree side first), otherwise a vertex with d(v) > g(v) + h(v).
    """
    pc, state, failure = _run(G, p, stop_on_failure=True)
    if failure is None:
        return Orientation(G, tuple(state.heads))
    S, side = failure
    if S == "stuck":
        ends = side
        S, side = state.closure(ends, True), "in"
        if S is None:
            S, side = state.closure(ends, False), "out"
        if S is None:
            d = G.degrees
            v = next(x for x in ends if d[x] > pc.g[x] + pc.h[x])
            return Certificate("degree", (v,), d[v], p.g[v], p.h[v])
    cert = _density_certificate(G, p, pc, S, side)
    assert cert.holds(G, p), cert
    return cert


@dataclass(frozen=True)
class CheckReport:
    ok: bool
    vertex: int | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def verify_orientation(G: Multigraph, p: FunctionPair, D: Orientation, edges=None) -> CheckReport:
    """Check d-(v) <= g(v) and d+(v) <= h(v) everywhere.

    With ``edges`` given, D must orient exactly those edges (a class witness);
    otherwise D must be full.
    """
    if D.graph.edges != G.edges or D.graph.n != G.n:
        raise ValueError("orientation belongs to a different graph")
    expected = set(range(G.m)) if edges is None else set(edges)
    if set(D.oriented) != expected:
        raise ValueError("orientation does not cover the expected edge ids")
    for v in range(G.n):
        if D.indegree[v] > p.g[v]:
            return CheckReport(False, v, f"indegree {D.indegree[v]} > g({v}) = {p.g[v]}")
        if D.outdegree[v] > p.h[v]:
            return CheckReport(False, v, f"outdegree {D.outdegree[v]} > h({v}) = {p.h[v]}")
    return CheckReport(True)


def _components(G: Multigraph, edge_ids=None):
    edge_ids = range(G.m) if edge_ids is None else edge_ids
    adj = [[] for _ in range(G.n)]
    for e in edge_ids:
        u, v = G.edges[e]
        adj[u].append(e)
        if u != v:
            adj[v].append(e)
    comp = [-1] * G.n
    comps = []
    for s in range(G.n):
        if comp[s] != -1:
            continue
        comp[s] = len(comps)
        verts, stack = [s], [s]
        while stack:
            x = stack.pop()
            for e in adj[x]:
                y = G.other_end(e, x)
                if comp[y] == -1:
                    comp[y] = comp[s]
                    verts.append(y)
                    stack.append(y)
        comps.append(sorted(verts))
    return adj, comp, comps


def unicyclic_structure(G: Multigraph, edge_ids=None):
    """Split a pseudoforest into cycles and tree parts.

    Returns (adj, comps, cycles) where ``cycles[i]`` is the cyclic edge
    component i as ``(start, edge walk)`` beginning at its lowest cycle vertex,
    or None for a tree component.
    Raises ValueError if some component has more edges than vertices.
    """
    adj, comp, comps = _components(G, edge_ids)
    edge_ids = range(G.m) if edge_ids is None else list(edge_ids)
    ecount = [0] * len(comps)
    for e in edge_ids:
        ecount[comp[G.edges[e][0]]] += 1
    for i, verts in enumerate(comps):
        if ecount[i] > len(verts):
            raise ValueError(f"component containing vertex {verts[0]} has more than one cycle")
    # peel leaves; what survives in a unicyclic component is its cycle
    deg = [0] * G.n
    for e in edge_ids:
        u, v = G.edges[e]
        deg[u] += 1
        deg[v] += 1
    alive = set(edge_ids)
    leaves = deque(v for v in range(G.n) if deg[v] == 1)
    while leaves:
        x = leaves.popleft()
        for e in adj[x]:
            if e in alive:
                alive.discard(e)
                y = G.other_end(e, x)
                deg[x] -= 1
                deg[y] -= 1
                if deg[y] == 1:
                    leaves.append(y)
    cycles = []
    for i, verts in enumerate(comps):
        if ecount[i] < len(verts):
            cycles.append(None)
            continue
        start = min(v for v in verts if any(e in alive for e in adj[v]))
        walk, used, x = [], set(), start
        while True:
            e = min(f for f in adj[x] if f in alive and f not in used)
            used.add(e)
            walk.append(e)
            x = G.other_end(e, x)
            if x == start:
                break
        cycles.append((start, walk))
    return adj, comps, cycles


def orient_pseudoforest(G: Multigraph, f: DegreeFunction) -> Orientation:
    """(1, f-1)-orientation of a degree-f pseudoforest: directed cycles, then
    trees oriented away from the cycle (or from a leaf when acyclic)."""
    if len(f) != G.n:
        raise ValueError("f must be defined on every vertex")
    if any(x < 2 for x in f.f):
        raise ValueError("degree-f pseudoforests need f >= 2")
    for v, d in enumerate(G.degrees):
        if d > f[v]:
            raise ValueError(f"d({v}) = {d} exceeds f({v}) = {f[v]}")
    adj, comps, cycles = unicyclic_structure(G)
    heads = [None] * G.m
    for verts, cyc in zip(comps, cycles):
        if cyc is not None:
            x, walk = cyc
            for e in walk:
                y = G.other_end(e, x)
                heads[e] = y
                x = y
            roots = sorted({v for e in walk for v in G.edges[e]})
        else:
            leaves = [v for v in verts if len(adj[v]) == 1]
            if not leaves:
                continue
            roots = [leaves[0]]
        seen = set(roots)
        queue = deque(roots)
        while queue:
            x = queue.popleft()
            for e in adj[x]:
                if heads[e] is None:
                    y = G.other_end(e, x)
                    if y in seen:
                        continue
                    heads[e] = y
                    seen.add(y)
                    queue.append(y)
    return Orientation(G, tuple(heads))


def degenerate_acyclic_orientation(G: Multigraph, order) -> Orientation:
    """Orient every edge toward its endpoint removed earlier in ``order``.

    For a smallest-last order of a k-degenerate graph every indegree is at
    most k, and the orientation is acyclic.
    """
    if G.has_loops:
        raise ValueError("acyclic orientations need a loopless graph")
    order = list(order)
    if sorted(order) != list(range(G.n)):
        raise ValueError("order must be a permutation of the vertices")
    pos = {v: i for i, v in enumerate(order)}
    heads = tuple(u if pos[u] < pos[v] else v for u, v in G.edges)
    return Orientation(G, heads)


def forests_from_acyclic(D: Orientation) -> list[list[int]]:
    """Give the incoming arcs at each vertex distinct indices; each index class
    is a forest because every vertex has at most one parent in it."""
    k = max(D.indegree, default=0)
    classes = [[] for _ in range(k)]
    seen = [0] * D.graph.n
    for e in range(D.graph.m):
        x = D.heads[e]
        classes[seen[x]].append(e)
        seen[x] += 1
    return classes
