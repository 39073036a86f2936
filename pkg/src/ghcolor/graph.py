"""Multigraphs with loops and parallel edges, and per-vertex bound functions.

Edge ids are positions in the edge list.  Every algorithm in the package walks
edges in ascending id so that outputs are reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

INF = math.inf


class GraphFormatError(ValueError):
    """Malformed graph, function or list file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.n < 0:
            raise ValueError("negative vertex count")
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {i} = ({u}, {v}) has an endpoint outside 0..{self.n - 1}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids at each vertex in ascending order; a loop is listed once."""
        inc = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            if v != u:
                inc[v].append(e)
        return tuple(tuple(x) for x in inc)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @property
    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)

    @property
    def multiplicity(self) -> int:
        counts: dict[tuple[int, int], int] = {}
        for u, v in self.edges:
            if u != v:
                key = (min(u, v), max(u, v))
                counts[key] = counts.get(key, 0) + 1
        return max(counts.values(), default=0)

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def induced_edge_count(self, vertices) -> int:
        s = set(vertices)
        return sum(1 for u, v in self.edges if u in s and v in s)

    def subgraph(self, edge_ids) -> tuple["Multigraph", tuple[int, ...]]:
        """Spanning subgraph on the given edges, plus the map new id -> old id."""
        ids = tuple(sorted(edge_ids))
        return Multigraph(self.n, tuple(self.edges[e] for e in ids)), ids

    def __repr__(self):
        return f"Multigraph(n={self.n}, m={self.m})"


def _check_value(x):
    if x == INF:
        return INF
    if isinstance(x, bool) or int(x) != x or x < 0:
        raise ValueError(f"bound values must be naturals or inf, got {x!r}")
    return int(x)


@dataclass(frozen=True)
class FunctionPair:
    """Per-vertex indegree bound ``g`` and outdegree bound ``h``."""

    g: tuple
    h: tuple

    def __post_init__(self):
        g = tuple(_check_value(x) for x in self.g)
        h = tuple(_check_value(x) for x in self.h)
        if len(g) != len(h):
            raise ValueError("g and h must have the same length")
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "h", h)

    @classmethod
    def constant(cls, n: int, g, h) -> "FunctionPair":
        return cls((g,) * n, (h,) * n)

    @property
    def n(self) -> int:
        return len(self.g)

    def canonical(self, G: Multigraph) -> "FunctionPair":
        """Cap every value at max(d(v), 1).  Values above the degree never
        bind; the floor of 1 keeps isolated vertices valid."""
        self._check_size(G)
        d = [max(x, 1) for x in G.degrees]
        return FunctionPair(
            tuple(min(x, d[v]) for v, x in enumerate(self.g)),
            tuple(min(x, d[v]) for v, x in enumerate(self.h)),
        )

    def scaled(self, k: int) -> "FunctionPair":
        if k < 1:
            raise ValueError("scale factor must be positive")
        return FunctionPair(tuple(k * x for x in self.g), tuple(k * x for x in self.h))

    def is_canonical(self, G: Multigraph) -> bool:
        d = [max(x, 1) for x in G.degrees]
        return all(self.g[v] <= d[v] and self.h[v] <= d[v] for v in range(G.n))

    def _check_size(self, G: Multigraph):
        if self.n != G.n:
            raise ValueError(f"pair defined on {self.n} vertices, graph has {G.n}")

    def to_json(self):
        enc = lambda x: "inf" if x == INF else x
        return {"g": [enc(x) for x in self.g], "h": [enc(x) for x in self.h]}


@dataclass(frozen=True)
class DegreeFunction:
    """A per-vertex degree bound ``f`` with a required minimum value."""

    f: tuple[int, ...]
    minimum: int = 1

    def __post_init__(self):
        f = tuple(int(x) for x in self.f)
        object.__setattr__(self, "f", f)
        bad = [v for v, x in enumerate(f) if x < self.minimum]
        if bad:
            raise ValueError(f"f({bad[0]}) = {f[bad[0]]} is below the required minimum {self.minimum}")

    @classmethod
    def constant(cls, n: int, value: int, minimum: int = 1) -> "DegreeFunction":
        return cls((value,) * n, minimum)

    def __getitem__(self, v):
        return self.f[v]

    def __len__(self):
        return len(self.f)

    def scaled(self, k: int) -> "DegreeFunction":
        return DegreeFunction(tuple(k * x for x in self.f), self.minimum)


@dataclass(frozen=True)
class PairReport:
    ok: bool
    condition: int | None = None
    vertices: tuple[int, ...] = ()
    message: str = ""

    def __bool__(self):
        return self.ok


def validate_pair(G: Multigraph, p: FunctionPair) -> PairReport:
    """Check the three validity conditions; a looped vertex is its own neighbour."""
    p._check_size(G)
    for v in range(G.n):
        if p.g[v] + p.h[v] < 1:
            return PairReport(False, 1, (v,), f"g({v}) + h({v}) = 0")
    for u, v in G.edges:
        if p.g[u] + p.g[v] < 1:
            return PairReport(False, 2, (u, v), f"g({u}) + g({v}) = 0 on an edge")
        if p.h[u] + p.h[v] < 1:
            return PairReport(False, 3, (u, v), f"h({u}) + h({v}) = 0 on an edge")
    return PairReport(True)


class InvalidPairError(ValueError):
    def __init__(self, report: PairReport):
        self.report = report
        super().__init__(f"invalid pair (condition {report.condition}): {report.message}")


def require_valid(G: Multigraph, p: FunctionPair) -> FunctionPair:
    """Validate ``p`` on ``G`` and return its canonical form."""
    report = validate_pair(G, p)
    if not report:
        raise InvalidPairError(report)
    return p.canonical(G)


def degeneracy_order(G: Multigraph) -> tuple[int, list[int]]:
    """Smallest-last elimination.  Returns (k, removal order).

    Ties go to the lowest vertex id.
    """
    if G.has_loops:
        raise ValueError("degeneracy is defined for loopless multigraphs")
    deg = list(G.degrees)
    alive = [True] * G.n
    order = []
    k = 0
    for _ in range(G.n):
        v = min((x for x in range(G.n) if alive[x]), key=lambda x: (deg[x], x))
        k = max(k, deg[v])
        alive[v] = False
        order.append(v)
        for e in G.incident[v]:
            w = G.other_end(e, v)
            if alive[w]:
                deg[w] -= 1
    return k, order


def bipartition(G: Multigraph) -> tuple[list[int], list[int]] | None:
    """2-colour each component from its lowest vertex; None if not bipartite."""
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] != -1:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for e in G.incident[x]:
                y = G.other_end(e, x)
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return None
    return [v for v in range(G.n) if side[v] == 0], [v for v in range(G.n) if side[v] == 1]


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)
