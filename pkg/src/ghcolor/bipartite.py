"""Edge colouring of bipartite multigraphs.

``konig_color`` builds a proper Δ-edge-colouring by alternating-path swaps.
``galvin_list_color`` colours from arbitrary lists of size Δ using kernels of
the line graph, each kernel obtained as a stable matching.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BipartiteMultigraph:
    """Parts are ``0..nx-1`` and ``0..ny-1``; edge i joins X-vertex
    ``edges[i][0]`` to Y-vertex ``edges[i][1]``.  ``origin[i]``, if set,
    names the object the edge was built from (an arc of a host graph)."""

    nx: int
    ny: int
    edges: tuple[tuple[int, int], ...]
    origin: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(x), int(y)) for x, y in self.edges))
        for x, y in self.edges:
            if not (0 <= x < self.nx and 0 <= y < self.ny):
                raise ValueError(f"edge ({x}, {y}) leaves the vertex range")
        if self.origin is not None and len(self.origin) != len(self.edges):
            raise ValueError("origin must have one entry per edge")

    @property
    def m(self):
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        dx = [0] * self.nx
        dy = [0] * self.ny
        for x, y in self.edges:
            dx[x] += 1
            dy[y] += 1
        return max(dx + dy, default=0)


def _first_free(used: dict, start: int = 0) -> int:
    c = start
    while c in used:
        c += 1
    return c


def konig_color(H: BipartiteMultigraph) -> tuple[int, ...]:
    """Colour per edge from ``range(Δ(H))``; every colour class is a matching."""
    at_x = [dict() for _ in range(H.nx)]
    at_y = [dict() for _ in range(H.ny)]
    colors = [None] * H.m
    for e, (x, y) in enumerate(H.edges):
        a = _first_free(at_x[x])
        if a in at_y[y]:
            b = _first_free(at_y[y])
            if b not in at_x[x]:
                a = b
            else:
                # a/b alternating path from y; it cannot reach x, which misses a
                path = []
                side, vtx, c = "y", y, a
                while True:
                    table = at_y[vtx] if side == "y" else at_x[vtx]
                    f = table.get(c)
                    if f is None:
                        break
                    path.append(f)
                    fx, fy = H.edges[f]
                    side, vtx = ("x", fx) if side == "y" else ("y", fy)
                    c = b if c == a else a
                for f in path:
                    fx, fy = H.edges[f]
                    del at_x[fx][colors[f]]
                    del at_y[fy][colors[f]]
                for f in path:
                    fx, fy = H.edges[f]
                    colors[f] = b if colors[f] == a else a
                    at_x[fx][colors[f]] = f
                    at_y[fy][colors[f]] = f
        colors[e] = a
        at_x[x][a] = e
        at_y[y][a] = e
    return tuple(colors)


def verify_matching_classes(H: BipartiteMultigraph, colors) -> bool:
    """True iff no two edges of the same colour share a vertex."""
    if len(colors) != H.m:
        raise ValueError("colouring must have one entry per edge")
    seen = set()
    for e, (x, y) in enumerate(H.edges):
        c = colors[e]
        if c is None:
            raise ValueError(f"edge {e} is uncoloured")
        for key in (("x", x, c), ("y", y, c)):
            if key in seen:
                return False
            seen.add(key)
    return True


def token_key(t):
    """Sort key that tolerates mixed int/str colour tokens."""
    return (isinstance(t, str), t)


def _stable_kernel(H, base, U):
    """Kernel of the line-graph digraph restricted to ``U``.

    An X-vertex prefers its edges of higher base colour, a Y-vertex those of
    lower base colour.  A stable matching under these preferences is
    independent and absorbs every other edge of ``U``.
    """
    prefs = {}
    for e in U:
        prefs.setdefault(H.edges[e][0], []).append(e)
    for x in prefs:
        prefs[x].sort(key=lambda e: -base[e])
    nxt = {x: 0 for x in prefs}
    held = {}
    free = sorted(prefs)
    while free:
        x = free.pop(0)
        if nxt[x] >= len(prefs[x]):
            continue
        e = prefs[x][nxt[x]]
        nxt[x] += 1
        y = H.edges[e][1]
        cur = held.get(y)
        if cur is None or base[e] < base[cur]:
            held[y] = e
            if cur is not None:
                free.append(H.edges[cur][0])
                free.sort()
        else:
            free.append(x)
            free.sort()
    return sorted(held.values())


def galvin_list_color(H: BipartiteMultigraph, lists) -> tuple:
    """Proper colouring with each edge's colour taken from its list.

    Every list must have at least Δ(H) distinct tokens.
    """
    if len(lists) != H.m:
        raise ValueError("one list per edge required")
    delta = H.max_degree
    for e, L in enumerate(lists):
        if len(set(L)) != len(L):
            raise ValueError(f"list of edge {e} repeats a colour")
        if len(L) < delta:
            raise ValueError(f"list of edge {e} has {len(L)} colours, Δ(H) = {delta}")
    base = konig_color(H)
    avail = [set(L) for L in lists]
    colors = [None] * H.m
    uncolored = set(range(H.m))
    while uncolored:
        gamma = min((t for e in uncolored for t in avail[e]), key=token_key)
        U = sorted(e for e in uncolored if gamma in avail[e])
        K = _stable_kernel(H, base, U)
        for e in K:
            colors[e] = gamma
            uncolored.discard(e)
        for e in U:
            avail[e].discard(gamma)
    return tuple(colors)
