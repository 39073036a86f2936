"""Text formats for graphs, bound functions and list assignments.

Graph file::

    # comment
    n m
    u v        (m lines, 0-based vertex ids)

Function file: one line per vertex, ``v g h`` for a pair or ``v f`` for a
degree function; ``inf`` stands for infinity.  List file: line i holds the
space-separated colour tokens of edge i.
"""

from __future__ import annotations

from .graph import INF, DegreeFunction, FunctionPair, GraphFormatError, Multigraph


def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _int(token: str, no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"expected an integer, got {token!r}", no) from None


def _bound(token: str, no: int):
    if token.lower() in ("inf", "infinity"):
        return INF
    x = _int(token, no)
    if x < 0:
        raise GraphFormatError(f"negative bound {x}", no)
    return x


def parse_graph(text: str) -> Multigraph:
    lines = list(_content_lines(text))
    if not lines:
        raise GraphFormatError("empty graph file: missing 'n m' header", 1)
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphFormatError(f"header must be 'n m', got {header!r}", no)
    n, m = _int(parts[0], no), _int(parts[1], no)
    if n < 0 or m < 0:
        raise GraphFormatError("negative n or m in header", no)
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (lines[-1][0] + 1)
        raise GraphFormatError(f"header announces {m} edges, file has {len(body)}", where)
    edges = []
    for no, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {line!r}", no)
        u, v = _int(parts[0], no), _int(parts[1], no)
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(f"vertex {x} out of range 0..{n - 1}", no)
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def format_graph(G: Multigraph) -> str:
    return "\n".join([f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges]) + "\n"


def _rows(text: str, n: int, width: int):
    seen = {}
    for no, line in _content_lines(text):
        parts = line.split()
        if len(parts) != width + 1:
            raise GraphFormatError(f"expected {width + 1} tokens, got {len(parts)}", no)
        v = _int(parts[0], no)
        if not 0 <= v < n:
            raise GraphFormatError(f"vertex {v} out of range 0..{n - 1}", no)
        if v in seen:
            raise GraphFormatError(f"vertex {v} listed twice", no)
        seen[v] = [_bound(t, no) for t in parts[1:]]
    return seen


def parse_pair(text: str, n: int, default=None) -> FunctionPair:
    """Read ``v g h`` lines.  Vertices not listed get ``default`` (a (g, h) tuple)."""
    rows = _rows(text, n, 2)
    g, h = [], []
    for v in range(n):
        if v in rows:
            a, b = rows[v]
        elif default is not None:
            a, b = default
        else:
            raise GraphFormatError(f"no bounds given for vertex {v} and no default")
        g.append(a)
        h.append(b)
    return FunctionPair(tuple(g), tuple(h))


def parse_degree_function(text: str, n: int, default=None, minimum: int = 1) -> DegreeFunction:
    rows = _rows(text, n, 1)
    f = []
    for v in range(n):
        if v in rows:
            (x,) = rows[v]
        elif default is not None:
            x = default
        else:
            raise GraphFormatError(f"no value of f given for vertex {v} and no default")
        if x == INF:
            raise GraphFormatError(f"f({v}) must be finite")
        f.append(x)
    try:
        return DegreeFunction(tuple(f), minimum)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def _token(t: str):
    try:
        return int(t)
    except ValueError:
        return t


def parse_lists(text: str, m: int) -> list[tuple]:
    """One line per edge id (comments allowed); tokens are ints where possible."""
    lists = []
    for no, line in _content_lines(text):
        toks = tuple(_token(t) for t in line.split())
        if len(set(toks)) != len(toks):
            raise GraphFormatError("repeated colour in a list", no)
        lists.append(toks)
    if len(lists) != m:
        raise GraphFormatError(f"expected {m} list lines, got {len(lists)}")
    return lists
