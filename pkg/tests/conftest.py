import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ghcolor.graph import INF, FunctionPair, Multigraph, validate_pair

settings.register_profile(
    "default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.register_profile("long", max_examples=2000, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def cycle(n):
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n):
    return Multigraph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def star(k):
    return Multigraph(k + 1, tuple((0, i) for i in range(1, k + 1)))


def parallel(k):
    return Multigraph(2, ((0, 1),) * k)


def k33():
    return Multigraph(6, tuple((i, j) for i in range(3) for j in range(3, 6)))


def const(G, g, h):
    return FunctionPair.constant(G.n, g, h)


TRIANGLE = cycle(3)
K4 = complete(4)


@st.composite
def multigraphs(draw, max_n=5, max_m=7, loops=True, min_m=0):
    n = draw(st.integers(1, max_n))
    allow_loops = loops and (n == 1 or draw(st.booleans()))
    if n == 1 and not allow_loops:
        return Multigraph(1, ())
    vert = st.integers(0, n - 1)
    edge = st.tuples(vert, vert)
    if not allow_loops:
        edge = edge.filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(edge, min_size=min_m, max_size=max_m))
    return Multigraph(n, tuple(edges))


VALUES = st.sampled_from([0, 1, 2, 3, INF])


@st.composite
def graph_and_pair(draw, max_n=5, max_m=7, loops=True, min_m=0):
    """A multigraph with a valid per-vertex pair.  Invalid draws are repaired
    by raising offending zeros to 1."""
    G = draw(multigraphs(max_n, max_m, loops, min_m))
    g = draw(st.lists(VALUES, min_size=G.n, max_size=G.n))
    h = draw(st.lists(VALUES, min_size=G.n, max_size=G.n))
    for _ in range(64):
        rep = validate_pair(G, FunctionPair(tuple(g), tuple(h)))
        if rep:
            break
        for v in rep.vertices:
            if rep.condition == 1 or rep.condition == 2:
                g[v] = max(g[v], 1)
            if rep.condition == 1 or rep.condition == 3:
                h[v] = max(h[v], 1)
    return G, FunctionPair(tuple(g), tuple(h))
