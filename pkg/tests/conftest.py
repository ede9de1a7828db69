import itertools
import math

from hypothesis import strategies as st

from copkit.graph import Digraph, Graph


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def digraphs(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Digraph.from_arcs(n, [e for e, keep in zip(pairs, mask) if keep])


def _closed(g, v, inbound=False):
    if isinstance(g, Digraph):
        return (v, *(g.in_adj[v] if inbound else g.out_adj[v]))
    return (v, *g.adj[v])


def brute_levels(g, k):
    """Bellman iteration over ordered cop tuples; independent of the kernel.

    Returns (cop_to_move, robber_to_move) dicts from (sorted cops, robber)
    to level, holding only cop-win states.
    """
    n = g.n
    inf = math.inf
    configs = list(itertools.product(range(n), repeat=k))
    lc = {(c, r): (0 if r in c else inf) for c in configs for r in range(n)}
    lr = dict(lc)
    changed = True
    while changed:
        changed = False
        for c in configs:
            moves = list(itertools.product(*(_closed(g, x) for x in c)))
            for r in range(n):
                if r in c:
                    continue
                vc = 1 + min(lr[(m, r)] for m in moves)
                vr = 1 + max(lc[(c, r2)] for r2 in _closed(g, r))
                if vc < lc[(c, r)]:
                    lc[(c, r)] = vc
                    changed = True
                if vr < lr[(c, r)]:
                    lr[(c, r)] = vr
                    changed = True
    canon_c = {}
    canon_r = {}
    for (c, r), v in lc.items():
        if v < inf:
            canon_c[(tuple(sorted(c)), r)] = v
    for (c, r), v in lr.items():
        if v < inf:
            canon_r[(tuple(sorted(c)), r)] = v
    return canon_c, canon_r


def brute_cops_win(g, k):
    lc, _ = brute_levels(g, k)
    return any(all((c, r) in lc for r in range(g.n))
               for c in itertools.combinations_with_replacement(range(g.n), k))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
