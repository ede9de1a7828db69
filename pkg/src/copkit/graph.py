"""Immutable simple graphs and digraphs, named families, G(n,p), and I/O.

Vertices are the dense integers ``0..n-1``.  Adjacency lists are strictly
increasing tuples, and every ordering or tie-break downstream relies on
that order.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .rng import uniform_stream


class GraphError(ValueError):
    """Raised when adjacency data violates the simple (di)graph invariants."""


class GraphFormatError(GraphError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _check_lists(n, lists, what):
    if len(lists) != n:
        raise GraphError(f"{what}: expected {n} lists, got {len(lists)}")
    for v, nbrs in enumerate(lists):
        prev = -1
        for w in nbrs:
            if not 0 <= w < n:
                raise GraphError(f"{what}[{v}]: vertex {w} out of range")
            if w == v:
                raise GraphError(f"{what}[{v}]: loop")
            if w <= prev:
                raise GraphError(f"{what}[{v}]: not strictly increasing")
            prev = w


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple

    def __post_init__(self):
        _check_lists(self.n, self.adj, "adj")
        for u, nbrs in enumerate(self.adj):
            for w in nbrs:
                if u not in self._lookup(w):
                    raise GraphError(f"asymmetric adjacency between {u} and {w}")

    def _lookup(self, v):
        # adjacency is sorted, so a set is only built for the symmetry scan
        cache = self.__dict__.setdefault("_sets", {})
        s = cache.get(v)
        if s is None:
            s = cache[v] = frozenset(self.adj[v])
        return s

    @classmethod
    def from_edges(cls, n, edges):
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at {u}")
            if v in nbrs[u]:
                raise GraphError(f"duplicate edge ({u}, {v})")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def degree(self, v):
        return len(self.adj[v])

    @property
    def max_degree(self):
        return max((len(a) for a in self.adj), default=0)

    @property
    def m(self):
        return sum(len(a) for a in self.adj) // 2

    def edges(self):
        for u, nbrs in enumerate(self.adj):
            for w in nbrs:
                if u < w:
                    yield (u, w)

    def has_edge(self, u, v):
        return v in self._lookup(u)

    def out_neighbors(self, v):
        return self.adj[v]

    def in_neighbors(self, v):
        return self.adj[v]

    def induced(self, vertices):
        """Induced subgraph on ``vertices`` (relabelled in sorted order) and the id list."""
        keep = sorted(vertices)
        index = {v: i for i, v in enumerate(keep)}
        adj = tuple(tuple(index[w] for w in self.adj[v] if w in index) for v in keep)
        return Graph(len(keep), adj), keep

    def bfs_distances(self, source):
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Digraph:
    n: int
    out_adj: tuple
    in_adj: tuple

    def __post_init__(self):
        _check_lists(self.n, self.out_adj, "out_adj")
        _check_lists(self.n, self.in_adj, "in_adj")
        count = 0
        for u, outs in enumerate(self.out_adj):
            for w in outs:
                if u not in set(self.in_adj[w]):
                    raise GraphError(f"arc ({u}, {w}) missing from in_adj")
            count += len(outs)
        if count != sum(len(a) for a in self.in_adj):
            raise GraphError("in_adj has arcs not present in out_adj")

    @classmethod
    def from_arcs(cls, n, arcs):
        outs = [set() for _ in range(n)]
        ins = [set() for _ in range(n)]
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at {u}")
            if v in outs[u]:
                raise GraphError(f"duplicate arc ({u}, {v})")
            outs[u].add(v)
            ins[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in outs), tuple(tuple(sorted(s)) for s in ins))

    @classmethod
    def from_graph(cls, g):
        """Symmetric digraph: every edge becomes two opposite arcs."""
        return cls(g.n, g.adj, g.adj)

    def out_degree(self, v):
        return len(self.out_adj[v])

    def in_degree(self, v):
        return len(self.in_adj[v])

    @property
    def max_out_degree(self):
        return max((len(a) for a in self.out_adj), default=0)

    @property
    def max_in_degree(self):
        return max((len(a) for a in self.in_adj), default=0)

    @property
    def m(self):
        return sum(len(a) for a in self.out_adj)

    def arcs(self):
        for u, outs in enumerate(self.out_adj):
            for w in outs:
                yield (u, w)

    def has_arc(self, u, v):
        return v in set(self.out_adj[u])

    def out_neighbors(self, v):
        return self.out_adj[v]

    def in_neighbors(self, v):
        return self.in_adj[v]

    def bfs_distances(self, source):
        dist = [-1] * self.n
        dist[source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self.out_adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# text formats

def parse_graph(text):
    """Parse the ``graph <n> <m>`` / ``digraph <n> <m>`` edge-list format."""
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"non-ASCII input ({exc})") from None
    lines = text.split("\n")
    header = None
    pairs = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 3 or fields[0] not in ("graph", "digraph"):
                raise GraphFormatError(f"malformed header {line!r}", lineno)
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(f"malformed header {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (fields[0], n, m)
            continue
        if len(fields) != 2:
            raise GraphFormatError(f"expected '<u> <v>', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {line!r}", lineno) from None
        pairs.append((lineno, u, v))
    if header is None:
        raise GraphFormatError("missing header", 1)
    kind, n, m = header
    seen = set()
    for lineno, u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"vertex index out of range in ({u}, {v}) for n={n}", lineno)
        if u == v:
            raise GraphFormatError(f"loop edge ({u}, {v})", lineno)
        if kind == "graph" and u > v:
            raise GraphFormatError(f"undirected edge must have u < v, got ({u}, {v})", lineno)
        if (u, v) in seen:
            raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((u, v))
    if len(pairs) != m:
        last = pairs[-1][0] if pairs else 1
        raise GraphFormatError(f"header declares {m} edges, found {len(pairs)}", last)
    edges = [(u, v) for _, u, v in pairs]
    if kind == "graph":
        return Graph.from_edges(n, edges)
    return Digraph.from_arcs(n, edges)


def serialize(g, fmt="edge_list"):
    """Serialize to the edge-list format (round-trips through parse_graph) or DOT."""
    directed = isinstance(g, Digraph)
    pairs = list(g.arcs() if directed else g.edges())
    if fmt == "edge_list":
        head = f"{'digraph' if directed else 'graph'} {g.n} {len(pairs)}\n"
        return (head + "".join(f"{u} {v}\n" for u, v in pairs)).encode("ascii")
    if fmt == "dot":
        op = "->" if directed else "--"
        out = ["digraph {\n" if directed else "graph {\n"]
        out.extend(f"  {v};\n" for v in range(g.n))
        out.extend(f"  {u} {op} {v};\n" for u, v in pairs)
        out.append("}\n")
        return "".join(out).encode("ascii")
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# generators

def gnp(n, p, seed):
    """Erdos-Renyi G(n,p) driven by SplitMix64.

    Pairs (u, v) with u < v are visited lexicographically and consume one
    draw each; the edge is present iff the draw is below ``p``.
    """
    if n < 1:
        raise ValueError("gnp needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    iu, iv = np.triu_indices(n, k=1)
    draws = uniform_stream(seed, len(iu))
    keep = draws < p
    return Graph.from_edges(n, zip(iu[keep].tolist(), iv[keep].tolist()))


def gnp_digraph(n, p, seed):
    """Random digraph: ordered pairs (u, v), u != v, lexicographic, one draw each."""
    if n < 1:
        raise ValueError("gnp_digraph needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p={p} outside [0, 1]")
    uu, vv = np.nonzero(~np.eye(n, dtype=bool))
    keep = uniform_stream(seed, len(uu)) < p
    return Digraph.from_arcs(n, zip(uu[keep].tolist(), vv[keep].tolist()))


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a, b):
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves):
    return complete_bipartite(1, leaves)


def wheel(rim):
    """Hub 0 joined to every vertex of the cycle 1..rim."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, edges)


def circulant(n, jumps):
    edges = set()
    for i in range(n):
        for j in jumps:
            u, v = i, (i + j) % n
            if u != v:
                edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(n, sorted(edges))


def grid(rows, cols):
    def vid(r, c):
        return r * cols + c
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    return Graph.from_edges(rows * cols, edges)


def petersen():
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def robertson():
    """The (4,5)-cage: Hamiltonian cycle on 19 vertices plus one chord per vertex."""
    chords = [8, 4, 7, 4, 8, 5, 7, 4, 7, 8, 4, 5, 7, 8, 4, 8, 4, 8, 4]
    edges = set()
    for i in range(19):
        for j in (1, chords[i]):
            u, v = i, (i + j) % 19
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(19, sorted(edges))


def _pair(size, name):
    if isinstance(size, int):
        return size, size
    a, b = size
    return int(a), int(b)


def named_graph(name, size=None):
    """Canonical member of a named family.

    ``size`` is an integer, or an (a, b) pair for complete_bipartite/grid.
    """
    fixed = {"petersen": petersen, "robertson": robertson}
    if name in fixed:
        return fixed[name]()
    minimum = {"path": 1, "cycle": 3, "complete": 1, "star": 1, "wheel": 3, "complete_bipartite": 1, "grid": 1}
    if name not in minimum:
        raise ValueError(f"unknown graph family {name!r}")
    if size is None:
        raise ValueError(f"family {name!r} needs a size")
    if name in ("complete_bipartite", "grid"):
        a, b = _pair(size, name)
        if min(a, b) < minimum[name]:
            raise ValueError(f"{name} needs both sizes >= {minimum[name]}")
        return complete_bipartite(a, b) if name == "complete_bipartite" else grid(a, b)
    if size < minimum[name]:
        raise ValueError(f"{name} needs size >= {minimum[name]}, got {size}")
    return {"path": path, "cycle": cycle, "complete": complete, "star": star, "wheel": wheel}[name](size)


def components(g):
    """Connected components (weak components for digraphs), sorted by smallest member."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            nbrs = g.adj[u] if isinstance(g, Graph) else g.out_adj[u] + g.in_adj[u]
            for w in nbrs:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def disjoint_union(*graphs):
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


def girth(g):
    best = math.inf
    for s in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best
