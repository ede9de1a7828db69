"""Vertex-replacement transforms G -> G_hat and D -> D', and iterated reduction."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .gadgets import _digraph_gadget, build_gadget, choose_m
from .graph import Digraph, Graph
from .report import Check

MU = Fraction(11, 5)


@dataclass(frozen=True)
class ShadowMap:
    """Projection of transformed vertices onto original vertices.

    ``attachment_of[(u, w)]`` is the vertex of u's gadget whose cross edge
    (or outgoing cross arc, for digraphs) leads toward w.  For digraphs
    ``in_attachment_of[(u, w)]`` is the vertex of u's gadget receiving the
    arc from w.
    """

    forward: tuple
    n_base: int
    attachment_of: dict
    replaced: frozenset
    in_attachment_of: dict = field(default_factory=dict)

    @property
    def n_hat(self):
        return len(self.forward)

    def preimages(self):
        out = [[] for _ in range(self.n_base)]
        for vh, v in enumerate(self.forward):
            if 0 <= v < self.n_base:
                out[v].append(vh)
        return out


def serialize_map(smap):
    lines = [f"map {smap.n_hat}\n"]
    lines.extend(f"{vh} {v}\n" for vh, v in enumerate(smap.forward))
    return "".join(lines).encode("ascii")


def parse_map(text):
    """Read the ``map <n_hat>`` format; returns the forward tuple."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not rows or rows[0][0] != "map" or len(rows[0]) != 2:
        raise ValueError("missing 'map <n_hat>' header")
    n_hat = int(rows[0][1])
    forward = [None] * n_hat
    for lineno, row in enumerate(rows[1:], start=2):
        vh, v = int(row[0]), int(row[1])
        if not 0 <= vh < n_hat or forward[vh] is not None:
            raise ValueError(f"line {lineno}: bad or repeated vertex {vh}")
        forward[vh] = v
    if any(v is None for v in forward):
        raise ValueError("map does not cover every vertex")
    return tuple(forward)


def compose_forward(*maps):
    """Projection from the last graph in a chain back to the first."""
    fwd = list(range(maps[-1].n_hat)) if maps else []
    for smap in reversed(maps):
        fwd = [smap.forward[v] for v in fwd]
    return tuple(fwd)


@lru_cache(maxsize=None)
def _gadget(d):
    return build_gadget(d, choose_m(d))


def hat_transform(g):
    """Replace every vertex of degree >= 2 by its gadget; degree 0 and 1 vertices stay."""
    forward = []
    attach = {}
    replaced = []
    adj = []
    for v in range(g.n):
        d = g.degree(v)
        base = len(forward)
        if d <= 1:
            forward.append(v)
            adj.append([])
            for w in g.adj[v]:
                attach[(v, w)] = base
            continue
        gad = _gadget(d)
        replaced.append(v)
        forward.extend([v] * gad.size)
        adj.extend([base + x for x in nbrs] for nbrs in gad.internal.adj)
        for i, w in enumerate(g.adj[v]):
            attach[(v, w)] = base + gad.attachments[i]
    for u, w in g.edges():
        a, b = attach[(u, w)], attach[(w, u)]
        adj[a].append(b)
        adj[b].append(a)
    ghat = Graph(len(forward), tuple(tuple(sorted(a)) for a in adj))
    return ghat, ShadowMap(tuple(forward), g.n, attach, frozenset(replaced))


def degree_bound(delta):
    if delta <= 4:
        return 3
    # 2 * ceil(sqrt(delta / 2)), exact: smallest t with 2 t^2 >= delta
    t = math.isqrt(delta // 2)
    while 2 * t * t < delta:
        t += 1
    return 2 * t


def size_bound(g):
    """Bound on |V(G_hat)|: (11/5) * max_degree * n, for max degree >= 2."""
    delta = g.max_degree
    return MU * delta * g.n if delta >= 2 else Fraction(g.n)


@dataclass
class BoundCheck:
    checks: list

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def violations(self):
        return [c for c in self.checks if not c.ok]


def _connected_within(ghat, verts):
    vs = set(verts)
    start = verts[0]
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in ghat.adj[u]:
            if w in vs and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(vs)


def verify_transform_bounds(g, ghat, smap):
    """Recompute every structural guarantee of hat_transform."""
    checks = []
    delta = g.max_degree
    checks.append(Check("max_degree", ghat.max_degree, degree_bound(delta), ghat.max_degree <= degree_bound(delta)))
    bound = size_bound(g)
    checks.append(Check("vertex_count", ghat.n, bound, ghat.n <= bound))

    fwd = smap.forward
    bad_range = sum(1 for v in fwd if not (isinstance(v, int) and 0 <= v < g.n))
    checks.append(Check("forward_total", len(fwd) - bad_range, ghat.n, len(fwd) == ghat.n and bad_range == 0))
    covered = {v for v in fwd if isinstance(v, int) and 0 <= v < g.n}
    checks.append(Check("forward_surjective", len(covered), g.n, len(covered) == g.n))

    bad_pre = 0
    bad_dist = 0
    pre = smap.preimages()
    for v in range(g.n):
        verts = pre[v]
        if not verts:
            bad_pre += 1
            continue
        if v in smap.replaced:
            gad = _gadget(g.degree(v))
            inner = sum(1 for a in verts for w in ghat.adj[a] if fwd[w] == v) // 2
            if len(verts) != gad.size or inner != gad.internal.m or not _connected_within(ghat, verts):
                bad_pre += 1
                continue
            atts = [smap.attachment_of.get((v, w)) for w in g.adj[v]]
            vs = set(verts)
            for a in atts:
                if a not in vs:
                    bad_dist += 1
                    continue
                dist = {a: 0}
                queue = deque([a])
                while queue:
                    u = queue.popleft()
                    for w in ghat.adj[u]:
                        if w in vs and w not in dist:
                            dist[w] = dist[u] + 1
                            queue.append(w)
                bad_dist += sum(1 for b in atts if b != a and dist.get(b) != 2)
        elif len(verts) != 1:
            bad_pre += 1
    checks.append(Check("preimage_structure", bad_pre, 0, bad_pre == 0))
    checks.append(Check("attachment_distance_2", bad_dist, 0, bad_dist == 0))

    cross = {}
    for a, b in ghat.edges():
        su, sw = fwd[a], fwd[b]
        if su != sw:
            key = (min(su, sw), max(su, sw))
            cross[key] = cross.get(key, 0) + 1
    base_edges = set(g.edges())
    mismatch = sum(1 for e, c in cross.items() if c != 1 or e not in base_edges)
    mismatch += sum(1 for e in base_edges if e not in cross)
    for u, w in base_edges:
        a, b = smap.attachment_of.get((u, w)), smap.attachment_of.get((w, u))
        if a is None or b is None or not ghat.has_edge(a, b) or fwd[a] != u or fwd[b] != w:
            mismatch += 1
    checks.append(Check("cross_edge_bijection", mismatch, 0, mismatch == 0))
    return BoundCheck(checks)


@dataclass
class Iteration:
    vertex_count: int
    max_degree: int
    size_bound: Fraction
    degree_bound: int

    @property
    def size_bound_ok(self):
        return self.vertex_count <= self.size_bound

    @property
    def degree_bound_ok(self):
        return self.max_degree <= self.degree_bound


@dataclass
class ReductionReport:
    iterations: list
    initial_d: int
    initial_n: int
    final: Graph
    k_used: int
    mu: Fraction = MU

    def iteration_bound(self):
        """ceil(log2 log2 (d/2)) + 2, defined for d >= 5."""
        if self.initial_d < 5:
            return None
        return math.ceil(math.log2(math.log2(self.initial_d / 2))) + 2

    def final_size_bound(self):
        return 2 * self.mu ** self.k_used * max(self.initial_d, 1) ** 2 * self.initial_n

    def checks(self):
        out = [Check("final_max_degree", self.final.max_degree, 3, self.final.max_degree <= 3)]
        kb = self.iteration_bound()
        if kb is not None:
            out.append(Check("iterations", self.k_used, kb, self.k_used <= kb))
        bound = self.final_size_bound()
        out.append(Check("final_vertex_count", self.final.n, bound, self.final.n <= bound))
        for i, it in enumerate(self.iterations, start=1):
            out.append(Check(f"iteration_{i}_vertex_count", it.vertex_count, it.size_bound, it.size_bound_ok))
            out.append(Check(f"iteration_{i}_max_degree", it.max_degree, it.degree_bound, it.degree_bound_ok))
        return out

    @property
    def ok(self):
        return all(c.ok for c in self.checks())


def iterate_to_subcubic(g):
    """Apply hat_transform until the maximum degree is at most 3."""
    if g.n == 0:
        raise ValueError("graph must be nonempty")
    maps = []
    iterations = []
    cur = g
    while cur.max_degree > 3:
        ghat, smap = hat_transform(cur)
        iterations.append(Iteration(ghat.n, ghat.max_degree, size_bound(cur), degree_bound(cur.max_degree)))
        maps.append(smap)
        cur = ghat
    report = ReductionReport(iterations, g.max_degree, g.n, cur, len(maps))
    return cur, maps, report


def digraph_transform(dg):
    """Replace every non-isolated vertex by a merged in-tree/out-tree gadget."""
    forward = []
    out_att = {}
    in_att = {}
    replaced = []
    arcs = []
    for v in range(dg.n):
        i, o = dg.in_degree(v), dg.out_degree(v)
        base = len(forward)
        if i + o == 0:
            forward.append(v)
            continue
        gad = _digraph_gadget(i, o)
        replaced.append(v)
        forward.extend([v] * gad.size)
        arcs.extend((base + a, base + b) for a, b in gad.internal.arcs())
        for j, w in enumerate(dg.in_adj[v]):
            in_att[(v, w)] = base + gad.in_attachments[j]
        for j, w in enumerate(dg.out_adj[v]):
            out_att[(v, w)] = base + gad.out_attachments[j]
    for u, w in dg.arcs():
        arcs.append((out_att[(u, w)], in_att[(w, u)]))
    dprime = Digraph.from_arcs(len(forward), arcs)
    return dprime, ShadowMap(tuple(forward), dg.n, out_att, frozenset(replaced), in_att)


def verify_digraph_bounds(dg, dprime, smap):
    checks = [
        Check("max_out_degree", dprime.max_out_degree, 2, dprime.max_out_degree <= 2),
        Check("max_in_degree", dprime.max_in_degree, 2, dprime.max_in_degree <= 2),
    ]
    bound = 4 * (dg.max_in_degree + dg.max_out_degree) * dg.n
    if bound:
        checks.append(Check("vertex_count", dprime.n, bound, dprime.n <= bound))
    pre = smap.preimages()
    bad = 0
    for v in range(dg.n):
        ins = [smap.in_attachment_of[(v, w)] for w in dg.in_adj[v]]
        outs = [smap.attachment_of[(v, w)] for w in dg.out_adj[v]]
        if not ins or not outs:
            continue
        vs = set(pre[v])
        lengths = set()
        for a in ins:
            dist = {a: 0}
            queue = deque([a])
            while queue:
                x = queue.popleft()
                for y in dprime.out_adj[x]:
                    if y in vs and y not in dist:
                        dist[y] = dist[x] + 1
                        queue.append(y)
            lengths.update(dist.get(b, -1) for b in outs)
        if len(lengths) != 1 or -1 in lengths:
            bad += 1
    checks.append(Check("uniform_in_out_distance", bad, 0, bad == 0))
    cross = sum(1 for a, b in dprime.arcs() if smap.forward[a] != smap.forward[b])
    checks.append(Check("cross_arc_count", cross, dg.m, cross == dg.m))
    return BoundCheck(checks)
