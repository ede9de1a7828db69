"""Replacement gadgets for high-degree vertices.

``A_d(m)``: d pairwise nonadjacent attachment vertices split into m nearly
equal parts, plus one hub for every pair of parts joined to both parts.
The digraph gadget is an in-tree and an out-tree of binary depth glued at
their roots.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .graph import Digraph, Graph


def choose_m(d):
    """Number of parts used for a vertex of degree d."""
    if d < 2:
        raise ValueError(f"choose_m needs d >= 2, got {d}")
    if d <= 3:
        return 2
    if d == 4:
        return 3
    return math.isqrt(2 * d - 1) + 1  # ceil(sqrt(2d))


def part_sizes(d, m):
    q, r = divmod(d, m)
    return [q + 1] * r + [q] * (m - r)


@dataclass(frozen=True)
class Gadget:
    internal: Graph
    attachments: tuple
    parts: tuple
    d: int
    m: int
    hubs: dict  # (i, j) with i < j -> internal vertex id

    @property
    def size(self):
        return self.internal.n


def build_gadget(d, m):
    """``A_d(m)`` with attachments 0..d-1 and hubs after them in (i, j) order."""
    if d < 2:
        raise ValueError(f"build_gadget needs d >= 2, got {d}")
    if not 2 <= m <= d:
        raise ValueError(f"m={m} outside [2, {d}]")
    parts = []
    start = 0
    for size in part_sizes(d, m):
        parts.append(tuple(range(start, start + size)))
        start += size
    hubs = {}
    edges = []
    for i, j in combinations(range(m), 2):
        y = d + len(hubs)
        hubs[(i, j)] = y
        edges.extend((x, y) for x in parts[i] + parts[j])
    internal = Graph.from_edges(d + len(hubs), edges)
    return Gadget(internal, tuple(range(d)), tuple(parts), d, m, hubs)


@dataclass(frozen=True)
class DigraphGadget:
    internal: Digraph
    in_attachments: tuple
    out_attachments: tuple
    k: int
    l: int
    root: int

    @property
    def size(self):
        return self.internal.n


def _depth(count):
    return (count - 1).bit_length() if count > 0 else 0


def _kept_tree(depth, leaves):
    """Heap-indexed nodes of a depth-``depth`` binary tree above the first ``leaves`` leaves."""
    if leaves == 0:
        return [1]
    kept = []
    for level in range(depth + 1):
        width = -(-leaves // (1 << (depth - level)))  # ceil
        first = 1 << level
        kept.extend(range(first, first + width))
    return kept


def _digraph_gadget(i, o):
    """Gadget with i in- and o out-attachments; a side with zero count is just the root."""
    k, l = _depth(i), _depth(o)
    ids = {}

    def vid(tree, node):
        key = (tree, node) if node != 1 else ("root", 1)
        if key not in ids:
            ids[key] = len(ids)
        return ids[key]

    root = vid("root", 1)
    arcs = []
    in_nodes = _kept_tree(k, i)
    out_nodes = _kept_tree(l, o)
    for node in in_nodes:
        if node > 1:
            arcs.append((vid("in", node), vid("in", node // 2)))
    for node in out_nodes:
        if node > 1:
            arcs.append((vid("out", node // 2), vid("out", node)))
    ins = tuple(vid("in", (1 << k) + s) for s in range(i))
    outs = tuple(vid("out", (1 << l) + e) for e in range(o))
    return DigraphGadget(Digraph.from_arcs(len(ids), arcs), ins, outs, k, l, root)


def build_digraph_gadget(i, o):
    if i < 1 or o < 1:
        raise ValueError(f"digraph gadget needs i, o >= 1, got ({i}, {o})")
    return _digraph_gadget(i, o)
