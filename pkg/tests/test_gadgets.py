import math
from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from copkit.gadgets import build_digraph_gadget, build_gadget, choose_m, part_sizes


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def check_gadget(gad):
    d, m, g = gad.d, gad.m, gad.internal
    assert g.n == d + math.comb(m, 2)
    att = set(gad.attachments)
    assert gad.attachments == tuple(range(d))
    assert all(not g.has_edge(a, b) for a, b in combinations(gad.attachments, 2))
    sizes = [len(p) for p in gad.parts]
    assert all(d // m <= s <= -(-d // m) for s in sizes)
    assert sorted(x for p in gad.parts for x in p) == list(range(d))
    for (i, j), y in gad.hubs.items():
        assert set(g.adj[y]) == set(gad.parts[i]) | set(gad.parts[j])
        assert g.degree(y) <= 2 * -(-d // m)
    assert all(g.degree(x) == m - 1 for x in att)
    for a in gad.attachments:
        dist = g.bfs_distances(a)
        assert all(dist[b] == 2 for b in gad.attachments if b != a)
    h = _nx(g)
    assert nx.is_bipartite(h)
    assert all(w not in att for x in att for w in g.adj[x])


def test_exhaustive_invariants():
    for d in range(2, 41):
        for m in range(2, d + 1):
            check_gadget(build_gadget(d, m))


def test_choose_m_examples():
    assert [choose_m(d) for d in (2, 3, 4, 5, 10)] == [2, 2, 3, 4, 5]
    for d in range(5, 500):
        assert choose_m(d) == math.ceil(math.sqrt(2 * d) - 1e-12)
    with pytest.raises(ValueError):
        choose_m(1)


def test_choose_m_4_is_the_only_subcubic_7_vertex_choice():
    good = [m for m in range(2, 5)
            if build_gadget(4, m).internal.max_degree <= 3 and build_gadget(4, m).size <= 7]
    assert good == [3]


def test_contiguous_parts():
    assert part_sizes(10, 4) == [3, 3, 2, 2]
    gad = build_gadget(10, 4)
    assert gad.parts == ((0, 1, 2), (3, 4, 5), (6, 7), (8, 9))
    assert gad.hubs == {(0, 1): 10, (0, 2): 11, (0, 3): 12, (1, 2): 13, (1, 3): 14, (2, 3): 15}


def test_reference_sizes():
    assert build_gadget(10, 4).size == 16
    assert build_gadget(5, choose_m(5)).size == 11
    a2 = build_gadget(2, 2).internal
    assert a2.n == 3 and sorted(a2.edges()) == [(0, 2), (1, 2)]


def test_small_gadgets_are_subcubic_with_attachment_slack():
    for d in (2, 3, 4):
        gad = build_gadget(d, choose_m(d))
        assert gad.internal.max_degree <= 3
        assert all(gad.internal.degree(x) <= 2 for x in gad.attachments)


def test_degree_bound_for_choose_m():
    for d in range(5, 201):
        gad = build_gadget(d, choose_m(d))
        cap = 2 * math.ceil(math.sqrt(d / 2) - 1e-12)
        assert max(gad.internal.degree(y) for y in gad.hubs.values()) <= cap


def test_size_sweep_equality_only_at_5():
    equal = []
    for d in range(2, 201):
        size = d + math.comb(choose_m(d), 2)
        assert build_gadget(d, choose_m(d)).size == size
        assert size <= Fraction(11, 5) * d
        if size == Fraction(11, 5) * d:
            equal.append(d)
    assert equal == [5]


def test_gadget_argument_errors():
    with pytest.raises(ValueError):
        build_gadget(1, 2)
    with pytest.raises(ValueError):
        build_gadget(4, 5)
    with pytest.raises(ValueError):
        build_digraph_gadget(0, 3)


def _check_digadget(i, o):
    gad = build_digraph_gadget(i, o)
    dg = gad.internal
    k, l = (max(i, 1) - 1).bit_length(), (max(o, 1) - 1).bit_length()
    assert (gad.k, gad.l) == (k, l)
    assert 2 ** k >= i > 2 ** (k - 1) or k == 0
    assert dg.max_in_degree <= 2 and dg.max_out_degree <= 2
    assert dg.n < 2 ** (k + 1) + 2 ** (l + 1) <= 4 * (i + o)
    assert len(gad.in_attachments) == i and len(gad.out_attachments) == o
    for a in gad.in_attachments:
        dist = dg.bfs_distances(a)
        assert all(dist[b] == k + l for b in gad.out_attachments)
    h = nx.DiGraph()
    h.add_nodes_from(range(dg.n))
    h.add_edges_from(dg.arcs())
    assert nx.is_directed_acyclic_graph(h)
    # every vertex lies on some in -> out path
    down = set(gad.in_attachments).union(*(nx.descendants(h, a) for a in gad.in_attachments))
    up = set(gad.out_attachments).union(*(nx.ancestors(h, b) for b in gad.out_attachments))
    assert down == up == set(range(dg.n))
    return gad


def test_digraph_gadgets_exhaustive():
    for i in range(1, 33):
        for o in range(1, 33):
            _check_digadget(i, o)


def test_digraph_gadget_examples():
    g65 = _check_digadget(6, 5)
    assert (g65.k, g65.l) == (3, 3) and g65.size <= 44
    g11 = build_digraph_gadget(1, 1)
    assert g11.size == 1 and g11.in_attachments == g11.out_attachments == (g11.root,)
    g22 = build_digraph_gadget(2, 2)
    assert g22.size == 5
    assert g22.internal.bfs_distances(g22.in_attachments[0])[g22.out_attachments[1]] == 2


@given(st.integers(2, 120), st.data())
@settings(max_examples=60, deadline=None)
def test_gadget_invariants_random(d, data):
    m = data.draw(st.integers(2, d))
    check_gadget(build_gadget(d, m))
