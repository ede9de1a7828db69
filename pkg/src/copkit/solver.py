"""Exact k-cop game solver by retrograde (attractor) analysis.

A state is ``(cops, robber, mover)`` with ``cops`` a sorted k-tuple.  Cop
multisets are ranked densely in colex order of the shifted combination
``cops[j] + j``; state ``(rank, robber)`` lives at index ``rank * n + robber``
in two flat arrays, one per side to move.

Levels count half-moves: 0 is capture, a cop-to-move state is one more than
its best successor, a robber-to-move state one more than its worst.  The
kernel processes a FIFO queue so levels come out in non-decreasing order and
robber-to-move states are settled by counting down their remaining safe
successors.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numba
import numpy as np

from .graph import Digraph

DEFAULT_BUDGET = 200_000_000


class BudgetExceeded(RuntimeError):
    def __init__(self, required, budget):
        self.required = required
        self.budget = budget
        super().__init__(f"solver needs {required} state-side pairs, budget is {budget}")


def state_count(n, k):
    """Canonical state-side pairs: C(n+k-1, k) * n * 2."""
    return math.comb(n + k - 1, k) * n * 2


def _closed_csr(lists):
    ptr = np.zeros(len(lists) + 1, dtype=np.int64)
    idx = []
    for v, nbrs in enumerate(lists):
        closed = sorted((v, *nbrs))
        idx.extend(closed)
        ptr[v + 1] = len(idx)
    return ptr, np.asarray(idx, dtype=np.int64)


class StateSpace:
    """Ranking of cop multisets plus closed-neighbourhood tables of a graph."""

    def __init__(self, g, k):
        self.g = g
        self.n = g.n
        self.k = k
        self.directed = isinstance(g, Digraph)
        outs = g.out_adj if self.directed else g.adj
        ins = g.in_adj if self.directed else g.adj
        self.out_ptr, self.out_idx = _closed_csr(outs)
        self.in_ptr, self.in_idx = _closed_csr(ins)
        self.closed_out = [tuple(sorted((v, *outs[v]))) for v in range(self.n)]
        top = self.n + k
        self.binom = np.zeros((top + 1, k + 1), dtype=np.int64)
        for x in range(top + 1):
            for j in range(k + 1):
                self.binom[x, j] = math.comb(x, j)
        self.size = math.comb(self.n + k - 1, k)
        self.configs = self._config_table()

    def _config_table(self):
        if self.k == 0:
            return np.zeros((1, 0), dtype=np.int32)
        combos = np.fromiter(
            itertools.chain.from_iterable(itertools.combinations_with_replacement(range(self.n), self.k)),
            dtype=np.int64,
            count=self.size * self.k,
        ).reshape(self.size, self.k)
        ranks = self.rank_many(combos)
        table = np.empty_like(combos, dtype=np.int32)
        table[ranks] = combos
        return table

    def rank_many(self, cfgs):
        cfgs = np.asarray(cfgs, dtype=np.int64)
        shift = np.arange(self.k, dtype=np.int64)
        return self.binom[cfgs + shift, shift + 1].sum(axis=1) if self.k else np.zeros(len(cfgs), dtype=np.int64)

    def rank(self, cops):
        """Rank of a cop multiset (any order)."""
        return int(sum(self.binom[c + j, j + 1] for j, c in enumerate(sorted(cops))))

    def unrank(self, r):
        return tuple(int(c) for c in self.configs[r])

    def index(self, cops, robber):
        return self.rank(cops) * self.n + robber

    def joint_moves(self, cops):
        """All ordered joint cop moves (each cop stays or steps independently)."""
        return itertools.product(*(self.closed_out[c] for c in cops))


@numba.njit(cache=True)
def _rank(tmp, k, binom):
    # insertion sort then shifted colex rank
    for a in range(1, k):
        x = tmp[a]
        b = a - 1
        while b >= 0 and tmp[b] > x:
            tmp[b + 1] = tmp[b]
            b -= 1
        tmp[b + 1] = x
    r = 0
    for j in range(k):
        r += binom[tmp[j] + j, j + 1]
    return r


@numba.njit(cache=True)
def _retrograde(n, k, configs, binom, out_ptr, in_ptr, in_idx, lev_c, lev_r, cnt, queue):
    m = configs.shape[0]
    s_total = m * n
    tail = 0
    for ci in range(m):
        for r in range(n):
            s = ci * n + r
            cap = False
            for j in range(k):
                if configs[ci, j] == r:
                    cap = True
            if cap:
                lev_c[s] = 0
                queue[tail] = s
                tail += 1
                lev_r[s] = 0
                queue[tail] = s_total + s
                tail += 1
            else:
                cnt[s] = out_ptr[r + 1] - out_ptr[r]
    head = 0
    pos = np.zeros(k, dtype=np.int64)
    tmp = np.zeros(k, dtype=np.int64)
    base = np.zeros(k, dtype=np.int64)
    while head < tail:
        q = queue[head]
        head += 1
        if q < s_total:
            # cop-to-move state won: robber-to-move predecessors lose one safe move
            ci = q // n
            r2 = q - ci * n
            lvl = lev_c[q] + 1
            for p in range(in_ptr[r2], in_ptr[r2 + 1]):
                t = ci * n + in_idx[p]
                if lev_r[t] < 0:
                    cnt[t] -= 1
                    if cnt[t] == 0:
                        lev_r[t] = lvl
                        queue[tail] = s_total + t
                        tail += 1
        else:
            # robber-to-move state won: every cop-to-move predecessor is won
            s = q - s_total
            ci = s // n
            r = s - ci * n
            lvl = lev_r[s] + 1
            for j in range(k):
                base[j] = configs[ci, j]
                pos[j] = in_ptr[base[j]]
            while True:
                for j in range(k):
                    tmp[j] = in_idx[pos[j]]
                t = _rank(tmp, k, binom) * n + r
                if lev_c[t] < 0:
                    lev_c[t] = lvl
                    queue[tail] = t
                    tail += 1
                # odometer over the product of in-neighbourhoods
                j = 0
                while j < k:
                    pos[j] += 1
                    if pos[j] < in_ptr[base[j] + 1]:
                        break
                    pos[j] = in_ptr[base[j]]
                    j += 1
                if j == k:
                    break
    return tail


@dataclass(frozen=True)
class GameState:
    cops: tuple
    robber: int
    mover: str  # "cops" or "robber"

    @classmethod
    def make(cls, cops, robber, mover):
        return cls(tuple(sorted(cops)), robber, mover)


@dataclass
class SolveResult:
    """Outcome of the k-cop game.

    ``cop_levels`` / ``robber_levels`` have shape (multisets, n) and hold the
    attractor level of each cop-to-move / robber-to-move state, -1 where the
    robber escapes forever.
    """

    k: int
    cops_win: bool
    space: StateSpace = field(repr=False)
    cop_levels: np.ndarray = field(repr=False)
    robber_levels: np.ndarray = field(repr=False)
    best_initial: tuple | None
    state_count: int

    @property
    def graph(self):
        return self.space.g

    def level(self, state):
        """Attractor level of a state, or None if it is not cop-win."""
        table = self.cop_levels if state.mover == "cops" else self.robber_levels
        v = int(table[self.space.rank(state.cops), state.robber])
        return v if v >= 0 else None

    def is_cop_win(self, state):
        return self.level(state) is not None

    @property
    def max_level(self):
        return int(max(self.cop_levels.max(initial=-1), self.robber_levels.max(initial=-1)))

    def cop_win_states(self):
        for side, table in (("cops", self.cop_levels), ("robber", self.robber_levels)):
            for rk, r in zip(*np.nonzero(table >= 0)):
                yield GameState(self.space.unrank(int(rk)), int(r), side)


def _solve(g, k, budget=DEFAULT_BUDGET):
    """Solver core; also accepts k = 0, where the robber is never caught."""
    if g.n == 0:
        raise ValueError("graph must be nonempty")
    if k < 0:
        raise ValueError("k must be non-negative")
    need = state_count(g.n, k)
    if need > budget:
        raise BudgetExceeded(need, budget)
    space = StateSpace(g, k)
    n, m = g.n, space.size
    s_total = m * n
    lev_c = np.full(s_total, -1, dtype=np.int32)
    lev_r = np.full(s_total, -1, dtype=np.int32)
    if k > 0:
        cnt_dtype = np.uint8 if n < 255 else np.int32
        cnt = np.zeros(s_total, dtype=cnt_dtype)
        qdtype = np.int32 if 2 * s_total < 2**31 else np.int64
        queue = np.empty(2 * s_total, dtype=qdtype)
        _retrograde(n, k, space.configs.astype(np.int64), space.binom, space.out_ptr,
                    space.in_ptr, space.in_idx, lev_c, lev_r, cnt, queue)
        del queue, cnt
    lev_c = lev_c.reshape(m, n)
    lev_r = lev_r.reshape(m, n)
    won_rows = (lev_c >= 0).all(axis=1)
    best = None
    if won_rows.any():
        rows = np.nonzero(won_rows)[0]
        worst = lev_c[rows].max(axis=1)
        rows = rows[worst == worst.min()]
        best = min(space.unrank(int(r)) for r in rows)
    return SolveResult(k, best is not None, space, lev_c, lev_r, best, need)


def cops_win(g, k, budget=DEFAULT_BUDGET):
    """Decide whether k cops capture the robber on ``g`` (Graph or Digraph).

    k = 0 is accepted and never wins on a nonempty graph.
    """
    if k < 0:
        raise ValueError("k must be a nonnegative integer")
    return _solve(g, k, budget)


class CopNumberExceeded(RuntimeError):
    pass


def cop_number(g, k_max, budget=DEFAULT_BUDGET):
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    for k in range(1, k_max + 1):
        if cops_win(g, k, budget).cops_win:
            return k
    raise CopNumberExceeded(f"more than {k_max} cops needed")
