"""Policies extracted from a SolveResult, game controllers, and the simulator."""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field

from .solver import GameState


class NoPolicy(LookupError):
    """The requested side has no policy (cops lose, or the robber never escapes)."""


class PolicyUndefined(LookupError):
    """A policy was queried outside its domain."""


class IllegalMove(ValueError):
    def __init__(self, message, state=None, move=None):
        self.state = state
        self.move = move
        super().__init__(f"{message}: state={state}, move={move}")


class CopPolicy:
    """Level-decreasing joint cop moves on cop-win, cop-to-move states."""

    side = "cops"

    def __init__(self, result):
        self.result = result
        self.space = result.space

    def __contains__(self, state):
        return state.mover == "cops" and self.result.is_cop_win(state)

    def joint_move(self, cops, robber):
        """Ordered joint move for cops in the given order (one entry per cop)."""
        state = GameState.make(cops, robber, "cops")
        level = self.result.level(state)
        if level is None:
            raise PolicyUndefined(f"{state} is not a cop-win state")
        if level == 0:
            return tuple(cops)
        best_key, best = None, None
        lev = self.result.robber_levels
        for move in self.space.joint_moves(cops):
            canon = tuple(sorted(move))
            v = int(lev[self.space.rank(canon), robber])
            if v < 0 or v >= level:
                continue
            key = (v, canon)
            if best_key is None or key < best_key:
                best_key, best = key, move
        return tuple(best)

    def move(self, state):
        return tuple(sorted(self.joint_move(state.cops, state.robber)))

    def items(self):
        for st in self.result.cop_win_states():
            if st.mover == "cops":
                yield st, self.move(st)


class RobberPolicy:
    """Escape moves on robber-to-move states the cops cannot force."""

    side = "robber"

    def __init__(self, result):
        self.result = result
        self.space = result.space

    def __contains__(self, state):
        return state.mover == "robber" and not self.result.is_cop_win(state)

    def _choose(self, cops, options):
        """Safe option with smallest id, else the one delaying capture longest."""
        rank = self.space.rank(cops)
        lev = self.result.cop_levels[rank]
        safe = [r for r in options if lev[r] < 0]
        if safe:
            return min(safe), True
        return max(options, key=lambda r: (int(lev[r]), -r)), False

    def place(self, cops):
        r, _ = self._choose(tuple(sorted(cops)), range(self.space.n))
        return r

    def escape_place(self, cops):
        r, safe = self._choose(tuple(sorted(cops)), range(self.space.n))
        if not safe:
            raise PolicyUndefined(f"no safe placement against cops {tuple(sorted(cops))}")
        return r

    def move(self, state):
        r, _ = self._choose(state.cops, self.space.closed_out[state.robber])
        return r

    def escape_move(self, cops, robber):
        state = GameState.make(cops, robber, "robber")
        if self.result.is_cop_win(state):
            raise PolicyUndefined(f"{state} is cop-win; no escape move")
        r, _ = self._choose(state.cops, self.space.closed_out[robber])
        return r

    def items(self):
        res = self.result
        for rk in range(self.space.size):
            cops = self.space.unrank(rk)
            for r in range(self.space.n):
                if res.robber_levels[rk, r] < 0:
                    st = GameState(cops, r, "robber")
                    yield st, self.move(st)


def extract_policies(result, g=None, side=None):
    """Optimal policies from a solve.

    With ``side=None`` returns ``(cop_policy, robber_policy)`` with None for a
    side that has no policy; with ``side="cops"`` or ``"robber"`` returns that
    policy or raises NoPolicy.
    """
    if g is not None and g != result.graph:
        raise ValueError("result was produced for a different graph")
    cop = CopPolicy(result) if result.cops_win else None
    rob = RobberPolicy(result) if (result.robber_levels < 0).any() else None
    if side is None:
        return cop, rob
    if side == "cops":
        if cop is None:
            raise NoPolicy("cops do not win; no cop policy")
        return cop
    if side == "robber":
        if rob is None:
            raise NoPolicy("every state is cop-win; no robber policy")
        return rob
    raise ValueError(f"unknown side {side!r}")


# ---------------------------------------------------------------------------
# controllers

def _closed_out(g, v):
    return (v, *g.out_neighbors(v))


class _Distances:
    """Cached distances to a target vertex (along arcs for digraphs)."""

    def __init__(self, g):
        self.g = g
        self.cache = {}

    def to(self, target):
        d = self.cache.get(target)
        if d is None:
            d = [self.g.n + 1] * self.g.n
            d[target] = 0
            queue = deque([target])
            while queue:
                u = queue.popleft()
                for w in self.g.in_neighbors(u):
                    if d[w] > d[u] + 1:
                        d[w] = d[u] + 1
                        queue.append(w)
            self.cache[target] = d
        return d


class GreedyCops:
    """Each cop steps to a closed neighbour nearest the robber (ties: smallest id)."""

    def __init__(self, g, k):
        self.g = g
        self.k = k
        self.dist = _Distances(g)

    def place(self, g, rng):
        totals = sorted((sum(self.dist.to(v)), v) for v in range(g.n))
        return tuple(totals[i % g.n][1] for i in range(self.k))

    def move(self, g, cops, robber, rng):
        d = self.dist.to(robber)
        return tuple(min(_closed_out(g, c), key=lambda w: (d[w], w)) for c in cops)


class RandomCops:
    def __init__(self, g, k):
        self.g = g
        self.k = k

    def place(self, g, rng):
        return tuple(rng.randrange(g.n) for _ in range(self.k))

    def move(self, g, cops, robber, rng):
        return tuple(rng.choice(_closed_out(g, c)) for c in cops)


class OptimalCops:
    """Cop controller backed by a solve.

    Follows the level-decreasing policy from cop-win states.  From states the
    cops cannot force it falls back to the greedy-distance move, and when the
    cops lose it places on the multiset that covers the most robber starts.
    """

    def __init__(self, result):
        self.result = result
        self.k = result.k
        self.policy = CopPolicy(result)
        self.greedy = GreedyCops(result.graph, result.k)

    def place(self, g, rng):
        res = self.result
        if res.best_initial is not None:
            return res.best_initial
        won = (res.cop_levels >= 0).sum(axis=1)
        top = int(won.max())
        rows = [int(r) for r in (won == top).nonzero()[0]]
        return min(res.space.unrank(r) for r in rows)

    def move(self, g, cops, robber, rng):
        if self.k == 0:
            return ()
        if self.result.is_cop_win(GameState.make(cops, robber, "cops")):
            return self.policy.joint_move(cops, robber)
        return self.greedy.move(g, cops, robber, rng)


class RandomRobber:
    def place(self, g, cops, rng):
        free = [v for v in range(g.n) if v not in cops]
        return rng.choice(free or list(range(g.n)))

    def move(self, g, cops, robber, rng):
        return rng.choice(_closed_out(g, robber))


class PolicyRobber:
    def __init__(self, policy):
        self.policy = policy

    def place(self, g, cops, rng):
        return self.policy.place(cops)

    def move(self, g, cops, robber, rng):
        return self.policy.move(GameState.make(cops, robber, "robber"))


def make_cop_controller(kind, g, k, result=None):
    if kind == "optimal":
        if result is None:
            raise ValueError("optimal controller needs a SolveResult")
        return OptimalCops(result)
    if kind == "random":
        return RandomCops(g, k)
    if kind == "greedy":
        return GreedyCops(g, k)
    raise ValueError(f"unknown cop controller {kind!r}")


# ---------------------------------------------------------------------------
# simulation

@dataclass(frozen=True)
class Event:
    round: int
    mover: str
    cops: tuple
    robber: int | None


@dataclass
class PursuitTranscript:
    events: list = field(default_factory=list)
    captured: bool = False
    capture_round: int | None = None
    rounds: int = 0

    def to_text(self):
        lines = []
        for e in self.events:
            cops = ",".join(map(str, e.cops)) or "-"
            robber = "-" if e.robber is None else str(e.robber)
            lines.append(f"{e.round} {e.mover} {cops} {robber}\n")
        tail = f"captured {self.capture_round}\n" if self.captured else f"escaped {self.rounds}\n"
        return "".join(lines) + tail


def _check_vertex(g, v, what, state):
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise IllegalMove(f"{what} outside the graph", state, v)


def simulate(g, cop_controller, robber_controller, max_rounds, seed):
    """Play one game: placements, then alternating cop and robber moves."""
    rng = random.Random(seed)
    tr = PursuitTranscript()
    cops = tuple(int(c) for c in cop_controller.place(g, rng))
    for c in cops:
        _check_vertex(g, c, "cop placement", None)
    tr.events.append(Event(0, "cops", cops, None))
    robber = robber_controller.place(g, cops, rng)
    _check_vertex(g, robber, "robber placement", (cops, None))
    tr.events.append(Event(0, "robber", cops, robber))
    if robber in cops:
        tr.captured, tr.capture_round = True, 0
        return tr
    for rnd in range(1, max_rounds + 1):
        tr.rounds = rnd
        new = tuple(cop_controller.move(g, cops, robber, rng))
        if len(new) != len(cops):
            raise IllegalMove("wrong number of cops", (cops, robber), new)
        for old, c in zip(cops, new):
            if c != old and c not in g.out_neighbors(old):
                raise IllegalMove("cop move is not a stay or an (out-)neighbour step", (cops, robber), new)
        cops = new
        tr.events.append(Event(rnd, "cops", cops, robber))
        if robber in cops:
            tr.captured, tr.capture_round = True, rnd
            return tr
        nxt = robber_controller.move(g, cops, robber, rng)
        _check_vertex(g, nxt, "robber move", (cops, robber))
        if nxt != robber and nxt not in g.out_neighbors(robber):
            raise IllegalMove("robber move is not a stay or an (out-)neighbour step", (cops, robber), nxt)
        robber = nxt
        tr.events.append(Event(rnd, "robber", cops, robber))
        if robber in cops:
            tr.captured, tr.capture_round = True, rnd
            return tr
    return tr
