"""Robber strategy lifting through a shadow map.

The lifted robber treats every cop as standing on its shadow in the base
graph, asks the base escape policy for a move, and realises it in the
transformed graph with at most three moves: two inside the current gadget
to the attachment facing the target, then the cross edge.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .play import OptimalCops, RobberPolicy, make_cop_controller, simulate
from .report import Check
from .solver import DEFAULT_BUDGET, cops_win, state_count
from .transforms import hat_transform


@dataclass
class Boundary:
    cops: tuple        # cop positions in the transformed graph, in cop order
    robber_hat: int
    robber_base: int
    length: int        # moves in the macro-round that ends here (0 at placement)


class LiftedRobber:
    """Robber controller on G_hat driven by an escape policy on G.

    ``boundaries`` records the position at the start of every macro-round
    (and at placement); ``length`` is the number of robber moves of the
    macro-round that just ended.
    """

    def __init__(self, g, ghat, smap, base):
        self.g = g
        self.ghat = ghat
        self.smap = smap
        self.base = base
        self.pos = None
        self.pending = []
        self.target = None
        self.last_length = 0
        self.boundaries = []
        self.plans = []

    def _shadows(self, cops):
        return tuple(sorted(self.smap.forward[c] for c in cops))

    def _entry(self, v):
        if self.g.degree(v) == 0:
            return self.smap.forward.index(v)
        return self.smap.attachment_of[(v, self.g.adj[v][0])]

    def place(self, ghat, cops, rng):
        self.pos = self.base.escape_place(self._shadows(cops))
        hat = self._entry(self.pos)
        self.boundaries.append(Boundary(tuple(cops), hat, self.pos, 0))
        return hat

    def _route(self, src, dst):
        """Path src -> dst inside the gadget of src's shadow, src excluded."""
        if src == dst:
            return []
        shadow = self.smap.forward[src]
        common = [y for y in self.ghat.adj[src]
                  if self.smap.forward[y] == shadow and self.ghat.has_edge(y, dst)]
        if not common:
            raise RuntimeError(f"attachments {src} and {dst} are not at distance 2")
        return [min(common), dst]

    def move(self, ghat, cops, robber, rng):
        if self.pending:
            nxt = self.pending.pop(0)
            if not self.pending:
                self.pos = self.target
            return nxt
        self.boundaries.append(Boundary(tuple(cops), robber, self.pos, self.last_length))
        target = self.base.escape_move(self._shadows(cops), self.pos)
        if target == self.pos:
            plan = [robber]
        else:
            plan = self._route(robber, self.smap.attachment_of[(self.pos, target)])
            plan.append(self.smap.attachment_of[(target, self.pos)])
        self.plans.append(tuple(plan))
        self.last_length = len(plan)
        self.target = target
        self.pending = plan[1:]
        if not self.pending:
            self.pos = target
        return plan[0]


def lift_robber_policy(g, ghat, smap, base, t):
    """Robber controller on ``ghat`` copying the escape policy ``base`` against t cops."""
    if base.result.k != t:
        raise ValueError(f"base policy was solved for {base.result.k} cops, not {t}")
    return LiftedRobber(g, ghat, smap, base)


@dataclass
class EscapeReport:
    t: int
    cop_controller: str
    rounds: int
    seed: int
    n_base: int
    n_hat: int
    captured: bool
    capture_round: int | None
    macro_rounds: int
    max_macro_length: int
    max_shadow_displacement: int
    projection_ok: bool
    intermediate_safe: bool
    solver_cops_win_hat: bool | None
    checks: list = field(default_factory=list)
    counterexample: str | None = None
    transcript: str | None = None

    @property
    def ok(self):
        return all(c.ok for c in self.checks)


def _shadow_step(g, a, b, cache):
    if a == b:
        return 0
    if g.has_edge(a, b):
        return 1
    if a not in cache:
        cache[a] = g.bfs_distances(a)
    d = cache[a][b]
    return d if d >= 0 else g.n


def verify_escape(g, t, cop_controller_kind, rounds, seed, budget=DEFAULT_BUDGET, hat_result=None):
    """Simulate the lifted escape on G_hat against t cops and audit every macro-round.

    ``hat_result`` may carry a precomputed solve of G_hat with t cops.
    """
    base_res = cops_win(g, t, budget)
    if base_res.cops_win:
        raise ValueError(f"{t} cops win on the base graph; there is no escape to lift")
    base = RobberPolicy(base_res)
    ghat, smap = hat_transform(g)
    if hat_result is None and (cop_controller_kind == "optimal" or state_count(ghat.n, t) <= budget):
        hat_result = cops_win(ghat, t, budget)
    if cop_controller_kind == "optimal":
        cops = OptimalCops(hat_result)
    else:
        cops = make_cop_controller(cop_controller_kind, ghat, t)
    robber = lift_robber_policy(g, ghat, smap, base, t)
    tr = simulate(ghat, cops, robber, rounds, seed)

    fwd = smap.forward
    cache = {}
    disp = 0
    for b0, b1 in zip(robber.boundaries, robber.boundaries[1:]):
        for c0, c1 in zip(b0.cops, b1.cops):
            disp = max(disp, _shadow_step(g, fwd[c0], fwd[c1], cache))
    projection_ok = all(fwd[b.robber_hat] == b.robber_base for b in robber.boundaries)
    safe = all(e.robber is None or e.robber not in e.cops for e in tr.events)
    max_len = max((len(p) for p in robber.plans), default=0)
    solver_win = None if hat_result is None else hat_result.cops_win

    checks = [
        Check("no_capture", int(tr.captured), 0, not tr.captured),
        Check("macro_round_length", max_len, 3, max_len <= 3),
        Check("shadow_displacement", disp, 1, disp <= 1),
        Check("projection_consistent", int(projection_ok), 1, projection_ok),
        Check("intermediate_safety", int(safe), 1, safe),
    ]
    if solver_win is not None:
        checks.append(Check("solver_cops_win_hat", solver_win, False, solver_win is False))
    return EscapeReport(
        t, cop_controller_kind, rounds, seed, g.n, ghat.n, tr.captured, tr.capture_round,
        len(robber.plans), max_len, disp, projection_ok, safe, solver_win, checks,
        tr.to_text() if tr.captured else None, tr.to_text(),
    )
