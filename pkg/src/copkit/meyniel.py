"""Greedy cop cover of high-degree vertices and the bounded-degree pipeline."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, components
from .report import Check
from .transforms import iterate_to_subcubic


def as_fraction(epsilon):
    """Accept Fraction, int, "1/4", "0.25" or a float (converted via its repr)."""
    if isinstance(epsilon, Fraction):
        eps = epsilon
    elif isinstance(epsilon, float):
        eps = Fraction(repr(epsilon))
    else:
        eps = Fraction(epsilon)
    if not 0 < eps < 1:
        raise ValueError(f"epsilon={eps} outside (0, 1)")
    return eps


def ceil_power(n, eps):
    """Exact ceil(n ** eps) for rational eps = p/q: least t with t**q >= n**p."""
    p, q = eps.numerator, eps.denominator
    target = n ** p
    t = max(1, int(math.floor(n ** float(eps))) - 1)
    while t ** q >= target and t > 1:
        t -= 1
    while t ** q < target:
        t += 1
    return t


def le_power(s, n, eps):
    """Exact test s <= n ** eps for integer s >= 0."""
    return s ** eps.denominator <= n ** eps.numerator


@dataclass
class CoverResult:
    stationed: list
    removed: frozenset
    residual: Graph
    residual_ids: list  # residual vertex i is G vertex residual_ids[i]
    threshold: float
    threshold_ceil: int
    epsilon: Fraction
    n: int

    def checks(self):
        res_delta = self.residual.max_degree
        cap = self.n // (self.threshold_ceil + 1)
        survivors = set(self.residual_ids)
        return [
            Check("residual_max_degree", res_delta, self.threshold_ceil, res_delta < self.threshold_ceil),
            Check("stationed_per_removal", len(self.stationed), cap, len(self.stationed) <= cap),
            Check("stationed_le_n_pow_1_minus_eps", len(self.stationed), self.n ** float(1 - self.epsilon),
                  le_power(len(self.stationed), self.n, 1 - self.epsilon)),
            Check("partition", len(self.removed) + len(survivors), self.n,
                  not (self.removed & survivors) and len(self.removed | survivors) == self.n),
        ]


def greedy_cop_cover(g, epsilon):
    """Station cops on vertices of degree >= n^eps until none remain.

    n is fixed at entry.  Each step takes a maximum-degree vertex (smallest id
    on ties) and deletes its closed neighbourhood.
    """
    eps = as_fraction(epsilon)
    if g.n == 0:
        raise ValueError("graph must be nonempty")
    n = g.n
    need = ceil_power(n, eps)  # integer degree >= n^eps  <=>  degree >= ceil(n^eps)
    alive = [True] * n
    deg = [len(a) for a in g.adj]
    stationed = []
    removed = set()
    while True:
        best = -1
        for v in range(n):
            if alive[v] and deg[v] >= need and (best < 0 or deg[v] > deg[best]):
                best = v
        if best < 0:
            break
        stationed.append(best)
        ball = [best] + [w for w in g.adj[best] if alive[w]]
        for v in ball:
            alive[v] = False
        for v in ball:
            removed.add(v)
            for w in g.adj[v]:
                if alive[w]:
                    deg[w] -= 1
    residual, ids = g.induced([v for v in range(n) if alive[v]])
    return CoverResult(stationed, frozenset(removed), residual, ids, n ** float(eps), need, eps, n)


@dataclass
class ComponentRow:
    vertices: list       # ids in G
    n: int
    max_degree: int
    subcubic_n: int
    iterations: int
    size_bound: Fraction
    ok: bool


@dataclass
class PipelineReport:
    cover: CoverResult
    rows: list = field(default_factory=list)

    @property
    def epsilon(self):
        return self.cover.epsilon

    def headline(self):
        """Numeric values of the cover/subcubic cop-count terms (eps = 1/4 instantiation)."""
        n = self.cover.n
        eps = 0.25
        log_n = math.log2(n) if n > 1 else 0.0
        return {
            "epsilon": "1/4",
            "n_pow_1_minus_eps": n ** (1 - eps),
            "n_pow_half_plus_eps_log_0_57": n ** (0.5 + eps) * log_n ** 0.57,
            "n_pow_3_4": n ** 0.75,
        }

    def checks(self):
        out = list(self.cover.checks())
        for i, row in enumerate(self.rows):
            out.append(Check(f"component_{i}_subcubic_size", row.subcubic_n, row.size_bound, row.ok))
        return out

    @property
    def ok(self):
        return all(c.ok for c in self.checks())

    def summary(self):
        return {
            "n": self.cover.n,
            "epsilon": self.epsilon,
            "threshold": self.cover.threshold,
            "stationed": len(self.cover.stationed),
            "stationed_vertices": list(self.cover.stationed),
            "residual_n": self.cover.residual.n,
            "residual_max_degree": self.cover.residual.max_degree,
            "components": [
                {"n": r.n, "max_degree": r.max_degree, "iterations": r.iterations, "subcubic_n": r.subcubic_n,
                 "size_bound": r.size_bound}
                for r in self.rows
            ],
            "subcubic_total": sum(r.subcubic_n for r in self.rows),
            "headline_eps_1_4": self.headline(),
        }


def meyniel_pipeline(g, epsilon):
    cover = greedy_cop_cover(g, epsilon)
    report = PipelineReport(cover)
    res = cover.residual
    for comp in components(res):
        sub, ids = res.induced(comp)
        final, _, red = iterate_to_subcubic(sub)
        bound = red.final_size_bound()
        report.rows.append(ComponentRow([cover.residual_ids[v] for v in ids], sub.n, sub.max_degree, final.n,
                                        red.k_used, bound, red.ok and final.max_degree <= 3))
    return report
