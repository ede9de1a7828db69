import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from copkit.graph import complete, components, cycle, disjoint_union, gnp, path, star
from copkit.meyniel import as_fraction, ceil_power, greedy_cop_cover, le_power, meyniel_pipeline
from copkit.solver import cop_number

from conftest import graphs


@given(st.integers(1, 10 ** 6), st.integers(1, 12), st.integers(2, 13))
@settings(max_examples=300)
def test_ceil_power_exact(n, p, q):
    if p >= q:
        return
    eps = Fraction(p, q)
    t = ceil_power(n, eps)
    assert t ** q >= n ** p and (t - 1) ** q < n ** p
    est = n ** (p / q)
    assert abs(t - math.ceil(est)) <= 1


def test_le_power():
    assert le_power(3, 9, Fraction(1, 2)) and not le_power(4, 9, Fraction(1, 2))


def test_epsilon_parsing():
    assert as_fraction("1/4") == Fraction(1, 4)
    assert as_fraction(0.25) == Fraction(1, 4)
    for bad in (0, 1, "3/2", -0.1):
        with pytest.raises(ValueError):
            as_fraction(bad)


def test_star_9():
    cov = greedy_cop_cover(star(9), Fraction(1, 2))
    assert abs(cov.threshold - math.sqrt(10)) < 1e-12
    assert cov.threshold_ceil == 4
    assert cov.stationed == [0] and cov.residual.n == 0
    assert all(c.ok for c in cov.checks())


def test_p10_high_epsilon():
    cov = greedy_cop_cover(path(10), "0.99")
    assert cov.stationed == [] and cov.residual == path(10)
    assert abs(cov.threshold - 10 ** 0.99) < 1e-9


def test_k5():
    cov = greedy_cop_cover(complete(5), Fraction(1, 2))
    assert len(cov.stationed) == 1 and cov.residual.n == 0
    assert all(c.ok for c in cov.checks())


def test_integral_threshold_inclusive():
    # n = 16, eps = 1/2: threshold exactly 4, so the degree-4 centre qualifies
    g = disjoint_union(star(4), path(11))
    cov = greedy_cop_cover(g, Fraction(1, 2))
    assert cov.threshold_ceil == 4 and cov.stationed == [0]


def test_tie_break_smallest_id():
    g = disjoint_union(star(5), star(5))
    cov = greedy_cop_cover(g, Fraction(1, 2))
    assert cov.stationed == [0, 6]


def test_pipeline_gnp_80():
    rep = meyniel_pipeline(gnp(80, 0.15, 5), Fraction(1, 4))
    assert rep.ok
    assert all(r.subcubic_n <= r.size_bound for r in rep.rows)


def test_pipeline_subcubic_identity():
    g = cycle(90)
    rep = meyniel_pipeline(g, Fraction(1, 4))
    assert rep.cover.stationed == []
    assert len(rep.rows) == 1 and rep.rows[0].subcubic_n == 90 and rep.rows[0].iterations == 0


def test_pipeline_star_plus_c5():
    g = disjoint_union(star(9), cycle(5))
    rep = meyniel_pipeline(g, Fraction(1, 2))
    assert rep.cover.stationed == [0]
    assert len(rep.rows) == 1
    row = rep.rows[0]
    assert row.vertices == list(range(10, 15)) and row.subcubic_n == 5 and row.iterations == 0
    s = rep.summary()
    assert s["stationed"] == 1 and s["residual_n"] == 5
    assert set(s["headline_eps_1_4"]) >= {"n_pow_1_minus_eps", "n_pow_3_4"}


@given(graphs(min_n=1, max_n=40), st.sampled_from([Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3)]))
@settings(max_examples=80, deadline=None)
def test_cover_invariants(g, eps):
    cov = greedy_cop_cover(g, eps)
    assert all(c.ok for c in cov.checks())
    for v in range(cov.residual.n):
        assert cov.residual.degree(v) ** eps.denominator < g.n ** eps.numerator
    assert len(cov.stationed) * (cov.threshold_ceil + 1) <= g.n


def test_cop_number_upper_bound_tiny():
    for seed in range(30):
        n = 5 + seed % 6
        g = gnp(n, 0.2 + 0.02 * seed, seed)
        for eps in (Fraction(1, 4), Fraction(1, 2)):
            rep = meyniel_pipeline(g, eps)
            res = rep.cover.residual
            extra = sum(cop_number(res.induced(c)[0], 10) for c in components(res)) if res.n else 0
            assert cop_number(g, n) <= len(rep.cover.stationed) + extra
