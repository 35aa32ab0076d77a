"""Acceptance suite: ten criteria, one PASS/FAIL line each.

The lines are printed at the end of the pytest run (see ``conftest.py``) and
also to stdout when run with ``-s``.
"""

import math
import random
import time
from fractions import Fraction

import numpy as np
import pytest

from persistdist.bottleneck import bottleneck, pairwise_matrix
from persistdist.dimdist import accumulate, differential, dimension_distance, dimension_function
from persistdist.extreal import INF
from persistdist.generate import large_interval, random_interval, random_module
from persistdist.interleaving import candidate_set, delta_star, interleaving_distance
from persistdist.intersection import d_triv, intersect_components, is_valid, vertex_criterion
from persistdist.interval import shift
from persistdist.oracle import (
    oracle_bottleneck,
    oracle_dimension_distance,
    oracle_distance,
    pointwise_valid,
    raster_triv_sup,
)

REPORT = []


def record(label, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {label}. {title}: {detail}"
    REPORT.append(line)
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def pairs():
    rng = random.Random(20240601)
    out = [(random_interval(rng), random_interval(rng)) for _ in range(200)]
    start = time.perf_counter()
    fast = [interleaving_distance(m, n) for m, n in out]
    slow = [oracle_distance(m, n) for m, n in out]
    elapsed = time.perf_counter() - start
    return out, fast, slow, elapsed


@pytest.fixture(scope="module")
def triples():
    # component/parent triples from plain and shifted pairs, as the probe sees them
    rng = random.Random(7)
    out = []
    while len(out) < 200:
        m = random_interval(rng, degenerate_rate=0.15)
        n = random_interval(rng, degenerate_rate=0.15)
        n = shift(n, Fraction(rng.randint(-4, 4), 2))
        out += [(q, m, n) for q in intersect_components(m, n)]
    return out[:200]


def test_criterion_1_oracle_equivalence(pairs):
    ps, fast, slow, elapsed = pairs
    bad = sum(a != b for a, b in zip(fast, slow))
    record(
        1, "d_I equals the grid oracle",
        bad == 0 and elapsed < 60,
        f"{len(ps) - bad}/{len(ps)} pairs agree, {elapsed:.1f} s (limit 60 s)",
    )


def test_criterion_2_candidate_membership(pairs):
    ps, fast, _, _ = pairs
    finite = [(d, candidate_set(m, n)) for (m, n), d in zip(ps, fast) if d != INF]
    bad = sum(d not in s.finite_values for d, s in finite)
    record(2, "d_I lies in the candidate set", bad == 0, f"{len(finite) - bad}/{len(finite)} finite distances are members")


def test_criterion_3_delta_star_bound(pairs):
    ps, fast, _, _ = pairs
    bounds = [delta_star(m, n) for m, n in ps]
    bad = sum(d < b for d, b in zip(fast, bounds))
    strict = sum(d > b for d, b in zip(fast, bounds))
    record(3, "d_I >= delta*", bad == 0, f"{len(ps) - bad}/{len(ps)} pairs, {strict} strictly above")


def test_criterion_4_metric(pairs):
    ps, fast, _, _ = pairs
    asym = sum(interleaving_distance(n, m) != d for (m, n), d in zip(ps, fast))
    nonzero = sum(interleaving_distance(m, m) != 0 for m, _ in ps)
    rng = random.Random(99)
    violations = 0
    for _ in range(100):
        a, b, c = (random_interval(rng) for _ in range(3))
        if interleaving_distance(a, c) > interleaving_distance(a, b) + interleaving_distance(b, c):
            violations += 1
    record(
        4, "metric sanity",
        asym == 0 and nonzero == 0 and violations == 0,
        f"{asym} asymmetric pairs, {nonzero} nonzero self-distances, {violations}/100 triangle violations",
    )


def test_criterion_5_validity(triples):
    bad = sum(is_valid(q, m, n) != pointwise_valid(q, m, n) for q, m, n in triples)
    valid = sum(pointwise_valid(q, m, n) for q, m, n in triples)
    record(
        5, "validity criterion matches the pointwise definition",
        bad == 0,
        f"is_valid agrees on {len(triples) - bad}/{len(triples)} triples ({valid} valid)",
    )


@pytest.mark.xfail(strict=True, reason="the bare vertex rule misses escapes along shared boundary lines")
def test_criterion_5_literal_vertex_rule(triples):
    disagree = [(q, m, n) for q, m, n in triples if vertex_criterion(q, m, n) != pointwise_valid(q, m, n)]
    # the rule is necessary: it never rejects a valid component
    assert all(vertex_criterion(q, m, n) for q, m, n in disagree)
    record(
        "5-literal", "bare vertex rule VL(Q)⊆L(M), VU(Q)⊆U(N) matches the pointwise definition",
        not disagree,
        f"disagrees on {len(disagree)}/{len(triples)} triples, always by accepting an invalid component",
    )


def test_criterion_6_trivializability(triples):
    bad = sum(d_triv(q, m, n) != raster_triv_sup(q, m, n) for q, m, n in triples)
    record(6, "vertex max of d_triv equals the raster sup", bad == 0, f"{len(triples) - bad}/{len(triples)} triples agree")


def test_criterion_7_bottleneck():
    rng = random.Random(31)
    bad = checked_single = single_bad = 0
    for k in range(100):
        m = rng.randint(0, 8)
        n = rng.randint(0, 8 - m)
        if k < 25:
            m = n = 1
        ms, ns = random_module(rng, m), random_module(rng, n)
        mat = pairwise_matrix(ms, ns)
        d_b = bottleneck(ms, ns, mat).distance
        if d_b != oracle_bottleneck(ms, ns, mat.entries, mat.row_triv, mat.col_triv):
            bad += 1
        if m == n == 1:
            checked_single += 1
            single_bad += mat.entries[0][0] > d_b
    record(
        7, "bottleneck equals exhaustive matching",
        bad == 0 and single_bad == 0 and checked_single > 0,
        f"{100 - bad}/100 module pairs agree; d_I <= d_B on {checked_single - single_bad}/{checked_single} single-summand pairs",
    )


def test_criterion_8_dimension_distance():
    rng = np.random.default_rng(8)
    identity_bad = search_bad = 0
    for _ in range(100):
        n = int(rng.integers(1, 4))
        shape = tuple(int(s) for s in rng.integers(1, 9, size=n))
        f = rng.integers(0, 4, size=shape)
        g = rng.integers(0, 4, size=shape)
        identity_bad += not np.array_equal(accumulate(differential(f)).values, f)
        res = dimension_distance(f, g)
        search_bad += (res.d_minus, res.d_plus) != oracle_dimension_distance(f, g)
    hand = dimension_distance([1, 1, 1, 1, 0, 0], [0, 1, 1, 0, 0, 0]).d_minus
    record(
        8, "dimension distance",
        identity_bad == 0 and search_bad == 0 and hand == 1,
        f"identity on {100 - identity_bad}/100 grids, search = linear scan on {100 - search_bad}/100, hand example d_- = {hand}",
    )


def test_criterion_9_stability():
    rng = random.Random(9)
    shape, origin, spacing = (17, 17), (0, 0), 1
    bad = 0
    worst = -math.inf
    for _ in range(100):
        # supports end by 15 so the drop back to 0 lands on the grid; above
        # its last index a grid function continues constantly
        m = random_interval(rng, high=15)
        n = random_interval(rng, high=15)
        d_i = interleaving_distance(m, n)
        f = dimension_function([m], shape, origin, spacing)
        g = dimension_function([n], shape, origin, spacing)
        d_0 = dimension_distance(f, g).d_zero * spacing
        bad += d_0 > d_i + spacing
        worst = max(worst, d_0 - d_i)
    record(9, "d_0 <= d_I + one grid unit", bad == 0, f"{100 - bad}/100 pairs, max d_0 - d_I = {worst}")


def _best_time(m, n, repeat=3):
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        interleaving_distance(m, n)
        best = min(best, time.perf_counter() - start)
    return best


@pytest.mark.slow
def test_criterion_10_performance():
    rng = random.Random(10)
    times = {}
    for t in (2500, 5000, 10000):
        m = large_interval(rng, t // 8)
        n = large_interval(rng, t // 8)
        assert abs(len(m.vertices) + len(n.vertices) - t) <= t // 20
        times[t] = _best_time(m, n)
    exponent = math.log2(times[10000] / times[2500]) / 2
    record(
        10, "performance",
        times[10000] < 5 and exponent < 2,
        ", ".join(f"t={t}: {s:.2f} s" for t, s in times.items()) + f", growth exponent {exponent:.2f}",
    )
