"""Random staircase intervals for tests, benchmarks and the CLI harness."""

from __future__ import annotations

import random

from .interval import StaircaseInterval, from_slabs

__all__ = ["random_interval", "random_module", "large_interval"]


def _nonincreasing(rng, count, lo, hi):
    return sorted((rng.randint(lo, hi) for _ in range(count)), reverse=True)


def random_interval(
    rng: random.Random,
    low: int = 0,
    high: int = 8,
    max_vertices: int = 8,
    degenerate_rate: float = 0.05,
) -> StaircaseInterval:
    """Integer-vertex interval inside ``[low, high]^2`` with at most
    ``max_vertices`` vertices on each chain."""
    while True:
        if rng.random() < degenerate_rate:
            x = rng.randint(low, high)
            a, b = sorted(rng.randint(low, high) for _ in range(2))
            return from_slabs([x], [a], [b])
        slabs = rng.randint(1, 4)
        breaks = sorted(rng.sample(range(low, high + 1), slabs + 1))
        lows = _nonincreasing(rng, slabs, low, high)
        highs = _nonincreasing(rng, slabs, low, high)
        if any(a > b for a, b in zip(lows, highs)):
            # swap pointwise; both stay non-increasing
            lows, highs = [min(p) for p in zip(lows, highs)], [max(p) for p in zip(lows, highs)]
        interval = from_slabs(breaks, lows, highs)
        if len(interval.lower) <= max_vertices and len(interval.upper) <= max_vertices:
            return interval


def random_module(rng: random.Random, count: int, **kwargs):
    from .interval import IntervalModule

    return IntervalModule(random_interval(rng, **kwargs) for _ in range(count))


def large_interval(rng: random.Random, slabs: int, span: int = 10**6) -> StaircaseInterval:
    """A staircase with about ``4 * slabs`` vertices and integer coordinates."""
    breaks = sorted(rng.sample(range(span), slabs + 1))
    lows = _nonincreasing(rng, slabs, 0, span // 2)
    highs = [lo + rng.randint(1, span // 2) for lo in lows]
    highs.sort(reverse=True)
    highs = [max(h, lo) for h, lo in zip(highs, lows)]
    return from_slabs(breaks, lows, highs)
