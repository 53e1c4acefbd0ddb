"""Deterministic random instance generation for benchmarks and stress tests."""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm

from .graphs import Graph
from .pebble import PebbleGame


def random_sparse_graph(
    n: int,
    a: Fraction | int,
    rng: random.Random,
    b: Fraction | int = 0,
    density_factor: int = 4,
) -> Graph:
    """A seeded random (a, b)-sparse graph on n vertices, b <= 0.

    Samples roughly density_factor * a * n candidate pairs of a random graph
    and greedily deletes every edge whose retention would break sparsity
    (equivalently: keeps each candidate iff the pebble engine accepts it),
    stopping once floor(a*n + b) edges survive.  Deterministic given the RNG.
    """
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b > 0 or 2 * a + b < 1:
        raise ValueError("need a > 0 and nonpathological b <= 0")
    target = max(0, int(a * n + b))
    want = min(max(1, density_factor * target), n * (n - 1) // 2)
    pairs: set[tuple[int, int]] = set()
    while len(pairs) < want:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            pairs.add((u, v) if u < v else (v, u))
    order = sorted(pairs)
    rng.shuffle(order)
    scale = lcm(a.denominator, b.denominator)
    k = a.numerator * (scale // a.denominator)
    l = int(-b * scale)
    game = PebbleGame(n, k, l)
    kept: list[tuple[int, int]] = []
    for u, v in order:
        placed = 0
        for c in range(scale):
            if not game.insert(u, v, key=len(kept) * scale + c):
                break
            placed += 1
        if placed < scale:
            for c in range(placed):
                game.delete(len(kept) * scale + c)
            continue
        kept.append((u, v))
        if len(kept) >= target:
            break
    return Graph(n, kept)
