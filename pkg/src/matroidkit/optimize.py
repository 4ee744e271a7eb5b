"""Maximum-weight basis selection by the matroid greedy rule."""

from __future__ import annotations

from typing import Sequence

from .core import Matroid


def greedy(matroid: Matroid, weights: Sequence) -> list[int]:
    """Grow a basis one element at a time, always taking the heaviest element
    whose addition keeps the set independent, ties broken by smallest index.

    Returns the chosen indices in selection order. Weights may be ints,
    Fractions, or floats (they only need to compare); negative weights are
    fine since the result must be a full basis either way.
    """
    if len(weights) != matroid.n:
        raise ValueError(f"expected {matroid.n} weights, got {len(weights)}")
    chosen = 0
    order: list[int] = []
    while len(order) < matroid.rank:
        best = -1
        size = len(order)
        for e in range(matroid.n):
            bit = 1 << e
            if chosen & bit:
                continue
            if best >= 0 and not weights[e] > weights[best]:
                continue
            if matroid._rank_of_mask(chosen | bit) == size + 1:
                best = e
        order.append(best)
        chosen |= 1 << best
    return order
