"""Deterministic train/val/test partitioning."""

from __future__ import annotations

from typing import Sequence, TypeVar

import numpy as np

from ..errors import ConfigError

T = TypeVar("T")


def split_dataset(
    items: Sequence[T],
    ratios: tuple[float, float, float] = (0.7, 0.1, 0.2),
    seed: int = 0,
) -> tuple[list[T], list[T], list[T]]:
    """Shuffle and partition items into (train, val, test).

    Sizes follow the ratios via largest-remainder rounding, so each part is
    within one element of its exact share. Deterministic for a fixed seed;
    the three parts are disjoint and cover the input exactly.
    """
    if len(ratios) != 3:
        raise ConfigError(f"expected 3 split ratios, got {len(ratios)}")
    if any(r < 0 for r in ratios):
        raise ConfigError(f"split ratios must be non-negative, got {ratios}")
    if abs(sum(ratios) - 1.0) > 1e-9:
        raise ConfigError(f"split ratios must sum to 1, got {ratios} (sum {sum(ratios)})")

    n = len(items)
    exact = [r * n for r in ratios]
    counts = [int(c) for c in exact]
    remainders = sorted(range(3), key=lambda i: (exact[i] - counts[i], -i), reverse=True)
    for i in range(n - sum(counts)):
        counts[remainders[i % 3]] += 1

    order = np.random.default_rng(seed).permutation(n)
    shuffled = [items[int(i)] for i in order]
    a, b = counts[0], counts[0] + counts[1]
    return shuffled[:a], shuffled[a:b], shuffled[b:]
