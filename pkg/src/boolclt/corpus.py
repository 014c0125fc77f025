"""Seeded random corpora of standardized atomic measures."""
from __future__ import annotations

import numpy as np

from .measure import AtomicMeasure, make_measure, standardize

DEFAULT_SEED = 20240607
POSITION_RANGE = 3.0
MAX_RADIUS = 5.0
MIN_GAP = 1e-6


def random_standardized_measure(rng: np.random.Generator, min_atoms: int = 2, max_atoms: int = 8,
                                max_radius: float = MAX_RADIUS) -> AtomicMeasure:
    """Uniform positions in [-3, 3], normalized uniform weights, then
    standardized; redrawn until the support radius is at most ``max_radius``
    and atoms are at least ``MIN_GAP`` apart."""
    while True:
        m = int(rng.integers(min_atoms, max_atoms + 1))
        x = np.sort(rng.uniform(-POSITION_RANGE, POSITION_RANGE, m))
        if np.min(np.diff(x)) < MIN_GAP:
            continue
        w = rng.uniform(0.0, 1.0, m)
        w /= w.sum()
        mu = standardize(make_measure(zip(x, w)))
        if mu.support_radius <= max_radius:
            return mu


def random_corpus(seed: int = DEFAULT_SEED, size: int = 200, min_atoms: int = 2,
                  max_atoms: int = 8) -> list[AtomicMeasure]:
    rng = np.random.default_rng(seed)
    return [random_standardized_measure(rng, min_atoms, max_atoms) for _ in range(size)]


def random_measure(rng: np.random.Generator, min_atoms: int = 1, max_atoms: int = 6,
                   spread: float = POSITION_RANGE) -> AtomicMeasure:
    """Unstandardized random atomic measure, for convolution and distance tests."""
    while True:
        m = int(rng.integers(min_atoms, max_atoms + 1))
        x = np.sort(rng.uniform(-spread, spread, m))
        if m > 1 and np.min(np.diff(x)) < MIN_GAP:
            continue
        w = rng.uniform(0.05, 1.0, m)
        return make_measure(zip(x, w / w.sum()))
