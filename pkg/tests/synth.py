"""Synthetic training data shared by the model and acceptance tests."""

from __future__ import annotations

import numpy as np


def separable_set(
    n: int = 200,
    dim: int = 6,
    margin: float = 0.5,
    seed: int = 0,
) -> tuple[np.ndarray, np.ndarray]:
    """A linearly separable sample with geometric margin >= ``margin``.

    Points sit at signed distance ``margin + |noise|`` from a random
    hyperplane (plus an offset along the normal, so the bias is needed),
    with small perpendicular scatter.
    """
    rng = np.random.default_rng(seed)
    normal = rng.normal(size=dim)
    normal /= np.linalg.norm(normal)
    y = np.where(rng.random(n) < 0.5, 1.0, -1.0)
    distance = margin + np.abs(rng.normal(scale=0.5, size=n))
    perp = rng.normal(size=(n, dim), scale=0.3)
    perp -= np.outer(perp @ normal, normal)
    X = (y * distance + 0.4)[:, None] * normal + perp
    return X, y
