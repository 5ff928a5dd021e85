"""Standard normal CDF and the Kolmogorov distance of a lattice law to it."""

from math import isfinite

import numpy as np
from scipy.special import ndtr

from crossings.errors import DomainError
from crossings.models import Pmf


def normal_cdf(z):
    """Phi(z) via scipy.special.ndtr (Cephes; absolute error well below 1e-15)."""
    return ndtr(z)


def ks_distance_to_normal(p: Pmf, mean: float, sigma: float) -> float:
    """
    sup_z |F(z) - Phi(z)| for W = (X - mean) / sigma.

    F is a step function, so the supremum is attained at an atom w_k, either
    just before the jump or at it.
    """
    sigma = float(sigma)
    if not isfinite(sigma) or sigma <= 0:
        raise DomainError(f"sigma must be positive, got {sigma}")
    mean = float(mean)

    support = p.support
    if not support:
        return 0.0
    cdf = p.cdf()
    after = np.array([float(value) for _, value in cdf])
    before = np.concatenate(([0.0], after[:-1]))
    w = (np.asarray(support, dtype=float) - mean) / sigma
    phi = normal_cdf(w)
    return float(np.max(np.maximum(np.abs(before - phi), np.abs(after - phi))))
