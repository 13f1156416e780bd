"""Discrete Shannon entropies of orthonormal polynomial sequences.

All values are in nats. Column entropies ``S_{n,j}`` come from the squared
columns of ``Psi``; dual entropies ``S_n^i`` from its squared rows. The
``modified_entropy_*`` sums are the trigonometric log-sums that the
Chebyshev column entropies reduce to.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .families import FamilySpec, recurrence_arrays
from .spectrum import SpectralDecomposition, _log_norm, polynomial_log_values

__all__ = [
    "ProbabilityVector",
    "EntropyTable",
    "shannon_entropy",
    "entropy_from_log_probabilities",
    "entropy_at_zero",
    "entropy_at_lambda",
    "dual_entropy",
    "entropy_table",
    "modified_entropy_cheb1",
    "modified_entropy_cheb2",
    "modified_entropy_cheb1_reduced",
    "modified_entropy_cheb2_reduced",
    "spectral_to_angular_index",
]

# squared components below this count as exact zeros (0 log 0 = 0)
ZERO_CUTOFF = 1e-300


@dataclass(frozen=True)
class ProbabilityVector:
    p: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float).reshape(-1)
        if p.size == 0:
            raise ValueError("probability vector must be nonempty")
        if np.any(p < 0) or not np.all(np.isfinite(p)):
            raise ValueError("probabilities must be finite and nonnegative")
        if abs(p.sum() - 1.0) > 1e-12:
            raise ValueError(f"probabilities must sum to 1, got {p.sum()!r}")
        object.__setattr__(self, "p", p)

    def __len__(self):
        return self.p.size


def shannon_entropy(p) -> float:
    """``-sum p_i log p_i`` with ``0 log 0 = 0``."""
    if not isinstance(p, ProbabilityVector):
        p = ProbabilityVector(p)
    q = p.p[p.p >= ZERO_CUTOFF]
    return float(-np.sum(q * np.log(q)))


def entropy_from_log_probabilities(log_p, axis=0):
    """Entropy from ``log p``; exact even where ``p`` itself underflows."""
    log_p = np.asarray(log_p, dtype=float)
    with np.errstate(invalid="ignore"):
        terms = np.where(np.isfinite(log_p), np.exp(log_p) * log_p, 0.0)
    return -np.sum(terms, axis=axis)


def _check_index(idx, n, name):
    if not 1 <= idx <= n:
        raise IndexError(f"{name} must lie in 1..{n}, got {idx}")


def entropy_at_zero(dec: SpectralDecomposition, j: int) -> float:
    """Column entropy ``S_{n,j}`` for the ``j``-th zero in ascending order (1-based)."""
    _check_index(j, dec.n, "j")
    return float(entropy_from_log_probabilities(dec.log_psi_sq[:, j - 1]))


def dual_entropy(dec: SpectralDecomposition, i: int) -> float:
    """Row entropy ``S_n^i`` (1-based row index)."""
    _check_index(i, dec.n, "i")
    return float(entropy_from_log_probabilities(dec.log_psi_sq[i - 1, :]))


def entropy_at_lambda(spec: FamilySpec, n: int, lam: float) -> float:
    """Generalised entropy ``S_n(lam)`` of the normalised vector ``(p_k(lam))_{k<n}``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a, b = recurrence_arrays(spec, n)
    logs, _ = polynomial_log_values(a, b, n, lam)
    log_norm = _log_norm(logs)
    return float(entropy_from_log_probabilities(2.0 * (logs - log_norm)))


@dataclass
class EntropyTable:
    """Per-zero entropies for one family and degree, ordered by ascending zero."""

    n: int
    family: FamilySpec
    values: np.ndarray
    method: str = "spectral"
    zeros: Optional[np.ndarray] = None
    christoffel: Optional[np.ndarray] = None
    dual_values: Optional[np.ndarray] = field(default=None)

    def rows(self):
        for k in range(self.n):
            yield {
                "n": self.n,
                "j": k + 1,
                "lambda": None if self.zeros is None else float(self.zeros[k]),
                "christoffel": None if self.christoffel is None else float(self.christoffel[k]),
                "S_nj": float(self.values[k]),
                "method": self.method,
            }


def entropy_table(dec: SpectralDecomposition, include_dual: bool = False) -> EntropyTable:
    values = entropy_from_log_probabilities(dec.log_psi_sq, axis=0)
    dual = entropy_from_log_probabilities(dec.log_psi_sq, axis=1) if include_dual else None
    return EntropyTable(
        n=dec.n,
        family=dec.family,
        values=np.asarray(values, dtype=float),
        method="spectral",
        zeros=dec.zeros.copy(),
        christoffel=dec.christoffel,
        dual_values=dual,
    )


def spectral_to_angular_index(k: int, n: int) -> int:
    """Ascending-zero index -> angular index of the Chebyshev zero formulas.

    Both ``cos((2j-1) pi / 2n)`` and ``cos(j pi / (n+1))`` decrease in ``j``.
    """
    _check_index(k, n, "k")
    return n + 1 - k


def _xlogx_sq(values):
    sq = np.square(values)
    out = np.zeros_like(sq)
    mask = sq >= ZERO_CUTOFF
    out[mask] = sq[mask] * np.log(sq[mask])
    return out


def modified_entropy_cheb1(n: int, j: int) -> float:
    """``sum_{i=1}^{n-1} cos^2(t i) log cos^2(t i)`` with ``t = (2j-1) pi / 2n``."""
    _check_index(j, n, "j")
    # reduce (2j-1) i mod 4n exactly before taking the cosine
    i = np.arange(1, n)
    residues = ((2 * j - 1) * i) % (4 * n)
    return float(np.sum(_xlogx_sq(np.cos(np.pi * residues / (2 * n)))))


def modified_entropy_cheb2(n: int, j: int) -> float:
    """``sum_{k=1}^{n-1} sin^2(k j pi / n) log sin^2(k j pi / n)`` for ``1 <= j <= n-1``."""
    if not 1 <= j <= n - 1:
        raise IndexError(f"j must lie in 1..{n - 1}, got {j}")
    k = np.arange(1, n)
    residues = (k * j) % (2 * n)
    return float(np.sum(_xlogx_sq(np.sin(np.pi * residues / n))))


def modified_entropy_cheb1_reduced(n: int, j: int) -> float:
    """GCD-reduced form: ``d * sum_{k<n/d} cos^2(pi d k / 2n) log(...)``, zero when ``d == n``."""
    _check_index(j, n, "j")
    d = math.gcd(2 * j - 1, n)
    if d == n:
        return 0.0
    k = np.arange(1, n // d)
    return float(d * np.sum(_xlogx_sq(np.cos(np.pi * d * k / (2 * n)))))


def modified_entropy_cheb2_reduced(n: int, j: int) -> float:
    """GCD-reduced form with ``D = GCD(2j, n)`` copies of the ``d = GCD(j, n)`` sine sum."""
    if not 1 <= j <= n - 1:
        raise IndexError(f"j must lie in 1..{n - 1}, got {j}")
    big_d = math.gcd(2 * j, n)
    if big_d == n:
        return 0.0
    d = math.gcd(j, n)
    m = np.arange(1, n // big_d)
    return float(big_d * np.sum(_xlogx_sq(np.sin(np.pi * d * m / n))))
