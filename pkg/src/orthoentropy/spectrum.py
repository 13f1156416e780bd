"""Jacobi matrix spectra, Christoffel weights and the orthogonal Psi matrix.

The zeros of ``p_n`` are the eigenvalues of the symmetric tridiagonal Jacobi
matrix ``L_n``; they are isolated by Sturm-sequence bisection and polished
with safeguarded Newton steps. Column ``j`` of ``Psi`` is the polynomial
vector ``(p_0, ..., p_{n-1})`` at the ``j``-th zero scaled to unit length, so
``Psi[0, j]**2`` is the Christoffel weight ``l_n(lambda_j)``.

At a zero the polynomial vector is built from a two-sided ("twisted")
evaluation of the recurrence: forward from ``p_0`` down to the largest
component, backward from ``p_{n-1}`` up to it. Plain forward evaluation
amplifies rounding exponentially wherever the vector decays with the degree
(e.g. the small zeros of Meixner polynomials). Magnitudes are carried as
logarithms so Christoffel weights far below the double range survive.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .families import FamilySpec, recurrence_arrays

__all__ = [
    "DegenerateMatrixError",
    "JacobiMatrix",
    "SpectralDecomposition",
    "sturm_count",
    "eigenvalues",
    "evaluate_polynomial_vector",
    "polynomial_log_values",
    "decompose",
    "christoffel_at",
]

_RESCALE = 2.0**512
_LOG_RESCALE = float(np.log(_RESCALE))
_TINY = np.finfo(float).tiny


class DegenerateMatrixError(ValueError):
    """An off-diagonal entry is not strictly positive."""


@dataclass(frozen=True)
class JacobiMatrix:
    """Symmetric tridiagonal matrix with ``diag = a_1..a_n`` and ``offdiag = b_1..b_{n-1}``."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self):
        diag = np.asarray(self.diag, dtype=float).reshape(-1)
        offdiag = np.asarray(self.offdiag, dtype=float).reshape(-1)
        if diag.size < 1:
            raise ValueError("Jacobi matrix needs at least one diagonal entry")
        if offdiag.size != diag.size - 1:
            raise ValueError(
                f"expected {diag.size - 1} off-diagonal entries, got {offdiag.size}"
            )
        if not np.all(np.isfinite(diag)) or not np.all(np.isfinite(offdiag)):
            raise ValueError("Jacobi matrix entries must be finite")
        if np.any(offdiag <= 0):
            raise DegenerateMatrixError("off-diagonal entries must be positive")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "offdiag", offdiag)

    @classmethod
    def from_family(cls, spec: FamilySpec, n: int) -> "JacobiMatrix":
        a, b = recurrence_arrays(spec, n)
        return cls(a, b[: n - 1])

    @property
    def n(self) -> int:
        return self.diag.size

    def dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def gershgorin(self) -> tuple[float, float]:
        radius = np.zeros(self.n)
        radius[:-1] += self.offdiag
        radius[1:] += self.offdiag
        return float(np.min(self.diag - radius)), float(np.max(self.diag + radius))

    def pivmin(self) -> float:
        bmax = float(np.max(self.offdiag**2)) if self.n > 1 else 0.0
        return _TINY * max(1.0, bmax)


def _guard(d, pivmin):
    small = np.abs(d) < pivmin
    if np.any(small):
        d = np.where(small, np.where(d < 0, -pivmin, pivmin), d)
    return d


def _guard_fast(d, pivmin):
    # branch-free variant of _guard for the bisection hot loop
    return np.copysign(np.maximum(np.abs(d), pivmin), d)


def sturm_count(m: JacobiMatrix, x) -> np.ndarray:
    """Number of eigenvalues strictly below each entry of ``x``."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    pivmin = m.pivmin()
    b2 = m.offdiag**2
    shifted = m.diag[:, None] - x[None, :]
    d = _guard_fast(shifted[0], pivmin)
    count = (d < 0).astype(int)
    for k in range(1, m.n):
        d = _guard_fast(shifted[k] - b2[k - 1] / d, pivmin)
        count += d < 0
    return count


def _newton_step(m: JacobiMatrix, lam: np.ndarray) -> np.ndarray:
    # det(L - lam)/det'(L - lam) from the LDL^T pivots and their derivatives
    pivmin = m.pivmin()
    b2 = m.offdiag**2
    with np.errstate(all="ignore"):
        d = _guard(m.diag[0] - lam, pivmin)
        dd = -np.ones_like(lam)
        acc = dd / d
        for k in range(1, m.n):
            dd = -1.0 + b2[k - 1] * dd / (d * d)
            d = _guard(m.diag[k] - lam - b2[k - 1] / d, pivmin)
            acc = acc + dd / d
        return 1.0 / acc


def _bracket_eigenvalues(m: JacobiMatrix, tol: float | None = None):
    lo_bound, hi_bound = m.gershgorin()
    scale = max(1.0, abs(lo_bound), abs(hi_bound))
    if tol is None:
        tol = 1e-14 * scale
    n = m.n
    idx = np.arange(n)
    lo = np.full(n, lo_bound - tol)
    hi = np.full(n, hi_bound + tol)
    for _ in range(400):
        width = hi - lo
        if np.all(width <= tol):
            break
        mid = 0.5 * (lo + hi)
        above = sturm_count(m, mid) >= idx + 1
        hi = np.where(above, mid, hi)
        lo = np.where(above, lo, mid)
    return lo, hi


def eigenvalues(m: JacobiMatrix, newton_steps: int = 3) -> np.ndarray:
    """Eigenvalues of ``m`` in ascending order.

    Sturm bisection brackets each eigenvalue to ``1e-14 * max(1, |spectral bound|)``;
    up to ``newton_steps`` Newton corrections are then accepted only while
    they stay inside the bracket.
    """
    if m.n == 1:
        return m.diag.copy()
    lo, hi = _bracket_eigenvalues(m)
    lam = 0.5 * (lo + hi)
    for _ in range(newton_steps):
        step = _newton_step(m, lam)
        cand = lam - step
        ok = np.isfinite(cand) & (cand >= lo) & (cand <= hi)
        if not np.any(ok):
            break
        lam = np.where(ok, cand, lam)
    return np.sort(lam)


def polynomial_log_values(a: np.ndarray, b: np.ndarray, n: int, lam: float):
    """``log|p_k(lam)|`` and ``sign(p_k(lam))`` for k < n by the forward recurrence.

    ``a`` and ``b`` hold ``a_1..`` and ``b_1..`` (at least n-1 of the latter).
    The running pair is divided by ``2**512`` whenever it exceeds that size and
    the scale is carried in the logarithm.
    """
    lam = float(lam)
    vals = np.empty(n)
    scales = np.zeros(n)
    vals[0] = 1.0
    log_scale = 0.0
    prev, cur = 0.0, 1.0
    for k in range(n - 1):
        nxt = ((lam - a[k]) * cur - (b[k - 1] * prev if k > 0 else 0.0)) / b[k]
        prev, cur = cur, nxt
        big = max(abs(prev), abs(cur))
        if big > _RESCALE:
            prev /= big
            cur /= big
            log_scale += np.log(big)
        vals[k + 1] = cur
        scales[k + 1] = log_scale
    with np.errstate(divide="ignore"):
        logs = np.log(np.abs(vals)) + scales
    return logs, np.sign(vals)


def _log_norm(logs: np.ndarray, axis=None):
    top = np.max(logs, axis=axis, keepdims=True)
    top = np.where(np.isfinite(top), top, 0.0)
    total = np.sum(np.exp(2.0 * (logs - top)), axis=axis, keepdims=True)
    out = top + 0.5 * np.log(total)
    return np.squeeze(out, axis=axis) if axis is not None else float(out.reshape(()))


def evaluate_polynomial_vector(spec: FamilySpec, n: int, lam: float):
    """Unit vector along ``(p_0(lam), ..., p_{n-1}(lam))`` and its log Euclidean norm.

    ``exp(-2 * log_norm)`` is the Christoffel function ``l_n(lam)``.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a, b = recurrence_arrays(spec, n)
    logs, signs = polynomial_log_values(a, b, n, lam)
    log_norm = _log_norm(logs)
    return signs * np.exp(logs - log_norm), log_norm


def christoffel_at(spec: FamilySpec, n: int, lam: float) -> float:
    """Christoffel function ``(sum_{k<n} p_k(lam)^2)^-1``."""
    _, log_norm = evaluate_polynomial_vector(spec, n, lam)
    return float(np.exp(-2.0 * log_norm))


def _twisted_vectors(m: JacobiMatrix, lam: np.ndarray):
    """Log-magnitudes and signs of the eigenvectors at ``lam`` (one column per value)."""
    n = m.n
    k_count = lam.size
    a = m.diag[:, None]
    b = m.offdiag
    pivmin = m.pivmin()
    shifted = a - lam[None, :]

    dp = np.empty((n, k_count))
    dm = np.empty((n, k_count))
    dp[0] = _guard(shifted[0], pivmin)
    for k in range(1, n):
        dp[k] = _guard(shifted[k] - b[k - 1] ** 2 / dp[k - 1], pivmin)
    dm[n - 1] = _guard(shifted[n - 1], pivmin)
    for k in range(n - 2, -1, -1):
        dm[k] = _guard(shifted[k] - b[k] ** 2 / dm[k + 1], pivmin)

    gamma = dp + dm - shifted
    twist = np.argmin(np.abs(gamma), axis=0)

    logz = np.zeros((n, k_count))
    sign = np.ones((n, k_count))
    with np.errstate(divide="ignore"):
        for k in range(n - 2, -1, -1):
            act = k < twist
            logz[k] = np.where(act, logz[k + 1] + np.log(b[k] / np.abs(dp[k])), logz[k])
            sign[k] = np.where(act, -sign[k + 1] * np.sign(dp[k]), sign[k])
        for k in range(1, n):
            act = k > twist
            logz[k] = np.where(act, logz[k - 1] + np.log(b[k - 1] / np.abs(dm[k])), logz[k])
            sign[k] = np.where(act, -sign[k - 1] * np.sign(dm[k]), sign[k])
    # p_0 = 1 > 0 fixes the orientation
    sign = sign * sign[0][None, :]
    return logz, sign


@dataclass(frozen=True)
class SpectralDecomposition:
    """Zeros, Christoffel weights and the orthogonal Psi matrix for one (family, n).

    ``zeros`` are ascending. ``log_psi_sq[i, j]`` is ``log(Psi[i, j]**2)``
    (``-inf`` for exact zeros) and stays meaningful where ``Psi`` underflows.
    """

    family: FamilySpec
    n: int
    zeros: np.ndarray
    psi: np.ndarray
    log_psi_sq: np.ndarray = field(repr=False)

    @property
    def log_christoffel(self) -> np.ndarray:
        return self.log_psi_sq[0].copy()

    @property
    def christoffel(self) -> np.ndarray:
        return np.exp(self.log_psi_sq[0])

    @property
    def counting_weights(self) -> np.ndarray:
        return self.christoffel

    def orthogonality_defect(self) -> float:
        """``max |Psi^T Psi - I|``."""
        return float(np.max(np.abs(self.psi.T @ self.psi - np.eye(self.n))))


def decompose(spec: FamilySpec, n: int) -> SpectralDecomposition:
    """Spectral decomposition of the degree-``n`` Jacobi matrix of ``spec``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    m = JacobiMatrix.from_family(spec, n)
    zeros = eigenvalues(m)
    if n == 1:
        return SpectralDecomposition(spec, 1, zeros, np.ones((1, 1)), np.zeros((1, 1)))
    logz, sign = _twisted_vectors(m, zeros)
    log_norm = _log_norm(logz, axis=0)
    rel = logz - log_norm[None, :]
    psi = sign * np.exp(rel)
    return SpectralDecomposition(spec, n, zeros, psi, 2.0 * rel)
