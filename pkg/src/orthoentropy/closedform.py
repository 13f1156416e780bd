"""Exact entropies of the Chebyshev families and the cross-route comparison.

First kind, ``d = GCD(2j - 1, n)``::

    S_{n,j} = log n + log 2 - 1 + log(2)/n + R(d / 2n)

Second kind, ``d = GCD(j, n + 1)``::

    S_{n,j} = log(n + 1) + log 2 - 1 + R(d / (n + 1))

``j`` is the angular index: the ``j``-th zero is ``cos((2j-1) pi / 2n)``
or ``cos(j pi / (n+1))``, i.e. zeros in descending order.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .entropy import entropy_table, spectral_to_angular_index
from .families import FamilySpec
from .specfun import RFunctionEvaluator, eval_R
from .spectrum import decompose

__all__ = [
    "ClosedFormResult",
    "ComparisonReport",
    "ExtremalSummary",
    "theorem1",
    "theorem2",
    "closed_form",
    "closed_form_values",
    "extremal_summary",
    "compare",
]

LOG2 = math.log(2.0)

# values closer than this are treated as ties when locating extrema
_TIE_TOL = 1e-13


@dataclass(frozen=True)
class ClosedFormResult:
    n: int
    j: int
    d: int
    value: float
    kind: int


def _check(n, j):
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= j <= n:
        raise IndexError(f"j must lie in 1..{n}, got {j}")


def theorem1(n: int, j: int, r_eval: RFunctionEvaluator | None = None) -> ClosedFormResult:
    """Closed-form entropy of the first-kind Chebyshev polynomials."""
    _check(n, j)
    r = r_eval or eval_R
    d = math.gcd(2 * j - 1, n)
    value = math.log(n) + LOG2 - 1.0 + LOG2 / n + r(d / (2 * n))
    return ClosedFormResult(n, j, d, value, 1)


def theorem2(n: int, j: int, r_eval: RFunctionEvaluator | None = None) -> ClosedFormResult:
    """Closed-form entropy of the second-kind Chebyshev polynomials."""
    _check(n, j)
    r = r_eval or eval_R
    d = math.gcd(j, n + 1)
    value = math.log(n + 1) + LOG2 - 1.0 + r(d / (n + 1))
    return ClosedFormResult(n, j, d, value, 2)


def closed_form(kind: int, n: int, j: int, r_eval=None) -> ClosedFormResult:
    if kind == 1:
        return theorem1(n, j, r_eval)
    if kind == 2:
        return theorem2(n, j, r_eval)
    raise ValueError(f"kind must be 1 or 2, got {kind}")


def closed_form_values(kind: int, n: int, r_eval=None) -> np.ndarray:
    """Closed-form entropies for ``j = 1..n`` in angular order."""
    return np.array([closed_form(kind, n, j, r_eval).value for j in range(1, n + 1)])


@dataclass(frozen=True)
class ExtremalSummary:
    kind: int
    n: int
    max_value: float
    argmax_set: tuple
    min_value: float
    argmin_set: tuple
    local_minima: tuple

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "max_value": self.max_value,
            "argmax_set": list(self.argmax_set),
            "min_value": self.min_value,
            "argmin_set": list(self.argmin_set),
            "local_minima": list(self.local_minima),
        }


def _strict_local_minima(values):
    out = []
    n = len(values)
    for i in range(n):
        neighbours = [values[k] for k in (i - 1, i + 1) if 0 <= k < n]
        if neighbours and all(values[i] < v - _TIE_TOL for v in neighbours):
            out.append(i + 1)
    return tuple(out)


def extremal_summary(kind: int, n: int) -> ExtremalSummary:
    """Scan ``j = 1..n`` through the closed form and collect the extrema.

    ``local_minima`` lists the indices strictly below all their neighbours.
    """
    values = closed_form_values(kind, n)
    vmax = float(values.max())
    vmin = float(values.min())
    argmax = tuple(int(j) + 1 for j in np.flatnonzero(values >= vmax - _TIE_TOL))
    argmin = tuple(int(j) + 1 for j in np.flatnonzero(values <= vmin + _TIE_TOL))
    return ExtremalSummary(kind, n, vmax, argmax, vmin, argmin, _strict_local_minima(values))


@dataclass
class ComparisonReport:
    """Spectral vs closed-form entropies for one Chebyshev degree."""

    family: FamilySpec
    n: int
    threshold: float
    per_j_diffs: np.ndarray = field(repr=False)
    spectral: np.ndarray = field(repr=False)
    closed: np.ndarray = field(repr=False)

    @property
    def max_abs_diff(self) -> float:
        return float(np.max(np.abs(self.per_j_diffs)))

    @property
    def passed(self) -> bool:
        return self.max_abs_diff <= self.threshold

    def to_dict(self) -> dict:
        return {
            "family": self.family.kind,
            "n": self.n,
            "threshold": self.threshold,
            "max_abs_diff": self.max_abs_diff,
            "pass": self.passed,
            "per_j_diffs": [float(v) for v in self.per_j_diffs],
        }


def compare(family, n: int, threshold: float = 1e-9) -> ComparisonReport:
    """Compare the spectral entropies with the closed form for every ``j``.

    ``per_j_diffs[j-1]`` is spectral minus closed form at angular index ``j``.
    """
    if isinstance(family, str):
        family = FamilySpec(family)
    kinds = {"chebyshev1": 1, "chebyshev2": 2}
    if family.kind not in kinds:
        raise ValueError(f"closed forms exist only for {sorted(kinds)}, got {family.kind!r}")
    if not threshold > 0:
        raise ValueError("threshold must be positive")
    kind = kinds[family.kind]
    table = entropy_table(decompose(family, n))
    spectral = np.empty(n)
    for k in range(1, n + 1):
        spectral[spectral_to_angular_index(k, n) - 1] = table.values[k - 1]
    closed = closed_form_values(kind, n)
    return ComparisonReport(family, n, float(threshold), spectral - closed, spectral, closed)
