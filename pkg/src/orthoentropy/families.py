"""Recurrence coefficients of the orthonormal polynomial families.

All families use the orthonormal three-term recurrence

    x p_i(x) = b_{i+1} p_{i+1}(x) + a_{i+1} p_i(x) + b_i p_{i-1}(x),   p_{-1} = 0, p_0 = 1,

so ``a_i`` fills the diagonal and ``b_i`` the off-diagonal of the Jacobi matrix.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "coefficients",
    "recurrence_arrays",
    "chebyshev_explicit",
    "REFERENCE_PARAMETER_SETS",
]

FAMILIES = ("chebyshev1", "chebyshev2", "jacobi", "pollaczek", "meixner")

_PARAM_NAMES = {
    "chebyshev1": (),
    "chebyshev2": (),
    "jacobi": ("alpha", "beta"),
    "pollaczek": ("theta", "a"),
    "meixner": ("beta", "c"),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named family together with its parameters.

    Use the classmethod constructors, e.g. ``FamilySpec.jacobi(1.2, 8.9)``
    or ``FamilySpec.meixner(beta=3.4, c=0.2)``.
    """

    kind: str
    params: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise ValueError(f"unknown family {self.kind!r}; expected one of {FAMILIES}")
        params = tuple(float(p) for p in self.params)
        object.__setattr__(self, "params", params)
        names = _PARAM_NAMES[self.kind]
        if len(params) != len(names):
            raise ValueError(f"{self.kind} takes parameters {names}, got {params}")
        if self.kind == "jacobi":
            alpha, beta = params
            if alpha <= -1 or beta <= -1:
                raise ValueError("jacobi requires alpha > -1 and beta > -1")
            if alpha + beta <= -1:
                # b_1 is 0/0 at alpha + beta = -1 and complex below
                raise ValueError("jacobi requires alpha + beta > -1")
        elif self.kind == "pollaczek":
            theta, a = params
            if theta <= 0 or a < 0:
                raise ValueError("pollaczek requires theta > 0 and a >= 0")
        elif self.kind == "meixner":
            beta, c = params
            if beta <= 0 or not 0 < c < 1:
                raise ValueError("meixner requires beta > 0 and 0 < c < 1")

    @classmethod
    def chebyshev1(cls):
        return cls("chebyshev1")

    @classmethod
    def chebyshev2(cls):
        return cls("chebyshev2")

    @classmethod
    def jacobi(cls, alpha, beta):
        return cls("jacobi", (alpha, beta))

    @classmethod
    def pollaczek(cls, theta, a):
        return cls("pollaczek", (theta, a))

    @classmethod
    def meixner(cls, beta, c):
        return cls("meixner", (beta, c))

    @classmethod
    def from_name(cls, kind, **params):
        """Build from a family name and keyword parameters; extra keywords are ignored."""
        names = _PARAM_NAMES.get(kind)
        if names is None:
            raise ValueError(f"unknown family {kind!r}; expected one of {FAMILIES}")
        missing = [p for p in names if params.get(p) is None]
        if missing:
            raise ValueError(f"{kind} needs parameters {missing}")
        return cls(kind, tuple(params[p] for p in names))

    @property
    def param_dict(self) -> dict:
        return dict(zip(_PARAM_NAMES[self.kind], self.params))

    @property
    def is_symmetric(self) -> bool:
        """True when the weight is even, so that every a_i vanishes."""
        if self.kind == "jacobi":
            return self.params[0] == self.params[1]
        return self.kind in ("chebyshev1", "chebyshev2", "pollaczek")

    def label(self) -> str:
        if not self.params:
            return self.kind
        inner = ",".join(f"{k}={v:g}" for k, v in self.param_dict.items())
        return f"{self.kind}({inner})"


def _jacobi(alpha, beta, i):
    s = alpha + beta
    t = 2 * i + s
    b = 2.0 / t * math.sqrt(i * (i + alpha) * (i + beta) * (i + s) / ((t + 1) * (t - 1)))
    if alpha == beta:
        a = 0.0
    elif i == 1:
        # (alpha^2 - beta^2) / ((2 + s) s) with the factor s cancelled
        a = (alpha - beta) / (2.0 + s)
    else:
        a = (alpha - beta) * s / (t * (t - 2))
    return a, b


def coefficients(spec: FamilySpec, i: int) -> tuple[float, float]:
    """Return ``(a_i, b_i)`` for ``i >= 1``."""
    if i < 1:
        raise ValueError(f"recurrence index must be >= 1, got {i}")
    kind = spec.kind
    if kind == "chebyshev1":
        return 0.0, (math.sqrt(0.5) if i == 1 else 0.5)
    if kind == "chebyshev2":
        return 0.0, 0.5
    if kind == "jacobi":
        return _jacobi(*spec.params, i)
    if kind == "pollaczek":
        theta, a = spec.params
        b = 0.5 * math.sqrt(i * (i + 2 * theta - 1) / ((i + theta + a) * (i + theta + a - 1)))
        return 0.0, b
    beta, c = spec.params
    a = ((i - 1) * (1 + c) + c * beta) / (1 - c)
    b = math.sqrt(i * c * (i + beta - 1)) / (1 - c)
    return a, b


def recurrence_arrays(spec: FamilySpec, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Arrays ``a[0:n] = a_1..a_n`` and ``b[0:n] = b_1..b_n``."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    ab = np.array([coefficients(spec, i) for i in range(1, n + 1)], dtype=float)
    return ab[:, 0].copy(), ab[:, 1].copy()


def chebyshev_explicit(kind: int, m: int, theta: float) -> float:
    """Orthonormal Chebyshev polynomial of degree ``m`` at ``cos(theta)``.

    Kind 1 is ``sqrt(2) cos(m theta)`` (1 for m = 0); kind 2 is
    ``sin((m+1) theta) / sin(theta)`` with the limits ``(+-1)^m (m+1)`` at the endpoints.
    """
    if m < 0:
        raise ValueError("degree must be nonnegative")
    if kind == 1:
        return 1.0 if m == 0 else math.sqrt(2.0) * math.cos(m * theta)
    if kind != 2:
        raise ValueError(f"kind must be 1 or 2, got {kind}")
    s = math.sin(theta)
    if abs(s) < 1e-15:
        sign = 1.0 if math.cos(theta) > 0 else (-1.0) ** m
        return sign * (m + 1)
    return math.sin((m + 1) * theta) / s


# the parameter choices used for the non-Chebyshev reference tables
REFERENCE_PARAMETER_SETS = (
    FamilySpec.jacobi(1.2, 8.9),
    FamilySpec.jacobi(1.2, 3.4),
    FamilySpec.pollaczek(1.2, 8.9),
    FamilySpec.pollaczek(1.2, 3.4),
    FamilySpec.meixner(3.4, 0.2),
    FamilySpec.meixner(8.9, 0.2),
    FamilySpec.meixner(3.4, 0.8),
    FamilySpec.meixner(8.9, 0.8),
)
