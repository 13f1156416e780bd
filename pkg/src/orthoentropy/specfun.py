"""Special functions behind the closed-form entropies.

Digamma, odd zeta values and the correction function

    R(x) = x * (psi(1 - x) + 2*gamma + psi(1 + x)) = -2 * sum_k zeta(2k+1) x^(2k+1)

which carries the whole GCD dependence of the Chebyshev entropies.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

__all__ = [
    "EULER_GAMMA",
    "CrossCheckError",
    "RMode",
    "RFunctionEvaluator",
    "digamma",
    "zeta_odd",
    "eval_R",
]

EULER_GAMMA = 0.57721566490153286061

# B_2, B_4, ..., B_12
_BERNOULLI_EVEN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)

# shift target for the asymptotic digamma tail; first dropped term is B_14/(14 x^14) < 1e-15 here
_DIGAMMA_SHIFT = 10.0


class CrossCheckError(ArithmeticError):
    """The digamma and series forms of R disagree beyond tolerance."""


def digamma(x: float) -> float:
    """Digamma function psi(x) = Gamma'(x)/Gamma(x).

    Shifts the argument upward with psi(x+1) = psi(x) + 1/x and then uses
    the asymptotic expansion through x**-12. Negative arguments go through
    the reflection formula first.

    Raises
    ------
    ValueError
        At the poles x = 0, -1, -2, ...
    """
    x = float(x)
    if x <= 0.0 and x == math.floor(x):
        raise ValueError(f"digamma has a pole at {x}")
    if x < 0.0:
        # psi(1 - x) - psi(x) = pi * cot(pi x)
        return digamma(1.0 - x) - math.pi / math.tan(math.pi * x)

    acc = 0.0
    while x < _DIGAMMA_SHIFT:
        acc -= 1.0 / x
        x += 1.0

    inv2 = 1.0 / (x * x)
    tail = 0.0
    power = inv2
    for k, b2k in enumerate(_BERNOULLI_EVEN[:6], start=1):
        tail += b2k / (2 * k) * power
        power *= inv2
    return acc + math.log(x) - 0.5 / x - tail


def _zeta_euler_maclaurin(s: float, cutoff: int = 10) -> float:
    # sum_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2 + sum_m B_2m/(2m)! s(s+1)...(s+2m-2) N^(-s-2m+1)
    total = 0.0
    for k in range(cutoff - 1, 0, -1):
        total += k ** -s
    big_n = float(cutoff)
    total += big_n ** (1.0 - s) / (s - 1.0) + 0.5 * big_n ** -s
    rising = s
    fact = 2.0
    power = big_n ** (-s - 1.0)
    for m, b2m in enumerate(_BERNOULLI_EVEN, start=1):
        total += b2m / fact * rising * power
        rising *= (s + 2 * m - 1) * (s + 2 * m)
        fact *= (2 * m + 1) * (2 * m + 2)
        power /= big_n * big_n
    return total


def zeta_odd(k: int) -> float:
    """Riemann zeta at the odd integer 2k+1, k >= 1."""
    if int(k) != k or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    return _zeta_euler_maclaurin(2.0 * k + 1.0)


class RMode(str, enum.Enum):
    DIGAMMA_FORM = "digamma_form"
    SERIES_FORM = "series_form"
    CROSS_CHECKED = "cross_checked"


def _default_zetas(k_max: int) -> tuple[float, ...]:
    return tuple(zeta_odd(k) for k in range(1, k_max + 1))


@dataclass(frozen=True)
class RFunctionEvaluator:
    """Evaluator for R(x) on [0, 1) by two independent routes.

    Parameters
    ----------
    series_tolerance : float
        Absolute truncation tolerance of the zeta series.
    mode : RMode or str
        ``digamma_form`` (fast), ``series_form``, or ``cross_checked``
        (evaluates both and raises :class:`CrossCheckError` on disagreement).
    k_max : int
        Number of precomputed values zeta(3), zeta(5), ..., zeta(2*k_max+1).
    """

    series_tolerance: float = 1e-14
    mode: RMode = RMode.DIGAMMA_FORM
    k_max: int = 64
    zeta_odd: tuple[float, ...] = field(default=(), repr=False)

    def __post_init__(self):
        object.__setattr__(self, "mode", RMode(self.mode))
        if not self.series_tolerance > 0:
            raise ValueError("series_tolerance must be positive")
        if self.k_max < 1:
            raise ValueError("k_max must be >= 1")
        if not self.zeta_odd:
            object.__setattr__(self, "zeta_odd", _default_zetas(self.k_max))

    def _check_domain(self, x):
        x = float(x)
        if not 0.0 <= x < 1.0:
            raise ValueError(f"R(x) is defined for 0 <= x < 1, got {x}")
        return x

    def digamma_form(self, x: float) -> float:
        x = self._check_domain(x)
        if x == 0.0:
            return 0.0
        return x * (digamma(1.0 - x) + 2.0 * EULER_GAMMA + digamma(1.0 + x))

    def series_form(self, x: float) -> float:
        """Truncated zeta series; stops once the term and its geometric tail bound drop below tolerance."""
        x = self._check_domain(x)
        if x == 0.0:
            return 0.0
        x2 = x * x
        tail_factor = 1.0 / (1.0 - x2)
        power = x
        total = 0.0
        k = 0
        while True:
            k += 1
            power *= x2
            if k <= len(self.zeta_odd):
                z = self.zeta_odd[k - 1]
            else:
                # beyond the table zeta(2k+1) - 1 is below 2^-129
                z = 1.0
            term = z * power
            total += term
            if term < self.series_tolerance and term * tail_factor < self.series_tolerance:
                break
            if k > 100_000:
                raise ArithmeticError(f"zeta series for R did not converge at x={x}")
        return -2.0 * total

    def evaluate(self, x: float) -> float:
        if self.mode is RMode.SERIES_FORM:
            return self.series_form(x)
        value = self.digamma_form(x)
        if self.mode is RMode.CROSS_CHECKED:
            other = self.series_form(x)
            if abs(value - other) > 10.0 * self.series_tolerance:
                raise CrossCheckError(
                    f"R({x}): digamma form {value!r} vs series form {other!r}"
                )
        return value

    __call__ = evaluate


_DEFAULT = RFunctionEvaluator()


def eval_R(x: float, mode: RMode | str | None = None) -> float:
    """R(x) with the shared default evaluator (digamma form unless ``mode`` given)."""
    if mode is None or RMode(mode) is _DEFAULT.mode:
        return _DEFAULT.evaluate(x)
    return RFunctionEvaluator(mode=mode, zeta_odd=_DEFAULT.zeta_odd).evaluate(x)
