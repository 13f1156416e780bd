"""Exact integer machinery for the folding map phi_j^(n).

``phi_j^(n)`` is the linear spline through the nodes ``(m n / j, n (1 - (-1)^m) / 2)``:
it folds the real line onto ``[0, n]`` with slope +-j. At integers it reduces
to ``|D(j k, 2n)|`` where ``D`` is the centred remainder. Everything here is
exact: Python integers and :class:`fractions.Fraction`, never floats.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

__all__ = [
    "gcd",
    "shifted_remainder",
    "PhiFunction",
    "phi_at_integer",
    "phi_at_real",
    "MainLemmaReport",
    "verify_main_lemma",
]


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two positive integers."""
    if a < 1 or b < 1:
        raise ValueError(f"gcd expects positive integers, got ({a}, {b})")
    return math.gcd(a, b)


def shifted_remainder(p: int, q: int) -> int:
    """The unique ``r`` with ``-q/2 <= r < q/2`` and ``p = r (mod q)``.

    >>> shifted_remainder(7, 4), shifted_remainder(6, 4)
    (-1, -2)
    """
    if q < 1:
        raise ValueError(f"modulus must be positive, got {q}")
    # r in [-q/2, q/2)  <=>  r + floor(q/2) in [0, q) for integer r
    half = q // 2
    return (p + half) % q - half


@dataclass(frozen=True)
class PhiFunction:
    """The folding map phi_j^(n); call it on ints or Fractions."""

    n: int
    j: int

    def __post_init__(self):
        if self.n < 1 or self.j < 1:
            raise ValueError(f"n and j must be positive, got n={self.n}, j={self.j}")

    @property
    def period(self) -> Fraction:
        return Fraction(2 * self.n, self.j)

    def __call__(self, x):
        if isinstance(x, int):
            return phi_at_integer(self, x)
        return phi_at_real(self, x)


def phi_at_integer(f: PhiFunction, k: int) -> int:
    return abs(shifted_remainder(f.j * abs(k), 2 * f.n))


def phi_at_real(f: PhiFunction, x) -> Fraction:
    """Evaluate the spline at an exact rational point.

    On ``[(2k-1) n/j, (2k+1) n/j]`` the value is ``|j x - 2 k n|``.
    """
    x = Fraction(x)
    # nearest even node index: k = round(j x / 2n), ties either way give the same value
    t = f.j * x
    k = math.floor(t / (2 * f.n) + Fraction(1, 2))
    return abs(t - 2 * k * f.n)


@dataclass
class MainLemmaReport:
    """Outcome of exhaustively checking the folding-map lemma for one (n, j)."""

    n: int
    j: int
    d: int
    d2: int
    image_values: set = field(default_factory=set)
    multiplicity_map: dict = field(default_factory=dict)
    clause: str = ""
    verdict: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.verdict.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, ok in self.verdict.items() if not ok]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "j": self.j,
            "d": self.d,
            "d2": self.d2,
            "clause": self.clause,
            "image_values": sorted(self.image_values),
            "multiplicity_map": {str(v): c for v, c in sorted(self.multiplicity_map.items())},
            "verdict": dict(self.verdict),
            "passed": self.passed,
        }


def verify_main_lemma(n: int, j: int) -> MainLemmaReport:
    """Enumerate phi_j^(n) on 1..n-1 and check every clause of the lemma.

    Clauses checked:

    * ``shift``: phi(k + n/d) equals n - phi(k) for odd j/d and phi(k) for even j/d;
    * ``scaling``: phi_j^(n)(k) == d * phi_{j/d}^(n/d)(k);
    * ``boundary`` (d == n): every value lies in {0, n};
    * ``odd`` (GCD(j, 2n) == d < n): image {d m : m < n/d}, each hit d times;
    * ``even`` (GCD(j, 2n) == 2d, d < n): image {2 d m : m <= (n-d)/2d}, each hit 2d times.

    A violated clause shows up as ``False`` in ``verdict``; nothing is raised.
    """
    if n < 1 or j < 1:
        raise ValueError(f"n and j must be positive, got n={n}, j={j}")
    f = PhiFunction(n, j)
    d = math.gcd(j, n)
    d2 = math.gcd(j, 2 * n)
    values = [phi_at_integer(f, k) for k in range(1, n)]
    interior = [v for v in values if v not in (0, n)]
    counts = Counter(interior)
    report = MainLemmaReport(
        n=n, j=j, d=d, d2=d2, image_values=set(counts), multiplicity_map=dict(counts)
    )
    verdict = report.verdict

    period = n // d
    odd_quotient = (j // d) % 2 == 1
    shift_ok = True
    for k in range(0, 2 * n + 1):
        lhs = phi_at_integer(f, k + period)
        rhs = n - phi_at_integer(f, k) if odd_quotient else phi_at_integer(f, k)
        if lhs != rhs:
            shift_ok = False
            break
    verdict["shift"] = shift_ok

    reduced = PhiFunction(n // d, j // d)
    verdict["scaling"] = all(
        phi_at_integer(f, k) == d * phi_at_integer(reduced, k) for k in range(0, 2 * n + 1)
    )
    verdict["range"] = all(0 <= v <= n for v in values)
    verdict["multiplicity_total"] = sum(counts.values()) == len(interior)

    if d == n:
        report.clause = "boundary"
        verdict["boundary"] = all(
            phi_at_integer(f, k) in (0, n) for k in range(-2 * n, 2 * n + 1)
        )
    elif d2 == d:
        report.clause = "odd"
        expected = {d * m for m in range(1, n // d)}
        verdict["image"] = report.image_values == expected
        verdict["cardinality"] = all(counts[v] == d for v in expected)
    elif d2 == 2 * d:
        report.clause = "even"
        expected = {2 * d * m for m in range(1, (n - d) // (2 * d) + 1)}
        verdict["image"] = report.image_values == expected
        verdict["cardinality"] = all(counts[v] == 2 * d for v in expected)
    else:
        # GCD(j, 2n) is always d or 2d
        report.clause = "impossible"
        verdict["divisibility"] = False
    return report
