import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthoentropy.specfun import (
    EULER_GAMMA,
    CrossCheckError,
    RFunctionEvaluator,
    RMode,
    digamma,
    eval_R,
    zeta_odd,
)

mpmath.mp.dps = 40

# frozen from mpmath at 40 digits
DIGAMMA_0_3 = -3.502524222200132988964494507371981599538
R_0_1_SERIES30 = -0.002425056055506246584157606602771606180028
ZETA3 = 1.202056903159594285399738161511449990765


@pytest.fixture(scope="module")
def checked():
    return RFunctionEvaluator(mode="cross_checked")


def test_digamma_at_one_and_two():
    assert digamma(1.0) == pytest.approx(-EULER_GAMMA, abs=1e-14)
    assert digamma(2.0) == pytest.approx(1.0 - EULER_GAMMA, abs=1e-14)


def test_digamma_frozen_value():
    assert abs(digamma(0.3) - DIGAMMA_0_3) <= 1e-13


def test_digamma_against_mpmath_on_half_to_two():
    xs = np.linspace(0.5, 2.0, 301)
    err = max(abs(digamma(x) - float(mpmath.digamma(x))) for x in xs)
    assert err <= 1e-14


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
def test_digamma_poles(x):
    with pytest.raises(ValueError):
        digamma(x)


def test_digamma_negative_argument_reflection():
    assert digamma(-0.5) == pytest.approx(float(mpmath.digamma(-0.5)), abs=1e-13)


@given(st.floats(min_value=0.1, max_value=10.0))
def test_digamma_recurrence(x):
    assert abs(digamma(x + 1) - digamma(x) - 1.0 / x) <= 1e-13


def test_zeta_odd_values():
    assert abs(zeta_odd(1) - ZETA3) <= 1e-15
    # zeta(21) by direct summation: the tail past 50 is below 50^-20
    direct = math.fsum(k ** -21.0 for k in range(1, 50))
    assert abs(zeta_odd(10) - direct) <= 1e-15


def test_zeta_odd_against_mpmath():
    for k in range(1, 65):
        assert abs(zeta_odd(k) - float(mpmath.zeta(2 * k + 1))) <= 1e-15


def test_zeta_odd_decreases_to_one():
    values = [zeta_odd(k) for k in range(1, 65)]
    # zeta(2k+1) - 1 < 2^-53 from k = 27 on, so strictness only holds below that
    assert all(v > 1.0 for v in values[:25])
    assert all(a > b for a, b in zip(values[:25], values[1:26]))
    assert all(a >= b for a, b in zip(values, values[1:]))
    assert values[-1] == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("k", [0, -2, 1.5])
def test_zeta_odd_rejects_bad_index(k):
    with pytest.raises(ValueError):
        zeta_odd(k)


def test_evaluator_invariants():
    ev = RFunctionEvaluator()
    assert len(ev.zeta_odd) == 64
    assert all(z >= 1 for z in ev.zeta_odd)
    assert all(a > b for a, b in zip(ev.zeta_odd[:25], ev.zeta_odd[1:26]))
    with pytest.raises(ValueError):
        RFunctionEvaluator(series_tolerance=0.0)


def test_R_at_zero(checked):
    assert checked(0.0) == 0.0
    assert checked.series_form(0.0) == 0.0


def test_R_at_half(checked):
    exact = 1.0 - math.log(4.0)
    assert abs(checked.digamma_form(0.5) - exact) <= 1e-12
    assert abs(checked.series_form(0.5) - exact) <= 1e-12
    assert abs(checked(0.5) - exact) <= 1e-12


def test_R_at_tenth_matches_series_oracle(checked):
    assert abs(checked(0.1) - R_0_1_SERIES30) <= 1e-15


def test_R_forms_agree_on_grid(checked):
    xs = np.linspace(0.0, 0.49, 1000)
    diff = max(abs(checked.digamma_form(x) - checked.series_form(x)) for x in xs)
    assert diff <= 1e-12


def test_R_negative_and_decreasing():
    xs = np.linspace(0.0, 0.5, 501)[1:]
    values = [eval_R(x) for x in xs]
    assert all(v < 0 for v in values)
    assert all(a > b for a, b in zip(values, values[1:]))


@settings(max_examples=200)
@given(st.floats(min_value=1e-6, max_value=0.5), st.floats(min_value=1e-6, max_value=0.5))
def test_R_monotone_property(x1, x2):
    if x1 == x2:
        return
    lo, hi = sorted((x1, x2))
    assert eval_R(lo) > eval_R(hi)


@pytest.mark.parametrize("x", [-0.1, 1.0, 1.5])
def test_R_domain(x):
    with pytest.raises(ValueError):
        eval_R(x)


def test_cross_check_failure_is_reported():
    bad = RFunctionEvaluator(mode=RMode.CROSS_CHECKED, zeta_odd=tuple([2.0] * 64))
    with pytest.raises(CrossCheckError):
        bad(0.3)


def test_modes_select_route():
    x = 0.37
    d = RFunctionEvaluator(mode="digamma_form")(x)
    s = RFunctionEvaluator(mode="series_form")(x)
    assert eval_R(x, mode="series_form") == s
    assert eval_R(x) == d
    assert abs(d - s) <= 1e-13
