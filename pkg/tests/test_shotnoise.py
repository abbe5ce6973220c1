import math

import numpy as np
import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from ifm2deg.model import ELEMENTARY_CHARGE, HBAR, InterferometerSpec, InvalidSpecError, make_interferometer
from ifm2deg.shotnoise import dimensionful_noise, energy_window_check, normalized_noise


def exact_noise(n, eta):
    """Symbolic |S_LL|^2 |S_LU|^2 for the default angle."""
    th = sp.pi / (2 * n)
    b = sp.Matrix([[sp.cos(th), sp.sin(th)], [-sp.sin(th), sp.cos(th)]])
    a = sp.diag(sp.sqrt(eta), 1)
    s = (b * a) ** n
    return sp.nsimplify(sp.simplify(s[1, 1] ** 2 * s[1, 0] ** 2))


def test_two_stage_half_transparent():
    assert exact_noise(2, sp.Rational(1, 2)) == sp.Rational(1, 128)
    r = normalized_noise(make_interferometer(2, 0.5))
    assert r.normalized == pytest.approx(0.0078125, abs=1e-6)
    assert r.s_ll_sq == pytest.approx((0.5 - math.sqrt(2) / 4) ** 2, rel=1e-12)
    assert r.s_lu_sq == pytest.approx((0.25 + math.sqrt(2) / 4) ** 2, rel=1e-12)


@pytest.mark.parametrize("n", [1, 2, 3, 10, 50])
def test_boundaries_vanish(n):
    assert normalized_noise(make_interferometer(n, 0.0)).normalized == 0.0
    assert normalized_noise(make_interferometer(n, 1.0)).normalized <= 1e-12


@given(st.integers(1, 200), st.floats(0.0, 1.0), st.floats(0.0, math.pi / 2))
def test_bounded_by_quarter(n, eta, theta):
    r = normalized_noise(InterferometerSpec(n, eta, theta))
    assert 0.0 <= r.s_ll_sq <= 1 + 1e-12 and 0.0 <= r.s_lu_sq <= 1 + 1e-12
    assert 0.0 <= r.normalized <= 0.25 + 1e-12


@given(st.integers(1, 100), st.floats(0.0, math.pi / 2))
def test_unitary_partition_form(n, theta):
    r = normalized_noise(InterferometerSpec(n, 1.0, theta))
    p = r.s_ll_sq
    assert abs(r.normalized - p * (1 - p)) <= 1e-12


def test_dimensionful():
    spec = make_interferometer(2, 0.5)
    expected = ELEMENTARY_CHARGE**3 * 1e-4 / (math.pi * HBAR) / 128
    assert dimensionful_noise(spec, 1e-4) == pytest.approx(expected, rel=1e-12, abs=0)
    assert dimensionful_noise(spec, 1e-4) == pytest.approx(9.7e-30, rel=0.01, abs=0)
    assert dimensionful_noise(make_interferometer(7, 0.0), 3.0) == 0.0
    with pytest.raises(InvalidSpecError):
        dimensionful_noise(spec, 0.0)


@given(st.floats(1e-9, 10.0))
def test_dimensionful_linear_in_bias(v):
    spec = make_interferometer(3, 0.3)
    assert dimensionful_noise(spec, 2 * v) == pytest.approx(2 * dimensionful_noise(spec, v), rel=1e-14, abs=0)


def test_energy_window():
    assert energy_window_check(1e-4, 100_000) == pytest.approx(1e-4, abs=1e-8)
    small = energy_window_check(1e-12, 1001)
    assert small == pytest.approx(1e-12, rel=1e-2, abs=0)
    one = energy_window_check(1e-3, 30_001)
    two = energy_window_check(2e-3, 30_001)
    assert two == pytest.approx(2 * one, rel=1e-12, abs=0)
    with pytest.raises(InvalidSpecError):
        energy_window_check(0.0, 100)
    with pytest.raises(InvalidSpecError):
        energy_window_check(1e-4, 1)


def test_energy_window_converges():
    errs = [abs(energy_window_check(1.0, n) - 1.0) for n in (11, 101, 1001, 10_001)]
    assert all(e <= 3.0 / (n - 1) for e, n in zip(errs, (11, 101, 1001, 10_001)))
