import math

import numpy as np
import pytest

from weingarten import (
    DomainError,
    elliptic_E_am,
    elliptic_E_incomplete,
    jacobi,
    make_modulus,
)
from weingarten import oracles
from weingarten.elliptic import jacobi_arrays, jacobi_am

# regression locks computed with the quadrature oracle (p = 0.5)
K_05 = 1.6857503548125961
E_05 = 1.4674622093394272


def test_make_modulus_basic(m05):
    assert m05.q == pytest.approx(math.sqrt(0.75), abs=1e-15)
    assert m05.K_complete == pytest.approx(K_05, abs=1e-14)
    assert m05.E_complete == pytest.approx(E_05, abs=1e-14)
    assert m05.K_complete > m05.E_complete > 0.0


@pytest.mark.parametrize("bad", [1.2, 0.0, 1.0, -0.3, 2.0])
def test_make_modulus_rejects_degenerate(bad):
    with pytest.raises(DomainError):
        make_modulus(bad)


def test_co_modulus_identity():
    for p in np.linspace(0.01, 0.99, 57):
        m = make_modulus(p)
        assert abs(m.q * m.q + m.p * m.p - 1.0) <= 4 * np.finfo(float).eps


def test_complete_integrals_vs_quadrature():
    for p in np.linspace(0.05, 0.95, 19):
        m = make_modulus(p)
        kq, eq = oracles.complete_integrals_quadrature(p)
        assert abs(m.K_complete - kq) / kq <= 1e-12
        assert abs(m.E_complete - eq) / eq <= 1e-12


def test_jacobi_origin(m05):
    for p in (0.05, 0.5, 0.95):
        t = jacobi(0.0, make_modulus(p))
        assert (t.sn, t.cn, t.dn, t.am) == (0.0, 1.0, 1.0, 0.0)


def test_jacobi_quarter_period(m05):
    t = jacobi(m05.K_complete, m05)
    assert t.sn == pytest.approx(1.0, abs=1e-12)
    assert t.cn == pytest.approx(0.0, abs=1e-12)
    assert t.dn == pytest.approx(m05.q, abs=1e-12)
    assert t.am == pytest.approx(math.pi / 2.0, abs=1e-12)


def test_jacobi_vs_am_ode_oracle(m05):
    ss = np.linspace(0.0, 10.0, 101)
    ref = oracles.am_ode(ss, 0.5)
    _, _, _, amv = jacobi_arrays(ss, m05)
    assert np.abs(amv - ref).max() <= 1e-9
    # the spec'd single-point case
    t = jacobi(2.0, m05)
    assert t.am == pytest.approx(oracles.am_ode(np.array([2.0]), 0.5)[0], abs=1e-9)


def test_identity_suite_random(rng):
    for _ in range(100):
        p = rng.uniform(0.05, 0.95)
        m = make_modulus(p)
        ss = rng.uniform(-10.0, 10.0, 100)
        sn, cn, dn, amv = jacobi_arrays(ss, m)
        assert np.abs(sn * sn + cn * cn - 1.0).max() <= 1e-12
        assert np.abs(dn * dn + p * p * sn * sn - 1.0).max() <= 1e-12
        assert np.abs(sn - np.sin(amv)).max() <= 1e-12
        assert np.abs(cn - np.cos(amv)).max() <= 1e-12
        assert dn.min() >= m.q - 1e-15 and dn.max() <= 1.0 + 1e-15


def test_derivative_identities(rng):
    h = 1e-5
    for _ in range(30):
        p = rng.uniform(0.05, 0.95)
        m = make_modulus(p)
        for s in rng.uniform(-8.0, 8.0, 20):
            tp = jacobi(s + h, m)
            tm = jacobi(s - h, m)
            t0 = jacobi(s, m)
            assert (tp.sn - tm.sn) / (2 * h) == pytest.approx(
                t0.cn * t0.dn, abs=1e-6)
            assert (tp.cn - tm.cn) / (2 * h) == pytest.approx(
                -t0.sn * t0.dn, abs=1e-6)
            assert (tp.dn - tm.dn) / (2 * h) == pytest.approx(
                -p * p * t0.sn * t0.cn, abs=1e-6)


def test_periodicity(rng):
    for _ in range(40):
        p = rng.uniform(0.05, 0.95)
        m = make_modulus(p)
        s = rng.uniform(-5.0, 5.0)
        t0 = jacobi(s, m)
        t4 = jacobi(s + 4.0 * m.K_complete, m)
        t2 = jacobi(s + 2.0 * m.K_complete, m)
        assert abs(t4.sn - t0.sn) <= 1e-10
        assert abs(t2.dn - t0.dn) <= 1e-10
        assert abs(t2.am - t0.am - math.pi) <= 1e-10


def test_am_unwound_monotone(m05):
    ss = np.linspace(-20.0, 20.0, 2001)
    _, _, _, amv = jacobi_arrays(ss, m05)
    assert np.all(np.diff(amv) > 0.0)
    # odd function
    assert abs(jacobi_am(3.7, m05) + jacobi_am(-3.7, m05)) <= 1e-13


def test_e_incomplete_basic(m05):
    assert elliptic_E_incomplete(0.0, m05) == 0.0
    assert elliptic_E_incomplete(math.pi / 2.0, m05) == pytest.approx(
        E_05, abs=1e-13)
    for x in (0.3, 1.1, 2.9, 7.0):
        assert elliptic_E_incomplete(-x, m05) == pytest.approx(
            -elliptic_E_incomplete(x, m05), abs=1e-13)


def test_e_incomplete_quasi_periodic(m05, rng):
    for phi in rng.uniform(-8.0, 8.0, 25):
        lhs = elliptic_E_incomplete(phi + math.pi, m05)
        rhs = elliptic_E_incomplete(phi, m05) + 2.0 * m05.E_complete
        assert lhs == pytest.approx(rhs, abs=1e-12)


def test_e_incomplete_vs_quadrature(rng):
    for _ in range(25):
        p = rng.uniform(0.05, 0.95)
        m = make_modulus(p)
        phi = rng.uniform(-6.0, 6.0)
        ref = oracles.e_incomplete_quadrature(phi, p)
        assert elliptic_E_incomplete(phi, m) == pytest.approx(
            ref, rel=1e-11, abs=1e-12)


def test_e_am_values(m05):
    assert elliptic_E_am(0.0, m05) == 0.0
    assert elliptic_E_am(2.0 * m05.K_complete, m05) == pytest.approx(
        2.0 * E_05, abs=1e-13)
    for s in (0.4, 1.7, 5.2):
        lhs = elliptic_E_am(s + 2.0 * m05.K_complete, m05)
        assert lhs == pytest.approx(
            elliptic_E_am(s, m05) + 2.0 * m05.E_complete, abs=1e-12)


def test_e_am_derivative_is_dn_squared(m05, rng):
    h = 1e-5
    for s in rng.uniform(-6.0, 6.0, 40):
        der = (elliptic_E_am(s + h, m05) - elliptic_E_am(s - h, m05)) / (2 * h)
        assert der == pytest.approx(jacobi(s, m05).dn ** 2, abs=1e-6)


def test_non_finite_rejected(m05):
    for bad in (math.inf, -math.inf, math.nan):
        with pytest.raises(DomainError):
            jacobi(bad, m05)
        with pytest.raises(DomainError):
            elliptic_E_incomplete(bad, m05)
