import math

import numpy as np
import pytest

from weingarten import DegenerateJet, DomainError, FormulaSingular, ImmersionError
from weingarten import make_modulus
from weingarten.offsets import LWCoefficients, lw_residual
from weingarten.profiles import (
    CgcParameters,
    Circle,
    Family,
    Line,
    ode_residuals,
    profile_catenoid,
    profile_cn,
    profile_dn,
    profile_from_ode,
    profile_pseudosphere,
    profile_sphere,
    revolution_K,
    revolve,
    tube,
)
from weingarten.surface import curvatures, fd_jet


def _all_cgc_profiles(m):
    return [
        profile_cn(1, m), profile_cn(-1, m),
        profile_sphere(), profile_pseudosphere(),
        profile_dn(1, m), profile_dn(-1, m),
    ]


def test_profile_cn_values(m06):
    prof = profile_cn(1, m06)
    r, h, dr, dh, _, _ = prof.eval(0.0)
    assert (r, h) == (0.6, 0.0)
    assert dr == 0.0
    assert prof.C == pytest.approx(0.36)
    assert prof.family is Family.CN_PLUS


def test_profile_cn_rejects_bad_sign(m06):
    with pytest.raises(DomainError):
        profile_cn(2, m06)


def test_dgl_residuals_on_grid(m06):
    for prof in _all_cgc_profiles(m06):
        lo, hi = -2.5, 2.5
        for s in np.linspace(lo, hi, 1000):
            res_r, res_h = ode_residuals(prof, s)
            assert abs(res_r) <= 1e-10 and abs(res_h) <= 1e-10, prof.family


def test_dgl_residuals_random_cn(rng):
    prof = profile_cn(1, make_modulus(0.3))
    for s in rng.uniform(-3.0, 3.0, 100):
        res_r, res_h = ode_residuals(prof, s)
        assert abs(res_r) <= 1e-10 and abs(res_h) <= 1e-10


def test_ode_residual_detects_fault(m06):
    prof = profile_cn(1, m06)
    r, h, dr, dh, d2r, d2h = prof.eval(0.7)
    lead = (1.0 - prof.C) + prof.K_target * r * r
    assert (dh + 0.01) - lead == pytest.approx(0.01, abs=1e-12)


def test_catenoid_has_no_cgc_data():
    with pytest.raises(DomainError):
        ode_residuals(profile_catenoid(), 0.5)


def test_sphere_profile_identities():
    prof = profile_sphere()
    for s in np.linspace(-3.0, 3.0, 101):
        r, h, dr, dh, _, _ = prof.eval(s)
        assert r * r + h * h == pytest.approx(1.0, abs=1e-14)
        assert dr * dr == pytest.approx(r * r * (1.0 - r * r), abs=1e-14)
        res = ode_residuals(prof, s)
        assert abs(res[0]) <= 1e-12 and abs(res[1]) <= 1e-12


def test_dn_profile_range(m05):
    prof = profile_dn(1, m05)
    r0, h0, *_ = prof.eval(0.0)
    assert (r0, h0) == (2.0, 0.0)
    assert prof.s_period == pytest.approx(2.0 * 0.5 * m05.K_complete)
    ss = np.linspace(0.0, prof.s_period, 20001)
    r = prof.eval_many(ss)[0]
    assert r.min() == pytest.approx(m05.q / m05.p, abs=1e-9)  # sqrt(3)
    assert r.max() <= 1.0 / m05.p + 1e-12
    assert r.min() > 0.0


def test_cn_hits_axis(m06):
    prof = profile_cn(1, m06)
    assert prof.eval(m06.K_complete)[0] == pytest.approx(0.0, abs=1e-15)
    sings = prof.singular_params_in(-10.0, 10.0)
    assert any(abs(s - m06.K_complete) < 1e-12 for s in sings)


def test_revolved_curvature_targets(m06):
    margins = 0.06
    for prof in _all_cgc_profiles(m06):
        surf = revolve(prof)
        lo, hi = -2.2, 2.2
        ss = np.linspace(lo, hi, 200)
        sing = prof.singular_params_in(lo - 1, hi + 1)
        if len(sing):
            ss = ss[np.all(np.abs(ss[:, None] - sing[None, :]) >= margins,
                           axis=1)]
        if prof.family in (Family.CN_PLUS, Family.CN_MINUS):
            k = prof.modulus.K_complete
            ss = ss[np.abs(ss) <= k - margins]
        for s in ss[::4]:
            cur = curvatures(surf.jet(s, 0.8))
            assert cur.K == pytest.approx(prof.K_target, abs=1e-8), prof.family


def test_catenoid_minimal():
    surf = revolve(profile_catenoid())
    for s in np.linspace(-2.5, 2.5, 1000):
        assert abs(curvatures(surf.jet(s, 1.3)).H) <= 1e-9
    assert curvatures(surf.jet(0.0, 0.0)).K == pytest.approx(-1.0, abs=1e-12)
    assert profile_catenoid().eval(0.0)[:2] == (1.0, 0.0)


def test_revolve_jets_match_fd(m06):
    cases = [
        (revolve(profile_sphere()), 0.7),
        (revolve(profile_pseudosphere()), 1.2),
        (revolve(profile_dn(-1, m06)), 0.35),
        (revolve(profile_cn(1, m06)), 0.4),
        (revolve(profile_catenoid()), -0.9),
    ]
    for surf, s in cases:
        jet = surf.jet(s, 2.1)
        fd = fd_jet(surf.point, s, 2.1, h=1e-4)
        for name in ("x", "x_u", "x_v", "x_uu", "x_uv", "x_vv"):
            assert np.abs(getattr(fd, name) - getattr(jet, name)).max() <= 1e-6


def test_revolve_periodic_in_theta(m05):
    surf = revolve(profile_dn(1, m05))
    a = surf.point(0.3, 1.1)
    b = surf.point(0.3, 1.1 + 2.0 * math.pi)
    assert np.abs(a - b).max() <= 1e-12


def test_revolve_degenerate_points(m06):
    ps = revolve(profile_pseudosphere())
    with pytest.raises(DegenerateJet):
        ps.jet(0.0, 1.0)  # cusp circle
    ps.jet(0.05, 1.0)  # nearby but immersed
    cn = revolve(profile_cn(1, m06))
    with pytest.raises(DegenerateJet):
        cn.jet(m06.K_complete, 0.0)  # axis point


def test_revolution_K_formula(m06):
    assert revolution_K(profile_pseudosphere(), 1.0) == pytest.approx(
        -1.0, abs=1e-8)
    assert revolution_K(profile_dn(1, make_modulus(0.7)), 0.5) == pytest.approx(
        1.0, abs=1e-8)
    with pytest.raises(FormulaSingular):
        revolution_K(profile_sphere(), 0.0)


def test_revolution_K_matches_jets(m06):
    for prof in _all_cgc_profiles(m06) + [profile_catenoid()]:
        for s in (0.31, 0.77, 1.23):
            try:
                k_formula = revolution_K(prof, s)
            except FormulaSingular:
                continue
            k_jet = curvatures(revolve(prof).jet(s, 0.4)).K
            assert k_formula == pytest.approx(k_jet, abs=1e-8), prof.family


@pytest.mark.parametrize("sign", [1, -1])
def test_profile_from_ode_matches_cn(sign, m06):
    prof = profile_cn(sign, m06)
    params = CgcParameters(K=float(sign), C=prof.C)
    period = 4.0 * m06.K_complete
    num = profile_from_ode(params, 0.6, 1, period, step=1e-4)
    ss = np.linspace(0.0, period, 400)
    rc, hc, *_ = prof.eval_many(ss)
    rn, hn, *_ = num.eval_many(ss)
    assert np.abs(rc - rn).max() <= 1e-7
    assert np.abs(hc - hn).max() <= 1e-7


def test_profile_from_ode_matches_sphere():
    num = profile_from_ode(CgcParameters(1.0, 1.0), 1.0, 1, 3.0, step=1e-4)
    prof = profile_sphere()
    ss = np.linspace(0.0, 3.0, 300)
    rc, hc, *_ = prof.eval_many(ss)
    rn, hn, *_ = num.eval_many(ss)
    assert np.abs(rc - rn).max() <= 1e-7
    assert np.abs(hc - hn).max() <= 1e-7


def test_profile_from_ode_rejects_bad_data():
    with pytest.raises(DomainError):
        profile_from_ode(CgcParameters(1.0, -0.5), 1.0, 1, 1.0)


def test_tube_cylinder():
    cyl = tube(Line(), 2.0)
    cur = curvatures(cyl.jet(0.7, 1.9))
    ks = sorted([cur.kappa1, cur.kappa2])
    assert ks[0] == pytest.approx(-0.5, abs=1e-12)
    assert ks[1] == pytest.approx(0.0, abs=1e-12)
    us = np.linspace(0.0, 3.0, 10)
    vs = np.linspace(0.0, 2.0 * math.pi, 10)
    assert lw_residual(cyl, LWCoefficients(2.0, 1.0, 0.5), us, vs) <= 1e-10


def test_tube_torus():
    tor = tube(Circle(3.0), 1.0)
    us = np.linspace(0.0, 6.0 * math.pi, 32)
    vs = np.linspace(0.0, 2.0 * math.pi, 32)
    assert lw_residual(tor, LWCoefficients(1.0, 1.0, 1.0), us, vs) <= 1e-9
    assert tor.lw_triple.discriminant() == pytest.approx(0.0, abs=1e-15)


def test_tube_immersion_error():
    with pytest.raises(ImmersionError):
        tube(Circle(3.0), 3.0)
    with pytest.raises(ImmersionError):
        tube(Circle(3.0), 3.5)
    tube(Circle(3.0), 2.9)  # still fine


def test_tube_rejects_bad_radius():
    with pytest.raises(DomainError):
        tube(Line(), -1.0)
