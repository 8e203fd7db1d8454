"""Residual/invariant suites behind the ``verify`` CLI command.

Each target runs a handful of checks and reports the worst residual per
check against its tolerance.  Tolerances can be overridden globally (the
CLI wires --tol / WEINGARTEN_TOL through ``tol_override``).
"""

import math

import numpy as np

from . import hyperbolic as hf
from . import oracles
from .elliptic import jacobi_arrays, make_modulus
from .errors import DomainError
from .offsets import (
    LWCoefficients,
    lw_residual,
    offset_surface,
    parallel_curvatures,
    principal_factorization_residual,
    transform_coefficients,
)
from .profiles import (
    CgcParameters,
    Circle,
    Line,
    ode_residuals,
    profile_catenoid,
    profile_cn,
    profile_dn,
    profile_from_ode,
    profile_pseudosphere,
    profile_sphere,
    revolve,
    tube,
)
from .surface import cayley_hamilton_residual, curvatures

_THETAS = np.linspace(0.0, 2.0 * math.pi, 7)


def _check(name, value, tol):
    return {"name": name, "max_residual": float(value),
            "tolerance": float(tol), "pass": bool(value <= tol)}


def _tol(default, override):
    return default if override is None else override


def _sample_windows(profile, lo, hi, n, margin=0.05):
    """n parameters in [lo, hi] at distance >= margin from singular ones."""
    ss = np.linspace(lo + margin, hi - margin, n)
    sing = profile.singular_params_in(lo - 1.0, hi + 1.0)
    if len(sing):
        keep = np.all(np.abs(ss[:, None] - sing[None, :]) >= margin, axis=1)
        ss = ss[keep]
    return ss


def _curvature_target(profile, target_k, lo, hi, n=60):
    surf = revolve(profile)
    ss = _sample_windows(profile, lo, hi, n)
    worst = 0.0
    for s in ss:
        for th in _THETAS[:4]:
            worst = max(worst, abs(curvatures(surf.jet(s, th)).K - target_k))
    return worst


def _dgl_worst(profile, lo, hi, n=200):
    ss = _sample_windows(profile, lo, hi, n, margin=0.0)
    worst = 0.0
    for s in ss:
        a, b = ode_residuals(profile, s)
        worst = max(worst, abs(a), abs(b))
    return worst


def verify_specfun(p=0.5, t=None, tol_override=None):
    m = make_modulus(p)
    rng = np.random.default_rng(2024)
    checks = []
    worst = 0.0
    for pp in rng.uniform(0.05, 0.95, 40):
        ss = rng.uniform(-10.0, 10.0, 50)
        sn, cn, dn, _ = jacobi_arrays(ss, make_modulus(pp))
        worst = max(worst,
                    np.abs(sn * sn + cn * cn - 1.0).max(),
                    np.abs(dn * dn + pp * pp * sn * sn - 1.0).max())
    checks.append(_check("pythagorean_identities", worst, _tol(1e-12, tol_override)))
    kq, eq = oracles.complete_integrals_quadrature(p)
    rel = max(abs(m.K_complete - kq) / kq, abs(m.E_complete - eq) / eq)
    checks.append(_check("complete_integrals_vs_quadrature", rel,
                         _tol(1e-12, tol_override)))
    ss = np.linspace(0.0, 10.0, 41)
    am_ref = oracles.am_ode(ss, p)
    _, _, _, am_val = jacobi_arrays(ss, m)
    checks.append(_check("amplitude_vs_ode_oracle",
                         np.abs(am_val - am_ref).max(),
                         _tol(1e-9, tol_override)))
    return checks


def _profile_for(name, p):
    m = make_modulus(p) if name in ("cn", "dn") else None
    if name == "sphere":
        return [(profile_sphere(), 1.0, -2.5, 2.5)]
    if name == "pseudosphere":
        return [(profile_pseudosphere(), -1.0, 0.1, 3.0)]
    if name == "catenoid":
        return [(profile_catenoid(), None, -2.0, 2.0)]
    if name == "cn":
        k = m.K_complete
        return [(profile_cn(1, m), 1.0, -k, k), (profile_cn(-1, m), -1.0, -k, k)]
    if name == "dn":
        per = 2.0 * p * m.K_complete
        return [(profile_dn(1, m), 1.0, 0.0, per), (profile_dn(-1, m), -1.0, 0.0, per)]
    raise DomainError(f"unknown profile target {name!r}")


def verify_profile(name, p=0.6, tol_override=None):
    checks = []
    for prof, target, lo, hi in _profile_for(name, p):
        label = prof.family.value
        if target is None:  # catenoid: minimality instead of K target
            surf = revolve(prof)
            worst = max(abs(curvatures(surf.jet(s, th)).H)
                        for s in np.linspace(lo, hi, 60) for th in _THETAS[:4])
            checks.append(_check("catenoid_mean_curvature", worst,
                                 _tol(1e-9, tol_override)))
            continue
        checks.append(_check(f"{label}_gauss_target",
                             _curvature_target(prof, target, lo, hi),
                             _tol(1e-8, tol_override)))
        checks.append(_check(f"{label}_profile_system_residual",
                             _dgl_worst(prof, lo, hi),
                             _tol(1e-10, tol_override)))
    return checks


def verify_tube(p=None, t=None, tol_override=None):
    checks = []
    cyl = tube(Line(), 2.0)
    us, vs = np.linspace(0.0, 3.0, 6), np.linspace(0.0, 2.0 * math.pi, 9)
    checks.append(_check("cylinder_triple_residual",
                         lw_residual(cyl, LWCoefficients(2.0, 1.0, 0.5), us, vs),
                         _tol(1e-9, tol_override)))
    tor = tube(Circle(3.0), 1.0)
    us = np.linspace(0.0, 6.0 * math.pi, 12)
    checks.append(_check("torus_triple_residual",
                         lw_residual(tor, LWCoefficients(1.0, 1.0, 1.0), us, vs),
                         _tol(1e-9, tol_override)))
    checks.append(_check("torus_principal_factorization",
                         principal_factorization_residual(
                             tor, LWCoefficients(1.0, 1.0, 1.0), us, vs),
                         _tol(1e-8, tol_override)))
    return checks


def verify_lemma1(p=0.6, t=None, tol_override=None):
    checks = []
    cat = revolve(profile_catenoid())
    base = LWCoefficients(0.0, 1.0, 0.0)
    worst = 0.0
    for off in (-0.6, -0.3, 0.2, 0.5):
        osurf = offset_surface(cat, off)
        lwt = transform_coefficients(base, off)
        for s in np.linspace(-1.5, 1.5, 7):
            cur = curvatures(osurf.jet(s, 0.8))
            worst = max(worst, abs(lwt.a * cur.K + 2.0 * lwt.b * cur.H + lwt.c))
    checks.append(_check("catenoid_offset_consistency", worst,
                         _tol(1e-6, tol_override)))
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(10000):
        a, b, c = rng.uniform(-1.0, 1.0, 3)
        if a == 0.0 and b == 0.0 and c == 0.0:
            continue
        tt = rng.uniform(-2.0, 2.0)
        lw = LWCoefficients(a, b, c)
        lwt = transform_coefficients(lw, tt)
        scale = (b * b + abs(a * c) + lwt.b * lwt.b + abs(lwt.a * lwt.c)
                 + (abs(a) + 2.0 * abs(tt * b) + tt * tt * abs(c)) * abs(c))
        err = abs(lwt.discriminant() - lw.discriminant())
        worst = max(worst, err / (np.finfo(float).eps * max(scale, 1e-300)))
    checks.append(_check("discriminant_invariance_ulps", worst,
                         _tol(4.0, tol_override)))
    return checks


def verify_bonnet(p=0.6, t=None, tol_override=None):
    m = make_modulus(p)
    surf = revolve(profile_dn(1, m))
    lw = LWCoefficients(1.0, 0.0, -1.0)
    root = math.sqrt(lw.discriminant())
    checks = []
    period = 2.0 * p * m.K_complete
    prof = surf.profile
    ss = _sample_windows(prof, 0.0, period, 60)
    for t_cmc in ((-lw.b - root) / lw.c, (-lw.b + root) / lw.c):
        lwt = transform_coefficients(lw, t_cmc)
        h_expected = -lwt.c / (2.0 * lwt.b)
        worst = 0.0
        for s in ss:
            cur = curvatures(surf.jet(s, 1.0))
            _, ht = parallel_curvatures(cur.K, cur.H, t_cmc)
            worst = max(worst, abs(abs(ht) - abs(h_expected)))
        checks.append(_check(f"cmc_offset_t_{t_cmc:+g}_mean_curvature", worst,
                             _tol(1e-7, tol_override)))
    return checks


def verify_hyperbolic(p=0.5, t=1.0, tol_override=None):
    m = make_modulus(p)
    mem = hf.family_member(m, t)
    checks = []
    if mem.status == "immersed":
        surf = mem.surface()
        worst = 0.0
        for s in np.linspace(0.0, mem.profile_period, 40):
            for th in _THETAS[:3]:
                cur = curvatures(surf.jet(s, th))
                lw = mem.lw_triple
                worst = max(worst, abs(lw.a * cur.K + 2.0 * lw.b * cur.H + lw.c))
        checks.append(_check("member_triple_residual", worst,
                             _tol(1e-7, tol_override)))
        checks.append(_check("member_discriminant_plus_one",
                             abs(mem.lw_triple.discriminant() + 1.0),
                             _tol(1e-12, tol_override)))
    else:
        s_root = mem.locate_singularity()
        if s_root is not None:
            _, _, dr, dh, _, _ = mem.profile_t.eval(s_root)
            checks.append(_check("located_singularity_speed",
                                 math.hypot(dr, dh),
                                 _tol(1e-10, tol_override)))
    shift = (hf.base_frame(m, mem.s_period).xi[1]
             - hf.base_frame(m, 0.0).xi[1])
    checks.append(_check("translation_vs_numeric",
                         abs(shift - mem.h_translation),
                         _tol(1e-9, tol_override)))
    return checks


def verify_cayley(p=0.6, t=None, tol_override=None):
    m = make_modulus(p)
    worst = 0.0
    surfaces = [
        (revolve(profile_sphere()), np.linspace(-1.5, 1.5, 10)),
        (revolve(profile_dn(-1, m)), np.linspace(0.1, 1.0, 10)),
        (tube(Circle(3.0), 1.0), np.linspace(0.0, 9.0, 10)),
        (revolve(profile_catenoid()), np.linspace(-1.0, 1.0, 10)),
    ]
    for surf, ss in surfaces:
        for s in ss:
            worst = max(worst, cayley_hamilton_residual(surf.jet(s, 0.7)))
    return [_check("cayley_hamilton_residual", worst, _tol(1e-9, tol_override))]


def verify_corrupted_fixture(p=0.6, t=None, tol_override=None):
    """Deliberately corrupted profile: the harness must flag it."""
    m = make_modulus(p)
    good = profile_cn(1, m)

    def broken_scalar(s):
        r, h, dr, dh, d2r, d2h = good.eval(s)
        return r, h, dr, dh + 0.01, d2r, d2h

    worst = 0.0
    for s in np.linspace(-1.0, 1.0, 50):
        r, h, dr, dh, d2r, d2h = broken_scalar(s)
        lead = (1.0 - good.C) + good.K_target * r * r
        worst = max(worst, abs(dh - lead))
    return [_check("corrupted_profile_detected", worst,
                   _tol(1e-10, tol_override))]


TARGETS = {
    "specfun": lambda p, t, tol: verify_specfun(p or 0.5, t, tol),
    "sphere": lambda p, t, tol: verify_profile("sphere", p or 0.6, tol),
    "pseudosphere": lambda p, t, tol: verify_profile("pseudosphere", p or 0.6, tol),
    "cn": lambda p, t, tol: verify_profile("cn", p or 0.6, tol),
    "dn": lambda p, t, tol: verify_profile("dn", p or 0.6, tol),
    "catenoid": lambda p, t, tol: verify_profile("catenoid", p or 0.6, tol),
    "tube": lambda p, t, tol: verify_tube(p, t, tol),
    "lemma1": lambda p, t, tol: verify_lemma1(p or 0.6, t, tol),
    "bonnet": lambda p, t, tol: verify_bonnet(p or 0.6, t, tol),
    "hyperbolic": lambda p, t, tol: verify_hyperbolic(p or 0.5, 1.0 if t is None else t, tol),
    "cayley": lambda p, t, tol: verify_cayley(p or 0.6, t, tol),
    "corrupted-fixture": lambda p, t, tol: verify_corrupted_fixture(p or 0.6, t, tol),
}


def run_target(target, p=None, t=None, tol_override=None):
    """Run one target; returns the JSON-ready report dict."""
    if target not in TARGETS:
        raise DomainError(
            f"unknown verify target {target!r}; choose from "
            f"{', '.join(sorted(TARGETS))}")
    checks = TARGETS[target](p, t, tol_override)
    return {
        "target": target,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }
