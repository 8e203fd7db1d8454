"""Profile curves of constant-Gauss-curvature surfaces of revolution.

The closed forms come in three families (cn-type through the axis,
sphere/pseudosphere, dn-type away from the axis), each for K = +1 and
K = -1, plus the catenoid as the minimal surface of revolution.  Every
curve s -> (r(s), h(s)) carries exact first and second derivatives and
satisfies the first-order system

    r'^2 = ((1-C) + K r^2) (C - K r^2)        (radius equation)
    h'   = (1-C) + K r^2                      (height equation)

for its recorded constant C.  ``profile_from_ode`` integrates the same
system numerically (second-order form, no square-root sign ambiguity)
and serves as the independent oracle for all closed forms.

Representatives are fixed with r maximal at s = 0 and h(0) = 0.  For the
K = -1 rows the sign of h is chosen so that the height equation holds
with a plus sign (the mirrored curve is the same surface).
"""

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .elliptic import EllipticModulus, _kernel, make_modulus
from .errors import DegenerateJet, DomainError, FormulaSingular, ImmersionError
from .surface import EPS_IMMERSED, SurfaceJet


class Family(enum.Enum):
    CN_PLUS = "cn+1"
    CN_MINUS = "cn-1"
    SPHERE = "sphere"
    PSEUDOSPHERE = "pseudosphere"
    DN_PLUS = "dn+1"
    DN_MINUS = "dn-1"
    CATENOID = "catenoid"
    NUMERIC_ODE = "ode"
    OFFSET = "offset"


@dataclass(frozen=True)
class CgcParameters:
    """Target curvature K in {+1, -1} and first-integral constant C."""

    K: float
    C: float


@dataclass(frozen=True)
class ProfileCurve:
    """Evaluatable plane curve with metadata.

    ``speed_zeros`` / ``axis_zeros`` are lattices (offset, period) of
    parameters where the profile speed vanishes (cusps) or r = 0 (axis
    points); period None marks an isolated point.  ``domain`` is the
    declared validity interval; the evaluation functions themselves are
    defined on all of R.
    """

    family: Family
    K_target: float | None
    C: float | None
    modulus: EllipticModulus | None
    s_period: float | None
    domain: tuple[float, float]
    speed_zeros: tuple[float, float | None] | None = None
    axis_zeros: tuple[float, float | None] | None = None
    _scalar: object = field(default=None, repr=False)
    _array: object = field(default=None, repr=False)

    def eval(self, s):
        """(r, h, r', h', r'', h'') at parameter s."""
        return self._scalar(float(s))

    def eval_many(self, s):
        """Vectorized evaluation; returns six 1-d arrays."""
        return self._array(np.asarray(s, dtype=np.float64))

    def singular_params_in(self, lo, hi):
        """Sorted parameters in [lo, hi] where speed = 0 or r = 0."""
        pts = []
        for lat in (self.speed_zeros, self.axis_zeros):
            pts.extend(_lattice_points(lat, lo, hi))
        return np.array(sorted(set(pts)))


def _lattice_points(lat, lo, hi):
    if lat is None:
        return []
    offset, period = lat
    if period is None:
        return [offset] if lo <= offset <= hi else []
    k0 = math.ceil((lo - offset) / period)
    k1 = math.floor((hi - offset) / period)
    return [offset + k * period for k in range(k0, k1 + 1)]


# -- closed-form families -------------------------------------------------

def _cn_body(s, sn, cn, dn, eam, p, ksign):
    r = p * cn
    dr = -p * sn * dn
    d2r = -p * cn * (dn * dn - (p * sn) * (p * sn))
    if ksign > 0:
        h = eam
        dh = dn * dn
        d2h = -2.0 * p * p * sn * cn * dn
    else:
        h = s - eam
        dh = (p * sn) * (p * sn)
        d2h = 2.0 * p * p * sn * cn * dn
    return r, h, dr, dh, d2r, d2h


def _dn_body(s, sn, cn, dn, eam, p, ksign):
    # all elliptic values taken at u = s / p
    q2 = (1.0 - p) * (1.0 + p)
    r = dn / p
    dr = -sn * cn
    d2r = -(dn / p) * (cn * cn - sn * sn)
    if ksign > 0:
        h = eam / p - (q2 / (p * p)) * s
        dh = cn * cn
        d2h = -(2.0 / p) * sn * cn * dn
    else:
        h = s / (p * p) - eam / p
        dh = sn * sn
        d2h = (2.0 / p) * sn * cn * dn
    return r, h, dr, dh, d2r, d2h


def profile_cn(sign, m):
    """cn-type profile r = p cn_p(s): K = sign, C = p^2 (sign +1) or
    C = 1 - p^2 (sign -1).  Hits the axis at s = +-K_complete."""
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    p = m.p

    def scalar(s):
        sn, cn, dn, amv = _kernel.jacobi(s, p)
        eam = _kernel.e_incomplete(amv, p)
        return _cn_body(s, sn, cn, dn, eam, p, sign)

    def array(s):
        sn, cn, dn, amv = _kernel.jacobi_many(s, p)
        eam = _kernel.e_incomplete_many(amv, p)
        return _cn_body(s, sn, cn, dn, eam, p, sign)

    big_k = m.K_complete
    return ProfileCurve(
        family=Family.CN_PLUS if sign > 0 else Family.CN_MINUS,
        K_target=float(sign),
        C=p * p if sign > 0 else 1.0 - p * p,
        modulus=m,
        s_period=4.0 * big_k,
        domain=(-big_k, big_k),
        speed_zeros=None if sign > 0 else (0.0, 2.0 * big_k),
        axis_zeros=(big_k, 2.0 * big_k),
        _scalar=scalar,
        _array=array,
    )


def profile_dn(sign, m):
    """dn-type profile r = dn_p(s/p)/p in [q/p, 1/p]: never meets the
    axis; K = sign, C = 1/p^2 (sign +1) or 1 - 1/p^2 (sign -1)."""
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    p = m.p

    def scalar(s):
        sn, cn, dn, amv = _kernel.jacobi(s / p, p)
        eam = _kernel.e_incomplete(amv, p)
        return _dn_body(s, sn, cn, dn, eam, p, sign)

    def array(s):
        sn, cn, dn, amv = _kernel.jacobi_many(s / p, p)
        eam = _kernel.e_incomplete_many(amv, p)
        return _dn_body(s, sn, cn, dn, eam, p, sign)

    period = 2.0 * p * m.K_complete
    return ProfileCurve(
        family=Family.DN_PLUS if sign > 0 else Family.DN_MINUS,
        K_target=float(sign),
        C=1.0 / (p * p) if sign > 0 else 1.0 - 1.0 / (p * p),
        modulus=m,
        s_period=period,
        domain=(-math.inf, math.inf),
        speed_zeros=(period / 2.0, period) if sign > 0 else (0.0, period),
        axis_zeros=None,
        _scalar=scalar,
        _array=array,
    )


def _sech_body(s, ksign):
    sech = 1.0 / np.cosh(s)
    tanh = np.tanh(s)
    r = sech
    dr = -sech * tanh
    d2r = sech * (tanh * tanh - sech * sech)
    if ksign > 0:
        h = tanh
        dh = sech * sech
        d2h = -2.0 * sech * sech * tanh
    else:
        h = s - tanh
        dh = tanh * tanh
        d2h = 2.0 * tanh * sech * sech
    return r, h, dr, dh, d2r, d2h


def profile_sphere():
    """Unit sphere profile (r, h) = (sech s, tanh s): K = +1, C = 1."""
    body = lambda s: _sech_body(s, +1)
    return ProfileCurve(
        family=Family.SPHERE, K_target=1.0, C=1.0, modulus=None,
        s_period=None, domain=(-math.inf, math.inf),
        speed_zeros=None, axis_zeros=None,
        _scalar=lambda s: tuple(float(v) for v in body(s)), _array=body)


def profile_pseudosphere():
    """Tractrix profile (r, h) = (sech s, s - tanh s): K = -1, C = 0.
    The cusp circle of the revolved surface sits at s = 0."""
    body = lambda s: _sech_body(s, -1)
    return ProfileCurve(
        family=Family.PSEUDOSPHERE, K_target=-1.0, C=0.0, modulus=None,
        s_period=None, domain=(-math.inf, math.inf),
        speed_zeros=(0.0, None), axis_zeros=None,
        _scalar=lambda s: tuple(float(v) for v in body(s)), _array=body)


def profile_catenoid():
    """Catenoid profile (r, h) = (cosh s, s): the revolved surface is the
    only minimal surface of revolution.  K_target = 0 is a sentinel; the
    curve is not a constant-K profile and carries no C."""
    def body(s):
        ch, sh = np.cosh(s), np.sinh(s)
        one = np.ones_like(ch)
        return ch, s + 0.0 * ch, sh, one, ch, 0.0 * ch
    return ProfileCurve(
        family=Family.CATENOID, K_target=0.0, C=None, modulus=None,
        s_period=None, domain=(-math.inf, math.inf),
        speed_zeros=None, axis_zeros=None,
        _scalar=lambda s: tuple(float(v) for v in body(s)), _array=body)


# -- residuals and the revolution formula ---------------------------------

def ode_residuals(profile, s):
    """Residuals of the first-order profile system at parameter s.

    res_r = r'^2 - ((1-C) + K r^2)(C - K r^2)
    res_h = h'   - ((1-C) + K r^2)
    """
    if profile.C is None or profile.K_target in (None, 0.0):
        raise DomainError(
            f"profile of family {profile.family.value} has no (K, C) data")
    big_k, c = profile.K_target, profile.C
    r, _h, dr, dh, _d2r, _d2h = profile.eval(s)
    lead = (1.0 - c) + big_k * r * r
    return dr * dr - lead * (c - big_k * r * r), dh - lead


def revolution_K(profile, s, dr_tol=1e-12):
    """Gauss curvature of the revolved profile by the profile-only
    formula K = -(2 r r')^-1 d/ds [ r'^2 / (r'^2 + h'^2) ].

    Requires r > 0 and r' != 0; raises FormulaSingular at profile
    turning points (use the jet route there instead).
    """
    r, _h, dr, dh, d2r, d2h = profile.eval(s)
    if r <= 0.0:
        raise FormulaSingular(f"r(s) = {r} <= 0 at s = {s}")
    if abs(dr) <= dr_tol:
        raise FormulaSingular(f"r'(s) = {dr} vanishes at s = {s}")
    w = dr * dr + dh * dh
    g_prime = 2.0 * dr * dh * (d2r * dh - dr * d2h) / (w * w)
    return -g_prime / (2.0 * r * dr)


# -- revolution ------------------------------------------------------------

class RevolvedSurface:
    """Surface of revolution x(s, theta) = (r cos, r sin, h) with analytic
    jets from the profile's closed-form derivatives.

    ``orientation`` = -1 revolves with theta reversed: the same point
    set, but the unit normal (and hence the sign of H) flips.
    """

    def __init__(self, profile, orientation=1):
        if orientation not in (1, -1):
            raise DomainError(f"orientation must be +-1, got {orientation}")
        self.profile = profile
        self.orientation = orientation

    def point(self, s, theta):
        r, h, *_ = self.profile.eval(s)
        th = self.orientation * theta
        return np.array([r * math.cos(th), r * math.sin(th), h])

    def jet(self, s, theta, eps=EPS_IMMERSED):
        r, h, dr, dh, d2r, d2h = self.profile.eval(s)
        if r <= 0.0:
            raise DegenerateJet(f"axis point: r({s}) = {r} <= 0")
        o = self.orientation
        th = o * theta
        c, si = math.cos(th), math.sin(th)
        w = dr * dr + dh * dh
        if r * math.sqrt(w) <= eps:
            raise DegenerateJet(
                f"profile singularity at s = {s}: speed^2 = {w:.3e}")
        return SurfaceJet(
            x=np.array([r * c, r * si, h]),
            x_u=np.array([dr * c, dr * si, dh]),
            x_v=np.array([-o * r * si, o * r * c, 0.0]),
            x_uu=np.array([d2r * c, d2r * si, d2h]),
            x_uv=np.array([-o * dr * si, o * dr * c, 0.0]),
            x_vv=np.array([-r * c, -r * si, 0.0]),
            u=s, v=theta)


def revolve(profile, orientation=1):
    """Revolve a profile about the h-axis; see :class:`RevolvedSurface`."""
    return RevolvedSurface(profile, orientation)


# -- numeric oracle profile -------------------------------------------------

def profile_from_ode(params, r0, sign_r0p, s_max, step=1e-4):
    """Integrate the profile system numerically from r(0) = r0.

    Uses the second-order form r'' = K r (2C - 1 - 2 K r^2) obtained by
    differentiating the radius equation, so turning points (r' = 0) need
    no square-root sign bookkeeping.  Fixed-step RK4; dense output with
    cubic Hermite interpolation between nodes.
    """
    big_k, c = float(params.K), float(params.C)
    if sign_r0p not in (1, -1):
        raise DomainError(f"sign_r0p must be +1 or -1, got {sign_r0p}")
    if s_max <= 0.0 or step <= 0.0:
        raise DomainError("s_max and step must be positive")
    sandwich = c - big_k * r0 * r0
    lead = (1.0 - c) + big_k * r0 * r0
    if not (-1e-12 <= sandwich <= 1.0 + 1e-12) or lead < -1e-12:
        raise DomainError(
            f"initial data violates 0 <= C - K r0^2 <= 1 and "
            f"(1-C) + K r0^2 >= 0: got {sandwich}, {lead}")

    n = max(1, math.ceil(s_max / step))
    hs = s_max / n
    s_nodes = np.linspace(0.0, s_max, n + 1)
    r_nodes = np.empty(n + 1)
    rp_nodes = np.empty(n + 1)
    h_nodes = np.empty(n + 1)
    r = float(r0)
    rp = sign_r0p * math.sqrt(max(sandwich * lead, 0.0))
    hh = 0.0
    r_nodes[0], rp_nodes[0], h_nodes[0] = r, rp, hh
    k2c = 2.0 * c - 1.0

    def acc(rr):
        return big_k * rr * (k2c - 2.0 * big_k * rr * rr)

    def hp(rr):
        return (1.0 - c) + big_k * rr * rr

    for i in range(1, n + 1):
        a1, b1, c1 = rp, acc(r), hp(r)
        r2 = r + 0.5 * hs * a1
        a2, b2, c2 = rp + 0.5 * hs * b1, acc(r2), hp(r2)
        r3 = r + 0.5 * hs * a2
        a3, b3, c3 = rp + 0.5 * hs * b2, acc(r3), hp(r3)
        r4 = r + hs * a3
        a4, b4, c4 = rp + hs * b3, acc(r4), hp(r4)
        r += hs * (a1 + 2.0 * a2 + 2.0 * a3 + a4) / 6.0
        rp += hs * (b1 + 2.0 * b2 + 2.0 * b3 + b4) / 6.0
        hh += hs * (c1 + 2.0 * c2 + 2.0 * c3 + c4) / 6.0
        r_nodes[i], rp_nodes[i], h_nodes[i] = r, rp, hh

    def array(s):
        s = np.atleast_1d(np.asarray(s, dtype=np.float64))
        if np.any(s < -1e-12) or np.any(s > s_max + 1e-12):
            raise DomainError("evaluation outside the integrated range")
        idx = np.clip((s / hs).astype(int), 0, n - 1)
        t = (s - s_nodes[idx]) / hs
        r0_, r1_ = r_nodes[idx], r_nodes[idx + 1]
        d0, d1 = rp_nodes[idx] * hs, rp_nodes[idx + 1] * hs
        t2, t3 = t * t, t * t * t
        h00 = 2.0 * t3 - 3.0 * t2 + 1.0
        h10 = t3 - 2.0 * t2 + t
        h01 = -2.0 * t3 + 3.0 * t2
        h11 = t3 - t2
        rr = h00 * r0_ + h10 * d0 + h01 * r1_ + h11 * d1
        dh00 = (6.0 * t2 - 6.0 * t) / hs
        dh10 = (3.0 * t2 - 4.0 * t + 1.0) / hs
        dh01 = (-6.0 * t2 + 6.0 * t) / hs
        dh11 = (3.0 * t2 - 2.0 * t) / hs
        drr = dh00 * r0_ + dh10 * d0 + dh01 * r1_ + dh11 * d1
        # height by its own Hermite data (h' is a function of r at nodes)
        hh0, hh1 = h_nodes[idx], h_nodes[idx + 1]
        e0 = hp(r_nodes[idx]) * hs
        e1 = hp(r_nodes[idx + 1]) * hs
        hhv = h00 * hh0 + h10 * e0 + h01 * hh1 + h11 * e1
        return (rr, hhv, drr, hp(rr), acc(rr), 2.0 * big_k * rr * drr)

    def scalar(s):
        return tuple(float(v[0]) for v in array(np.array([s])))

    return ProfileCurve(
        family=Family.NUMERIC_ODE, K_target=big_k, C=c, modulus=None,
        s_period=None, domain=(0.0, s_max),
        speed_zeros=None, axis_zeros=None,
        _scalar=scalar, _array=array)


# -- tubes ------------------------------------------------------------------

class Line:
    """Arc-length straight line with a constant adapted frame."""

    closed = None

    def __init__(self, point=(0.0, 0.0, 0.0), direction=(0.0, 0.0, 1.0)):
        d = np.asarray(direction, dtype=float)
        self.p0 = np.asarray(point, dtype=float)
        self.t = d / np.linalg.norm(d)
        # any orthonormal completion will do; deterministic choice
        seed = np.array([1.0, 0.0, 0.0])
        if abs(self.t @ seed) > 0.9:
            seed = np.array([0.0, 1.0, 0.0])
        n = seed - (seed @ self.t) * self.t
        self.n = n / np.linalg.norm(n)
        self.b = np.cross(self.t, self.n)

    def max_curvature(self):
        return 0.0

    def frame_jet(self, u):
        z = np.zeros(3)
        return (self.p0 + u * self.t, self.t, z,
                self.n, z, z, self.b, z, z)


class Circle:
    """Arc-length circle of radius R in the xy-plane, Frenet frame."""

    def __init__(self, radius):
        if radius <= 0.0:
            raise DomainError(f"circle radius must be positive, got {radius}")
        self.radius = float(radius)
        self.closed = 2.0 * math.pi * self.radius

    def max_curvature(self):
        return 1.0 / self.radius

    def frame_jet(self, u):
        big_r = self.radius
        a = u / big_r
        ca, sa = math.cos(a), math.sin(a)
        gamma = np.array([big_r * ca, big_r * sa, 0.0])
        t = np.array([-sa, ca, 0.0])
        n = np.array([-ca, -sa, 0.0])
        dgam2 = n / big_r          # gamma'' = kappa N
        dn = -t / big_r
        d2n = -n / (big_r * big_r)
        b = np.array([0.0, 0.0, 1.0])
        z = np.zeros(3)
        return (gamma, t, dgam2, n, dn, d2n, b, z, z)


class TubeSurface:
    """Tube of radius rho about a framed center curve.

    x(u, v) = gamma(u) + rho (N(u) cos v - B(u) sin v); with the package
    normal convention the unit normal is the outward radial direction and
    the circular principal curvature is the constant -1/rho.  Satisfies
    the coefficient triple (rho, 1, 1/rho), whose discriminant vanishes.
    """

    def __init__(self, curve, rho):
        if rho <= 0.0:
            raise DomainError(f"tube radius must be positive, got {rho}")
        if rho * curve.max_curvature() >= 1.0:
            raise ImmersionError(
                f"tube radius {rho} reaches the focal radius "
                f"{1.0 / curve.max_curvature()} of the center curve")
        self.curve = curve
        self.rho = float(rho)

    @property
    def lw_triple(self):
        from .offsets import LWCoefficients
        return LWCoefficients(self.rho, 1.0, 1.0 / self.rho)

    def point(self, u, v):
        gamma, _t, _dg2, n, _dn, _d2n, b, _db, _d2b = self.curve.frame_jet(u)
        return gamma + self.rho * (n * math.cos(v) - b * math.sin(v))

    def jet(self, u, v, eps=EPS_IMMERSED):
        gamma, t, dg2, n, dn, d2n, b, db, d2b = self.curve.frame_jet(u)
        cv, sv = math.cos(v), math.sin(v)
        rho = self.rho
        e_r = n * cv - b * sv
        de_r = -n * sv - b * cv
        jet = SurfaceJet(
            x=gamma + rho * e_r,
            x_u=t + rho * (dn * cv - db * sv),
            x_v=rho * de_r,
            x_uu=dg2 + rho * (d2n * cv - d2b * sv),
            x_uv=rho * (-dn * sv - db * cv),
            x_vv=-rho * e_r,
            u=u, v=v)
        if np.linalg.norm(np.cross(jet.x_u, jet.x_v)) <= eps:
            raise DegenerateJet(f"tube degenerate at (u, v) = ({u}, {v})")
        return jet


def tube(center_curve, rho):
    """Tube surface of radius rho about a framed space curve."""
    return TubeSurface(center_curve, rho)
