"""The one-parameter family of rotational linear Weingarten surfaces of
hyperbolic type (discriminant -1), built as parallel offsets of the
pseudospherical dn-profile.

The base curve is xi = (r, h) with r(s) = dn_p(s/p)/p and
h(s) = (E_p o am_p)(s/p)/p - s/p^2, carried by the globally smooth
parallel frame

    tau(s) = (cn_p, sn_p)(s/p),    nu(s) = (-sn_p, cn_p)(s/p),

so xi' = -sn_p(s/p) tau.  Offsetting along nu by t gives xi^t = xi + t nu
with (xi^t)' = -(sn_p + (t/p) dn_p)(s/p) tau.  The offset curve meets the
rotation axis iff |t| >= q/p and has a cusp iff |t| <= p/q; for p below
1/sqrt(2) the window p/q < |t| < q/p is nonempty and yields immersed,
axis-avoiding periodic profiles.
"""

import math
from dataclasses import dataclass

import numpy as np

from .elliptic import EllipticModulus, _kernel
from .errors import DomainError
from .export import svg_document
from .offsets import LWCoefficients, transform_coefficients
from .profiles import Family, ProfileCurve, RevolvedSurface

BASE_TRIPLE = LWCoefficients(1.0, 0.0, 1.0)


@dataclass(frozen=True)
class PlaneCurveFrame:
    """Base-curve point with its parallel frame (defined even at cusps)."""

    xi: np.ndarray
    tau: np.ndarray
    nu: np.ndarray
    speed: float


@dataclass(frozen=True)
class OffsetRange:
    """Offsets |t| on the given side of ``boundary``."""

    boundary: float
    outside: bool  # True: the set is |t| >= boundary, else |t| <= boundary

    def contains(self, t):
        return abs(t) >= self.boundary if self.outside else abs(t) <= self.boundary


def base_frame(m, s):
    """Base point xi(s) with parallel frame and speed |sn_p(s/p)|."""
    p = m.p
    sn, cn, dn, amv = _kernel.jacobi(s / p, p)
    eam = _kernel.e_incomplete(amv, p)
    xi = np.array([dn / p, eam / p - s / (p * p)])
    return PlaneCurveFrame(
        xi=xi,
        tau=np.array([cn, sn]),
        nu=np.array([-sn, cn]),
        speed=abs(sn))


def axis_crossing_range(m):
    """Offsets whose profile meets the axis: |t| >= q/p."""
    return OffsetRange(boundary=m.q / m.p, outside=True)


def singular_range(m):
    """Offsets whose profile has a cusp: |t| <= p/q."""
    return OffsetRange(boundary=m.p / m.q, outside=False)


def safe_interval(m):
    """Positive offset window (p/q, q/p) of immersed axis-avoiding
    members, or None when p >= 1/sqrt(2) (the window closes exactly at
    p^2 = 1 - p^2).  The mirrored window (-q/p, -p/q) works the same by
    sign symmetry."""
    lo, hi = m.p / m.q, m.q / m.p
    return (lo, hi) if lo < hi else None


def _member_body(s, sn, cn, dn, eam, p, t):
    # elliptic values at u = s/p
    r_base = dn / p
    h_base = eam / p - s / (p * p)
    r = r_base - t * sn
    h = h_base + t * cn
    sigma = sn + (t / p) * dn
    dr = -cn * sigma
    dh = -sn * sigma
    d2r = (sn * dn / p) * sigma - cn * cn * r
    d2h = -(cn * dn / p) * sigma - sn * cn * r
    return r, h, dr, dh, d2r, d2h


def member_profile(m, t):
    """Offset profile xi^t as a ProfileCurve (family OFFSET).

    Not a constant-curvature profile: K_target/C are None; it satisfies
    the transformed Weingarten triple of the pseudospherical base
    instead.  The profile is 4pK-periodic pointwise; over half that
    period it repeats as its own mirror image (glide symmetry), which is
    the surface-level translational symmetry at 2pK.
    """
    p = m.p

    def scalar(s):
        sn, cn, dn, amv = _kernel.jacobi(s / p, p)
        eam = _kernel.e_incomplete(amv, p)
        return _member_body(s, sn, cn, dn, eam, p, t)

    def array(s):
        sn, cn, dn, amv = _kernel.jacobi_many(s / p, p)
        eam = _kernel.e_incomplete_many(amv, p)
        return _member_body(s, sn, cn, dn, eam, p, t)

    period = 2.0 * p * m.K_complete
    return ProfileCurve(
        family=Family.OFFSET, K_target=None, C=None, modulus=m,
        s_period=2.0 * period, domain=(-math.inf, math.inf),
        speed_zeros=None, axis_zeros=None,
        _scalar=scalar, _array=array)


@dataclass(frozen=True)
class FamilyMember:
    """One offset member: profile, periods, status flags, LW bookkeeping.

    ``s_period`` / ``h_translation`` quantify the base-curve symmetry
    (r, h + Delta) after 2pK; the offset profile itself repeats pointwise
    after ``profile_period`` = 4pK with vertical shift
    ``profile_translation`` = 2 h_translation, and after s_period only up
    to the mirror s -> -s (glide symmetry of the revolved surface).
    """

    modulus: EllipticModulus
    t: float
    profile_t: ProfileCurve
    s_period: float
    h_translation: float
    profile_period: float
    profile_translation: float
    has_singularity: bool
    crosses_axis: bool
    lw_triple: LWCoefficients

    @property
    def status(self):
        if self.has_singularity and self.crosses_axis:
            return "singular+axis"
        if self.has_singularity:
            return "singular"
        if self.crosses_axis:
            return "axis"
        return "immersed"

    def surface(self):
        """Revolved member, oriented so that its curvatures satisfy
        ``lw_triple`` exactly.

        For t > 0 members the offsetting frame normal nu is opposite to
        the default revolve normal of the offset profile, so the theta
        orientation is reversed there to keep the transformed-triple
        bookkeeping literal (flipping orientation would otherwise map
        (a, b, c) to (a, -b, c))."""
        return RevolvedSurface(self.profile_t,
                               orientation=-1 if self.t > 0 else 1)

    def locate_singularity(self, tol=1e-12):
        """Parameter s in one period with (xi^t)'(s) = 0, by bisection on
        sigma = sn + (t/p) dn; None for immersed members."""
        if not self.has_singularity:
            return None
        m = self.modulus
        p = m.p

        def sigma(s):
            sn, _cn, dn, _amv = _kernel.jacobi(s / p, p)
            return sn + (self.t / p) * dn

        big_k = m.K_complete
        if self.t >= 0.0:
            lo, hi = 2.0 * p * big_k, 3.0 * p * big_k  # sigma >= 0 at lo
        else:
            lo, hi = 0.0, p * big_k
        flo = sigma(lo)
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            fm = sigma(mid)
            if abs(fm) <= tol:
                return mid
            if (fm > 0.0) == (flo > 0.0):
                lo, flo = mid, fm
            else:
                hi = mid
        return 0.5 * (lo + hi)


def family_member(m, t):
    """Build the offset member at distance t (any real t; statuses flag
    non-immersed choices rather than rejecting them)."""
    p = m.p
    h_trans = (2.0 / p) * (m.E_complete - m.K_complete)
    return FamilyMember(
        modulus=m,
        t=float(t),
        profile_t=member_profile(m, t),
        s_period=2.0 * p * m.K_complete,
        h_translation=h_trans,
        profile_period=4.0 * p * m.K_complete,
        profile_translation=2.0 * h_trans,
        has_singularity=singular_range(m).contains(t),
        crosses_axis=axis_crossing_range(m).contains(t),
        lw_triple=transform_coefficients(BASE_TRIPLE, float(t)))


def min_speed(member, n=10000):
    """min |(xi^t)'| over one profile period by dense scan plus local
    golden-section refinement (the independent immersion oracle)."""
    return _scan_min(member, n, quantity="speed")


def min_radius(member, n=10000):
    """min r^t over one profile period by dense scan plus refinement."""
    return _scan_min(member, n, quantity="radius")


def _scan_min(member, n, quantity):
    m = member.modulus
    period = member.profile_period
    ss = np.linspace(0.0, period, n, endpoint=False)
    r, _h, dr, dh, _d2r, _d2h = member.profile_t.eval_many(ss)
    vals = np.hypot(dr, dh) if quantity == "speed" else r
    i = int(np.argmin(vals))
    lo = ss[max(i - 1, 0)]
    hi = ss[min(i + 1, n - 1)]

    def f(s):
        rr, _hh, drr, dhh, _a, _b = member.profile_t.eval(s)
        return math.hypot(drr, dhh) if quantity == "speed" else rr

    return _golden_min(f, lo, hi, min(float(vals[i]), f(lo), f(hi)))


def _golden_min(f, lo, hi, best, iters=80):
    inv = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv * (b - a)
    d = a + inv * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv * (b - a)
            fd = f(d)
    return min(best, fc, fd)


def profile_svg(members, viewport=None, periods=1, samples_per_period=512):
    """Deterministic SVG of member profile curves (one polyline each)
    over an integer number of profile periods."""
    if not members:
        raise DomainError("no members to render")
    if periods < 1 or periods != int(periods):
        raise DomainError("periods must be a positive integer")
    polylines = []
    for mem in members:
        n = int(periods) * samples_per_period + 1
        ss = np.linspace(0.0, int(periods) * mem.profile_period, n)
        r, h, *_ = mem.profile_t.eval_many(ss)
        polylines.append(np.column_stack([r, h]))
    return svg_document(polylines, viewport=viewport)
