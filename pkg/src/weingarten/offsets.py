"""Parallel (offset) surfaces and linear Weingarten coefficient algebra.

A surface with a K + 2b H + c = 0 stays linear Weingarten under the
normal offset x -> x + t n, with coefficients transformed to
(a + 2tb + t^2 c, b + tc, c); the discriminant b^2 - ac is invariant.
Its sign classifies the parallel family: zero is the tubular case (one
principal curvature constant), otherwise the family contains a minimal
representative (c = 0) or a constant-Gauss-curvature representative
(c != 0), the latter flanked by two constant-mean-curvature offsets
when the discriminant is positive.

Signs of (a, b, c) are relative to the package normal convention;
flipping the orientation maps (a, b, c) -> (a, -b, c), which preserves
the discriminant.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import FocalPoint, InvalidTriple
from .surface import SurfaceJet, curvatures, fd_jet, normal, shape_operator

TAU_FOCAL = 1e-9


@dataclass(frozen=True)
class LWCoefficients:
    """Homogeneous coefficient triple (a, b, c) of a K + 2b H + c = 0."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        if self.a == 0.0 and self.b == 0.0 and self.c == 0.0:
            raise InvalidTriple("the zero triple is not a Weingarten condition")

    def discriminant(self):
        return self.b * self.b - self.a * self.c

    def norm(self):
        return max(abs(self.a), abs(self.b), abs(self.c))

    def scaled(self, lam):
        return LWCoefficients(lam * self.a, lam * self.b, lam * self.c)

    def orientation_flipped(self):
        return LWCoefficients(self.a, -self.b, self.c)


class LWKind(enum.Enum):
    TUBULAR = "Tubular"
    PARALLEL_TO_MINIMAL = "ParallelToMinimal"
    PARALLEL_TO_CGC = "ParallelToCGC"


@dataclass(frozen=True)
class LWClass:
    """Classification result: kind, notable offsets (label, t) and the
    Gauss curvature at the constant-curvature offset if one exists."""

    kind: LWKind
    offsets: tuple
    K_at_cgc_offset: float | None
    constant_principal: float | None


def discriminant(lw):
    """b^2 - ac; invariant under the offset transform."""
    return lw.discriminant()


def transform_coefficients(lw, t):
    """Coefficients of the offset surface at distance t."""
    return LWCoefficients(
        lw.a + 2.0 * t * lw.b + t * t * lw.c,
        lw.b + t * lw.c,
        lw.c)


def parallel_curvatures(big_k, big_h, t, tau_focal=TAU_FOCAL):
    """(K^t, H^t) of the offset surface from (K, H) of the base.

    K^t = K / (1 - 2tH + t^2 K),  H^t = (H - tK) / (1 - 2tH + t^2 K),
    both with respect to the transported normal.
    """
    denom = 1.0 - 2.0 * t * big_h + t * t * big_k
    if abs(denom) <= tau_focal:
        raise FocalPoint(
            f"offset t = {t} hits a focal point: 1 - 2tH + t^2 K = {denom:.3e}")
    return big_k / denom, (big_h - t * big_k) / denom


def parallel_point(jet, curv, t, tau_focal=TAU_FOCAL):
    """First-order jet of the offset point x + t n.

    The offset first partials come from the Gauss-map derivatives
    (shape operator applied to x_u, x_v).  Second partials would need
    third-order data of the base; for t = 0 the input jet is returned
    unchanged, otherwise the result carries first-order data only (use
    :class:`OffsetSurface` for finite-difference second partials).
    """
    if t == 0.0:
        return jet
    denom = 1.0 - 2.0 * t * curv.H + t * t * curv.K
    if abs(denom) <= tau_focal:
        raise FocalPoint(
            f"offset t = {t} hits a focal point at (u, v) = "
            f"({jet.u}, {jet.v}): 1 - 2tH + t^2 K = {denom:.3e}")
    w, _i, _ii, n = shape_operator(jet)
    n_u = -(w[0, 0] * jet.x_u + w[1, 0] * jet.x_v)
    n_v = -(w[0, 1] * jet.x_u + w[1, 1] * jet.x_v)
    return SurfaceJet(
        x=jet.x + t * n,
        x_u=jet.x_u + t * n_u,
        x_v=jet.x_v + t * n_v,
        x_uu=None, x_uv=None, x_vv=None,
        u=jet.u, v=jet.v)


class OffsetSurface:
    """Offset x + t n of a generator surface as an evaluatable map.

    Positions and first partials are analytic; second partials are
    finite differences of the offset map (the independent route used by
    the end-to-end consistency tests).
    """

    def __init__(self, base, t):
        self.base = base
        self.t = t

    def point(self, u, v):
        jet = self.base.jet(u, v)
        return jet.x + self.t * normal(jet)

    def jet(self, u, v, h=1e-4):
        base_jet = self.base.jet(u, v)
        first = parallel_point(base_jet, curvatures(base_jet), self.t)
        fd = fd_jet(self.point, u, v, h)
        return SurfaceJet(x=first.x, x_u=first.x_u, x_v=first.x_v,
                          x_uu=fd.x_uu, x_uv=fd.x_uv, x_vv=fd.x_vv,
                          u=u, v=v)


def offset_surface(base, t):
    """Offset surface map; see :class:`OffsetSurface`."""
    return OffsetSurface(base, t)


def classify(lw, tol=1e-9):
    """Classify the parallel family of a coefficient triple.

    Tolerances are relative to the triple magnitude: tubular when
    |b^2 - ac| <= tol * ||lw||^2, minimal-parallel when |c| <= tol * ||lw||.
    Reports every notable offset of the family rather than one.
    """
    nrm = lw.norm()
    delta = lw.discriminant()
    if abs(delta) <= tol * nrm * nrm:
        const = -lw.b / lw.a if lw.a != 0.0 else None
        return LWClass(kind=LWKind.TUBULAR, offsets=(),
                       K_at_cgc_offset=None, constant_principal=const)
    if abs(lw.c) <= tol * nrm:
        return LWClass(kind=LWKind.PARALLEL_TO_MINIMAL,
                       offsets=(("minimal", -lw.a / (2.0 * lw.b)),),
                       K_at_cgc_offset=None, constant_principal=None)
    offsets = [("cgc", -lw.b / lw.c)]
    if delta > 0.0:
        root = math.sqrt(delta)
        cmc = sorted([(-lw.b - root) / lw.c, (-lw.b + root) / lw.c])
        offsets += [("cmc", cmc[0]), ("cmc", cmc[1])]
    return LWClass(kind=LWKind.PARALLEL_TO_CGC, offsets=tuple(offsets),
                   K_at_cgc_offset=lw.c * lw.c / delta,
                   constant_principal=None)


def lw_residual(surface, lw, s_values, theta_values):
    """max |a K + 2b H + c| over the sample grid of a surface map.

    DegenerateJet raised at a singular sample propagates with its
    location; singular samples are never silently skipped.
    """
    worst = 0.0
    for s in s_values:
        for th in theta_values:
            cur = curvatures(surface.jet(s, th))
            worst = max(worst, abs(lw.a * cur.K + 2.0 * lw.b * cur.H + lw.c))
    return worst


def principal_factorization_residual(surface, lw, s_values, theta_values):
    """max over samples of min_i |a kappa_i + b| (tubular factorization)."""
    worst = 0.0
    for s in s_values:
        for th in theta_values:
            cur = curvatures(surface.jet(s, th))
            worst = max(worst, min(abs(lw.a * cur.kappa1 + lw.b),
                                   abs(lw.a * cur.kappa2 + lw.b)))
    return worst
