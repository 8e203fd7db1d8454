"""Point-wise differential geometry of parametrized surface patches.

A :class:`SurfaceJet` carries position and first/second partials at one
parameter point; everything else (normal, fundamental forms, shape
operator, curvatures) is derived from it.  Orientation convention: the
unit normal is n = x_u x x_v / |x_u x x_v|, fixed once for the whole
package; for revolved patches (u, v) = (s, theta).
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateJet

EPS_IMMERSED = 1e-12


@dataclass(frozen=True)
class SurfaceJet:
    """2-jet of a surface map at one (u, v); second partials may be None
    when only first-order data is available (offset points)."""

    x: np.ndarray
    x_u: np.ndarray
    x_v: np.ndarray
    x_uu: np.ndarray | None
    x_uv: np.ndarray | None
    x_vv: np.ndarray | None
    u: float = 0.0
    v: float = 0.0


@dataclass(frozen=True)
class FundamentalForms:
    """First, second and third fundamental forms as symmetric 2x2 arrays."""

    I: np.ndarray
    II: np.ndarray
    III: np.ndarray


@dataclass(frozen=True)
class CurvatureData:
    """Gauss/mean/principal curvatures and the unit normal at a point."""

    K: float
    H: float
    kappa1: float
    kappa2: float
    n: np.ndarray


def normal(jet, eps=EPS_IMMERSED):
    """Unit normal x_u x x_v / |...|; raises DegenerateJet when the cross
    product norm is at or below ``eps``."""
    c = np.cross(jet.x_u, jet.x_v)
    nrm = float(np.linalg.norm(c))
    if nrm <= eps:
        raise DegenerateJet(
            f"non-immersed jet at (u, v) = ({jet.u}, {jet.v}): "
            f"|x_u x x_v| = {nrm:.3e}")
    return c / nrm


def shape_operator(jet, eps=EPS_IMMERSED):
    """Matrix of the shape operator in the (x_u, x_v) basis: W = I^-1 II."""
    if jet.x_uu is None:
        raise ValueError("jet carries first-order data only")
    n = normal(jet, eps)
    i_mat = np.array([
        [jet.x_u @ jet.x_u, jet.x_u @ jet.x_v],
        [jet.x_u @ jet.x_v, jet.x_v @ jet.x_v],
    ])
    ii_mat = np.array([
        [jet.x_uu @ n, jet.x_uv @ n],
        [jet.x_uv @ n, jet.x_vv @ n],
    ])
    return np.linalg.solve(i_mat, ii_mat), i_mat, ii_mat, n


def forms(jet, eps=EPS_IMMERSED):
    """Fundamental forms; III is computed from the shape operator
    (III = W^T I W), so the Cayley-Hamilton identity
    III - 2H II + K I = 0 is a genuine consistency check downstream."""
    w, i_mat, ii_mat, _ = shape_operator(jet, eps)
    return FundamentalForms(I=i_mat, II=ii_mat, III=w.T @ i_mat @ w)


def cayley_hamilton_residual(jet, eps=EPS_IMMERSED):
    """Max-abs entry of III - 2H II + K I for the jet."""
    f = forms(jet, eps)
    c = curvatures(jet, eps)
    return float(np.max(np.abs(f.III - 2.0 * c.H * f.II + c.K * f.I)))


def curvatures(jet, eps=EPS_IMMERSED):
    """Gauss, mean and principal curvatures with the package orientation.

    K = det W, H = tr W / 2 and kappa1 <= kappa2 are the eigenvalues of
    the shape operator W (real since W is self-adjoint w.r.t. I).
    """
    w, _, _, n = shape_operator(jet, eps)
    big_k = float(np.linalg.det(w))
    big_h = float(0.5 * np.trace(w))
    disc = big_h * big_h - big_k
    if disc < 0.0:
        # rounding noise only: H^2 >= K for real shape operators
        disc = 0.0
    root = np.sqrt(disc)
    return CurvatureData(K=big_k, H=big_h,
                         kappa1=big_h - root, kappa2=big_h + root, n=n)


def fd_jet(surface_map, u, v, h=1e-4):
    """Finite-difference 2-jet of a point map (independent test oracle).

    ``surface_map`` is any callable (u, v) -> 3-vector.  Central
    differences, O(h^2) accurate.
    """
    f = lambda a, b: np.asarray(surface_map(a, b), dtype=float)
    x = f(u, v)
    xpu, xmu = f(u + h, v), f(u - h, v)
    xpv, xmv = f(u, v + h), f(u, v - h)
    x_u = (xpu - xmu) / (2.0 * h)
    x_v = (xpv - xmv) / (2.0 * h)
    x_uu = (xpu - 2.0 * x + xmu) / (h * h)
    x_vv = (xpv - 2.0 * x + xmv) / (h * h)
    x_uv = (f(u + h, v + h) - f(u + h, v - h)
            - f(u - h, v + h) + f(u - h, v - h)) / (4.0 * h * h)
    return SurfaceJet(x=x, x_u=x_u, x_v=x_v,
                      x_uu=x_uu, x_uv=x_uv, x_vv=x_vv, u=u, v=v)
