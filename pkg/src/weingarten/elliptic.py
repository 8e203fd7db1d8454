"""Jacobi elliptic functions and second-kind elliptic integrals.

Public, scalar-first API over the numeric kernel.  The kernel is the
compiled extension ``weingarten._ellip`` when it is importable, otherwise
the pure-Python twin ``weingarten._ellip_py``; the choice is made once at
import and reported by ``BACKEND``.

Conventions
-----------
* ``p`` is the elliptic modulus (not the parameter m = p^2), restricted
  to the open interval (0, 1); the co-modulus is q = sqrt(1 - p^2).
* The amplitude ``am`` is the continuous unwound branch, strictly
  increasing on all of R with am(s + 2K) = am(s) + pi.  Everything built
  on top (profile heights in particular) relies on this.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

try:  # pragma: no cover - exercised via whichever backend is installed
    from . import _ellip as _kernel
except ImportError:  # pragma: no cover
    from . import _ellip_py as _kernel

BACKEND = _kernel.BACKEND_NAME


@dataclass(frozen=True)
class EllipticModulus:
    """Modulus p with co-modulus and complete integrals attached."""

    p: float
    q: float
    K_complete: float
    E_complete: float


@dataclass(frozen=True)
class JacobiTriple:
    """Values (sn, cn, dn) and the unwound amplitude at one argument."""

    sn: float
    cn: float
    dn: float
    am: float


def make_modulus(p):
    """Build an :class:`EllipticModulus`, rejecting the degenerate limits.

    Raises
    ------
    DomainError
        If p <= 0 or p >= 1.  The circular (p -> 0) and hyperbolic
        (p -> 1) limits must be handled by the caller with explicit
        trigonometric / hyperbolic formulas.
    """
    p = float(p)
    if not (0.0 < p < 1.0):
        raise DomainError(f"modulus must satisfy 0 < p < 1, got {p}")
    big_k, big_e = _kernel.complete_integrals(p)
    return EllipticModulus(p=p, q=math.sqrt((1.0 - p) * (1.0 + p)),
                           K_complete=big_k, E_complete=big_e)


def jacobi(s, m):
    """Jacobi triple (sn, cn, dn, am) at argument s."""
    s = float(s)
    if not math.isfinite(s):
        raise DomainError(f"argument must be finite, got {s}")
    sn, cn, dn, amv = _kernel.jacobi(s, m.p)
    return JacobiTriple(sn=sn, cn=cn, dn=dn, am=amv)


def jacobi_am(s, m):
    """Unwound amplitude am_p(s) alone."""
    s = float(s)
    if not math.isfinite(s):
        raise DomainError(f"argument must be finite, got {s}")
    return _kernel.am(s, m.p)


def elliptic_E_incomplete(phi, m):
    """Incomplete second-kind integral E_p(phi) on the unwound branch."""
    phi = float(phi)
    if not math.isfinite(phi):
        raise DomainError(f"argument must be finite, got {phi}")
    return _kernel.e_incomplete(phi, m.p)


def elliptic_E_am(s, m):
    """(E_p o am_p)(s), quasi-periodic with increment 2 E_complete per 2K."""
    return _kernel.e_incomplete(_kernel.am(float(s), m.p), m.p)


def jacobi_arrays(s, m):
    """Vectorized (sn, cn, dn, am) over a 1-d array of arguments."""
    return _kernel.jacobi_many(np.asarray(s, dtype=np.float64), m.p)


def elliptic_E_am_arrays(s, m):
    """Vectorized (E_p o am_p) over a 1-d array of arguments."""
    _, _, _, amv = _kernel.jacobi_many(np.asarray(s, dtype=np.float64), m.p)
    return _kernel.e_incomplete_many(amv, m.p)
