"""Pure-Python elliptic kernel (fallback twin of the compiled extension).

Implements the Jacobi amplitude by the descending Landen / AGM recursion
with phase back-substitution, complete integrals by the AGM, and the
incomplete second-kind integral by Carlson symmetric forms.  The compiled
module ``weingarten._ellip`` implements the identical recurrences; which
one backs ``weingarten.elliptic`` is decided once at import time.

The amplitude is returned unwound (monotone on all of R), not reduced to
a principal branch: am(u + 2K) = am(u) + pi.
"""

import math

import numpy as np

BACKEND_NAME = "python"

_EPS = 2.220446049250313e-16
_MAX_AGM = 32


def _agm_chain(p):
    """AGM scale/cofactor sequences (a_n, c_n) for modulus p in (0,1)."""
    a = 1.0
    b = math.sqrt((1.0 - p) * (1.0 + p))
    c = p
    aa = [a]
    cc = [c]
    while abs(c) > _EPS * a and len(aa) < _MAX_AGM:
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        aa.append(a)
        cc.append(c)
    return aa, cc


def complete_integrals(p):
    """Complete integrals (K, E) for modulus p."""
    aa, cc = _agm_chain(p)
    big_k = math.pi / (2.0 * aa[-1])
    s = 0.0
    for n, c in enumerate(cc):
        s += 2.0 ** (n - 1) * c * c
    return big_k, big_k * (1.0 - s)


# -- scalar path ---------------------------------------------------------

def _phase(u0, aa, cc):
    # descending-Landen phase back-substitution on the reduced argument
    nlev = len(aa) - 1
    phi = aa[nlev] * u0 * 2.0 ** nlev
    for i in range(nlev, 0, -1):
        t = (cc[i] / aa[i]) * math.sin(phi)
        if t > 1.0:
            t = 1.0
        elif t < -1.0:
            t = -1.0
        phi = 0.5 * (phi + math.asin(t))
    return phi


def am(u, p):
    """Unwound Jacobi amplitude am_p(u)."""
    aa, cc = _agm_chain(p)
    big_k = math.pi / (2.0 * aa[-1])
    n = math.floor(u / (2.0 * big_k) + 0.5)
    phi = _phase(u - 2.0 * big_k * n, aa, cc)
    return phi + n * math.pi


def jacobi(u, p):
    """(sn, cn, dn, am) at argument u for modulus p."""
    aa, cc = _agm_chain(p)
    big_k = math.pi / (2.0 * aa[-1])
    n = math.floor(u / (2.0 * big_k) + 0.5)
    phi = _phase(u - 2.0 * big_k * n, aa, cc)
    sign = -1.0 if (int(n) & 1) else 1.0
    sn = sign * math.sin(phi)
    cn = sign * math.cos(phi)
    dn = math.sqrt(max(1.0 - (p * sn) * (p * sn), 0.0))
    return sn, cn, dn, phi + n * math.pi


def _rf(x, y, z):
    # Carlson R_F by duplication; args >= 0, at most one of x,y zero.
    a0 = (x + y + z) / 3.0
    q = (3.0 * _EPS) ** -0.125 * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    xt, yt, zt, a = x, y, z, a0
    f = 1.0
    while q >= abs(a) * f:
        sx, sy, sz = math.sqrt(xt), math.sqrt(yt), math.sqrt(zt)
        lam = sx * sy + sx * sz + sy * sz
        xt = 0.25 * (xt + lam)
        yt = 0.25 * (yt + lam)
        zt = 0.25 * (zt + lam)
        a = 0.25 * (a + lam)
        f *= 4.0
    big_x = (a0 - x) / (a * f)
    big_y = (a0 - y) / (a * f)
    big_z = -big_x - big_y
    e2 = big_x * big_y - big_z * big_z
    e3 = big_x * big_y * big_z
    return (
        1.0
        + e3 * (1.0 / 14.0 + 3.0 * e3 / 104.0)
        + e2 * (-0.1 + e2 / 24.0 - 3.0 * e3 / 44.0
                - 5.0 * e2 * e2 / 208.0 + e2 * e3 / 16.0)
    ) / math.sqrt(a)


def _rd(x, y, z):
    # Carlson R_D by duplication; x,y >= 0 (at most one zero), z > 0.
    a0 = (x + y + 3.0 * z) / 5.0
    q = (0.25 * _EPS) ** -0.125 * max(abs(a0 - x), abs(a0 - y), abs(a0 - z))
    xt, yt, zt, a = x, y, z, a0
    f = 1.0
    total = 0.0
    while q >= abs(a) * (1.0 / f):
        sx, sy, sz = math.sqrt(xt), math.sqrt(yt), math.sqrt(zt)
        lam = sx * sy + sx * sz + sy * sz
        total += f / (sz * (zt + lam))
        xt = 0.25 * (xt + lam)
        yt = 0.25 * (yt + lam)
        zt = 0.25 * (zt + lam)
        a = 0.25 * (a + lam)
        f *= 0.25
    big_x = f * (a0 - x) / a
    big_y = f * (a0 - y) / a
    big_z = -(big_x + big_y) / 3.0
    e2 = big_x * big_y - 6.0 * big_z * big_z
    e3 = (3.0 * big_x * big_y - 8.0 * big_z * big_z) * big_z
    e4 = 3.0 * (big_x * big_y - big_z * big_z) * big_z * big_z
    e5 = big_x * big_y * big_z * big_z * big_z
    series = (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
        - e2 * e2 * e2 / 16.0
        + 3.0 * e3 * e3 / 40.0
        + 3.0 * e2 * e4 / 20.0
        + 45.0 * e2 * e2 * e3 / 272.0
        - 9.0 * (e3 * e4 + e2 * e5) / 68.0
    )
    return f * series / (a * math.sqrt(a)) + 3.0 * total


def e_incomplete(phi, p):
    """Legendre E_p(phi) for any real phi (pi-quasiperiodic reduction)."""
    k = math.floor(phi / math.pi + 0.5)
    phi0 = phi - math.pi * k
    s = math.sin(phi0)
    c = math.cos(phi0)
    s2 = s * s
    d2 = 1.0 - (p * p) * s2
    val = s * _rf(c * c, d2, 1.0) - (p * p / 3.0) * s * s2 * _rd(c * c, d2, 1.0)
    if k != 0.0:
        val += 2.0 * k * complete_integrals(p)[1]
    return val


# -- array path ----------------------------------------------------------

def jacobi_many(u, p):
    """Vectorized (sn, cn, dn, am) for a 1-d array of arguments."""
    u = np.ascontiguousarray(u, dtype=np.float64)
    aa, cc = _agm_chain(p)
    big_k = math.pi / (2.0 * aa[-1])
    n = np.floor(u / (2.0 * big_k) + 0.5)
    nlev = len(aa) - 1
    phi = (aa[nlev] * 2.0 ** nlev) * (u - 2.0 * big_k * n)
    for i in range(nlev, 0, -1):
        t = (cc[i] / aa[i]) * np.sin(phi)
        np.clip(t, -1.0, 1.0, out=t)
        phi = 0.5 * (phi + np.arcsin(t))
    sign = np.where((n.astype(np.int64) & 1) == 0, 1.0, -1.0)
    sn = sign * np.sin(phi)
    cn = sign * np.cos(phi)
    dn = np.sqrt(np.maximum(1.0 - (p * sn) * (p * sn), 0.0))
    return sn, cn, dn, phi + n * math.pi


def _rf_many(x, y, z):
    a0 = (x + y + z) / 3.0
    q = (3.0 * _EPS) ** -0.125 * np.maximum(
        np.maximum(np.abs(a0 - x), np.abs(a0 - y)), np.abs(a0 - z)
    )
    xt, yt, zt, a = x.copy(), y.copy(), z.copy(), a0.copy()
    f = 1.0
    while np.any(q >= np.abs(a) * f):
        sx, sy, sz = np.sqrt(xt), np.sqrt(yt), np.sqrt(zt)
        lam = sx * sy + sx * sz + sy * sz
        xt = 0.25 * (xt + lam)
        yt = 0.25 * (yt + lam)
        zt = 0.25 * (zt + lam)
        a = 0.25 * (a + lam)
        f *= 4.0
    big_x = (a0 - x) / (a * f)
    big_y = (a0 - y) / (a * f)
    big_z = -big_x - big_y
    e2 = big_x * big_y - big_z * big_z
    e3 = big_x * big_y * big_z
    return (
        1.0
        + e3 * (1.0 / 14.0 + 3.0 * e3 / 104.0)
        + e2 * (-0.1 + e2 / 24.0 - 3.0 * e3 / 44.0
                - 5.0 * e2 * e2 / 208.0 + e2 * e3 / 16.0)
    ) / np.sqrt(a)


def _rd_many(x, y, z):
    a0 = (x + y + 3.0 * z) / 5.0
    q = (0.25 * _EPS) ** -0.125 * np.maximum(
        np.maximum(np.abs(a0 - x), np.abs(a0 - y)), np.abs(a0 - z)
    )
    xt, yt, zt, a = x.copy(), y.copy(), z.copy(), a0.copy()
    f = 1.0
    total = np.zeros_like(a0)
    while np.any(q >= np.abs(a) / f):
        sx, sy, sz = np.sqrt(xt), np.sqrt(yt), np.sqrt(zt)
        lam = sx * sy + sx * sz + sy * sz
        total += f / (sz * (zt + lam))
        xt = 0.25 * (xt + lam)
        yt = 0.25 * (yt + lam)
        zt = 0.25 * (zt + lam)
        a = 0.25 * (a + lam)
        f *= 0.25
    big_x = f * (a0 - x) / a
    big_y = f * (a0 - y) / a
    big_z = -(big_x + big_y) / 3.0
    e2 = big_x * big_y - 6.0 * big_z * big_z
    e3 = (3.0 * big_x * big_y - 8.0 * big_z * big_z) * big_z
    e4 = 3.0 * (big_x * big_y - big_z * big_z) * big_z * big_z
    e5 = big_x * big_y * big_z * big_z * big_z
    series = (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
        - e2 * e2 * e2 / 16.0
        + 3.0 * e3 * e3 / 40.0
        + 3.0 * e2 * e4 / 20.0
        + 45.0 * e2 * e2 * e3 / 272.0
        - 9.0 * (e3 * e4 + e2 * e5) / 68.0
    )
    return f * series / (a * np.sqrt(a)) + 3.0 * total


def e_incomplete_many(phi, p):
    """Vectorized Legendre E_p for a 1-d array of angles."""
    phi = np.ascontiguousarray(phi, dtype=np.float64)
    k = np.floor(phi / math.pi + 0.5)
    phi0 = phi - math.pi * k
    s = np.sin(phi0)
    c = np.cos(phi0)
    s2 = s * s
    d2 = 1.0 - (p * p) * s2
    c2 = c * c
    ones = np.ones_like(phi0)
    val = s * _rf_many(c2, d2, ones) - (p * p / 3.0) * s * s2 * _rd_many(c2, d2, ones)
    return val + (2.0 * complete_integrals(p)[1]) * k
