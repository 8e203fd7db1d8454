# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled elliptic kernel.

Same recurrences as the pure-Python twin ``weingarten._ellip_py``:
descending Landen / AGM with phase back-substitution for the Jacobi
amplitude, AGM sums for the complete integrals, Carlson R_F/R_D for the
incomplete second-kind integral.
"""

from libc.math cimport asin, cos, fabs, floor, pow, sin, sqrt, M_PI

import numpy as np

BACKEND_NAME = "cython"

DEF MAX_AGM = 32

cdef double _EPS = 2.220446049250313e-16


cdef int _chain(double p, double *aa, double *cc) nogil:
    cdef double a = 1.0
    cdef double b = sqrt((1.0 - p) * (1.0 + p))
    cdef double c = p
    cdef double an, bn
    cdef int n = 0
    aa[0] = a
    cc[0] = c
    while fabs(c) > _EPS * a and n < MAX_AGM - 1:
        an = 0.5 * (a + b)
        bn = sqrt(a * b)
        c = 0.5 * (a - b)
        a = an
        b = bn
        n += 1
        aa[n] = a
        cc[n] = c
    return n


cdef double _phase(double u0, double *aa, double *cc, int nlev) nogil:
    cdef double phi = aa[nlev] * u0 * pow(2.0, nlev)
    cdef double t
    cdef int i
    for i in range(nlev, 0, -1):
        t = (cc[i] / aa[i]) * sin(phi)
        if t > 1.0:
            t = 1.0
        elif t < -1.0:
            t = -1.0
        phi = 0.5 * (phi + asin(t))
    return phi


cdef void _jacobi_c(double u, double p, double *aa, double *cc, int nlev,
                    double big_k, double *out) nogil:
    cdef double n = floor(u / (2.0 * big_k) + 0.5)
    cdef double phi = _phase(u - 2.0 * big_k * n, aa, cc, nlev)
    cdef double sign = -1.0 if (<long long> n) & 1 else 1.0
    cdef double sn = sign * sin(phi)
    cdef double cn = sign * cos(phi)
    cdef double d2 = 1.0 - (p * sn) * (p * sn)
    if d2 < 0.0:
        d2 = 0.0
    out[0] = sn
    out[1] = cn
    out[2] = sqrt(d2)
    out[3] = phi + n * M_PI


cdef double _rf_c(double x, double y, double z) nogil:
    cdef double a0 = (x + y + z) / 3.0
    cdef double q = pow(3.0 * _EPS, -0.125)
    cdef double mx = fabs(a0 - x)
    if fabs(a0 - y) > mx:
        mx = fabs(a0 - y)
    if fabs(a0 - z) > mx:
        mx = fabs(a0 - z)
    q *= mx
    cdef double xt = x, yt = y, zt = z, a = a0, f = 1.0
    cdef double sx, sy, sz, lam
    while q >= fabs(a) * f:
        sx = sqrt(xt)
        sy = sqrt(yt)
        sz = sqrt(zt)
        lam = sx * sy + sx * sz + sy * sz
        xt = 0.25 * (xt + lam)
        yt = 0.25 * (yt + lam)
        zt = 0.25 * (zt + lam)
        a = 0.25 * (a + lam)
        f *= 4.0
    cdef double big_x = (a0 - x) / (a * f)
    cdef double big_y = (a0 - y) / (a * f)
    cdef double big_z = -big_x - big_y
    cdef double e2 = big_x * big_y - big_z * big_z
    cdef double e3 = big_x * big_y * big_z
    return (1.0
            + e3 * (1.0 / 14.0 + 3.0 * e3 / 104.0)
            + e2 * (-0.1 + e2 / 24.0 - 3.0 * e3 / 44.0
                    - 5.0 * e2 * e2 / 208.0 + e2 * e3 / 16.0)) / sqrt(a)


cdef double _rd_c(double x, double y, double z) nogil:
    cdef double a0 = (x + y + 3.0 * z) / 5.0
    cdef double q = pow(0.25 * _EPS, -0.125)
    cdef double mx = fabs(a0 - x)
    if fabs(a0 - y) > mx:
        mx = fabs(a0 - y)
    if fabs(a0 - z) > mx:
        mx = fabs(a0 - z)
    q *= mx
    cdef double xt = x, yt = y, zt = z, a = a0, f = 1.0, total = 0.0
    cdef double sx, sy, sz, lam
    while q >= fabs(a) / f:
        sx = sqrt(xt)
        sy = sqrt(yt)
        sz = sqrt(zt)
        lam = sx * sy + sx * sz + sy * sz
        total += f / (sz * (zt + lam))
        xt = 0.25 * (xt + lam)
        yt = 0.25 * (yt + lam)
        zt = 0.25 * (zt + lam)
        a = 0.25 * (a + lam)
        f *= 0.25
    cdef double big_x = f * (a0 - x) / a
    cdef double big_y = f * (a0 - y) / a
    cdef double big_z = -(big_x + big_y) / 3.0
    cdef double e2 = big_x * big_y - 6.0 * big_z * big_z
    cdef double e3 = (3.0 * big_x * big_y - 8.0 * big_z * big_z) * big_z
    cdef double e4 = 3.0 * (big_x * big_y - big_z * big_z) * big_z * big_z
    cdef double e5 = big_x * big_y * big_z * big_z * big_z
    cdef double series = (1.0
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
                          - 9.0 * (e3 * e4 + e2 * e5) / 68.0)
    return f * series / (a * sqrt(a)) + 3.0 * total


cdef double _e_incomplete_c(double phi, double p, double big_e) nogil:
    cdef double k = floor(phi / M_PI + 0.5)
    cdef double phi0 = phi - M_PI * k
    cdef double s = sin(phi0)
    cdef double c = cos(phi0)
    cdef double s2 = s * s
    cdef double d2 = 1.0 - (p * p) * s2
    cdef double val = s * _rf_c(c * c, d2, 1.0) \
        - (p * p / 3.0) * s * s2 * _rd_c(c * c, d2, 1.0)
    return val + 2.0 * k * big_e


def complete_integrals(double p):
    """Complete integrals (K, E) for modulus p."""
    cdef double aa[MAX_AGM]
    cdef double cc[MAX_AGM]
    cdef int nlev = _chain(p, aa, cc)
    cdef double big_k = M_PI / (2.0 * aa[nlev])
    cdef double s = 0.0
    cdef int n
    for n in range(nlev + 1):
        s += pow(2.0, n - 1) * cc[n] * cc[n]
    return big_k, big_k * (1.0 - s)


def am(double u, double p):
    """Unwound Jacobi amplitude am_p(u)."""
    cdef double aa[MAX_AGM]
    cdef double cc[MAX_AGM]
    cdef int nlev = _chain(p, aa, cc)
    cdef double big_k = M_PI / (2.0 * aa[nlev])
    cdef double n = floor(u / (2.0 * big_k) + 0.5)
    return _phase(u - 2.0 * big_k * n, aa, cc, nlev) + n * M_PI


def jacobi(double u, double p):
    """(sn, cn, dn, am) at argument u for modulus p."""
    cdef double aa[MAX_AGM]
    cdef double cc[MAX_AGM]
    cdef int nlev = _chain(p, aa, cc)
    cdef double big_k = M_PI / (2.0 * aa[nlev])
    cdef double out[4]
    _jacobi_c(u, p, aa, cc, nlev, big_k, out)
    return out[0], out[1], out[2], out[3]


def e_incomplete(double phi, double p):
    """Legendre E_p(phi) for any real phi."""
    cdef double aa[MAX_AGM]
    cdef double cc[MAX_AGM]
    cdef int nlev = _chain(p, aa, cc)
    cdef double big_k = M_PI / (2.0 * aa[nlev])
    cdef double s = 0.0
    cdef int n
    for n in range(nlev + 1):
        s += pow(2.0, n - 1) * cc[n] * cc[n]
    return _e_incomplete_c(phi, p, big_k * (1.0 - s))


def jacobi_many(u, double p):
    """Vectorized (sn, cn, dn, am) for a 1-d array of arguments."""
    cdef double[::1] uv = np.ascontiguousarray(u, dtype=np.float64)
    cdef Py_ssize_t n = uv.shape[0]
    sn_a = np.empty(n, dtype=np.float64)
    cn_a = np.empty(n, dtype=np.float64)
    dn_a = np.empty(n, dtype=np.float64)
    am_a = np.empty(n, dtype=np.float64)
    cdef double[::1] sn = sn_a, cn = cn_a, dn = dn_a, amv = am_a
    cdef double aa[MAX_AGM]
    cdef double cc[MAX_AGM]
    cdef int nlev = _chain(p, aa, cc)
    cdef double big_k = M_PI / (2.0 * aa[nlev])
    cdef double out[4]
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            _jacobi_c(uv[i], p, aa, cc, nlev, big_k, out)
            sn[i] = out[0]
            cn[i] = out[1]
            dn[i] = out[2]
            amv[i] = out[3]
    return sn_a, cn_a, dn_a, am_a


def e_incomplete_many(phi, double p):
    """Vectorized Legendre E_p for a 1-d array of angles."""
    cdef double[::1] pv = np.ascontiguousarray(phi, dtype=np.float64)
    cdef Py_ssize_t n = pv.shape[0]
    out_a = np.empty(n, dtype=np.float64)
    cdef double[::1] out = out_a
    cdef double aa[MAX_AGM]
    cdef double cc[MAX_AGM]
    cdef int nlev = _chain(p, aa, cc)
    cdef double big_k = M_PI / (2.0 * aa[nlev])
    cdef double s = 0.0
    cdef int j
    for j in range(nlev + 1):
        s += pow(2.0, j - 1) * cc[j] * cc[j]
    cdef double big_e = big_k * (1.0 - s)
    cdef Py_ssize_t i
    with nogil:
        for i in range(n):
            out[i] = _e_incomplete_c(pv[i], p, big_e)
    return out_a
