"""Independent numerical oracles for the elliptic kernel.

Everything here deliberately avoids the AGM/Landen/Carlson code paths:
complete and incomplete integrals come from adaptive quadrature of the
defining integrands, the amplitude from direct integration of its ODE
am' = sqrt(1 - p^2 sin^2 am).  Used by the test suite and by the
``verify`` CLI command; not a substitute for :mod:`weingarten.elliptic`.
"""

import math

import numpy as np
from scipy.integrate import quad, solve_ivp


def complete_integrals_quadrature(p):
    """(K, E) by adaptive quadrature of the defining integrals."""
    m = p * p
    big_k, _ = quad(lambda t: 1.0 / math.sqrt(1.0 - m * math.sin(t) ** 2),
                    0.0, math.pi / 2.0, epsabs=1e-13, epsrel=1e-13)
    big_e, _ = quad(lambda t: math.sqrt(1.0 - m * math.sin(t) ** 2),
                    0.0, math.pi / 2.0, epsabs=1e-13, epsrel=1e-13)
    return big_k, big_e


def e_incomplete_quadrature(phi, p):
    """E_p(phi) by adaptive quadrature from 0 to phi."""
    m = p * p
    val, _ = quad(lambda t: math.sqrt(1.0 - m * math.sin(t) ** 2),
                  0.0, phi, epsabs=1e-13, epsrel=1e-13, limit=200)
    return val


def am_ode(s_values, p):
    """am_p at the requested arguments by integrating am' = dn(am).

    ``s_values`` must be sorted ascending and may straddle zero; the ODE
    is integrated outward from 0 in both directions.
    """
    s_values = np.asarray(s_values, dtype=float)
    m = p * p

    def rhs(_s, y):
        return [math.sqrt(1.0 - m * math.sin(y[0]) ** 2)]

    out = np.empty_like(s_values)
    for sign in (1.0, -1.0):
        mask = (s_values >= 0.0) if sign > 0 else (s_values < 0.0)
        if not mask.any():
            continue
        targets = s_values[mask]
        s_end = targets[-1] if sign > 0 else targets[0]
        if s_end == 0.0:
            out[mask] = 0.0
            continue
        sol = solve_ivp(rhs, (0.0, s_end), [0.0], method="DOP853",
                        rtol=1e-13, atol=1e-14, dense_output=True)
        out[mask] = sol.sol(targets)[0]
    return out
