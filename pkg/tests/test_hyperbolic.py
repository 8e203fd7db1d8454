import math
from pathlib import Path

import numpy as np
import pytest

from weingarten import make_modulus
from weingarten import hyperbolic as hf
from weingarten.offsets import transform_coefficients
from weingarten.surface import curvatures

GOLDEN = Path(__file__).parent / "golden" / "hyperbolic_p05.svg"


def test_base_frame_at_zero(m05):
    fr = hf.base_frame(m05, 0.0)
    assert np.allclose(fr.xi, [2.0, 0.0])
    assert np.allclose(fr.tau, [1.0, 0.0])
    assert np.allclose(fr.nu, [0.0, 1.0])
    assert fr.speed == 0.0


def test_base_frame_orthonormal(m05, rng):
    rot90 = np.array([[0.0, -1.0], [1.0, 0.0]])
    for s in rng.uniform(-5.0, 5.0, 100):
        fr = hf.base_frame(m05, s)
        assert abs(fr.tau @ fr.nu) <= 1e-12
        assert abs(np.linalg.norm(fr.tau) - 1.0) <= 1e-12
        assert abs(np.linalg.norm(fr.nu) - 1.0) <= 1e-12
        assert np.abs(rot90 @ fr.tau - fr.nu).max() <= 1e-12


def test_base_curve_derivative_identity(m05, rng):
    """xi' = -sn_p(s/p) tau, checked against central differences."""
    h = 1e-6
    from weingarten.elliptic import jacobi
    for s in rng.uniform(-4.0, 4.0, 50):
        fp = hf.base_frame(m05, s + h).xi
        fm = hf.base_frame(m05, s - h).xi
        der = (fp - fm) / (2.0 * h)
        sn = jacobi(s / m05.p, m05).sn
        expected = -sn * hf.base_frame(m05, s).tau
        assert np.abs(der - expected).max() <= 1e-6


def test_range_boundaries(m05):
    axis = hf.axis_crossing_range(m05)
    sing = hf.singular_range(m05)
    assert axis.boundary == pytest.approx(math.sqrt(3.0), abs=1e-12)
    assert sing.boundary == pytest.approx(1.0 / math.sqrt(3.0), abs=1e-12)
    assert axis.contains(1.8) and not axis.contains(1.0)
    assert sing.contains(0.3) and not sing.contains(1.0)


def test_axis_crossing_scan(m05):
    """Dense-scan confirmation of the axis-crossing criterion."""
    crossing = hf.family_member(m05, 1.8)
    ss = np.linspace(0.0, crossing.profile_period, 20000)
    r = crossing.profile_t.eval_many(ss)[0]
    assert r.min() <= 0.0
    clear = hf.family_member(m05, 1.0)
    r = clear.profile_t.eval_many(ss)[0]
    assert r.min() > 0.0


def test_singularity_location(m05):
    mem = hf.family_member(m05, 0.3)
    assert mem.status == "singular"
    s_root = mem.locate_singularity()
    _, _, dr, dh, _, _ = mem.profile_t.eval(s_root)
    assert math.hypot(dr, dh) <= 1e-10
    clear = hf.family_member(m05, 1.0)
    assert clear.locate_singularity() is None
    assert hf.min_speed(clear) > 0.0


def test_safe_interval_cases():
    iv = hf.safe_interval(make_modulus(0.5))
    assert iv[0] == pytest.approx(0.5773502691896258, abs=1e-7)
    assert iv[1] == pytest.approx(1.7320508075688772, abs=1e-7)
    assert hf.safe_interval(make_modulus(0.8)) is None
    tight = hf.safe_interval(make_modulus(1.0 / math.sqrt(2.0) - 1e-9))
    assert tight is not None
    assert tight[1] - tight[0] <= 1e-8


def test_family_member_figure_regime(m05):
    mem = hf.family_member(m05, 1.0)
    assert mem.status == "immersed"
    assert hf.min_speed(mem) > 1e-3
    assert hf.min_radius(mem) > 1e-3
    assert mem.h_translation == pytest.approx(-0.8731525818926755, abs=1e-7)


def test_family_member_lw_residual(m05):
    mem = hf.family_member(m05, 1.0)
    lw = mem.lw_triple
    expect = transform_coefficients(hf.BASE_TRIPLE, 1.0)
    assert (lw.a, lw.b, lw.c) == (expect.a, expect.b, expect.c)
    assert lw.discriminant() == pytest.approx(-1.0, abs=1e-14)
    surf = mem.surface()
    worst = 0.0
    for s in np.linspace(0.0, mem.profile_period, 250):
        for th in (0.0, 1.0, 2.5, 4.0):
            cur = curvatures(surf.jet(s, th))
            worst = max(worst, abs(lw.a * cur.K + 2 * lw.b * cur.H + lw.c))
    assert worst <= 1e-7


def test_immersed_members_across_moduli():
    for p in (0.3, 0.5, 0.65):
        m = make_modulus(p)
        lo, hi = hf.safe_interval(m)
        for t in np.linspace(lo + 0.05 * (hi - lo), hi - 0.05 * (hi - lo), 4):
            mem = hf.family_member(m, t)
            assert mem.status == "immersed"
            assert hf.min_speed(mem, n=4000) > 0.0
            assert hf.min_radius(mem, n=4000) > 0.0


def test_boundary_sharpness(m05):
    at_sing = hf.family_member(m05, m05.p / m05.q)
    assert hf.min_speed(at_sing) <= 1e-6
    at_axis = hf.family_member(m05, m05.q / m05.p)
    assert hf.min_radius(at_axis) <= 1e-6


def test_base_quasi_periodicity(m05, rng):
    mem = hf.family_member(m05, 0.0)
    for s in rng.uniform(-3.0, 3.0, 30):
        f0 = hf.base_frame(m05, s)
        f1 = hf.base_frame(m05, s + mem.s_period)
        assert abs(f1.xi[0] - f0.xi[0]) <= 1e-10
        assert abs(f1.xi[1] - f0.xi[1] - mem.h_translation) <= 1e-10


def test_member_periodicity_and_glide(m05, rng):
    mem = hf.family_member(m05, 1.0)
    prof = mem.profile_t
    for s in rng.uniform(0.0, mem.profile_period, 30):
        r0, h0, *_ = prof.eval(s)
        # pointwise translational period: one full profile period
        r1, h1, *_ = prof.eval(s + mem.profile_period)
        assert abs(r1 - r0) <= 1e-10
        assert abs(h1 - h0 - mem.profile_translation) <= 1e-10
        # glide symmetry after half of it (mirror in s composed with the
        # base translation): the revolved surface's symmetry at s_period
        r2, h2, *_ = prof.eval(mem.s_period - s)
        assert abs(r2 - r0) <= 1e-10
        assert abs((mem.h_translation - h2) - h0) <= 1e-10


def test_revolved_member_translational_symmetry(m05, rng):
    mem = hf.family_member(m05, 1.0)
    surf = mem.surface()
    shift = np.array([0.0, 0.0, mem.profile_translation])
    for s in rng.uniform(0.0, mem.profile_period, 12):
        a = surf.point(s, 1.3)
        b = surf.point(s + mem.profile_period, 1.3)
        assert np.abs(b - (a + shift)).max() <= 1e-9


def test_parameter_set_identities(m05):
    """The offsets producing axis crossings / singularities never leave
    their stated ranges."""
    from weingarten.elliptic import jacobi_arrays
    p, q = m05.p, m05.q
    uu = np.linspace(1e-4, 4.0 * m05.K_complete, 5000)
    sn, _cn, dn, _am = jacobi_arrays(uu, m05)
    mask = np.abs(sn) > 1e-8
    t_axis = (dn[mask] / sn[mask]) / p
    assert np.all(np.abs(t_axis) >= q / p - 1e-9)
    t_sing = -p * sn / dn
    assert np.all(np.abs(t_sing) <= p / q + 1e-12)


def test_profile_svg_deterministic(m05, tmp_path):
    members = [hf.family_member(m05, t) for t in (0.7, 1.0, 1.5)]
    doc1 = hf.profile_svg(members)
    doc2 = hf.profile_svg(members)
    assert doc1 == doc2
    assert doc1.count("<polyline") == 3
    assert doc1.startswith('<?xml version="1.0"')
    # explicit viewport vs default
    small = hf.profile_svg(members, viewport=(320, 200))
    assert 'width="320"' in small and 'height="200"' in small


def test_profile_svg_golden(m05):
    members = [hf.family_member(m05, t) for t in (0.7, 1.0, 1.5)]
    doc = hf.profile_svg(members)
    assert doc == GOLDEN.read_text(encoding="utf-8")
