"""Deterministic writers: OBJ meshes, CSV profile tables, SVG polylines.

All numeric output uses 9-significant-digit shortest formatting so that
repeated runs produce byte-identical files.
"""

import math

import numpy as np

from .errors import DegenerateJet


def fmt(x):
    """9-significant-digit decimal, stable across runs."""
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return f"{x:.9g}"


def revolve_mesh(surface, s_values, n_theta):
    """Sample a revolved surface on an (s, theta) grid.

    The theta seam is stitched: exactly n_theta vertex columns, the last
    quad column reuses the first column's vertex indices.  Returns
    (vertices (n_s*n_theta, 3), faces list of 1-indexed triangles).
    """
    s_values = np.asarray(s_values, dtype=float)
    n_s = len(s_values)
    thetas = 2.0 * math.pi * np.arange(n_theta) / n_theta
    verts = np.empty((n_s * n_theta, 3))
    for i, s in enumerate(s_values):
        for j, th in enumerate(thetas):
            verts[i * n_theta + j] = surface.point(s, th)
    faces = []
    for i in range(n_s - 1):
        for j in range(n_theta):
            jn = (j + 1) % n_theta
            v00 = i * n_theta + j + 1
            v01 = i * n_theta + jn + 1
            v10 = (i + 1) * n_theta + j + 1
            v11 = (i + 1) * n_theta + jn + 1
            faces.append((v00, v10, v11))
            faces.append((v00, v11, v01))
    return verts, faces


def grid_mesh(surface, u_values, n_v, close_u=False):
    """Sample a (u, v)-parametrized surface with a closed v circle.

    With ``close_u`` the u direction is also stitched (torus topology);
    ``u_values`` then excludes the duplicate end row.
    """
    u_values = np.asarray(u_values, dtype=float)
    n_u = len(u_values)
    vs = 2.0 * math.pi * np.arange(n_v) / n_v
    verts = np.empty((n_u * n_v, 3))
    for i, u in enumerate(u_values):
        for j, v in enumerate(vs):
            verts[i * n_v + j] = surface.point(u, v)
    faces = []
    rows = n_u if close_u else n_u - 1
    for i in range(rows):
        inext = (i + 1) % n_u
        for j in range(n_v):
            jn = (j + 1) % n_v
            v00 = i * n_v + j + 1
            v01 = i * n_v + jn + 1
            v10 = inext * n_v + j + 1
            v11 = inext * n_v + jn + 1
            faces.append((v00, v10, v11))
            faces.append((v00, v11, v01))
    return verts, faces


def obj_lines(vertices, faces):
    """OBJ payload: `v x y z` rows then 1-indexed `f i j k` rows."""
    if not np.all(np.isfinite(vertices)):
        raise DegenerateJet("mesh contains non-finite coordinates")
    out = []
    for v in vertices:
        out.append(f"v {fmt(v[0])} {fmt(v[1])} {fmt(v[2])}")
    for f in faces:
        out.append(f"f {f[0]} {f[1]} {f[2]}")
    return out


def profile_csv_lines(profile, s_values):
    """CSV rows s,r,h,r',h' with a header."""
    out = ["s,r,h,r',h'"]
    r, h, dr, dh, _d2r, _d2h = profile.eval_many(np.asarray(s_values, float))
    for i, s in enumerate(s_values):
        out.append(f"{fmt(s)},{fmt(r[i])},{fmt(h[i])},{fmt(dr[i])},{fmt(dh[i])}")
    return out


_PALETTE = ("#1b6ca8", "#c0392b", "#2e8b57", "#8e44ad", "#b8860b", "#36454f")


def svg_document(polylines, viewport=None, margin=24.0, stroke_width=1.5):
    """SVG 1.1 document with one polyline per input curve.

    ``polylines``: sequence of (N, 2) arrays in world coordinates
    (x right, y up).  ``viewport``: (width, height) in px; when None a
    default 640x480 canvas is used.  World coordinates are mapped with a
    uniform scale (aspect preserved) computed from the joint data bounds.
    """
    if not polylines:
        raise ValueError("no polylines to render")
    width, height = viewport if viewport else (640.0, 480.0)
    pts = np.vstack(polylines)
    x0, y0 = pts.min(axis=0)
    x1, y1 = pts.max(axis=0)
    spanx = max(x1 - x0, 1e-30)
    spany = max(y1 - y0, 1e-30)
    scale = min((width - 2 * margin) / spanx, (height - 2 * margin) / spany)
    offx = 0.5 * (width - scale * spanx)
    offy = 0.5 * (height - scale * spany)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fmt(width)}" height="{fmt(height)}" '
        f'viewBox="0 0 {fmt(width)} {fmt(height)}">',
    ]
    for k, line in enumerate(polylines):
        coords = " ".join(
            f"{(offx + scale * (x - x0)):.4f},{(offy + scale * (y1 - y)):.4f}"
            for x, y in line)
        color = _PALETTE[k % len(_PALETTE)]
        lines.append(
            f'<polyline fill="none" stroke="{color}" '
            f'stroke-width="{fmt(stroke_width)}" points="{coords}"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
