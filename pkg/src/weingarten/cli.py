"""Command-line front end.

Subcommands: profile, surface, classify, parallel, hyperbolic, verify.
Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 singular
evaluation.  Flags override values from an optional JSON --config file;
WEINGARTEN_TOL overrides the default tolerance in `verify` only.
All outputs are deterministic for a given configuration.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import hyperbolic as hf
from . import verify as verify_mod
from .elliptic import make_modulus
from .errors import (
    DegenerateJet,
    DomainError,
    FocalPoint,
    FormulaSingular,
    ImmersionError,
    InvalidTriple,
)
from .export import (
    fmt,
    grid_mesh,
    obj_lines,
    profile_csv_lines,
    revolve_mesh,
    svg_document,
)
from .offsets import LWCoefficients, classify, offset_surface, transform_coefficients
from .profiles import (
    Circle,
    Line,
    profile_catenoid,
    profile_cn,
    profile_dn,
    profile_pseudosphere,
    profile_sphere,
    revolve,
    tube,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_SINGULAR = 3


def _write(out, text):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load_config(path):
    if path is None:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict):
        raise DomainError("config file must hold a JSON object")
    return cfg


def _get(args, cfg, key, default=None):
    val = getattr(args, key.replace("-", "_"), None)
    if val is not None:
        return val
    return cfg.get(key, default)


def _parse_range(text):
    try:
        lo, hi = (float(x) for x in str(text).split(":"))
    except ValueError as exc:
        raise DomainError(f"range must be 'lo:hi', got {text!r}") from exc
    if not (lo < hi):
        raise DomainError(f"range must satisfy lo < hi, got {text!r}")
    return lo, hi


def _build_profile(family, ksign, p):
    if family in ("cn", "dn"):
        if p is None:
            raise DomainError(f"family {family!r} needs --p")
        m = make_modulus(p)
        make = profile_cn if family == "cn" else profile_dn
        return make(ksign, m)
    if family == "sphere":
        return profile_sphere()
    if family == "pseudosphere":
        return profile_pseudosphere()
    if family == "catenoid":
        return profile_catenoid()
    raise DomainError(f"unknown profile family {family!r}")


def _default_range(profile):
    fam = profile.family.value
    if fam.startswith("cn"):
        k = profile.modulus.K_complete
        return (-0.95 * k, 0.95 * k)
    if fam.startswith("dn"):
        return (0.05, profile.s_period - 0.05)
    if fam == "pseudosphere":
        return (0.05, 3.0)
    return (-2.0, 2.0)


def _check_singular(profile, lo, hi, axis_only=False):
    # axis_only: profile curves evaluate fine at cusps; only r = 0 points
    # are outside their declared validity.  Revolved patches degenerate
    # at both cusp and axis parameters.
    if axis_only:
        from .profiles import _lattice_points
        bad = np.array(_lattice_points(profile.axis_zeros, lo, hi))
    else:
        bad = profile.singular_params_in(lo, hi)
    if len(bad):
        listed = ", ".join(fmt(s) for s in bad[:8])
        raise DegenerateJet(
            f"requested range [{fmt(lo)}, {fmt(hi)}] contains singular "
            f"parameters at s = {listed}")


def cmd_profile(args):
    cfg = _load_config(args.config)
    family = _get(args, cfg, "family")
    if family is None:
        raise DomainError("profile needs --family")
    ksign = int(_get(args, cfg, "K", 1))
    prof = _build_profile(family, ksign, _get(args, cfg, "p"))
    rng = _get(args, cfg, "range")
    lo, hi = _parse_range(rng) if rng else _default_range(prof)
    n = int(_get(args, cfg, "n", 200))
    if n < 2:
        raise DomainError(f"need at least 2 samples, got {n}")
    _check_singular(prof, lo, hi, axis_only=True)
    ss = np.linspace(lo, hi, n)
    out_format = _get(args, cfg, "format", "csv")
    if out_format == "csv":
        _write(args.out, "\n".join(profile_csv_lines(prof, ss)) + "\n")
    elif out_format == "svg":
        r, h, *_ = prof.eval_many(ss)
        _write(args.out, svg_document([np.column_stack([r, h])]))
    else:
        raise DomainError(f"profile format must be csv or svg, got {out_format!r}")
    return EXIT_OK


def _build_surface(args, cfg):
    family = _get(args, cfg, "family")
    if family is None:
        raise DomainError("needs --family")
    if family == "tube":
        rho = _get(args, cfg, "rho")
        if rho is None:
            raise DomainError("tube needs --rho")
        center = _get(args, cfg, "center", "circle")
        if center == "circle":
            big_r = float(_get(args, cfg, "R", 3.0))
            curve = Circle(big_r)
            default_rng = (0.0, 2.0 * math.pi * big_r)
        elif center == "line":
            curve = Line()
            default_rng = (0.0, 4.0)
        else:
            raise DomainError(f"tube center must be line or circle, got {center!r}")
        return tube(curve, float(rho)), None, default_rng, curve.closed is not None
    ksign = int(_get(args, cfg, "K", 1))
    prof = _build_profile(family, ksign, _get(args, cfg, "p"))
    return revolve(prof), prof, _default_range(prof), False


def cmd_surface(args):
    cfg = _load_config(args.config)
    surf, prof, default_rng, close_u = _build_surface(args, cfg)
    rng = _get(args, cfg, "range")
    lo, hi = _parse_range(rng) if rng else default_rng
    n_s = int(_get(args, cfg, "n-s", 64))
    n_theta = int(_get(args, cfg, "n-theta", 64))
    if n_s < 2 or n_theta < 3:
        raise DomainError(f"need n_s >= 2 and n_theta >= 3, got {n_s}, {n_theta}")
    if prof is not None:
        _check_singular(prof, lo, hi)
        verts, faces = revolve_mesh(surf, np.linspace(lo, hi, n_s), n_theta)
    else:
        if close_u:
            us = lo + (hi - lo) * np.arange(n_s) / n_s
        else:
            us = np.linspace(lo, hi, n_s)
        verts, faces = grid_mesh(surf, us, n_theta, close_u=close_u)
    _write(args.out, "\n".join(obj_lines(verts, faces)) + "\n")
    return EXIT_OK


def _classify_report(a, b, c):
    lw = LWCoefficients(a, b, c)
    res = classify(lw)
    return {
        "a": a,
        "b": b,
        "c": c,
        "discriminant": lw.discriminant(),
        "kind": res.kind.value,
        "offsets": [{"label": lbl, "t": t} for lbl, t in res.offsets],
        "K_at_cgc_offset": res.K_at_cgc_offset,
        "constant_principal": res.constant_principal,
    }


def cmd_classify(args):
    report = _classify_report(args.a, args.b, args.c)
    _write(args.out, json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def cmd_parallel(args):
    cfg = _load_config(args.config)
    t = _get(args, cfg, "t")
    if t is None:
        raise DomainError("parallel needs --t")
    t = float(t)
    surf, prof, default_rng, close_u = _build_surface(args, cfg)
    rng = _get(args, cfg, "range")
    lo, hi = _parse_range(rng) if rng else default_rng
    osurf = offset_surface(surf, t)
    out_format = _get(args, cfg, "format", "obj")
    if out_format == "obj":
        n_s = int(_get(args, cfg, "n-s", 64))
        n_theta = int(_get(args, cfg, "n-theta", 64))
        if prof is not None:
            _check_singular(prof, lo, hi)
            verts, faces = revolve_mesh(osurf, np.linspace(lo, hi, n_s), n_theta)
        else:
            us = (lo + (hi - lo) * np.arange(n_s) / n_s) if close_u \
                else np.linspace(lo, hi, n_s)
            verts, faces = grid_mesh(osurf, us, n_theta, close_u=close_u)
        _write(args.out, "\n".join(obj_lines(verts, faces)) + "\n")
        return EXIT_OK
    if out_format == "json":
        report = {"t": t}
        abc = [_get(args, cfg, key) for key in ("a", "b", "c")]
        if all(v is not None for v in abc):
            lw = LWCoefficients(*(float(v) for v in abc))
            lwt = transform_coefficients(lw, t)
            report["triple"] = [lw.a, lw.b, lw.c]
            report["triple_t"] = [lwt.a, lwt.b, lwt.c]
            report["discriminant"] = lw.discriminant()
            report["discriminant_t"] = lwt.discriminant()
        _write(args.out, json.dumps(report, indent=2) + "\n")
        return EXIT_OK
    raise DomainError(f"parallel format must be obj or json, got {out_format!r}")


def cmd_hyperbolic(args):
    cfg = _load_config(args.config)
    p = _get(args, cfg, "p")
    if p is None:
        raise DomainError("hyperbolic needs --p")
    m = make_modulus(float(p))
    ts = args.t if args.t else cfg.get("t", [1.0])
    if not isinstance(ts, list):
        ts = [ts]
    iv = hf.safe_interval(m)
    sing = hf.singular_range(m)
    axis = hf.axis_crossing_range(m)
    members = []
    svg_members = []
    for t in ts:
        mem = hf.family_member(m, float(t))
        svg_members.append(mem)
        entry = {
            "t": float(t),
            "status": mem.status,
            "lw_triple": [mem.lw_triple.a, mem.lw_triple.b, mem.lw_triple.c],
            "discriminant": mem.lw_triple.discriminant(),
            "min_speed": hf.min_speed(mem, n=4096),
            "min_radius": hf.min_radius(mem, n=4096),
        }
        s_root = mem.locate_singularity()
        entry["singular_s"] = s_root if s_root is not None else None
        members.append(entry)
    report = {
        "p": m.p,
        "q": m.q,
        "safe_interval": list(iv) if iv else None,
        "safe_interval_negative": [-iv[1], -iv[0]] if iv else None,
        "singular_range": {"boundary": sing.boundary, "set": "|t| <= boundary"},
        "axis_range": {"boundary": axis.boundary, "set": "|t| >= boundary"},
        "s_period": 2.0 * m.p * m.K_complete,
        "h_translation": (2.0 / m.p) * (m.E_complete - m.K_complete),
        "members": members,
    }
    if args.svg:
        _write(args.svg, hf.profile_svg(svg_members, periods=args.periods))
    if args.obj_dir:
        os.makedirs(args.obj_dir, exist_ok=True)
        for mem in svg_members:
            if mem.status != "immersed":
                continue
            surf = mem.surface()
            ss = np.linspace(0.0, mem.profile_period, 96)
            verts, faces = revolve_mesh(surf, ss, 64)
            path = os.path.join(args.obj_dir, f"member_t{mem.t:+.4f}.obj")
            _write(path, "\n".join(obj_lines(verts, faces)) + "\n")
    _write(args.out, json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args):
    tol = args.tol
    if tol is None:
        env = os.environ.get("WEINGARTEN_TOL")
        tol = float(env) if env else None
    report = verify_mod.run_target(args.target, p=args.p, t=args.t,
                                   tol_override=tol)
    _write(args.out, json.dumps(report, indent=2) + "\n")
    for chk in report["checks"]:
        status = "pass" if chk["pass"] else "FAIL"
        sys.stderr.write(
            f"[{status}] {report['target']}::{chk['name']}: "
            f"{chk['max_residual']:.3e} (tol {chk['tolerance']:.1e})\n")
    return EXIT_OK if report["pass"] else EXIT_VERIFY_FAILED


def _add_surface_flags(sp):
    sp.add_argument("--family", choices=["cn", "dn", "sphere", "pseudosphere",
                                         "catenoid", "tube"])
    sp.add_argument("--K", type=int, choices=[1, -1], dest="K")
    sp.add_argument("--p", type=float)
    sp.add_argument("--range", type=str)
    sp.add_argument("--n-s", type=int, dest="n_s")
    sp.add_argument("--n-theta", type=int, dest="n_theta")
    sp.add_argument("--center", choices=["line", "circle"])
    sp.add_argument("--R", type=float, dest="R")
    sp.add_argument("--rho", type=float)
    sp.add_argument("--config", type=str)
    sp.add_argument("--out", type=str, default="-")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="weingarten",
        description="Linear Weingarten surfaces of revolution: profiles, "
                    "meshes, parallel families, classification, verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("profile", help="export a profile curve (CSV or SVG)")
    sp.add_argument("--family", choices=["cn", "dn", "sphere", "pseudosphere",
                                         "catenoid"])
    sp.add_argument("--K", type=int, choices=[1, -1], dest="K")
    sp.add_argument("--p", type=float)
    sp.add_argument("--range", type=str, help="parameter range lo:hi")
    sp.add_argument("--n", type=int)
    sp.add_argument("--format", choices=["csv", "svg"])
    sp.add_argument("--config", type=str)
    sp.add_argument("--out", type=str, default="-")
    sp.set_defaults(func=cmd_profile)

    sp = sub.add_parser("surface", help="export a surface mesh (OBJ)")
    _add_surface_flags(sp)
    sp.set_defaults(func=cmd_surface)

    sp = sub.add_parser("classify", help="classify a coefficient triple")
    sp.add_argument("a", type=float)
    sp.add_argument("b", type=float)
    sp.add_argument("c", type=float)
    sp.add_argument("--out", type=str, default="-")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("parallel", help="export an offset surface / report")
    _add_surface_flags(sp)
    sp.add_argument("--t", type=float)
    sp.add_argument("--format", choices=["obj", "json"])
    sp.add_argument("--a", type=float, dest="a")
    sp.add_argument("--b", type=float, dest="b")
    sp.add_argument("--c", type=float, dest="c")
    sp.set_defaults(func=cmd_parallel)

    sp = sub.add_parser("hyperbolic", help="offset family report / figures")
    sp.add_argument("--p", type=float)
    sp.add_argument("--t", type=float, action="append")
    sp.add_argument("--svg", type=str, help="write profile SVG here")
    sp.add_argument("--obj-dir", type=str, dest="obj_dir")
    sp.add_argument("--periods", type=int, default=1)
    sp.add_argument("--config", type=str)
    sp.add_argument("--out", type=str, default="-")
    sp.set_defaults(func=cmd_hyperbolic)

    sp = sub.add_parser("verify", help="run a residual/invariant suite")
    sp.add_argument("--target", required=True,
                    choices=sorted(verify_mod.TARGETS))
    sp.add_argument("--p", type=float)
    sp.add_argument("--t", type=float)
    sp.add_argument("--tol", type=float)
    sp.add_argument("--out", type=str, default="-")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, InvalidTriple) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_INPUT
    except (DegenerateJet, FormulaSingular, FocalPoint, ImmersionError) as exc:
        sys.stderr.write(f"singular: {exc}\n")
        return EXIT_SINGULAR


if __name__ == "__main__":
    sys.exit(main())
