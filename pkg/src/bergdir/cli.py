"""Command-line front end.

Emits kernel values, norm tables, Gram matrices, and convergence tables
as CSV or JSON.  All numeric output uses 17 significant digits so that
parsing an emitted file reproduces the in-memory values exactly.

Exit codes: 0 success, 1 validation error, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import asymptotics, disk, plane, verify
from .errors import (DivergenceError, DomainError, NotConvergedError,
                     OverflowRangeError)
from .series import CoefficientSeries


class CLIError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments; remap to 1 (validation)
    def error(self, message):
        raise CLIError(message)


def _fmt(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return "%.17g" % float(x)


def parse_complex(text: str) -> complex:
    """Parse a shell-safe "re,im" pair."""
    parts = text.split(",")
    if len(parts) != 2:
        raise CLIError("expected a complex number as 're,im', got %r" % text)
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise CLIError("bad complex number %r: %s" % (text, exc)) from exc


def _parse_float_list(text: str):
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise CLIError("bad number list %r: %s" % (text, exc)) from exc


def read_coefficients(path: str) -> CoefficientSeries:
    """Coefficient file: one "re im" pair per line, degree = line index,
    '#' comments allowed."""
    values = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise CLIError("bad coefficient line %r (want 're im')" % raw.strip())
            values.append(complex(float(parts[0]), float(parts[1])))
    return CoefficientSeries(values if values else [0.0])


def _emit(args, command, params, header, rows):
    if args.format == "json":
        payload = {
            "command": command,
            "params": params,
            "rows": [dict(zip(header, [_coerce(v) for v in row])) for row in rows],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        text = buf.getvalue()
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _coerce(v):
    return int(v) if isinstance(v, (int, np.integer)) else float(v)


def _space_params(args):
    if args.space == "disk":
        if args.R is None or args.alpha is None or args.m is None:
            raise CLIError("disk space requires --R, --alpha and --m")
        return disk.DiskSpaceParams(args.R, args.alpha, args.m)
    if args.nu is None or args.m is None:
        raise CLIError("plane space requires --nu and --m")
    return plane.PlaneSpaceParams(args.nu, args.m)


def _params_dict(params):
    if isinstance(params, disk.DiskSpaceParams):
        return {"space": "disk", "R": params.radius, "alpha": params.alpha,
                "m": params.order}
    return {"space": "plane", "nu": params.nu, "m": params.order}


def _add_space_options(sub, spaces=("disk", "plane")):
    sub.add_argument("--space", choices=spaces, required=True)
    sub.add_argument("--R", type=float)
    sub.add_argument("--alpha", type=float)
    sub.add_argument("--nu", type=float)
    sub.add_argument("--m", type=int)


def _add_io_options(sub):
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--output", help="write the artifact here instead of stdout")
    sub.add_argument("--tolerance", type=float, default=1e-14)


def build_parser():
    parser = _Parser(prog="bergdir",
                     description="Bergman-Dirichlet / Bargmann-Dirichlet "
                                 "space computations")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("kernel", help="evaluate the reproducing kernel")
    _add_space_options(p)
    p.add_argument("--z", action="append", required=True, metavar="RE,IM")
    p.add_argument("--w", action="append", required=True, metavar="RE,IM")
    p.add_argument("--force-series", action="store_true",
                   help="bypass closed-form fast paths")
    _add_io_options(p)

    p = subs.add_parser("norm", help="squared norm of a coefficient series")
    _add_space_options(p)
    p.add_argument("--coeffs", help="coefficient file ('re im' per line)")
    p.add_argument("--coeff", action="append", metavar="RE,IM",
                   help="inline coefficient, repeatable, degree = position")
    _add_io_options(p)

    p = subs.add_parser("gram", help="Gram matrix over a point set")
    _add_space_options(p)
    p.add_argument("--points", help="point file ('re im' per line)")
    p.add_argument("--point", action="append", metavar="RE,IM")
    _add_io_options(p)

    p = subs.add_parser("converge", help="disk-to-plane kernel convergence table")
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--z", required=True, metavar="RE,IM")
    p.add_argument("--w", required=True, metavar="RE,IM")
    p.add_argument("--radii", required=True, metavar="R1,R2,...")
    _add_io_options(p)

    p = subs.add_parser("limit-check",
                        help="hypergeometric parameter-limit error table")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--xi", required=True, metavar="RE,IM")
    p.add_argument("--rhos", required=True, metavar="P1,P2,...")
    p.add_argument("--c", type=float, default=2.0)
    _add_io_options(p)

    p = subs.add_parser("verify", help="run the full invariant suite")

    return parser


def _cmd_kernel(args):
    params = _space_params(args)
    zs = [parse_complex(t) for t in args.z]
    ws = [parse_complex(t) for t in args.w]
    if len(zs) != len(ws):
        raise CLIError("--z and --w must be given the same number of times")
    rows = []
    for z, w in zip(zs, ws):
        if args.space == "disk":
            k = disk.kernel(params, z, w, args.tolerance,
                            force_series=args.force_series)
        else:
            k = plane.kernel_plane(params, z, w, args.tolerance,
                                   force_series=args.force_series)
        rows.append([z.real, z.imag, w.real, w.imag, k.real, k.imag])
    _emit(args, "kernel", _params_dict(params),
          ["re_z", "im_z", "re_w", "im_w", "re_K", "im_K"], rows)
    return 0


def _cmd_norm(args):
    params = _space_params(args)
    if args.coeffs and args.coeff:
        raise CLIError("give either --coeffs or --coeff, not both")
    if args.coeffs:
        f = read_coefficients(args.coeffs)
    elif args.coeff:
        f = CoefficientSeries([parse_complex(t) for t in args.coeff])
    else:
        raise CLIError("coefficients required (--coeffs FILE or --coeff RE,IM)")
    if args.space == "disk":
        norm_of = lambda n: disk.monomial_norm_sq(params, n)
    else:
        norm_of = lambda n: plane.monomial_norm_sq_plane(params, n)
    rows = []
    total = 0.0
    for n, a in enumerate(f.coefficients):
        term = abs(a) ** 2 * norm_of(n)
        total += term
        rows.append([n, a.real, a.imag, term, total])
    _emit(args, "norm", _params_dict(params),
          ["n", "re_coeff", "im_coeff", "contribution", "cumulative_norm_sq"],
          rows)
    return 0


def _cmd_gram(args):
    params = _space_params(args)
    if args.points:
        pts = []
        with open(args.points, "r", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if not line:
                    continue
                parts = line.split()
                if len(parts) != 2:
                    raise CLIError("bad point line %r (want 're im')" % raw.strip())
                pts.append(complex(float(parts[0]), float(parts[1])))
    elif args.point:
        pts = [parse_complex(t) for t in args.point]
    else:
        raise CLIError("points required (--points FILE or --point RE,IM)")
    if args.space == "disk":
        kfn = lambda a, b: disk.kernel(params, a, b, args.tolerance)
    else:
        kfn = lambda a, b: plane.kernel_plane(params, a, b, args.tolerance)
    n = len(pts)
    gram = np.empty((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            gram[i, j] = kfn(pts[i], pts[j])
    min_eig = float(np.linalg.eigvalsh(gram).min())
    rows = [[i, j, gram[i, j].real, gram[i, j].imag, min_eig]
            for i in range(n) for j in range(n)]
    print("min_eigenvalue = %s" % _fmt(min_eig), file=sys.stderr)
    _emit(args, "gram", _params_dict(params),
          ["i", "j", "re_K", "im_K", "min_eigenvalue"], rows)
    return 0


def _cmd_converge(args):
    records = asymptotics.kernel_convergence_table(
        args.nu, args.m, parse_complex(args.z), parse_complex(args.w),
        _parse_float_list(args.radii), args.tolerance)
    rows = [[r.radius, r.disk_kernel_value.real, r.disk_kernel_value.imag,
             r.plane_kernel_value.real, r.plane_kernel_value.imag,
             r.abs_error] for r in records]
    _emit(args, "converge", {"nu": args.nu, "m": args.m},
          ["R", "re_K_disk", "im_K_disk", "re_K_plane", "im_K_plane",
           "abs_error"], rows)
    return 0


def _cmd_limit_check(args):
    rows = asymptotics.hypergeometric_limit_check(
        args.m, parse_complex(args.xi), _parse_float_list(args.rhos),
        args.c, args.tolerance)
    table = [[rho, err, rho * err] for rho, err in rows]
    _emit(args, "limit-check", {"m": args.m, "c": args.c},
          ["rho", "abs_error", "rho_times_error"], table)
    return 0


def _cmd_verify(_args):
    results = verify.run_all_checks()
    all_passed = True
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        all_passed &= res.passed
        print("[%s] %-32s error=%s threshold=%s"
              % (status, res.name, _fmt(res.error), _fmt(res.threshold)))
    return 0 if all_passed else 1


_DISPATCH = {
    "kernel": _cmd_kernel,
    "norm": _cmd_norm,
    "gram": _cmd_gram,
    "converge": _cmd_converge,
    "limit-check": _cmd_limit_check,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except CLIError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    try:
        return _DISPATCH[args.command](args)
    except (CLIError, DomainError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except (DivergenceError, NotConvergedError, OverflowRangeError) as exc:
        print("numerical failure: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
