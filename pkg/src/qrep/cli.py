"""Command-line front end.

    qrep kernel    --family interp --alpha 0.5 --lam 0.0
    qrep transform --rep momentum --state gaussian:s=1
    qrep moments   --state gaussian:s=1,c=2
    qrep verify    --suite all

Tabular output is CSV with 17 significant digits (doubles round-trip
exactly); reports are JSON.  Files are written to a temporary name and
atomically renamed, so a failing command never leaves a partial file.
Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
import tempfile

import numpy as np

from .grid import Grid, dual_grid, make_grid, norm
from .kernels import (
    Parity,
    chirp_step_bound,
    correlation_kernel,
    fresnel_delta,
    interp_kernel,
    plane_wave,
    position_kernel_in_momentum,
    rotation_kernel,
)
from .operators import moments
from .states import GaussianSpec, gaussian, hermite
from .transforms import (
    correlation_transform,
    interp_transform,
    rotation_transform,
    to_momentum,
)
from .verify import SUITE_NAMES, run_all_suites, run_suite

SATURATION_TOL = 1e-8


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".qrep-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _rows_to_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(_fmt(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _rows_to_json(header: list[str], rows: list[list]) -> str:
    return json.dumps([dict(zip(header, row)) for row in rows], indent=2) + "\n"


def _emit_table(args, header: list[str], rows: list[list]) -> None:
    if args.format == "json":
        _write_text(args.out, _rows_to_json(header, rows))
    else:
        _write_text(args.out, _rows_to_csv(header, rows))


def _parse_kv(body: str, what: str) -> dict:
    params = {}
    if body:
        for item in body.split(","):
            if "=" not in item:
                raise ValueError(f"{what}_syntax: expected key=value, got {item!r}")
            key, val = item.split("=", 1)
            params[key.strip()] = float(val)
    return params


def parse_state_spec(spec: str):
    """Parse ``gaussian:s=1,x0=0,p0=0,c=2`` or ``hermite:k=3``."""
    name, _, body = spec.partition(":")
    params = _parse_kv(body, "state_spec")
    if name == "gaussian":
        allowed = {"s", "x0", "p0", "c"}
        extra = set(params) - allowed
        if extra:
            raise ValueError(f"state_spec_field: unknown gaussian fields {sorted(extra)}")
        return ("gaussian", GaussianSpec(**params))
    if name == "hermite":
        if set(params) - {"k"}:
            raise ValueError("state_spec_field: hermite takes only k")
        k = params.get("k", 0.0)
        if k != int(k):
            raise ValueError(f"hermite_order_range: k must be an integer, got {k}")
        return ("hermite", int(k))
    raise ValueError(f"state_spec_name: unknown state {name!r} (want gaussian or hermite)")


def build_state(g: Grid, spec: str):
    kind, payload = parse_state_spec(spec)
    return gaussian(g, payload) if kind == "gaussian" else hermite(g, payload)


def _state_spec_from_config(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        cfg = json.load(fh)
    name = cfg.pop("state")
    if cfg:
        body = ",".join(f"{k}={v}" for k, v in sorted(cfg.items()))
        return f"{name}:{body}"
    return name


def cmd_kernel(args) -> int:
    g = make_grid(args.n, args.length)
    fam = args.family
    if fam == "plane-wave":
        wf = plane_wave(g, args.p)
    elif fam == "position-in-momentum":
        wf = position_kernel_in_momentum(dual_grid(g), args.a)
    elif fam == "interp":
        if args.alpha is None:
            raise ValueError("kernel_parameter: interp family requires --alpha")
        if 0.0 < args.alpha < 1.0:
            chirp_step_bound(args.alpha / (1.0 - args.alpha), g)
        wf = interp_kernel(g, args.alpha, args.lam)
    elif fam == "rotation":
        if args.theta is None:
            raise ValueError("kernel_parameter: rotation family requires --theta")
        if not (0.0 < args.theta <= np.pi / 2):
            raise ValueError(
                f"rotation_theta_range: theta must lie in (0, pi/2], got {args.theta}"
            )
        if args.theta < np.pi / 2:
            chirp_step_bound(1.0 / math.tan(args.theta), g)
        wf = rotation_kernel(g, args.theta, args.lam)
    elif fam == "corr-even":
        wf = correlation_kernel(g, args.gamma, Parity.EVEN)
    elif fam == "corr-odd":
        wf = correlation_kernel(g, args.gamma, Parity.ODD)
    elif fam == "fresnel":
        if args.eps is None:
            raise ValueError("kernel_parameter: fresnel family requires --eps")
        wf = fresnel_delta(g, args.eps)
    else:  # pragma: no cover - argparse choices guard this
        raise ValueError(f"kernel_family: unknown family {fam!r}")
    x = wf.grid.points
    s = wf.samples
    rows = [[float(x[j]), float(s[j].real), float(s[j].imag), float(abs(s[j]))] for j in range(g.n)]
    _emit_table(args, ["x", "re", "im", "abs"], rows)
    return 0


def _sidecar(args, payload: dict) -> None:
    if args.out and args.out != "-":
        _write_text(args.out + ".meta.json", json.dumps(payload, indent=2) + "\n")


def cmd_transform(args) -> int:
    g = make_grid(args.n, args.length)
    spec = args.state if args.config is None else _state_spec_from_config(args.config)
    psi = build_state(g, spec)
    rep_name, _, rep_body = args.rep.partition(":")
    rep_params = _parse_kv(rep_body, "rep_spec")

    if rep_name == "correlation":
        window = None
        if args.u_min is not None or args.u_max is not None:
            if args.u_min is None or args.u_max is None:
                raise ValueError("rep_spec: provide both --u-min and --u-max or neither")
            window = (args.u_min, args.u_max)
        spectrum = correlation_transform(psi, u_window=window, n_gamma=args.n_gamma)
        gam = spectrum.gamma_grid.points
        rows = [
            [float(gam[j]), "even", float(spectrum.even[j].real), float(spectrum.even[j].imag)]
            for j in range(len(gam))
        ] + [
            [float(gam[j]), "odd", float(spectrum.odd[j].real), float(spectrum.odd[j].imag)]
            for j in range(len(gam))
        ]
        _emit_table(args, ["gamma", "parity", "re", "im"], rows)
        _sidecar(
            args,
            {
                "norm_in": norm(psi),
                "norm_out": math.sqrt(spectrum.channel_power()),
                "tail_mass": spectrum.tail_mass,
            },
        )
        return 0

    if rep_name == "momentum":
        out = to_momentum(psi)
    elif rep_name == "interp":
        if "alpha" not in rep_params:
            raise ValueError("rep_spec: interp representation requires alpha, e.g. interp:alpha=0.5")
        out = interp_transform(psi, rep_params["alpha"])
    elif rep_name == "rotation":
        if "theta" not in rep_params:
            raise ValueError("rep_spec: rotation representation requires theta, e.g. rotation:theta=0.785")
        out = rotation_transform(psi, rep_params["theta"])
    else:
        raise ValueError(
            f"rep_spec_name: unknown representation {rep_name!r} "
            "(want momentum, interp:alpha=..., rotation:theta=..., or correlation)"
        )
    lam = out.grid.points
    s = out.samples
    rows = [[float(lam[j]), float(s[j].real), float(s[j].imag), float(abs(s[j]))] for j in range(g.n)]
    _emit_table(args, ["lambda", "re", "im", "abs"], rows)
    _sidecar(args, {"norm_in": norm(psi), "norm_out": norm(out), "tail_mass": None})
    return 0


def cmd_moments(args) -> int:
    g = make_grid(args.n, args.length)
    spec = args.state if args.config is None else _state_spec_from_config(args.config)
    psi = build_state(g, spec)
    report = moments(psi)
    payload = report.as_dict()
    payload["schrodinger_saturated"] = bool(abs(report.lhs - report.rhs) <= SATURATION_TOL)
    payload["heisenberg_saturated"] = bool(
        abs(report.lhs - report.heisenberg_rhs) <= SATURATION_TOL
    )
    _write_text(args.out, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_verify(args) -> int:
    g = make_grid(args.n, args.length)
    if args.suite == "all":
        grouped = run_all_suites(g)
    else:
        grouped = {args.suite: run_suite(args.suite, g)}
    records = []
    for suite_name in sorted(grouped):
        for rep in grouped[suite_name]:
            rec = rep.as_dict()
            rec["suite"] = suite_name
            records.append(rec)
    _write_text(args.out, json.dumps(records, indent=2) + "\n")
    failed = [r for r in records if not r["passed"]]
    if failed:
        for r in failed:
            print(f"FAIL {r['suite']}/{r['name']} {r['parameters']}: "
                  f"observed {r['observed']:.3e} > tol {r['tolerance']:.3e}", file=sys.stderr)
        return 1
    return 0


def _add_common(sub):
    sub.add_argument("--n", type=int, default=1024, help="grid size (power of two)")
    sub.add_argument("--length", type=float, default=40.0, help="domain length")
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv",
                     help="tabular output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrep",
        description="Sample eigenfunction kernels, change representation, "
        "compute moment reports, and run verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pk = sub.add_parser("kernel", help="sample an eigenfunction family")
    pk.add_argument(
        "--family",
        required=True,
        choices=("plane-wave", "position-in-momentum", "interp", "rotation",
                 "corr-even", "corr-odd", "fresnel"),
    )
    pk.add_argument("--p", type=float, default=0.0, help="momentum eigenvalue")
    pk.add_argument("--a", type=float, default=0.0, help="position eigenvalue")
    pk.add_argument("--alpha", type=float, default=None)
    pk.add_argument("--theta", type=float, default=None)
    pk.add_argument("--gamma", type=float, default=0.0)
    pk.add_argument("--lam", "--lambda", dest="lam", type=float, default=0.0,
                    help="eigenvalue for interp/rotation families")
    pk.add_argument("--eps", type=float, default=None, help="fresnel width")
    _add_common(pk)
    pk.set_defaults(func=cmd_kernel)

    pt = sub.add_parser("transform", help="expand a state in another representation")
    pt.add_argument("--rep", required=True,
                    help="momentum | interp:alpha=A | rotation:theta=T | correlation")
    pt.add_argument("--state", default="gaussian:s=1",
                    help="state spec, e.g. gaussian:s=1,c=2 or hermite:k=1")
    pt.add_argument("--config", default=None,
                    help="JSON file with the same fields as --state")
    pt.add_argument("--u-min", dest="u_min", type=float, default=None)
    pt.add_argument("--u-max", dest="u_max", type=float, default=None)
    pt.add_argument("--n-gamma", dest="n_gamma", type=int, default=None)
    _add_common(pt)
    pt.set_defaults(func=cmd_transform)

    pm = sub.add_parser("moments", help="moment report and uncertainty bound")
    pm.add_argument("--state", default="gaussian:s=1")
    pm.add_argument("--config", default=None)
    _add_common(pm)
    pm.set_defaults(func=cmd_moments)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("--suite", required=True, choices=SUITE_NAMES + ("all",))
    _add_common(pv)
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream consumer (e.g. head) closed the stream; not an error
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except ValueError as exc:
        print(f"qrep: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"qrep: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
