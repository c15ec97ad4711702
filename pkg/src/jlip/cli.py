"""Command-line front end with reproducible JSON/CSV reports.

Subcommands:
    constant   closed-form constants table (JSON)
    estimate   supremum search for the punctured-disk constant (JSON)
    verify     inequality/monotonicity property suites (JSON)
    power      dyadic power-map monotonicity table (CSV)
    q2         scan of C(m, 1/(m+1)) for m >= 2 (CSV)
    audit      randomized upper-bound audit (JSON)

Exit codes: 0 success; 1 a proven bound was violated or a suite failed
(a bug, not bad luck); 2 argument or parse error; 3 the search completed but
missed the closed form by more than tol (soft failure).

Payloads go to stdout (or --output); diagnostics go to stderr.  Every report
embeds a run manifest unless --no-manifest is given, which together with a
fixed --seed makes reruns byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from dataclasses import dataclass
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .constants import constants_table
from .lemmas import run_all_suites
from .search import (
    SearchConfig,
    bound_audit,
    estimate_lipschitz,
    power_monotonicity_table,
    q_scan,
    ratio_J,
)


@dataclass(frozen=True)
class RunManifest:
    command: str
    parameters: dict
    seed: int
    tool_version: str
    started_at: str
    duration_ms: int

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "parameters": self.parameters,
            "seed": self.seed,
            "tool_version": self.tool_version,
            "started_at": self.started_at,
            "duration_ms": self.duration_ms,
        }


def parse_complex(text: str) -> complex:
    """Parse the CLI complex syntax: a bare real, `IMi`, or `RE+IMi`."""
    s = text.strip()
    if s and s[-1] in "ij":
        s = s[:-1] + "j"
    try:
        value = complex(s)
    except ValueError:
        raise ValueError(f"cannot parse {text!r} as a complex number (expected RE, IMi, or RE+IMi)")
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError(f"complex argument must be finite, got {text!r}")
    return value


def format_complex(z: complex) -> str:
    """Round-trippable text form RE+IMi with shortest-repr coordinates."""
    sign = "+" if not (z.imag < 0.0 or (z.imag == 0.0 and math.copysign(1.0, z.imag) < 0.0)) else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def _jsonify(value):
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, (np.floating,)):
        value = float(value)
    if isinstance(value, float) and not math.isfinite(value):
        return None  # strict JSON has no Infinity/NaN
    if isinstance(value, float):
        return value
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    return value


def _emit(text: str, output) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: dict, manifest, output) -> None:
    doc = {}
    if manifest is not None:
        doc["manifest"] = manifest.to_dict()
    doc.update(payload)
    _emit(json.dumps(_jsonify(doc), indent=2) + "\n", output)


def _emit_csv(header, rows, manifest, output) -> None:
    buf = io.StringIO()
    if manifest is not None:
        buf.write("# manifest: " + json.dumps(_jsonify(manifest.to_dict())) + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    _emit(buf.getvalue(), output)


def _manifest(args, command: str, params: dict, started_at: str, duration_ms: int):
    if args.no_manifest:
        return None
    return RunManifest(
        command=command,
        parameters={k: str(v) for k, v in params.items()},
        seed=getattr(args, "seed", 0),
        tool_version=__version__,
        started_at=started_at,
        duration_ms=duration_ms,
    )


def _utc_now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _search_config(args) -> SearchConfig:
    return SearchConfig(
        grid_n=args.grid_n,
        refine_iters=args.refine_iters,
        refine_starts=args.refine_starts,
        seed=args.seed,
        tol=args.tol,
    )


def _report_payload(report) -> dict:
    payload = {
        "a": report.a,
        "sup_estimate": report.sup_estimate,
        "argmax_z": report.argmax_z,
        "argmax_w": report.argmax_w,
    }
    if report.closed_form is not None:
        payload["closed_form"] = report.closed_form
        payload["gap"] = report.gap
    payload.update(
        branch_histogram=report.branch_histogram,
        evaluations=report.evaluations,
        seed=report.seed,
    )
    return payload


def cmd_constant(args) -> int:
    a = parse_complex(args.a)
    started = _utc_now()
    t0 = time.perf_counter()
    table = constants_table(abs(a))
    duration = int(1000.0 * (time.perf_counter() - t0))
    payload = {
        "abs_a": table.abs_a,
        "c_main": table.c_main,
        "c_case12": table.c_case12,
        "c_ball": table.c_ball,
        "c_go": table.c_go,
    }
    _emit_json(payload, _manifest(args, "constant", {"a": args.a}, started, duration), args.output)
    return 0


def cmd_estimate(args) -> int:
    a = parse_complex(args.a)
    if a == 0:
        print("jlip: a = 0 is a rotation with constant exactly 1; use `jlip constant --a 0`", file=sys.stderr)
        return 2
    cfg = _search_config(args)
    started = _utc_now()
    t0 = time.perf_counter()
    try:
        report = estimate_lipschitz(a, cfg)
        payload = _report_payload(report)
        if args.verify_extremal:
            z_star = a / (2.0 * abs(a))
            extremal = ratio_J(a, z_star, -z_star)
            payload["extremal"] = {
                "z": z_star,
                "w": -z_star,
                "ratio": extremal,
                "deviation": abs(extremal - report.closed_form),
            }
    except RuntimeError as exc:
        print(f"jlip: {exc}", file=sys.stderr)
        return 1
    duration = int(1000.0 * (time.perf_counter() - t0))
    params = {
        "a": args.a,
        "grid_n": args.grid_n,
        "refine_iters": args.refine_iters,
        "refine_starts": args.refine_starts,
        "seed": args.seed,
        "tol": args.tol,
    }
    _emit_json(payload, _manifest(args, "estimate", params, started, duration), args.output)
    if abs(report.sup_estimate - report.closed_form) > cfg.tol:
        print(
            f"jlip: search missed the closed form by {abs(report.gap):.3e} (> tol {cfg.tol:.1e})",
            file=sys.stderr,
        )
        return 3
    return 0


def cmd_verify(args) -> int:
    started = _utc_now()
    t0 = time.perf_counter()
    results = run_all_suites(args.samples, args.seed)
    duration = int(1000.0 * (time.perf_counter() - t0))
    payload = {
        "all_passed": all(r.passed for r in results),
        "suites": [
            {
                "name": r.name,
                "passed": r.passed,
                "checked": r.checked,
                "worst": r.worst,
                "counterexample": r.counterexample,
            }
            for r in results
        ],
    }
    params = {"samples": args.samples, "seed": args.seed}
    _emit_json(payload, _manifest(args, "verify", params, started, duration), args.output)
    for r in results:
        if not r.passed:
            print(f"jlip: suite failed: {r.summary()}; counterexample: {r.counterexample}", file=sys.stderr)
    return 0 if payload["all_passed"] else 1


def cmd_power(args) -> int:
    a = parse_complex(args.a)
    cfg = _search_config(args)
    started = _utc_now()
    t0 = time.perf_counter()
    table = power_monotonicity_table(a, args.n_max, cfg)
    duration = int(1000.0 * (time.perf_counter() - t0))
    rows = [
        (m, repr(rep.sup_estimate), format_complex(rep.argmax_z), format_complex(rep.argmax_w))
        for m, rep in table.entries
    ]
    params = {"a": args.a, "n_max": args.n_max, "seed": args.seed, "grid_n": args.grid_n, "tol": args.tol}
    _emit_csv(
        ("m", "estimate", "argmax_z", "argmax_w"),
        rows,
        _manifest(args, "power", params, started, duration),
        args.output,
    )
    for m0, m1, inc in table.violations:
        print(f"jlip: estimate increased from m={m0} to m={m1} by {inc:.3e} (> 2*tol)", file=sys.stderr)
    return 0 if not table.violations else 1


def cmd_q2(args) -> int:
    if args.m_max < 2:
        print(f"jlip: --m-max must be >= 2, got {args.m_max}", file=sys.stderr)
        return 2
    cfg = _search_config(args)
    started = _utc_now()
    t0 = time.perf_counter()
    scan = q_scan(list(range(2, args.m_max + 1)), cfg)
    duration = int(1000.0 * (time.perf_counter() - t0))
    rows = [(m, repr(a_val), repr(rep.sup_estimate)) for m, a_val, rep in scan]
    params = {"m_max": args.m_max, "seed": args.seed, "grid_n": args.grid_n}
    _emit_csv(("m", "a", "estimate"), rows, _manifest(args, "q2", params, started, duration), args.output)
    return 0


def cmd_audit(args) -> int:
    a = parse_complex(args.a)
    started = _utc_now()
    t0 = time.perf_counter()
    result = bound_audit(a, args.samples, args.seed)
    duration = int(1000.0 * (time.perf_counter() - t0))
    payload = {
        "a": result.a,
        "max_ratio": result.max_ratio,
        "violations": result.violations,
        "samples": result.samples,
        "seed": result.seed,
        "argmax_z": result.argmax_z,
        "argmax_w": result.argmax_w,
    }
    params = {"a": args.a, "samples": args.samples, "seed": args.seed}
    _emit_json(payload, _manifest(args, "audit", params, started, duration), args.output)
    if result.violations:
        print(f"jlip: {result.violations} sampled ratios exceeded the closed-form bound", file=sys.stderr)
        return 1
    return 0


def _add_common(sub) -> None:
    sub.add_argument("--no-manifest", action="store_true", help="omit the run manifest (stable byte output)")
    sub.add_argument("--output", metavar="PATH", default=None, help="write the payload to a file instead of stdout")


def _add_search_flags(sub) -> None:
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--tol", type=float, default=1e-3)
    sub.add_argument("--grid-n", dest="grid_n", type=int, default=48)
    sub.add_argument("--refine-iters", dest="refine_iters", type=int, default=200)
    sub.add_argument("--refine-starts", dest="refine_starts", type=int, default=16)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jlip",
        description="Distance-ratio metric Lipschitz constants for punctured-disk automorphisms.",
    )
    parser.add_argument("--version", action="version", version=f"jlip {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("constant", help="closed-form constants table")
    p.add_argument("--a", required=True, help="translation parameter (RE, IMi, or RE+IMi), |a| < 1")
    _add_common(p)
    p.set_defaults(func=cmd_constant)

    p = subs.add_parser("estimate", help="supremum search vs the closed form")
    p.add_argument("--a", required=True)
    p.add_argument("--verify-extremal", action="store_true", help="also evaluate the analytic extremal pair")
    _add_search_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_estimate)

    p = subs.add_parser("verify", help="run the inequality property suites")
    p.add_argument("--samples", type=int, default=100000)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("power", help="dyadic power-map monotonicity table (CSV)")
    p.add_argument("--a", required=True)
    p.add_argument("--n-max", dest="n_max", type=int, default=3)
    _add_search_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_power)

    p = subs.add_parser("q2", help="scan C(m, 1/(m+1)) for m = 2..m_max (CSV)")
    p.add_argument("--m-max", dest="m_max", type=int, default=5)
    _add_search_flags(p)
    _add_common(p)
    p.set_defaults(func=cmd_q2)

    p = subs.add_parser("audit", help="randomized upper-bound audit")
    p.add_argument("--a", required=True)
    p.add_argument("--samples", type=int, default=1000000)
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(func=cmd_audit)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"jlip: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
