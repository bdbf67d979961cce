"""Command-line front end.

Subcommands: ``compute`` (one state file -> JSON report), ``verify`` (named
check suites), ``sweep`` (family sweeps to CSV/JSON), ``extremal``
(extremal-state summary for one dimension), ``sample`` (dump random states).

Exit codes: 0 success, 1 at least one verification check failed, 2 input
parsing or state validation failed.  The ``STABC_SEED`` environment variable
supplies the default seed; ``--seed`` overrides it.  Identical command lines
with identical seeds produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from .charfun import char_table, lp_moment, sqrt_char_table
from .complexity import (
    RhoPFamily,
    complexity_report,
    complexity_upper_bound,
    pure_complexity_floor,
    rho_p_complexity_analytic,
    rho_p_state,
)
from .errors import NoKnownFiducialError, StateFileError
from .matcore import DensityState, random_mixed, random_pure
from .states import enumerate_stabilizer_states, known_fiducial
from .stateio import density_state_dict, load_state, pure_state_dict, save_state
from .verify import SUITES, run_suites

DEFAULT_SEED = 0


def _seed_default() -> int:
    env = os.environ.get("STABC_SEED", "")
    try:
        return int(env) if env else DEFAULT_SEED
    except ValueError:
        return DEFAULT_SEED


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def cmd_compute(args) -> int:
    state = load_state(args.input)
    report = complexity_report(state)
    doc: dict = {
        "dim": report.dim,
        "purity": report.purity,
        "c_value": report.c_value,
        "c_via_definition": report.c_via_definition,
        "c_via_moments": report.c_via_moments,
        "path_gap": report.path_gap,
        "m4": lp_moment(char_table(state), 4.0),
        "m4_sqrt": lp_moment(sqrt_char_table(state), 4.0),
    }
    if report.m4_fourth_power is not None:
        doc["m4_fourth_power"] = report.m4_fourth_power
        doc["complementarity_sum"] = report.m4_fourth_power + report.c_value
    if args.tables:
        doc["jordan_table"] = report.jordan_table.tolist()
        doc["lie_table"] = report.lie_table.tolist()
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    names = [args.suite] if args.suite != "all" else ["all"]
    suites = run_suites(names, dims=args.d or None, samples=args.samples, seed=args.seed)
    lines = []
    failed = 0
    for suite_name, rows in suites:
        for r in rows:
            tol = _fmt(r.tolerance) if r.tolerance is not None else "-"
            verdict = "PASS" if r.passed else "FAIL"
            failed += 0 if r.passed else 1
            note = f"  ({r.note})" if r.note else ""
            lines.append(
                f"{suite_name:<16} {r.check_id:<48} observed={_fmt(r.observed):<14} "
                f"tol={tol:<12} {verdict}{note}"
            )
    total = sum(len(rows) for _, rows in suites)
    lines.append(f"{total - failed}/{total} checks passed")
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def _sweep_anchor(d: int, source: str) -> DensityState:
    if source == "stabilizer":
        return DensityState.pure(np.eye(d, dtype=complex)[:, 0])
    if source == "fiducial":
        return known_fiducial(d).projector()
    return load_state(source)


def cmd_sweep(args) -> int:
    if args.family != "rho-p":
        raise StateFileError(f"unknown sweep family {args.family!r}; available: rho-p")
    if args.steps < 2:
        raise StateFileError("sweep needs at least 2 steps")
    d = args.d[0] if args.d else 3
    psi = _sweep_anchor(d, args.psi)
    if psi.dim != d:
        raise StateFileError(f"anchor state has dim {psi.dim}, sweep requested d={d}")
    fam = RhoPFamily(psi, 0.0)
    c_psi = complexity_report(psi).c_value

    grid = np.linspace(0.0, 1.0, args.steps)
    h = grid[1] - grid[0]
    rows = []
    analytic = []
    for p in grid:
        family = RhoPFamily(psi, float(p))
        state = rho_p_state(family)
        rep = complexity_report(state)
        c_closed = rho_p_complexity_analytic(family, c_psi)
        if abs(c_closed - rep.c_value) > 1e-9:
            raise ArithmeticError(
                f"closed form {c_closed} and generic value {rep.c_value} disagree at p={p}"
            )
        analytic.append(c_closed)
        rows.append({
            "p": float(p),
            "c_value": rep.c_value,
            "c_analytic": c_closed,
            "m4": lp_moment(char_table(state), 4.0),
            "jordan_min": float(rep.jordan_table.min()),
            "jordan_max": float(rep.jordan_table.max()),
            "lie_min": float(rep.lie_table.min()),
            "lie_max": float(rep.lie_table.max()),
        })
    for i, row in enumerate(rows):
        if 0 < i < len(rows) - 1:
            row["second_difference"] = (analytic[i + 1] - 2 * analytic[i] + analytic[i - 1]) / h**2
        else:
            row["second_difference"] = None

    header = ["p", "c_value", "c_analytic", "second_difference", "m4",
              "jordan_min", "jordan_max", "lie_min", "lie_max"]
    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n", args.out)
    else:
        lines = [",".join(header)]
        for row in rows:
            lines.append(",".join(
                "" if row[key] is None else _fmt(row[key]) for key in header
            ))
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_extremal(args) -> int:
    d = args.d[0] if args.d else 2
    group = enumerate_stabilizer_states(d)
    c_values = [complexity_report(s).c_value for s in group.states]
    doc: dict = {
        "dim": d,
        "stabilizer_count": len(group.states),
        "stabilizer_c_min": min(c_values),
        "stabilizer_c_max": max(c_values),
        "pure_floor": pure_complexity_floor(d),
        "global_ceiling": complexity_upper_bound(d),
        "reference_moments": {
            str(p): {
                "stabilizer": d ** (1.0 / p),
                "fiducial": (1 + (d - 1) * (d + 1) ** (1 - p / 2)) ** (1.0 / p),
            }
            for p in (2, 4)
        },
    }
    try:
        fid = known_fiducial(d)
        proj = fid.projector()
        doc["fiducial"] = {
            "c_value": complexity_report(proj).c_value,
            "max_deviation": fid.max_deviation,
            "moment_p2": lp_moment(char_table(proj), 2.0),
            "moment_p4": lp_moment(char_table(proj), 4.0),
        }
    except NoKnownFiducialError:
        pass
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def cmd_sample(args) -> int:
    d = args.d[0] if args.d else 2
    rng = np.random.default_rng(np.random.SeedSequence([args.seed, 100]))
    docs = []
    for _ in range(args.samples):
        if args.kind == "pure":
            v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
            docs.append(pure_state_dict(v / np.linalg.norm(v)))
        else:
            rank = args.rank if args.rank else int(rng.integers(1, d + 1))
            docs.append(density_state_dict(random_mixed(d, rank, rng)))
    if args.out:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        for i, doc in enumerate(docs):
            save_state(doc, out_dir / f"state-{i:04d}.json")
        sys.stdout.write(f"wrote {len(docs)} state files to {out_dir}\n")
    else:
        sys.stdout.write(json.dumps(docs, indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabc",
        description="Phase-space complexity of finite-dimensional quantum states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--seed", type=int, default=_seed_default(),
                       help="master seed (default: STABC_SEED env var, else 0)")
        p.add_argument("--out", type=str, default=None, help="write output to this path")

    p = sub.add_parser("compute", help="complexity report for one state file")
    p.add_argument("input", type=str, help="state file (JSON)")
    p.add_argument("--tables", action="store_true", help="include per-point J/I tables")
    add_common(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", nargs="?", default="all", choices=[*SUITES, "all"])
    p.add_argument("--d", type=int, nargs="*", default=None, help="dimensions to verify")
    p.add_argument("--samples", type=int, default=None, help="sample count override")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="sweep a state family and emit CSV/JSON")
    p.add_argument("--family", type=str, default="rho-p")
    p.add_argument("--d", type=int, nargs="*", default=None)
    p.add_argument("--psi", type=str, default="stabilizer",
                   help="anchor: 'stabilizer', 'fiducial', or a state-file path")
    p.add_argument("--steps", type=int, default=101)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("extremal", help="extremal-state summary for one dimension")
    p.add_argument("--d", type=int, nargs="*", default=None)
    add_common(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("sample", help="dump random states as JSON state files")
    p.add_argument("--d", type=int, nargs="*", default=None)
    p.add_argument("--kind", choices=("pure", "mixed"), default="pure")
    p.add_argument("--rank", type=int, default=None, help="rank for mixed states")
    p.add_argument("--samples", type=int, default=1)
    add_common(p)
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (StateFileError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except ArithmeticError as exc:
        # an internal cross-check (dual-route agreement, trade-off, ...) failed
        sys.stderr.write(f"check failed: {exc}\n")
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
