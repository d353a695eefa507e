"""Command-line front door.

Subcommands
    angles        rotation/initial angles plus optimal iteration count
    simulate      full state-vector probability trace
    optimal       optimal and asymptotic iteration counts
    restart-plan  solved restart stop point and expected cost
    montecarlo    empirical restart statistics from the full simulator
    sweep         one summary row per (n, ell) grid point
    baseline      classical expected queries vs quantum iteration count

Results go to stdout (or --out) as JSON or CSV; every JSON document carries
a schema_version field and the fully resolved configuration so a run can be
reproduced from its own output.  Logs and machine-readable error objects
{"error": code, "message": text} go to stderr.  Exit codes: 0 success,
1 runtime error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fullsim, instance, reduced, restart
from .errors import BudgetExceeded, GroverLabError

SCHEMA_VERSION = 1


def _int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    return [int(part) for part in text.split(",")]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grover-lab",
        description="Simulate and analyze multiobject amplitude-amplification search.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p: argparse.ArgumentParser, with_instance: bool = True):
        if with_instance:
            p.add_argument("--n", type=int, required=True, help="database size N")
            group = p.add_mutually_exclusive_group(required=True)
            group.add_argument("--ell", type=int,
                               help="number of marked items (random placement)")
            group.add_argument("--marked", type=_int_list, metavar="a,b,c",
                               help="explicit marked indices")
        p.add_argument("--seed", type=int, default=0, help="64-bit seed (default 0)")
        p.add_argument("--format", choices=("json", "csv"), default="json",
                       dest="output_format", help="output format (default json)")
        p.add_argument("--out", type=Path, default=None, help="output path")
        p.add_argument("--memory-cap", type=int, default=fullsim.DEFAULT_MEMORY_CAP,
                       help="maximum amplitude count (default 2^26)")

    p_angles = sub.add_parser("angles", help="rotation and initial angles")
    add_common(p_angles)

    p_sim = sub.add_parser("simulate", help="full state-vector probability trace")
    add_common(p_sim)
    p_sim.add_argument("--m-max", type=int, default=None,
                       help="last iteration to trace (default: optimal count)")

    p_opt = sub.add_parser("optimal", help="optimal iteration count")
    add_common(p_opt)

    p_plan = sub.add_parser("restart-plan", help="restart stop point and cost")
    add_common(p_plan)

    p_mc = sub.add_parser("montecarlo", help="empirical restart statistics")
    add_common(p_mc)
    p_mc.add_argument("--j", type=int, default=None,
                      help="iterations per trial (default: solved stop point)")
    p_mc.add_argument("--trials", type=int, default=100_000,
                      help="number of experiments (default 100000)")

    p_sweep = sub.add_parser("sweep", help="summary table over an (n, ell) grid")
    add_common(p_sweep, with_instance=False)
    p_sweep.add_argument("--grid-n", type=_int_list, required=True, metavar="LIST",
                         help="comma-separated database sizes ('' for empty)")
    p_sweep.add_argument("--grid-ell", type=_int_list, required=True, metavar="LIST",
                         help="comma-separated marked counts ('' for empty)")

    p_base = sub.add_parser("baseline", help="classical vs quantum query counts")
    add_common(p_base)

    return parser


def _resolve_problem(args) -> tuple[int, int, list[int] | None]:
    """(n, ell, marked list or None); generates a marked set when --ell given
    and the subcommand needs concrete indices."""
    if args.marked is not None:
        inst = instance.new_instance(args.n, args.marked)
        return inst.n, inst.ell, [int(a) for a in inst.marked]
    return args.n, args.ell, None


def _resolve_instance(args) -> instance.SearchInstance:
    if args.marked is not None:
        return instance.new_instance(args.n, args.marked)
    return instance.random_instance(args.n, args.ell, args.seed)


def _config_dict(args, marked: list[int] | None) -> dict:
    cfg = {
        "subcommand": args.subcommand,
        "n": getattr(args, "n", None),
        "ell": getattr(args, "ell", None),
        "marked": marked,
        "m_max": getattr(args, "m_max", None),
        "j": getattr(args, "j", None),
        "trials": getattr(args, "trials", None),
        "seed": args.seed,
        "format": args.output_format,
        "out": str(args.out) if args.out else None,
        "memory_cap": args.memory_cap,
        "grid_n": getattr(args, "grid_n", None),
        "grid_ell": getattr(args, "grid_ell", None),
    }
    if cfg["ell"] is None and marked is not None:
        cfg["ell"] = len(marked)
    return cfg


def _emit(args, payload: dict, csv_text: str | None = None) -> None:
    if args.output_format == "csv":
        if csv_text is None:
            raise GroverLabError(
                f"subcommand '{args.subcommand}' has no CSV rendering")
        text = csv_text
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_angles(args) -> None:
    n, ell, marked = _resolve_problem(args)
    summary = reduced.angles_summary_dict(reduced.spectral_angles(n, ell))
    payload = {"schema_version": SCHEMA_VERSION, "config": _config_dict(args, marked)}
    payload.update(summary)
    _emit(args, payload)


def _cmd_optimal(args) -> None:
    n, ell, marked = _resolve_problem(args)
    angles = reduced.spectral_angles(n, ell)
    m_opt, p_opt = reduced.optimal_iterations(angles)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "config": _config_dict(args, marked),
        "m_opt": m_opt,
        "p_opt": p_opt,
        "m_asymptotic": reduced.asymptotic_iterations(n, ell),
    }
    _emit(args, payload)


def _cmd_simulate(args) -> None:
    inst = _resolve_instance(args)
    m_max = args.m_max
    if m_max is None:
        m_max, _ = reduced.optimal_iterations(
            reduced.spectral_angles(inst.n, inst.ell))
        args.m_max = m_max
    trace = fullsim.evolve(inst, m_max, memory_cap=args.memory_cap)
    payload = {"schema_version": SCHEMA_VERSION,
               "config": _config_dict(args, [int(a) for a in inst.marked])}
    payload.update(trace.to_json_dict())
    _emit(args, payload, csv_text=trace.to_csv_text())


def _cmd_restart_plan(args) -> None:
    n, ell, marked = _resolve_problem(args)
    plan = restart.integer_stop_point(reduced.spectral_angles(n, ell))
    payload = {"schema_version": SCHEMA_VERSION, "config": _config_dict(args, marked)}
    payload.update(plan.to_json_dict())
    _emit(args, payload)


def _cmd_montecarlo(args) -> None:
    inst = _resolve_instance(args)
    if args.j is None:
        plan = restart.integer_stop_point(reduced.spectral_angles(inst.n, inst.ell))
        args.j = plan.j_integer
    report = restart.simulate_restarts(inst, args.j, args.trials, args.seed,
                                       memory_cap=args.memory_cap)
    payload = {"schema_version": SCHEMA_VERSION,
               "config": _config_dict(args, [int(a) for a in inst.marked])}
    payload.update(report.to_json_dict())
    _emit(args, payload)


def _cmd_baseline(args) -> None:
    n, ell, marked = _resolve_problem(args)
    angles = reduced.spectral_angles(n, ell)
    m_opt, p_opt = reduced.optimal_iterations(angles)
    classical = instance.classical_expected_queries(n, ell)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "config": _config_dict(args, marked),
        "classical_expected_queries": classical,
        "quantum_m_opt": m_opt,
        "quantum_p_opt": p_opt,
        "quantum_m_asymptotic": reduced.asymptotic_iterations(n, ell),
        "speedup_factor": classical / m_opt if m_opt > 0 else None,
    }
    _emit(args, payload)


_SWEEP_COLUMNS = ("n", "ell", "theta", "alpha", "m_opt", "p_opt",
                  "m_asymptotic", "restart_j", "expected_cost", "flag")


def _sweep_rows(grid_n: list[int], grid_ell: list[int]) -> list[dict]:
    rows = []
    for n in grid_n:
        for ell in grid_ell:
            if not 1 <= ell <= n:
                continue
            angles = reduced.spectral_angles(n, ell)
            m_opt, p_opt = reduced.optimal_iterations(angles)
            plan = restart.integer_stop_point(angles)
            rows.append({
                "n": n,
                "ell": ell,
                "theta": angles.theta,
                "alpha": angles.alpha,
                "m_opt": m_opt,
                "p_opt": p_opt,
                "m_asymptotic": reduced.asymptotic_iterations(n, ell),
                "restart_j": plan.j_integer,
                "expected_cost": plan.expected_cost,
                "flag": "degenerate" if 2 * ell == n else "",
            })
    return rows


def _cmd_sweep(args) -> None:
    rows = _sweep_rows(args.grid_n, args.grid_ell)
    payload = {"schema_version": SCHEMA_VERSION,
               "config": _config_dict(args, None), "rows": rows}
    lines = [",".join(_SWEEP_COLUMNS)]
    for row in rows:
        rendered = []
        for col in _SWEEP_COLUMNS:
            value = row[col]
            rendered.append(repr(value) if isinstance(value, float) else str(value))
        lines.append(",".join(rendered))
    _emit(args, payload, csv_text="\n".join(lines) + "\n")


_HANDLERS = {
    "angles": _cmd_angles,
    "simulate": _cmd_simulate,
    "optimal": _cmd_optimal,
    "restart-plan": _cmd_restart_plan,
    "montecarlo": _cmd_montecarlo,
    "sweep": _cmd_sweep,
    "baseline": _cmd_baseline,
}


def _error_object(code: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": code, "message": message}) + "\n")


def run_cli(arguments: list[str] | None = None) -> int:
    """Parse arguments, run a subcommand, and return the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(arguments)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code or 0)
    try:
        _HANDLERS[args.subcommand](args)
    except BudgetExceeded as exc:
        _error_object(type(exc).__name__, f"{exc} (raise it with --memory-cap)")
        return 1
    except GroverLabError as exc:
        _error_object(type(exc).__name__, str(exc))
        return 1
    except (OSError, ValueError) as exc:
        _error_object(type(exc).__name__, str(exc))
        return 1
    return 0


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
