"""Command-line interface: scenario analysis, sweeps, figure data, validation.

Subcommands: ``analyze`` (JSON report for one scenario), ``sweep`` (CSV/JSON
over a swept parameter), ``figure`` (the fig2a/fig2b/fig3 data files),
``validate`` (closed-form cross-check suite).  CSV output is byte-stable:
12 significant digits, '.' decimal separator, '\\n' line endings.  The
GAUSSIA_THREADS environment variable caps the sweep worker count.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import os
import sys

import numpy as np

from .closed_forms import closed_form_report, e2_closed
from .measurement import classical_correlations
from .phase_space import ModePartition, cm_to_json_dict
from .renyi import entanglement_estimate, mutual_information
from .tripartite import tripartite_report
from .unruh import FrameScenario, observed_pair

EXIT_BAD_INPUT = 2
EXIT_NUMERIC = 3
EXIT_UNWRITABLE = 4

FIGURE_SQUEEZING = float(np.arccosh(np.e) / 2.0)
FIGURE_R_MAX = 3.0
FIGURE_STEPS = 121

BASE_COLUMNS = ("I2", "J2_A_given_R", "J2_R_given_A",
                "D2_A_given_R", "D2_R_given_A", "E2")
FIG3_EXTRA_COLUMNS = ("Q2_trip", "E2_R_ARbar", "E2_R_A", "E2_R_Rbar",
                      "D2_R_ARbar", "D2_R_A", "D2_R_Rbar")

_AR = ModePartition({"A": (0,), "R": (1,)})


def _worker_count() -> int:
    cap = os.environ.get("GAUSSIA_THREADS")
    workers = os.cpu_count() or 1
    if cap is not None:
        workers = min(workers, max(int(cap), 1))
    return workers


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def analyze_scenario(scenario: FrameScenario, budget: int = 20000,
                     with_tripartite: bool = True) -> dict:
    """Full correlation report for one scenario, as a JSON-ready dict."""
    pair = observed_pair(scenario)
    i2 = mutual_information(pair, _AR).value
    j_on_r = classical_correlations(pair, _AR, measured="R")
    j_on_a = classical_correlations(pair, _AR, measured="A")
    e2 = entanglement_estimate(pair, _AR, budget=budget)
    w_eff = scenario.w if scenario.setting == "b" else 0.0
    r_eff = scenario.r if scenario.setting != "inertial" else 0.0

    report = {
        "scenario": scenario.to_json_dict(),
        "I2": i2,
        "J2": {
            "A_given_R": {
                "value": j_on_r.value.value,
                "seed": {"theta": j_on_r.seed.theta, "log_squeeze": j_on_r.seed.log_squeeze},
            },
            "R_given_A": {
                "value": j_on_a.value.value,
                "seed": {"theta": j_on_a.seed.theta, "log_squeeze": j_on_a.seed.log_squeeze},
            },
        },
        "D2": {
            "A_given_R": max(i2 - j_on_r.value.value, 0.0),
            "R_given_A": max(i2 - j_on_a.value.value, 0.0),
        },
        "E2": {
            "closed": e2_closed(scenario.s, w_eff, r_eff),
            "estimate": e2.value,
            "residual": e2.residual,
        },
        "closed_forms": closed_form_report(scenario).to_json_dict(),
        "observed_cm": cm_to_json_dict(pair),
    }
    if with_tripartite and scenario.setting == "a":
        trip = tripartite_report(scenario.global_cm(), hub="R", budget=budget)
        report["tripartite"] = trip.to_json_dict()
    return report


def _row_values(scenario: FrameScenario, budget: int, tripartite_columns: bool) -> dict:
    rep = analyze_scenario(scenario, budget=budget, with_tripartite=tripartite_columns)
    row = {
        "I2": rep["I2"],
        "J2_A_given_R": rep["J2"]["A_given_R"]["value"],
        "J2_R_given_A": rep["J2"]["R_given_A"]["value"],
        "D2_A_given_R": rep["D2"]["A_given_R"],
        "D2_R_given_A": rep["D2"]["R_given_A"],
        "E2": rep["E2"]["estimate"],
    }
    if tripartite_columns:
        trip = rep["tripartite"]
        row.update({
            "Q2_trip": trip["residual_discord"],
            "E2_R_ARbar": trip["E2_hub_vs_rest"],
            "E2_R_A": trip["E2_hub_first"],
            "E2_R_Rbar": trip["E2_hub_second"],
            "D2_R_ARbar": trip["D2_hub_given_rest"],
            "D2_R_A": trip["D2_hub_given_first"],
            "D2_R_Rbar": trip["D2_hub_given_second"],
        })
    return row


def _evaluate_rows(scenarios, budget, tripartite_columns):
    workers = _worker_count()
    if workers <= 1 or len(scenarios) <= 1:
        return [_row_values(sc, budget, tripartite_columns) for sc in scenarios]
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_row_values, sc, budget, tripartite_columns)
                   for sc in scenarios]
        return [f.result() for f in futures]


def _write_csv(path, header, rows) -> int:
    try:
        with open(path, "w", newline="") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
    except OSError as exc:
        print(f"cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    return 0


def cmd_analyze(args) -> int:
    try:
        if args.scenario == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.scenario) as fh:
                data = json.load(fh)
        scenario = FrameScenario.from_json_dict(data)
    except (OSError, json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        print(f"bad scenario input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        report = analyze_scenario(scenario, budget=args.budget)
    except Exception as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _sweep_scenarios(spec: dict):
    template = FrameScenario.from_json_dict(spec["scenario"])
    name = spec["parameter"]
    start, stop, steps = float(spec["start"]), float(spec["stop"]), int(spec["steps"])
    if name not in ("s", "r", "w"):
        raise ValueError(f"swept parameter must be s, r or w, got {name!r}")
    if name == "w" and template.setting != "b":
        raise ValueError("parameter w is only meaningful in setting b")
    if name == "r" and template.setting == "inertial":
        raise ValueError("parameter r is meaningless for the inertial setting")
    if start > stop:
        raise ValueError(f"start {start} exceeds stop {stop}")
    if steps < 2:
        raise ValueError(f"need at least 2 steps, got {steps}")
    values = np.linspace(start, stop, steps)
    base = template.to_json_dict()
    out = []
    for v in values:
        d = dict(base)
        d[name] = float(v)
        out.append(FrameScenario.from_json_dict(d))
    return name, values, out


def cmd_sweep(args) -> int:
    try:
        with open(args.spec) as fh:
            spec = json.load(fh)
        name, values, scenarios = _sweep_scenarios(spec)
        out_path = spec["out"]
        fmt = spec.get("format", "csv")
        if fmt not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {fmt!r}")
    except (OSError, json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        print(f"bad sweep spec: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        rows = _evaluate_rows(scenarios, args.budget, tripartite_columns=False)
    except Exception as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    header = (name,) + BASE_COLUMNS
    if fmt == "csv":
        code = _write_csv(out_path, header,
                          [[v] + [row[c] for c in BASE_COLUMNS]
                           for v, row in zip(values, rows)])
        if code:
            return code
    else:
        payload = [{name: float(v), **row} for v, row in zip(values, rows)]
        try:
            with open(out_path, "w", newline="") as fh:
                json.dump(payload, fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            print(f"cannot write {out_path}: {exc}", file=sys.stderr)
            return EXIT_UNWRITABLE
    print(f"wrote {out_path} ({len(rows)} rows)")
    return 0


def cmd_figure(args) -> int:
    rs = np.linspace(0.0, FIGURE_R_MAX, args.steps)
    s = FIGURE_SQUEEZING
    if args.which == "fig2a":
        scenarios = [FrameScenario("a", s=s, r=float(r)) for r in rs]
        tripartite_columns = False
    elif args.which == "fig2b":
        scenarios = [FrameScenario("b", s=s, r=float(r), w=2.0 * float(r)) for r in rs]
        tripartite_columns = False
    else:
        scenarios = [FrameScenario("a", s=s, r=float(r)) for r in rs]
        tripartite_columns = True
    try:
        rows = _evaluate_rows(scenarios, args.budget, tripartite_columns)
    except Exception as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    columns = BASE_COLUMNS + (FIG3_EXTRA_COLUMNS if tripartite_columns else ())
    header = ("r",) + columns
    code = _write_csv(args.out, header,
                      [[r] + [row[c] for c in columns] for r, row in zip(rs, rows)])
    if code:
        return code
    print(f"wrote {args.out} ({len(rows)} rows)")
    return 0


def cmd_validate(args) -> int:
    from .validation import run_validation

    checks = run_validation(grid=args.grid)
    failures = 0
    for chk in checks:
        status = "pass" if chk.ok else "FAIL"
        print(f"[{status}] {chk.name}: delta {chk.delta:.3e} (tol {chk.tol:.1e})")
        failures += 0 if chk.ok else 1
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return 1 if failures else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="gaussia",
        description="Correlations of scalar-field modes in noninertial frames")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full JSON report for one scenario")
    p.add_argument("--scenario", required=True, help="scenario JSON file, or - for stdin")
    p.add_argument("--budget", type=int, default=20000)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("sweep", help="sweep one parameter, emit CSV or JSON")
    p.add_argument("--spec", required=True, help="sweep spec JSON file")
    p.add_argument("--budget", type=int, default=20000)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figure", help="emit the data behind the paper figures")
    p.add_argument("--which", required=True, choices=("fig2a", "fig2b", "fig3"))
    p.add_argument("--out", required=True)
    p.add_argument("--steps", type=int, default=FIGURE_STEPS,
                   help="sweep resolution (default 121)")
    p.add_argument("--budget", type=int, default=20000)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("validate", help="run the closed-form cross-check suite")
    p.add_argument("--grid", choices=("fine", "coarse"), default="fine")
    p.set_defaults(func=cmd_validate)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
