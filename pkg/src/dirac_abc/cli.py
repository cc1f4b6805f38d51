"""Command-line front end.

All quantities are in natural units (hbar = c = 1). Floats are written with 17
significant digits so identical invocations give byte-identical output.

Exit status: 0 success, 2 invalid input, 3 no bound state / degenerate
condition, 4 oracle failure, 5 numerical failure (series or quadrature).
Errors are reported on stderr as a single ``error=<name> detail=<text>`` line.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import errors
from .heun import HeunParams, coefficients
from .model import (
    QuantumNumbers,
    SystemParams,
    compute_gamma,
    cyclotron_frequency,
    effective_frequency,
    heun_delta,
    kappa,
)
from .oracle import GridSpec, discretized_eigenvalues, refine_and_extrapolate
from .quantization import (
    DEFAULT_TOL,
    energy_from_frequency,
    solve_first_excited,
    solve_general,
    solve_ground_state,
)
from .wavefunction import RadialFunction, normalize, radial_function, sample

SOLVE_FIELDS = ["n", "ml", "s", "branch", "E", "omega", "omega_bar", "A_bar", "gamma", "kappa"]
SPECTRUM_FIELDS = ["n", "ml", "s", "branch", "E", "omega", "omega_bar", "gamma", "kappa"]
SCAN_FIELDS = ["param_value", "E_plus", "E_minus", "omega"]
WAVE_FIELDS = ["x", "phi", "phi_squared"]

EXIT_OK, EXIT_INVALID, EXIT_NO_STATE, EXIT_ORACLE, EXIT_NUMERIC = 0, 2, 3, 4, 5


class OracleFailure(errors.DiracABCError):
    """At least one state could not be confirmed by the grid oracle."""


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (errors.InvalidParameters, UsageError)):
        return EXIT_INVALID
    if isinstance(exc, (errors.NoBoundState, errors.DegenerateCondition, errors.ImaginaryEnergy)):
        return EXIT_NO_STATE
    if isinstance(exc, (errors.GridTooCoarse, OracleFailure)):
        return EXIT_ORACLE
    return EXIT_NUMERIC


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def default_tol() -> float:
    raw = os.environ.get("DIRAC_ABC_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise UsageError(f"DIRAC_ABC_TOL={raw!r} is not a number") from None
    if not tol > 0:
        raise UsageError("DIRAC_ABC_TOL must be > 0")
    return tol


def _fmt(value) -> str:
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return format(float(value), ".17g")


def _write(rows: list[dict], fields: list[str], fmt: str, out) -> None:
    if fmt == "json":
        payload = [{k: row[k] for k in fields} for row in rows]
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(fields)
    for row in rows:
        writer.writerow([_fmt(row[k]) for k in fields])


def _params(args, **override) -> SystemParams:
    values = dict(
        m0=args.m0, e_abs=args.e, Z=args.Z, phi_ab=args.phi, B=args.B,
        omega=getattr(args, "omega", None), gamma_form=args.gamma_form,
    )
    values.update(override)
    return SystemParams(**values)


def _state_row(state) -> dict:
    return {
        "n": state.qn.n,
        "ml": state.qn.m_l,
        "s": state.qn.s,
        "branch": state.qn.branch,
        "E": state.energy,
        "omega": state.omega,
        "omega_bar": state.omega_bar,
        "A_bar": state.a_bar_root,
        "gamma": state.derived.gamma,
        "kappa": state.derived.kappa,
    }


def _spins(args):
    return (args.s,) if args.s is not None else (1, -1)


def _branches(args):
    return (args.branch,) if args.branch is not None else (1, -1)


def solve_states(params: SystemParams, n: int, m_l: float, s: int, branch: int, tol: float, closed_form: bool):
    """States for one label set; closed forms for n <= 2 when asked or when Z|e|^2 = 0."""
    if n <= 2 and (closed_form or params.coulomb == 0):
        solver = solve_ground_state if n == 1 else solve_first_excited
        return list(solver(params, m_l, s, branch))
    return list(solve_general(params, QuantumNumbers(n, m_l, s, branch), tol))


def cmd_solve(args) -> list[dict]:
    params = _params(args)
    tol = args.tol if args.tol is not None else default_tol()
    rows, last_error = [], None
    for s in _spins(args):
        for b in _branches(args):
            try:
                states = solve_states(params, args.n, args.ml, s, b, tol, args.closed_form)
                rows.extend(_state_row(st) for st in states)
            except errors.NoBoundState as exc:
                last_error = exc
    if not rows:
        raise last_error or errors.NoBoundState("no state found")
    return rows


def _ml_values(ml_max: float):
    top = int(round(ml_max - 0.5))
    return [m + 0.5 for m in range(-top - 1, top + 1)]


def cmd_spectrum(args) -> list[dict]:
    probe = _params(args, omega=None)
    omega_c = cyclotron_frequency(probe)
    if args.omega_equals_half_cyclotron:
        omega = omega_c / 2
    elif args.omega is None:
        raise UsageError("spectrum needs --omega or --omega-equals-half-cyclotron")
    else:
        omega = args.omega
    params = _params(args, omega=omega)
    omega_bar = effective_frequency(omega, omega_c)
    rows = []
    for n in range(1, args.n_max + 1):
        for m_l in _ml_values(args.ml_max):
            for s in _spins(args):
                try:
                    gamma = compute_gamma(params, m_l)
                except errors.SupercriticalCoupling:
                    continue
                for b in _branches(args):
                    qn = QuantumNumbers(n, m_l, s, b)
                    try:
                        energy = energy_from_frequency(omega_bar, qn, params)
                    except errors.ImaginaryEnergy:
                        continue
                    rows.append({
                        "n": n, "ml": m_l, "s": s, "branch": b, "E": energy,
                        "omega": omega, "omega_bar": omega_bar, "gamma": gamma,
                        "kappa": kappa(n, gamma, s, m_l, params.ephi),
                    })
    return rows


def _scan_point(args, value, tol):
    override = {"ml": args.ml}
    field = {"Z": "Z", "phi": "phi_ab", "B": "B"}.get(args.param)
    if field is not None:
        params = _params(args, **{field: value})
    else:
        params = _params(args)
        override["ml"] = value
    out = {"param_value": value, "E_plus": math.nan, "E_minus": math.nan, "omega": math.nan}
    for b, key in ((1, "E_plus"), (-1, "E_minus")):
        try:
            states = solve_states(params, args.n, override["ml"], args.s, b, tol, True)
        except (errors.NoBoundState, errors.InvalidParameters, errors.DegenerateCondition):
            continue
        out[key] = states[0].energy
        out["omega"] = states[0].omega
    return out


def cmd_scan(args) -> list[dict]:
    if args.s is None:
        raise UsageError("scan needs --s")
    if args.param == "ml":
        values = _ml_values(max(abs(args.start), abs(args.stop)))
        values = [v for v in values if min(args.start, args.stop) <= v <= max(args.start, args.stop)]
    else:
        values = [float(v) for v in np.linspace(args.start, args.stop, args.num)]
    tol = args.tol if args.tol is not None else default_tol()
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        return list(pool.map(lambda v: _scan_point(args, v, tol), values))


def cmd_wavefunction(args) -> list[dict]:
    params = _params(args)
    tol = args.tol if args.tol is not None else default_tol()
    states = solve_states(params, args.n, args.ml, args.s, args.branch or 1, tol, False)
    if not 0 <= args.root_index < len(states):
        raise UsageError(f"--root-index must be in [0, {len(states) - 1}]")
    rf = normalize(radial_function(states[args.root_index]))
    x_max = args.x_max if args.x_max is not None else math.sqrt(2 * (rf.exponent + rf.n) + 40)
    table = sample(rf, np.linspace(0.0, x_max, args.points))
    return [dict(zip(WAVE_FIELDS, row)) for row in table]


def _read_rows(source: str) -> list[dict]:
    text = sys.stdin.read() if source == "-" else open(source, encoding="utf-8").read()
    stripped = text.lstrip()
    if stripped.startswith("["):
        return json.loads(stripped)
    return list(csv.DictReader(io.StringIO(text)))


def _radial_from_row(row) -> RadialFunction:
    n, s = int(row["n"]), int(row["s"])
    gamma, a_bar = float(row["gamma"]), float(row["A_bar"])
    if float(row["omega_bar"]) == 0:
        raise errors.DegenerateCondition("resonant row (omega_bar = 0) has no radial profile to verify")
    poly = coefficients(HeunParams(a_bar, heun_delta(gamma, s), 2 * n), n).coeffs
    return RadialFunction(gamma=gamma, s=s, n=n, a_bar=a_bar, poly=poly)


def cmd_verify(args) -> list[dict]:
    if args.input is not None:
        rows = _read_rows(args.input)
    else:
        rows = cmd_solve(args)
    grid = GridSpec(args.x_min, args.x_max, args.points)
    reports, failed = [], []
    for row in rows:
        rf = _radial_from_row(row)
        report = discretized_eigenvalues(rf, grid)
        entry = {"n": rf.n, "ml": float(row["ml"]), "s": rf.s, "branch": int(row["branch"])}
        entry.update(report.to_dict())
        if not args.no_refine:
            try:
                entry["extrapolated"] = refine_and_extrapolate(rf, grid)
            except errors.GridTooCoarse as exc:
                entry["extrapolated"] = None
                entry["status"] = "unverified"
                entry["detail"] = str(exc)
        if entry["status"] != "verified":
            failed.append(entry)
        reports.append(entry)
    args._failed = failed
    return reports


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    g = common.add_argument_group("physical parameters (natural units, hbar = c = 1)")
    g.add_argument("--m0", type=float, default=1.0, help="rest mass (default 1)")
    g.add_argument("--e", type=float, required=True, help="charge magnitude |e| (e.g. sqrt(alpha))")
    g.add_argument("--Z", type=float, default=0.0, help="atomic number (default 0)")
    g.add_argument("--phi", type=float, default=0.0, help="Aharonov-Bohm flux Phi/(2 pi) (default 0)")
    g.add_argument("--B", type=float, default=0.0, help="magnetic field (default 0)")
    g.add_argument("--gamma-form", choices=["linear", "as_printed"], default="linear")
    o = common.add_argument_group("output")
    o.add_argument("--format", choices=["csv", "json"], default="csv")
    o.add_argument("--out", help="output path (default stdout)")
    o.add_argument("--tol", type=float, default=None, help="root tolerance (default $DIRAC_ABC_TOL or 1e-12)")

    labels = _Parser(add_help=False)
    labels.add_argument("--n", type=int, required=True)
    labels.add_argument("--ml", type=float, required=True)
    labels.add_argument("--s", type=int, choices=[1, -1], default=None)
    labels.add_argument("--branch", type=int, choices=[1, -1], default=None)

    parser = _Parser(prog="dirac-abc", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", parents=[common], help="energies at a given oscillator frequency")
    p.add_argument("--omega", type=float, default=None)
    p.add_argument("--omega-equals-half-cyclotron", action="store_true")
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--ml-max", type=float, default=1.5)
    p.add_argument("--s", type=int, choices=[1, -1], default=None)
    p.add_argument("--branch", type=int, choices=[1, -1], default=None)
    p.set_defaults(func=cmd_spectrum, fields=SPECTRUM_FIELDS)

    p = sub.add_parser("solve", parents=[common, labels], help="quantized energies and frequencies")
    p.add_argument("--closed-form", action="store_true", help="use the n=1,2 closed forms")
    p.set_defaults(func=cmd_solve, fields=SOLVE_FIELDS)

    p = sub.add_parser("wavefunction", parents=[common, labels], help="normalized radial profile")
    p.add_argument("--root-index", type=int, default=0)
    p.add_argument("--x-max", type=float, default=None)
    p.add_argument("--points", type=int, default=401)
    p.set_defaults(func=cmd_wavefunction, fields=WAVE_FIELDS)

    p = sub.add_parser("scan", parents=[common], help="sweep one parameter")
    p.add_argument("--param", choices=["Z", "phi", "B", "ml"], required=True)
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--num", type=int, default=11)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ml", type=float, default=0.5)
    p.add_argument("--s", type=int, choices=[1, -1], default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan, fields=SCAN_FIELDS)

    p = sub.add_parser("verify", parents=[common], help="grid-oracle check of solved states")
    p.add_argument("--input", help="solve output (CSV or JSON); '-' for stdin")
    p.add_argument("--n", type=int)
    p.add_argument("--ml", type=float)
    p.add_argument("--s", type=int, choices=[1, -1], default=None)
    p.add_argument("--branch", type=int, choices=[1, -1], default=None)
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--points", type=int, default=8000)
    p.add_argument("--x-min", type=float, default=1e-4)
    p.add_argument("--x-max", type=float, default=12.0)
    p.add_argument("--no-refine", action="store_true")
    p.set_defaults(func=cmd_verify, fields=None)
    return parser


def _emit(args, rows):
    out = open(args.out, "w", encoding="utf-8", newline="") if args.out else sys.stdout
    try:
        if args.fields is None:
            out.write(json.dumps(rows, indent=2) + "\n")
        else:
            _write(rows, args.fields, args.format, out)
    finally:
        if args.out:
            out.close()


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify" and args.input is None and (args.n is None or args.ml is None):
            raise UsageError("verify needs --input or both --n and --ml")
        rows = args.func(args)
        _emit(args, rows)
        if getattr(args, "_failed", None):
            raise OracleFailure(f"{len(args._failed)} state(s) not confirmed by the grid oracle")
    except (errors.DiracABCError, UsageError) as exc:
        detail = " ".join(str(exc).split())
        print(f"error={type(exc).__name__} detail={detail}", file=sys.stderr)
        return exit_code_for(exc)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
