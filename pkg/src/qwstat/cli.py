"""qwstat: classify coins, build stationary measures, verify, sweep.

Exit codes: 0 success, 2 classification failure (inconsistent or
non-unimodular eigenvalue), 3 stationarity drift above tolerance,
4 input/config error, 5 square-condition failure (Type 2 only).
"""

from __future__ import annotations

import argparse
import cmath
import io
import json
import os
import sys
from pathlib import Path

import numpy as np

from .coin import CoinMatrix, fourier, grover, stefanak_eta, stefanak_rho
from .errors import (
    InconsistentLambda,
    NonUnimodularLambda,
    QWalkError,
    SquareConditionFailed,
)
from .evolve import eigen_residual, verify_stationary
from .reduced import ReducedParams, type1_params, type2_params
from .serialize import (
    coin_from_json,
    measure_to_csv,
    measure_to_json,
    reduced_params_to_json,
    seeds_from_json,
    state_to_json,
)
from .state import Cycle, Topology, Window
from .stationary import (
    closed_form_measure_a1,
    closed_form_measure_type2,
    detect_period,
    measure_of,
    type1_state,
    type2_state,
)

EXIT_OK = 0
EXIT_CLASSIFY = 2
EXIT_DRIFT = 3
EXIT_INPUT = 4
EXIT_SQUARE = 5

DEFAULTS = {
    "schema": 1,
    "topology": "cycle:30",
    "steps": 100,
    "tol": 1e-9,
    "phi1": "1",
    "phi3": "1",
    "type2_seeds": {"0": [1.0, 0.0]},
}

_OMEGA = cmath.exp(2j * cmath.pi / 3)


class UsageError(Exception):
    """Bad command line or input file; maps to exit code 4."""


def parse_complex(text: str) -> complex:
    """Parse 'a+bi' literals plus the shorthands w and w2 (cube roots of 1)."""
    t = text.strip().lower()
    if t == "w":
        return _OMEGA
    if t == "w2":
        return _OMEGA * _OMEGA
    try:
        return complex(t.replace("i", "j"))
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r} (want a+bi, w, or w2)")


def parse_topology(text: str) -> Topology:
    kind, _, size = text.partition(":")
    try:
        if kind == "cycle":
            return Cycle(int(size))
        if kind == "window":
            return Window(int(size))
    except ValueError as exc:
        raise UsageError(f"bad topology {text!r}: {exc}")
    raise UsageError(f"bad topology {text!r} (want cycle:N or window:W)")


def load_coin(args) -> CoinMatrix:
    name = args.coin
    if name == "grover":
        return grover()
    if name == "fourier":
        return fourier()
    if name == "stefanak-eta":
        if args.eta is None:
            raise UsageError("--coin stefanak-eta needs --eta")
        return stefanak_eta(args.eta)
    if name == "stefanak-rho":
        if args.rho is None:
            raise UsageError("--coin stefanak-rho needs --rho")
        return stefanak_rho(args.rho)
    if name.startswith("custom:"):
        path = Path(name[len("custom:"):])
        try:
            obj = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read coin file {path}: {exc}")
        return coin_from_json(obj)
    raise UsageError(f"unknown coin {name!r}")


def load_seeds(args) -> dict[int, complex]:
    if args.seeds is None:
        return {0: 1.0 + 0.0j}
    path = Path(args.seeds)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read seeds file {path}: {exc}")
    return seeds_from_json(obj)


def resolve_tol(explicit: float | None) -> float:
    if explicit is not None:
        return explicit
    env = os.environ.get("QWSTAT_TOL")
    if env is not None:
        try:
            return float(env)
        except ValueError:
            raise UsageError(f"QWSTAT_TOL is not a float: {env!r}")
    return DEFAULTS["tol"]


def build_state(args, coin: CoinMatrix, topology: Topology):
    """Construct the requested eigenstate; returns (state, params, seeds)."""
    if args.type == 1:
        params = type1_params(coin)
        phi1 = parse_complex(args.phi1)
        phi3 = parse_complex(args.phi3)
        return type1_state(coin, params, phi1, phi3, topology), params, None
    params = type2_params(coin)
    seeds = load_seeds(args)
    return type2_state(coin, params, seeds, topology), params, seeds


def closed_form_column(args, coin, topology, seeds) -> np.ndarray | None:
    """Reference column for the measure when a closed form applies."""
    sites = topology.sites()
    if args.type == 2 and coin.family in ("grover", "stefanak-eta", "stefanak-rho"):
        return np.array(
            [closed_form_measure_type2(coin, seeds, int(x), topology) for x in sites]
        )
    if args.type == 1 and coin.family == "stefanak-eta":
        phi1 = parse_complex(args.phi1)
        if phi1 == parse_complex(args.phi3):
            eta = coin.family_param
            return np.array([closed_form_measure_a1(eta, phi1, int(x)) for x in sites])
    return None


def _atomic_write(path: Path, text: str) -> None:
    tmp = path.with_name(path.name + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _params_line(label: str, params: ReducedParams) -> str:
    return (
        f"{label}: OK lambda={params.lam:.12g} a1={params.a_tilde_1:.12g}"
        f" a2={params.a_tilde_2:.12g} residual={params.residual:.3e}"
    )


def cmd_classify(args) -> int:
    coin = load_coin(args)
    wanted = [1, 2] if args.type == "both" else [int(args.type)]
    report: dict = {"schema": 1, "coin": args.coin}
    failures: list[Exception] = []
    for t, fn in ((1, type1_params), (2, type2_params)):
        if t not in wanted:
            continue
        try:
            params = fn(coin)
            print(_params_line(f"type {t}", params))
            report[f"type{t}"] = reduced_params_to_json(params)
        except (InconsistentLambda, NonUnimodularLambda, SquareConditionFailed) as exc:
            print(f"type {t}: FAILED {type(exc).__name__}: {exc}")
            failures.append(exc)
            report[f"type{t}"] = {"error": type(exc).__name__, "message": str(exc)}
    if args.json:
        json.dump(report, sys.stdout, indent=2, sort_keys=True)
        print()
    if not failures:
        return EXIT_OK
    if any(isinstance(e, (InconsistentLambda, NonUnimodularLambda)) for e in failures):
        return EXIT_CLASSIFY
    return EXIT_SQUARE


def cmd_stationary(args) -> int:
    coin = load_coin(args)
    topology = parse_topology(args.topology)
    state, params, seeds = build_state(args, coin, topology)
    measure = measure_of(state)
    closed = closed_form_column(args, coin, topology, seeds)

    fmt = args.format
    if fmt is None:
        fmt = "json" if args.out is not None and args.out.endswith(".json") else "csv"
    if fmt == "csv":
        buf = io.StringIO()
        measure_to_csv(measure, buf, closed)
        payload = buf.getvalue()
    else:
        doc = measure_to_json(measure)
        if closed is not None:
            doc["closed_form"] = {str(int(x)): float(c) for x, c in zip(measure.sites, closed)}
        payload = json.dumps(doc, indent=2, sort_keys=True) + "\n"

    if args.out is None:
        sys.stdout.write(payload)
    else:
        _atomic_write(Path(args.out), payload)
    if args.state_out is not None:
        _atomic_write(
            Path(args.state_out),
            json.dumps(state_to_json(state), indent=2, sort_keys=True) + "\n",
        )

    period = detect_period(measure)
    print(f"period: {period if period is not None else 'none'}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    coin = load_coin(args)
    topology = parse_topology(args.topology)
    tol = resolve_tol(args.tol)
    state, params, _ = build_state(args, coin, topology)
    residual = eigen_residual(coin, state, params.lam)
    report = verify_stationary(coin, state, args.steps, tol=tol)
    doc = {
        "schema": 1,
        "coin": args.coin,
        "lambda": [params.lam.real, params.lam.imag],
        "eigen_residual": residual,
        "stationarity": report.as_dict(),
        "passed": report.passed,
    }
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    print()
    return EXIT_OK if report.passed else EXIT_DRIFT


def parse_grid(args) -> list[float]:
    if args.values is not None:
        try:
            return [float(v) for v in args.values.split(",") if v]
        except ValueError as exc:
            raise UsageError(f"bad --values: {exc}")
    if args.grid is not None:
        parts = args.grid.split(":")
        if len(parts) != 3:
            raise UsageError("--grid wants lo:hi:count")
        try:
            lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise UsageError(f"bad --grid: {exc}")
        if count < 1:
            raise UsageError("--grid count must be >= 1")
        return list(np.linspace(lo, hi, count))
    raise UsageError("sweep needs --grid or --values")


def cmd_sweep(args) -> int:
    if args.coin not in ("stefanak-eta", "stefanak-rho"):
        raise UsageError("sweep supports --coin stefanak-eta or stefanak-rho")
    topology = parse_topology(args.topology)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    points = []
    for value in parse_grid(args):
        sub = argparse.Namespace(**vars(args))
        if args.coin == "stefanak-eta":
            sub.eta = value
        else:
            sub.rho = value
        coin = load_coin(sub)
        state, params, seeds = build_state(sub, coin, topology)
        measure = measure_of(state)
        closed = closed_form_column(sub, coin, topology, seeds)

        name = f"{args.coin.replace('-', '_')}_{value:.6f}.csv"
        buf = io.StringIO()
        measure_to_csv(measure, buf, closed)
        _atomic_write(outdir / name, buf.getvalue())

        max_diff = (
            float(np.abs(measure.values - closed).max()) if closed is not None else None
        )
        points.append(
            {
                "value": value,
                "csv": name,
                "period": detect_period(measure),
                "max_abs_diff": max_diff,
            }
        )
    summary = {
        "schema": 1,
        "coin": args.coin,
        "type": args.type,
        "topology": args.topology,
        "points": points,
    }
    _atomic_write(outdir / "summary.json", json.dumps(summary, indent=2, sort_keys=True) + "\n")
    print(f"wrote {len(points)} measures to {outdir}")
    return EXIT_OK


def cmd_defaults(_args) -> int:
    json.dump(DEFAULTS, sys.stdout, indent=2, sort_keys=True)
    print()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwstat",
        description="Stationary measures of three-state quantum walks.",
        epilog=(
            "exit codes: 0 ok, 2 classification failure, 3 stationarity drift, "
            "4 input error, 5 square-condition failure. "
            "QWSTAT_TOL overrides the default tolerance (1e-9)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coin_p = argparse.ArgumentParser(add_help=False)
    coin_p.add_argument(
        "--coin",
        required=True,
        help="grover | fourier | stefanak-eta | stefanak-rho | custom:<file.json>",
    )
    coin_p.add_argument("--eta", type=float, help="parameter for stefanak-eta")
    coin_p.add_argument("--rho", type=float, help="parameter for stefanak-rho")

    state_p = argparse.ArgumentParser(add_help=False)
    state_p.add_argument("--type", type=int, choices=(1, 2), required=True)
    state_p.add_argument("--phi1", default=DEFAULTS["phi1"], help="type 1 seed (a+bi, w, w2)")
    state_p.add_argument("--phi3", default=DEFAULTS["phi3"], help="type 1 seed (a+bi, w, w2)")
    state_p.add_argument(
        "--seeds",
        help="type 2 seeds file, JSON {\"values\": {\"site\": [re, im]}}; "
        "missing sites read as 0; default: unit impulse at site 0",
    )
    state_p.add_argument(
        "--topology",
        default=DEFAULTS["topology"],
        help=f"cycle:N or window:W (default {DEFAULTS['topology']})",
    )

    p = sub.add_parser("classify", parents=[coin_p], help="run both classifications")
    p.add_argument("--type", choices=("1", "2", "both"), default="both")
    p.add_argument("--json", action="store_true", help="also emit a JSON report")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser(
        "stationary", parents=[coin_p, state_p], help="build a stationary measure"
    )
    p.add_argument("--out", help="output path (.csv or .json); default stdout CSV")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--state-out", help="also export the state as JSON")
    p.set_defaults(fn=cmd_stationary)

    p = sub.add_parser(
        "verify", parents=[coin_p, state_p], help="check stationarity by evolution"
    )
    p.add_argument("--steps", type=int, default=DEFAULTS["steps"])
    p.add_argument("--tol", type=float, help="drift tolerance (default QWSTAT_TOL or 1e-9)")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser(
        "sweep", parents=[coin_p, state_p], help="sweep a coin family parameter"
    )
    p.add_argument("--grid", help="lo:hi:count")
    p.add_argument("--values", help="comma-separated parameter values")
    p.add_argument("--outdir", required=True)
    p.set_defaults(fn=cmd_sweep)

    p = sub.add_parser("defaults", help="print the default configuration as JSON")
    p.set_defaults(fn=cmd_defaults)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InconsistentLambda, NonUnimodularLambda) as exc:
        print(f"classification failed: {exc}", file=sys.stderr)
        return EXIT_CLASSIFY
    except SquareConditionFailed as exc:
        print(f"classification failed: {exc}", file=sys.stderr)
        return EXIT_SQUARE
    except (UsageError, QWalkError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
