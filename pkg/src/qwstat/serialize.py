"""JSON and CSV interchange for coins, states, measures, and seed files.

Conventions: complex numbers are [re, im] pairs; every emitted JSON document
carries ``"schema": 1``; CSV uses LF line endings and repr formatting, which
round-trips doubles exactly.
"""

from __future__ import annotations

import json
from typing import IO, Mapping

import numpy as np

from .coin import CoinMatrix, make_coin
from .reduced import ReducedParams
from .state import Cycle, Measure, Topology, WaveState, Window

__all__ = [
    "SCHEMA_VERSION",
    "coin_to_json",
    "coin_from_json",
    "topology_to_json",
    "topology_from_json",
    "state_to_json",
    "state_from_json",
    "measure_to_json",
    "measure_from_json",
    "measure_to_csv",
    "seeds_to_json",
    "seeds_from_json",
    "reduced_params_to_json",
]

SCHEMA_VERSION = 1


def _pair(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def _unpair(obj) -> complex:
    re, im = obj
    return complex(float(re), float(im))


def coin_to_json(coin: CoinMatrix) -> dict:
    matrix = [[_pair(coin.matrix[i, j]) for j in range(3)] for i in range(3)]
    return {"schema": SCHEMA_VERSION, "matrix": matrix}


def coin_from_json(obj, tol: float | None = None) -> CoinMatrix:
    """Read a coin from a parsed JSON document (wrapped or bare 3x3 array)."""
    matrix = obj["matrix"] if isinstance(obj, dict) else obj
    m = np.array([[_unpair(cell) for cell in row] for row in matrix])
    return make_coin(m) if tol is None else make_coin(m, tol=tol)


def topology_to_json(topology: Topology) -> dict:
    if isinstance(topology, Cycle):
        return {"kind": "cycle", "n": topology.n}
    return {"kind": "window", "half_width": topology.half_width}


def topology_from_json(obj) -> Topology:
    if obj["kind"] == "cycle":
        return Cycle(int(obj["n"]))
    if obj["kind"] == "window":
        return Window(int(obj["half_width"]))
    raise ValueError(f"unknown topology kind {obj['kind']!r}")


def state_to_json(state: WaveState) -> dict:
    amplitudes = {
        str(int(x)): [_pair(c) for c in state.amplitudes[i]]
        for i, x in enumerate(state.sites)
    }
    return {
        "schema": SCHEMA_VERSION,
        "topology": topology_to_json(state.topology),
        "amplitudes": amplitudes,
    }


def state_from_json(obj) -> WaveState:
    topology = topology_from_json(obj["topology"])
    amps = np.zeros((topology.n_sites, 3), dtype=np.complex128)
    for key, triple in obj["amplitudes"].items():
        amps[topology.index_of(int(key))] = [_unpair(c) for c in triple]
    return WaveState(topology, amps)


def measure_to_json(measure: Measure) -> dict:
    values = {str(int(x)): float(v) for x, v in zip(measure.sites, measure.values)}
    return {
        "schema": SCHEMA_VERSION,
        "topology": topology_to_json(measure.topology),
        "values": values,
    }


def measure_from_json(obj) -> Measure:
    topology = topology_from_json(obj["topology"])
    values = np.zeros(topology.n_sites)
    for key, v in obj["values"].items():
        values[topology.index_of(int(key))] = float(v)
    return Measure(topology, values)


def measure_to_csv(
    measure: Measure,
    out: IO[str],
    closed_form: np.ndarray | None = None,
) -> None:
    """Write ``x,mu`` rows (plus ``mu_closed_form`` when supplied)."""
    if closed_form is None:
        out.write("x,mu\n")
        for x, v in zip(measure.sites, measure.values):
            out.write(f"{int(x)},{float(v)!r}\n")
    else:
        out.write("x,mu,mu_closed_form\n")
        for x, v, c in zip(measure.sites, measure.values, closed_form):
            out.write(f"{int(x)},{float(v)!r},{float(c)!r}\n")


def seeds_to_json(seeds: Mapping[int, complex]) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "values": {str(int(x)): _pair(v) for x, v in seeds.items()},
    }


def seeds_from_json(obj) -> dict[int, complex]:
    values = obj["values"] if isinstance(obj, dict) and "values" in obj else obj
    return {int(k): _unpair(v) for k, v in values.items()}


def reduced_params_to_json(params: ReducedParams) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "type": params.walk_type.value,
        "lambda": _pair(params.lam),
        "a1": _pair(params.a_tilde_1),
        "a2": _pair(params.a_tilde_2),
        "residual": params.residual,
    }


def dump(obj: dict, out: IO[str]) -> None:
    json.dump(obj, out, indent=2, sort_keys=True)
    out.write("\n")
