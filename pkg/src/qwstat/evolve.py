"""Brute-force time evolution: the oracle the closed forms are checked against.

One step sends the state Psi to

    Psi'(x) = P Psi(x+1) + R Psi(x) + Q Psi(x-1)

with P, R, Q the row split of the coin.  On a cycle the neighbor indices
wrap and the step is exactly unitary; on a window, amplitude stepping
outside is dropped (tracked as leaked norm) and only interior sites evolve
as they would on the full line.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coin import CoinMatrix
from .errors import NonUnimodularLambda, WindowTooSmall
from .state import Cycle, WaveState, Window

__all__ = ["step", "eigen_residual", "StationarityReport", "verify_stationary"]


def step(coin: CoinMatrix, state: WaveState) -> WaveState:
    """Apply the walk operator once."""
    amps = state.amplitudes
    a = coin.matrix
    if isinstance(state.topology, Cycle):
        up = np.roll(amps, -1, axis=0)
        down = np.roll(amps, 1, axis=0)
    else:
        pad = np.zeros((1, 3), dtype=np.complex128)
        up = np.vstack([amps[1:], pad])
        down = np.vstack([pad, amps[:-1]])
    out = np.empty_like(amps)
    out[:, 0] = up @ a[0]
    out[:, 1] = amps @ a[1]
    out[:, 2] = down @ a[2]
    return WaveState(state.topology, out)


def eigen_residual(coin: CoinMatrix, state: WaveState, lam: complex) -> float:
    """Max pointwise residual of the eigenvalue relation (step Psi)(x) = lam Psi(x).

    All sites are checked on a cycle; on a window only the interior
    -W+1..W-1, where one step agrees with the full-line operator.  The max
    norm localizes a violation to a site instead of smearing it.
    """
    lam = complex(lam)
    if abs(abs(lam) - 1.0) > 1e-10:
        raise NonUnimodularLambda(lam)
    diff = step(coin, state).amplitudes - lam * state.amplitudes
    if isinstance(state.topology, Window):
        diff = diff[1:-1]
    return float(np.abs(diff).max())


@dataclass(frozen=True)
class StationarityReport:
    """Outcome of evolving a state and watching its measure.

    ``interior`` is the (lo, hi) site range the drift was checked on at the
    final step; on a window it shrinks by one site per step from each end.
    ``leaked_norm`` is the total squared amplitude absorbed at window edges
    (about zero on cycles).
    """

    steps: int
    max_measure_drift: float
    interior: tuple[int, int]
    leaked_norm: float
    tol: float
    passed: bool

    def as_dict(self) -> dict:
        return {
            "schema": 1,
            "steps": self.steps,
            "max_measure_drift": self.max_measure_drift,
            "interior": list(self.interior),
            "leaked_norm": self.leaked_norm,
            "tol": self.tol,
            "passed": self.passed,
        }


def verify_stationary(
    coin: CoinMatrix,
    state: WaveState,
    n_steps: int,
    tol: float = 1e-9,
) -> StationarityReport:
    """Evolve n_steps times and record the worst measure drift from step 0.

    On a window the comparison at step k is restricted to sites
    -W+k..W-k, the region boundary truncation cannot have reached, and
    n_steps must stay below the half-width.
    """
    if n_steps < 1:
        raise ValueError(f"n_steps must be >= 1, got {n_steps}")
    topo = state.topology
    windowed = isinstance(topo, Window)
    if windowed and n_steps >= topo.half_width:
        raise WindowTooSmall(n_steps, topo.half_width)

    mu0 = (np.abs(state.amplitudes) ** 2).sum(axis=1)
    norm0 = float(mu0.sum())
    current = state
    drift = 0.0
    for k in range(1, n_steps + 1):
        current = step(coin, current)
        mu = (np.abs(current.amplitudes) ** 2).sum(axis=1)
        if windowed:
            drift = max(drift, float(np.abs(mu[k:-k] - mu0[k:-k]).max()))
        else:
            drift = max(drift, float(np.abs(mu - mu0).max()))

    leaked = max(0.0, norm0 - current.norm_squared())
    if windowed:
        interior = (-topo.half_width + n_steps, topo.half_width - n_steps)
    else:
        interior = (0, topo.n - 1)
    return StationarityReport(
        steps=n_steps,
        max_measure_drift=drift,
        interior=interior,
        leaked_norm=leaked,
        tol=float(tol),
        passed=drift <= tol,
    )
