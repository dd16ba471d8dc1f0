"""The 2x2 reduced matrix and the Type 1 / Type 2 coin classification.

For a candidate eigenvalue lambda on the unit circle, the stay amplitude can
be eliminated from the three-component eigenvalue equations (possible as long
as |a22| != 1), leaving a two-term recursion for the left and right
amplitudes governed by the reduced matrix

    A_re(lambda) = 1/(lambda - a22) * [ lambda a11 - B   lambda a13 + C ]
                                      [ lambda a31 + D   lambda a33 - E ]

with B, C, D, E the coin minors.  Two structures make the recursion solvable
in closed form:

- Type 1: lambda = -C/a13 = -D/a31 makes A_re diagonal.  Its entries are
  a1 = a11 - a13 a21 / a23 and a2 = a33 - a23 a31 / a21.
- Type 2: lambda = B/a11 = E/a33 makes A_re anti-diagonal, with entries
  a1 = a13 - a11 a23 / a21 and a2 = a31 - a21 a33 / a23.  Closing the
  resulting two-step recursion additionally forces lambda^2 = a1 a2; coins
  violating that (the Fourier coin does) admit no Type 2 eigenstate.

Both classifications need every coin entry nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .coin import CoinMatrix, minors
from .errors import (
    CentralReflection,
    InconsistentLambda,
    NonUnimodularLambda,
    SquareConditionFailed,
    ZeroEntry,
)

__all__ = [
    "CONSISTENCY_TOL",
    "ZERO_ENTRY_TOL",
    "CENTRAL_TOL",
    "WalkType",
    "ReducedMatrix",
    "ReducedParams",
    "reduced_matrix",
    "type1_params",
    "type2_params",
]

# One order looser than the unitarity tolerance: the lambda candidates are
# quotients of products of entries and absorb a few rounding steps.
CONSISTENCY_TOL = 1e-10
ZERO_ENTRY_TOL = 1e-14
CENTRAL_TOL = 1e-10


class WalkType(Enum):
    TYPE1 = 1
    TYPE2 = 2


@dataclass(frozen=True, eq=False)
class ReducedMatrix:
    """The 2x2 reduced matrix evaluated at a specific unimodular lambda."""

    entries: np.ndarray
    lam: complex


@dataclass(frozen=True)
class ReducedParams:
    """Result of a successful classification: (lambda, a1, a2) plus the type.

    ``residual`` is the modulus of the difference between the two defining
    expressions for lambda; it bounds how sharply the classification held.
    """

    walk_type: WalkType
    lam: complex
    a_tilde_1: complex
    a_tilde_2: complex
    residual: float


def _require_reducible(coin: CoinMatrix) -> None:
    a = coin.matrix
    for i in range(3):
        for j in range(3):
            if abs(a[i, j]) <= ZERO_ENTRY_TOL:
                raise ZeroEntry(i + 1, j + 1)
    if abs(abs(a[1, 1]) - 1.0) <= CENTRAL_TOL:
        raise CentralReflection(abs(a[1, 1]))


def reduced_matrix(coin: CoinMatrix, lam: complex) -> ReducedMatrix:
    """Evaluate the reduced matrix at a unimodular lambda.

    Raises ZeroEntry / CentralReflection when the coin is outside the scope
    of the reduction, and NonUnimodularLambda when |lambda| is more than
    1e-10 off the unit circle.
    """
    _require_reducible(coin)
    lam = complex(lam)
    if abs(abs(lam) - 1.0) > CONSISTENCY_TOL:
        raise NonUnimodularLambda(lam)
    a = coin.matrix
    m = minors(coin)
    top = np.array(
        [
            [lam * a[0, 0] - m.B, lam * a[0, 2] + m.C],
            [lam * a[2, 0] + m.D, lam * a[2, 2] - m.E],
        ],
        dtype=np.complex128,
    )
    entries = top / (lam - a[1, 1])
    entries.setflags(write=False)
    return ReducedMatrix(entries, lam)


def _check_unimodular(lam: complex, tol: float) -> None:
    if abs(abs(lam) - 1.0) > tol:
        raise NonUnimodularLambda(lam)


def type1_params(coin: CoinMatrix, tol: float = CONSISTENCY_TOL) -> ReducedParams:
    """Classify a coin as Type 1 and extract (lambda, a1, a2).

    Succeeds iff -C/a13 and -D/a31 agree within ``tol`` and lie on the unit
    circle.  The returned a1, a2 are the closed-form diagonal entries; as a
    guard, the reduced matrix at lambda is recomputed and must actually be
    diagonal with those entries.
    """
    _require_reducible(coin)
    a = coin.matrix
    m = minors(coin)
    lam1 = -m.C / a[0, 2]
    lam2 = -m.D / a[2, 0]
    if abs(lam1 - lam2) > tol:
        raise InconsistentLambda(lam1, lam2, "-C/a13 vs -D/a31")
    _check_unimodular(lam1, tol)
    a1 = a[0, 0] - a[0, 2] * a[1, 0] / a[1, 2]
    a2 = a[2, 2] - a[1, 2] * a[2, 0] / a[1, 0]

    rm = reduced_matrix(coin, lam1).entries
    off = max(abs(rm[0, 1]), abs(rm[1, 0]))
    drift = max(abs(rm[0, 0] - a1), abs(rm[1, 1] - a2))
    if off > tol or drift > tol:
        raise InconsistentLambda(lam1, lam2, "reduced matrix is not diagonal with (a1, a2)")

    return ReducedParams(WalkType.TYPE1, complex(lam1), complex(a1), complex(a2), abs(lam1 - lam2))


def type2_params(coin: CoinMatrix, tol: float = CONSISTENCY_TOL) -> ReducedParams:
    """Classify a coin as Type 2 and extract (lambda, a1, a2).

    Succeeds iff B/a11 and E/a33 agree within ``tol``, lie on the unit
    circle, and lambda^2 = a1 a2 within ``tol``.  The last condition is what
    closes the anti-diagonal two-step recursion; SquareConditionFailed
    carries the computed lambda, a1, a2 so callers can report them.
    """
    _require_reducible(coin)
    a = coin.matrix
    m = minors(coin)
    lam1 = m.B / a[0, 0]
    lam2 = m.E / a[2, 2]
    if abs(lam1 - lam2) > tol:
        raise InconsistentLambda(lam1, lam2, "B/a11 vs E/a33")
    _check_unimodular(lam1, tol)
    a1 = a[0, 2] - a[0, 0] * a[1, 2] / a[1, 0]
    a2 = a[2, 0] - a[1, 0] * a[2, 2] / a[1, 2]
    if abs(lam1 * lam1 - a1 * a2) > tol:
        raise SquareConditionFailed(complex(lam1), complex(a1), complex(a2))

    rm = reduced_matrix(coin, lam1).entries
    diag = max(abs(rm[0, 0]), abs(rm[1, 1]))
    drift = max(abs(rm[0, 1] - a1), abs(rm[1, 0] - a2))
    if diag > tol or drift > tol:
        raise InconsistentLambda(lam1, lam2, "reduced matrix is not anti-diagonal with (a1, a2)")

    return ReducedParams(WalkType.TYPE2, complex(lam1), complex(a1), complex(a2), abs(lam1 - lam2))
