"""Lattice topologies and the state/measure containers the walk acts on."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

__all__ = ["Window", "Cycle", "Topology", "WaveState", "Measure"]


@dataclass(frozen=True)
class Window:
    """Symmetric window of sites -W..W standing in for the integer line.

    Evolution on a window truncates amplitude that steps outside (absorbing
    edges), so results are only trusted on causally clean interior sites.
    """

    half_width: int

    def __post_init__(self):
        if int(self.half_width) < 1:
            raise ValueError(f"window half-width must be >= 1, got {self.half_width}")
        object.__setattr__(self, "half_width", int(self.half_width))

    @property
    def n_sites(self) -> int:
        return 2 * self.half_width + 1

    def sites(self) -> np.ndarray:
        return np.arange(-self.half_width, self.half_width + 1)

    def index_of(self, x: int) -> int:
        if not -self.half_width <= x <= self.half_width:
            raise ValueError(f"site {x} outside window [-{self.half_width}, {self.half_width}]")
        return int(x) + self.half_width

    def wrap(self, x: int) -> int:
        return int(x)


@dataclass(frozen=True)
class Cycle:
    """Ring of n >= 3 sites with periodic wrap-around."""

    n: int

    def __post_init__(self):
        if int(self.n) < 3:
            raise ValueError(f"cycle needs at least 3 sites, got {self.n}")
        object.__setattr__(self, "n", int(self.n))

    @property
    def n_sites(self) -> int:
        return self.n

    def sites(self) -> np.ndarray:
        return np.arange(self.n)

    def index_of(self, x: int) -> int:
        return int(x) % self.n

    def wrap(self, x: int) -> int:
        return int(x) % self.n


Topology = Union[Window, Cycle]


@dataclass(frozen=True, eq=False)
class WaveState:
    """Amplitude triple (left, stay, right) on every site of a topology.

    Row i of ``amplitudes`` belongs to ``topology.sites()[i]``.
    """

    topology: Topology
    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.array(self.amplitudes, dtype=np.complex128)
        expected = (self.topology.n_sites, 3)
        if a.shape != expected:
            raise ValueError(f"amplitudes must have shape {expected}, got {a.shape}")
        a.setflags(write=False)
        object.__setattr__(self, "amplitudes", a)

    def amplitude(self, x: int) -> np.ndarray:
        """The (left, stay, right) triple at site x (cycles wrap)."""
        return self.amplitudes[self.topology.index_of(x)]

    def norm_squared(self) -> float:
        return float((np.abs(self.amplitudes) ** 2).sum())

    @property
    def sites(self) -> np.ndarray:
        return self.topology.sites()


@dataclass(frozen=True, eq=False)
class Measure:
    """Nonnegative site weights, usually the squared norms of a state."""

    topology: Topology
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=np.float64)
        if v.shape != (self.topology.n_sites,):
            raise ValueError(f"values must have shape ({self.topology.n_sites},), got {v.shape}")
        if (v < 0).any():
            raise ValueError("measure values must be nonnegative")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def value(self, x: int) -> float:
        return float(self.values[self.topology.index_of(x)])

    @property
    def sites(self) -> np.ndarray:
        return self.topology.sites()
