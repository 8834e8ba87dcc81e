"""Spatial grids, time grids and parameter samples for the benchmark models."""

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class GridInfo:
    """Metadata of a uniform finite-difference grid.

    ``points_per_axis`` counts grid points including boundaries; ``spacing``
    is ``domain_length / elements`` per axis, where ``elements`` is the number
    of cells (points minus one).
    """

    dimensionality: int
    points_per_axis: tuple
    spacing: tuple
    domain_length: tuple
    boundary_kind: str  # "periodic" | "dirichlet-ghost"

    def __post_init__(self):
        if self.dimensionality not in (1, 2):
            raise ValueError(f"dimensionality must be 1 or 2, got {self.dimensionality}")
        for npts, h, L in zip(self.points_per_axis, self.spacing, self.domain_length):
            elements = npts - 1
            if elements <= 0:
                raise ValueError("grid needs at least one element per axis")
            if not np.isclose(h, L / elements, rtol=1e-12):
                raise ValueError(f"spacing {h} inconsistent with {L}/{elements}")


@dataclass(frozen=True)
class TimeGrid:
    """Uniform time grid covering [0, T] with ``n_t`` stored instances.

    ``dt = T / n_t``.  Instances are ``t_i = i*dt`` for ``i = 0..n_t-1``;
    the state at ``t_0 = 0`` is the initial condition, so a trajectory over
    this grid requires ``n_t - 1`` implicit solves.  The last stored instance
    is ``T - dt``; "final time" in residual-based estimators refers to it.
    """

    T: float
    n_t: int

    def __post_init__(self):
        if self.T <= 0 or self.n_t < 1:
            raise ValueError(f"need T > 0 and n_t >= 1, got T={self.T}, n_t={self.n_t}")

    @property
    def dt(self):
        return self.T / self.n_t

    @property
    def instances(self):
        return np.arange(self.n_t) * self.dt


@dataclass
class ParameterSample:
    """A parameter vector with optional per-component closed bounds."""

    values: np.ndarray
    bounds: tuple = field(default=())

    def __post_init__(self):
        self.values = np.atleast_1d(np.asarray(self.values, dtype=float))

    def validate(self):
        for k, (lo, hi) in enumerate(self.bounds):
            v = self.values[k]
            if not (lo <= v <= hi):
                raise ValueError(f"parameter component {k}={v} outside [{lo}, {hi}]")
        return self


def as_parameter(mu):
    """Coerce a scalar / sequence / ParameterSample to a 1d float array."""
    if isinstance(mu, ParameterSample):
        return mu.values
    return np.atleast_1d(np.asarray(mu, dtype=float))
