"""Sampled eigenfunctions and their quadrature."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

# largest admissible tail fraction of the norm outside the sampled grid
TAIL_RTOL = 1e-10


@dataclass(frozen=True)
class Profile:
    """An eigenfunction sampled on a grid.

    ``measure`` is ``"rho"`` for radial profiles (norm weight rho d rho) and
    ``"x"`` for one-dimensional ones (weight dx).  ``norm`` is the integral
    of ``|f|^2`` against that measure before any rescaling.
    """

    grid: np.ndarray
    values: np.ndarray
    norm: float
    node_count: int
    measure: str = "rho"

    @property
    def rho_grid(self) -> np.ndarray:
        return self.grid

    def rows(self):
        for c, v in zip(self.grid, self.values):
            yield float(c), float(v)


RadialProfile = Profile


def check_grid(grid, positive: bool) -> np.ndarray:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("grid must be a non-empty 1-D sequence")
    if not np.all(np.isfinite(grid)):
        raise ValueError("grid must be finite")
    if grid.size > 1 and not np.all(np.diff(grid) > 0):
        raise ValueError("grid must be strictly ascending")
    if positive and grid[0] <= 0:
        raise ValueError("radial grid must be strictly positive")
    return grid


def count_nodes(values) -> int:
    """Sign changes of ``values``, skipping exact zeros."""
    signs = np.sign(np.asarray(values, dtype=float))
    signs = signs[signs != 0]
    if signs.size < 2:
        return 0
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def integrate(grid, integrand) -> float:
    """Composite Simpson rule on a (possibly non-uniform) grid."""
    grid = np.asarray(grid, dtype=float)
    integrand = np.asarray(integrand, dtype=float)
    if grid.size < 2:
        return 0.0
    return float(simpson(integrand, x=grid))


def measure_integral(grid, values, measure: str) -> float:
    """Integral of ``values`` against ``rho d rho`` or ``dx``.

    For the radial measure the segment ``[0, grid[0]]`` is included: the
    integrand carries a factor rho and so vanishes at the origin.
    """
    grid = np.asarray(grid, dtype=float)
    values = np.asarray(values, dtype=float)
    if measure == "rho":
        return integrate(np.concatenate(([0.0], grid)), np.concatenate(([0.0], values * grid)))
    if measure == "x":
        return integrate(grid, values)
    raise ValueError(f"unknown measure {measure!r}")


def overlap(a: Profile, b: Profile) -> float:
    """Inner product of two profiles sampled on the same grid."""
    if a.measure != b.measure or not np.array_equal(a.grid, b.grid):
        raise ValueError("profiles must share grid and measure")
    return measure_integral(a.grid, a.values * b.values, a.measure)
