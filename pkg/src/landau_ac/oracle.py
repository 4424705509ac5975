"""Finite-difference eigenvalue oracles for the squared radial and slab equations.

Nothing here uses a closed-form energy: each solver builds a symmetric
tridiagonal matrix for the differential operator and hands it to LAPACK's
bisection/inverse-iteration driver.  The eigenvalues returned are
``eps = E**2 - m**2 - k**2`` (radial) and the bare oscillator eigenvalues
(slab), i.e. before the constant spin term ``mu*lam`` is added.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .model import PhysicalParams

MIN_POINTS = 100
# required decay of the Gaussian envelope at a Dirichlet wall, relative to its peak
ENVELOPE_RTOL = 1e-12
_ENVELOPE_LOG = -math.log(ENVELOPE_RTOL)

DEFAULT_POINTS = 4000
RADIAL_DOMAIN_WIDTHS = 12.0
CARTESIAN_HALF_WIDTHS = 10.0


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid of ``n_points`` cells over ``[x_min, x_max]``.

    The spacing is ``(x_max - x_min) / n_points`` so that doubling
    ``n_points`` halves it exactly.
    """

    n_points: int
    x_min: float
    x_max: float

    def __post_init__(self):
        if isinstance(self.n_points, bool) or int(self.n_points) != self.n_points:
            raise ValueError("n_points must be an integer")
        object.__setattr__(self, "n_points", int(self.n_points))
        if self.n_points < MIN_POINTS:
            raise ValueError(f"n_points must be at least {MIN_POINTS}, got {self.n_points}")
        if not (math.isfinite(self.x_min) and math.isfinite(self.x_max)):
            raise ValueError("domain bounds must be finite")
        if not self.x_min < self.x_max:
            raise ValueError(f"empty domain ({self.x_min}, {self.x_max})")

    @property
    def step(self) -> float:
        return (self.x_max - self.x_min) / self.n_points

    def refined(self) -> "GridSpec":
        return replace(self, n_points=2 * self.n_points)

    def to_dict(self) -> dict:
        return {"n_points": self.n_points, "x_min": self.x_min, "x_max": self.x_max}


@dataclass(frozen=True)
class OracleResult:
    eigenvalues: np.ndarray
    grid: GridSpec
    richardson_estimate: np.ndarray = field(default_factory=lambda: np.empty(0))
    max_rel_discrepancy: float | None = None

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "grid": self.grid.to_dict(),
            "richardson_estimate": [float(v) for v in self.richardson_estimate],
            "max_rel_discrepancy": self.max_rel_discrepancy,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def compared_to(self, references: Sequence[float]) -> "OracleResult":
        """Attach the worst relative deviation of the raw eigenvalues from ``references``."""
        return replace(self, max_rel_discrepancy=max_rel_error(self.eigenvalues, references))


def max_rel_error(values, references) -> float:
    values = np.asarray(values, dtype=float)
    references = np.asarray(references, dtype=float)
    if values.shape != references.shape:
        raise ValueError(f"got {values.size} values for {references.size} references")
    return float(np.max(np.abs(values - references) / np.abs(references)))


def _lowest(diag: np.ndarray, off: np.ndarray, m_levels: int) -> np.ndarray:
    if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(off))):
        raise ValueError("non-finite entry in the finite-difference matrix")
    if m_levels < 1:
        raise ValueError("m_levels must be at least 1")
    if m_levels > diag.size:
        raise ValueError("more levels requested than grid unknowns")
    vals = eigh_tridiagonal(
        diag, off, eigvals_only=True, select="i", select_range=(0, m_levels - 1)
    )
    return np.sort(vals)


def default_radial_grid(params: PhysicalParams, n_points: int = DEFAULT_POINTS) -> GridSpec:
    width = params.require_bound().coupling ** -0.5
    return GridSpec(n_points, 0.0, RADIAL_DOMAIN_WIDTHS * width)


def default_cartesian_grid(params: PhysicalParams, p_y: float = 0.0, n_points: int = DEFAULT_POINTS) -> GridSpec:
    ml = params.require_bound().coupling
    center = -p_y / ml
    half = CARTESIAN_HALF_WIDTHS * ml**-0.5
    return GridSpec(n_points, center - half, center + half)


def radial_fd_spectrum(
    params: PhysicalParams,
    l: int,
    grid: GridSpec | None = None,
    m_levels: int = 5,
    references: Sequence[float] | None = None,
) -> OracleResult:
    """Lowest eigenvalues of the squared radial operator

        -(1/rho)(rho R')' + [l**2/rho**2 + (ml rho)**2/4 + (l + 1) ml] R = eps R,

    with ``ml = mu*lam``.  The grid is cell-centred, ``rho_j = x_min + (j - 1/2) h``,
    with zero flux through the inner face (regularity on the axis) and a
    Dirichlet wall at ``x_max``.  The flux form is made symmetric by the
    scaling ``u_j = sqrt(rho_j) R_j``.
    """
    ml = params.require_bound().coupling
    if grid is None:
        grid = default_radial_grid(params)
    if grid.x_min < 0:
        raise ValueError("radial domain must start at rho >= 0")
    if ml * grid.x_max**2 / 4 < _ENVELOPE_LOG:
        raise ValueError(
            f"radial domain ends at {grid.x_max:g}; the Gaussian envelope there exceeds "
            f"{ENVELOPE_RTOL:g} of its peak"
        )
    h = grid.step
    idx = np.arange(grid.n_points)
    rho = grid.x_min + (idx + 0.5) * h
    faces = grid.x_min + np.arange(grid.n_points + 1) * h
    faces[0] = 0.0
    potential = l * l / rho**2 + (ml * rho) ** 2 / 4 + (l + 1) * ml
    diag = (faces[1:] + faces[:-1]) / (rho * h * h) + potential
    off = -faces[1:-1] / (h * h * np.sqrt(rho[:-1] * rho[1:]))
    result = OracleResult(eigenvalues=_lowest(diag, off, m_levels), grid=grid)
    return result.compared_to(references) if references is not None else result


def cartesian_fd_spectrum(
    params: PhysicalParams,
    p_y: float = 0.0,
    grid: GridSpec | None = None,
    m_levels: int = 5,
    references: Sequence[float] | None = None,
) -> OracleResult:
    """Lowest eigenvalues of ``-d2/dx2 + (ml)**2 (x + p_y/ml)**2`` on a Dirichlet grid.

    The potential coefficient is ``(mu*lam)**2``, the one that gives
    oscillator frequency ``2 mu lam``.  Interior nodes are
    ``x_min + j h`` for ``j = 1..n_points-1``.
    """
    ml = params.require_bound().coupling
    center = -p_y / ml
    if grid is None:
        grid = default_cartesian_grid(params, p_y)
    reach = min(grid.x_max - center, center - grid.x_min)
    if reach <= 0 or ml * reach**2 / 2 < _ENVELOPE_LOG:
        raise ValueError(
            f"domain [{grid.x_min:g}, {grid.x_max:g}] does not contain the Gaussian envelope "
            f"around x0={center:g} to {ENVELOPE_RTOL:g}"
        )
    h = grid.step
    x = grid.x_min + np.arange(1, grid.n_points) * h
    diag = 2.0 / (h * h) + (ml * (x - center)) ** 2
    off = np.full(x.size - 1, -1.0 / (h * h))
    result = OracleResult(eigenvalues=_lowest(diag, off, m_levels), grid=grid)
    return result.compared_to(references) if references is not None else result


def richardson_refine(
    result_coarse: OracleResult,
    result_fine: OracleResult,
    references: Sequence[float] | None = None,
) -> OracleResult:
    """Cancel the leading ``h**2`` error: ``(4 fine - coarse) / 3`` per level.

    Returns the fine result with the extrapolated values attached.
    """
    c, f = result_coarse.grid, result_fine.grid
    if (c.x_min, c.x_max) != (f.x_min, f.x_max):
        raise ValueError("coarse and fine grids must cover the same domain")
    if f.n_points != 2 * c.n_points:
        raise ValueError(f"fine grid needs {2 * c.n_points} points, has {f.n_points}")
    if result_coarse.eigenvalues.shape != result_fine.eigenvalues.shape:
        raise ValueError("coarse and fine results hold different numbers of levels")
    estimate = (4.0 * result_fine.eigenvalues - result_coarse.eigenvalues) / 3.0
    result = replace(result_fine, richardson_estimate=estimate)
    return result.compared_to(references) if references is not None else result


def radial_fd_refined(params, l, grid=None, m_levels=5, references=None) -> OracleResult:
    """Radial oracle at ``grid`` and at twice its resolution, Richardson-combined."""
    grid = grid or default_radial_grid(params)
    coarse = radial_fd_spectrum(params, l, grid, m_levels)
    fine = radial_fd_spectrum(params, l, grid.refined(), m_levels)
    return richardson_refine(coarse, fine, references)


def cartesian_fd_refined(params, p_y=0.0, grid=None, m_levels=5, references=None) -> OracleResult:
    grid = grid or default_cartesian_grid(params, p_y)
    coarse = cartesian_fd_spectrum(params, p_y, grid, m_levels)
    fine = cartesian_fd_spectrum(params, p_y, grid.refined(), m_levels)
    return richardson_refine(coarse, fine, references)
