"""Landau levels of the dipole in the slab (Landau-gauge) field.

With the ansatz ``exp(i p_y y) exp(i k z) R(x)`` the squared equation is a
shifted oscillator

    (E**2 - m**2 [- k**2] - mu lam) R = [p_x**2 + (mu lam)**2 (x - x0)**2] R,

``x0 = -p_y / (mu lam)``, so ``E**2 = m**2 [+ k**2] + 2 mu lam (n + 1/2) + mu lam``
independently of ``p_y``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gamma, gammaincc

from .model import PhysicalParams
from .profiles import TAIL_RTOL, Profile, check_grid, count_nodes, measure_integral
from .special import hermite, hermite_coefficients


@dataclass(frozen=True)
class LandauQuantumNumbers:
    n: int
    p_y: float = 0.0

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n:
            raise ValueError(f"n must be an integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if not math.isfinite(self.p_y):
            raise ValueError("p_y must be finite")


@dataclass(frozen=True)
class OscillatorGeometry:
    center: float
    width: float

    def __post_init__(self):
        if not self.width > 0:
            raise ValueError("width must be positive")


@dataclass(frozen=True)
class LandauSpectrumEntry:
    qn: LandauQuantumNumbers
    energy_sq: float
    energy: float
    nonrel_energy: float
    include_k: bool

    CSV_HEADER = ("n", "p_y", "include_k", "energy_sq", "energy", "nonrel_energy")

    def to_dict(self) -> dict:
        return {
            "n": self.qn.n,
            "p_y": self.qn.p_y,
            "include_k": self.include_k,
            "energy_sq": self.energy_sq,
            "energy": self.energy,
            "nonrel_energy": self.nonrel_energy,
        }


def _qn(qn) -> LandauQuantumNumbers:
    if isinstance(qn, LandauQuantumNumbers):
        return qn
    if isinstance(qn, int):
        return LandauQuantumNumbers(qn)
    return LandauQuantumNumbers(*qn)


def oscillator_eigenvalue(params: PhysicalParams, qn) -> float:
    """Eigenvalue ``2 mu lam (n + 1/2)`` of the shifted oscillator alone."""
    params.require_bound()
    return params.coupling * (2 * _qn(qn).n + 1)


def energy_sq_landau(params: PhysicalParams, qn, include_k: bool = False) -> float:
    params.require_bound()
    qn = _qn(qn)
    rest = params.mass**2 + (params.k**2 if include_k else 0.0)
    # oscillator 2(n + 1/2) plus the spin term 1, in units of mu*lam, kept integer
    return rest + params.coupling * ((2 * qn.n + 1) + 1)


def energy_landau(params: PhysicalParams, qn, include_k: bool = False, branch: int = 1) -> float:
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    return branch * math.sqrt(energy_sq_landau(params, qn, include_k))


def oscillator_center(params: PhysicalParams, p_y: float) -> OscillatorGeometry:
    params.require_bound()
    ml = params.coupling
    return OscillatorGeometry(center=-p_y / ml, width=ml**-0.5)


def nonrel_energy_landau(params: PhysicalParams, qn) -> float:
    params.require_bound()
    qn = _qn(qn)
    ml_over_m = params.coupling / params.mass
    return params.mass + ml_over_m * (qn.n + 0.5) + ml_over_m / 2


def _tail_bound(params: PhysicalParams, n: int, distance: float) -> float:
    """Upper bound on the norm of the unnormalized profile farther than
    ``distance`` from the center, on both sides together."""
    coeffs = np.abs(np.array(hermite_coefficients(n), dtype=float))
    y2 = params.coupling * distance**2
    if y2 >= 1:
        # for |y| >= Y: |H_n(y)| <= |y|**n * sum_k |c_k| Y**(k - n)
        s = float(np.sum(coeffs * math.sqrt(y2) ** (np.arange(n + 1) - n)))
        upper = gamma(n + 0.5) * gammaincc(n + 0.5, y2)
    else:
        s = float(coeffs.sum())
        upper = gamma(0.5) * gammaincc(0.5, y2) + gamma(n + 0.5) * gammaincc(n + 0.5, y2)
    return s * s * float(upper) / math.sqrt(params.coupling)


def profile_extent(params: PhysicalParams, n: int, start_widths: float = 10.0) -> float:
    """Half-width about the center, in steps of two widths, that leaves a
    tail below ``TAIL_RTOL`` of the exact norm."""
    params.require_bound()
    norm = 2.0**n * math.factorial(n) * math.sqrt(math.pi / params.coupling)
    width = params.coupling**-0.5
    widths = start_widths
    while _tail_bound(params, n, widths * width) >= TAIL_RTOL * norm:
        widths += 2.0
    return widths * width


def eigenfunction_landau(params: PhysicalParams, qn, x_grid, normalize: bool = True) -> Profile:
    """Hermite-Gaussian ``H_n(sqrt(ml) (x - x0)) exp(-ml (x - x0)**2 / 2)``."""
    params.require_bound()
    qn = _qn(qn)
    x = check_grid(x_grid, positive=False)
    geo = oscillator_center(params, qn.p_y)
    ml = params.coupling
    s = x - geo.center
    values = hermite(qn.n, math.sqrt(ml) * s) * np.exp(-ml * s**2 / 2)
    norm = measure_integral(x, values**2, "x")
    if normalize:
        reach = min(float(x[-1]) - geo.center, geo.center - float(x[0]))
        tail = _tail_bound(params, qn.n, reach) if reach > 0 else math.inf
        if not tail < TAIL_RTOL * norm:
            raise ValueError(
                f"grid [{x[0]:g}, {x[-1]:g}] does not contain the profile around x0={geo.center:g}"
            )
        values = values / math.sqrt(norm)
    return Profile(grid=x, values=values, norm=norm, node_count=count_nodes(values), measure="x")


def spectrum_table(
    params: PhysicalParams, n_max: int, p_y: float = 0.0, include_k: bool = False
) -> list[LandauSpectrumEntry]:
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    entries = []
    for n in range(n_max + 1):
        qn = LandauQuantumNumbers(n, p_y)
        e_sq = energy_sq_landau(params, qn, include_k)
        entries.append(
            LandauSpectrumEntry(
                qn=qn,
                energy_sq=e_sq,
                energy=math.sqrt(e_sq),
                nonrel_energy=nonrel_energy_landau(params, qn),
                include_k=include_k,
            )
        )
    return entries
