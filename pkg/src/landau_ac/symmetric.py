"""Landau levels of the dipole in the radial (symmetric-gauge) field.

With the ansatz ``exp(i l phi) exp(i k z) R(rho)`` both spinor components
obey the same radial equation, whose regular square-integrable solutions
are ``tau**(|l|/2) exp(-tau/2) 1F1(-n; |l|+1; tau)`` with
``tau = mu*lam*rho**2 / 2`` and

    E**2 = m**2 [+ k**2] + 2 mu lam (n + |l|/2 + l/2 + 1).

The scalar radial problem is solved once; the spin doubling is implicit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np
from scipy.special import gamma, gammaincc

from .model import PhysicalParams
from .profiles import TAIL_RTOL, Profile, check_grid, count_nodes, measure_integral
from .special import kummer_coefficients, kummer_terminating


@dataclass(frozen=True, order=True)
class SymmetricQuantumNumbers:
    n: int
    l: int

    def __post_init__(self):
        for name in ("n", "l"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise ValueError(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.n < 0:
            raise ValueError(f"radial index n must be non-negative, got {self.n}")

    @property
    def level(self) -> int:
        """``n + (|l| + l)/2 + 1``; an integer, so degeneracies are exact."""
        return self.n + (abs(self.l) + self.l) // 2 + 1


@dataclass(frozen=True)
class SpectrumEntry:
    qn: SymmetricQuantumNumbers
    energy_sq: float
    energy: float
    nonrel_energy: float
    include_k: bool

    CSV_HEADER = ("n", "l", "include_k", "energy_sq", "energy", "nonrel_energy")

    def to_dict(self) -> dict:
        return {
            "n": self.qn.n,
            "l": self.qn.l,
            "include_k": self.include_k,
            "energy_sq": self.energy_sq,
            "energy": self.energy,
            "nonrel_energy": self.nonrel_energy,
        }


def _qn(qn) -> SymmetricQuantumNumbers:
    if isinstance(qn, SymmetricQuantumNumbers):
        return qn
    return SymmetricQuantumNumbers(*qn)


def transverse_eigenvalue(params: PhysicalParams, qn) -> float:
    """``E**2 - m**2 - k**2 = 2 mu lam (n + |l|/2 + l/2 + 1)``."""
    params.require_bound()
    return params.coupling * (2 * _qn(qn).level)


def energy_sq_symmetric(params: PhysicalParams, qn, include_k: bool = False) -> float:
    rest = params.mass**2 + (params.k**2 if include_k else 0.0)
    return rest + transverse_eigenvalue(params, qn)


def energy_symmetric(params: PhysicalParams, qn, include_k: bool = False, branch: int = 1) -> float:
    """Energy on the positive branch by default; ``branch=-1`` gives the antiparticle."""
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    return branch * math.sqrt(energy_sq_symmetric(params, qn, include_k))


def beta_parameter(params: PhysicalParams, energy_sq: float, l: int) -> float:
    """Separation constant of the Kummer-form radial equation."""
    params.require_bound()
    return (energy_sq - params.mass**2 - params.k**2) / (2 * params.coupling) - l / 2 - 0.5


def nonrel_energy_symmetric(params: PhysicalParams, qn) -> float:
    """First-order expansion of the positive branch about the rest mass."""
    params.require_bound()
    qn = _qn(qn)
    return params.mass + params.coupling / params.mass * qn.level


def _tail_bound(params: PhysicalParams, qn: SymmetricQuantumNumbers, rho_max: float) -> float:
    """Upper bound on the norm of the unnormalized profile beyond ``rho_max``."""
    a = abs(qn.l)
    coeffs = np.abs(kummer_coefficients(qn.n, a + 1))
    tau_max = params.coupling * rho_max**2 / 2
    top = a + 2 * qn.n + 1
    if tau_max >= 1:
        # for tau >= tau_max: |F(tau)| <= tau**n * sum_j |c_j| tau_max**(j - n)
        s = float(np.sum(coeffs * tau_max ** (np.arange(qn.n + 1) - qn.n)))
        upper = gamma(top) * gammaincc(top, tau_max)
    else:
        # |F(tau)| <= S max(1, tau)**n
        s = float(coeffs.sum())
        upper = gamma(a + 1) * gammaincc(a + 1, tau_max) + gamma(top) * gammaincc(top, tau_max)
    return s * s * float(upper) / params.coupling


def profile_extent(params: PhysicalParams, qn, start_widths: float = 12.0) -> float:
    """Smallest radius, in steps of two widths from ``start_widths``, that
    leaves a tail below ``TAIL_RTOL`` of the exact norm."""
    params.require_bound()
    qn = _qn(qn)
    a = abs(qn.l)
    # int tau^a e^-tau F^2 = n! Gamma(a+1)^2 / Gamma(n+a+1), over the coupling
    log_norm = math.lgamma(qn.n + 1) + 2 * math.lgamma(a + 1) - math.lgamma(qn.n + a + 1)
    norm = math.exp(log_norm) / params.coupling
    width = params.coupling**-0.5
    widths = start_widths
    while _tail_bound(params, qn, widths * width) >= TAIL_RTOL * norm:
        widths += 2.0
    return widths * width


def radial_wavefunction(params: PhysicalParams, qn, rho_grid, normalize: bool = True) -> Profile:
    """Sample the radial eigenfunction on ``rho_grid``.

    The power of rho is ``|l|`` so the function stays regular at the axis for
    negative ``l``.  With ``normalize`` the profile is rescaled to unit norm
    under ``rho d rho``; the grid must then reach far enough out that the
    analytic tail bound beyond its last point is below ``TAIL_RTOL`` of the
    total.
    """
    params.require_bound()
    qn = _qn(qn)
    rho = check_grid(rho_grid, positive=True)
    a = abs(qn.l)
    ml = params.coupling
    tau = ml * rho**2 / 2
    values = (ml / 2) ** (a / 2) * np.exp(-tau / 2) * rho**a * kummer_terminating(qn.n, a + 1, tau)
    norm = measure_integral(rho, values**2, "rho")
    if normalize:
        tail = _tail_bound(params, qn, float(rho[-1]))
        if not tail < TAIL_RTOL * norm:
            raise ValueError(
                f"grid ends at rho={rho[-1]:g}; tail bound {tail:.3g} exceeds "
                f"{TAIL_RTOL:g} of the norm {norm:.3g}"
            )
        values = values / math.sqrt(norm)
    return Profile(grid=rho, values=values, norm=norm, node_count=count_nodes(values), measure="rho")


def spectrum_table(
    params: PhysicalParams,
    n_max: int,
    l_range: Iterable[int] | tuple[int, int] = (0, 0),
    include_k: bool = False,
) -> list[SpectrumEntry]:
    """All levels with ``n <= n_max`` and ``l`` in the inclusive ``l_range``.

    Sorted by energy squared, ties broken by lower ``n`` then lower ``l``.
    """
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    params.require_bound()
    l_min, l_max = l_range
    if l_min > l_max:
        raise ValueError(f"empty l range ({l_min}, {l_max})")
    entries = []
    for n in range(n_max + 1):
        for l in range(l_min, l_max + 1):
            qn = SymmetricQuantumNumbers(n, l)
            e_sq = energy_sq_symmetric(params, qn, include_k)
            entries.append(
                SpectrumEntry(
                    qn=qn,
                    energy_sq=e_sq,
                    energy=math.sqrt(e_sq),
                    nonrel_energy=nonrel_energy_symmetric(params, qn),
                    include_k=include_k,
                )
            )
    entries.sort(key=lambda e: (e.energy_sq, e.qn.n, e.qn.l))
    return entries
