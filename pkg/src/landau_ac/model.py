"""Physical parameters, field configurations and the dipole-coupling duality.

Natural units (hbar = c = 1) throughout.  A neutral particle with magnetic
dipole moment ``mu`` in the electric field of a line charge density ``lam``
feels an effective uniform field of strength ``mu * lam`` along z; every
spectrum in this package depends on the two only through that product.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np


class Gauge(str, enum.Enum):
    SYMMETRIC = "symmetric"
    LANDAU = "landau"


class CouplingKind(str, enum.Enum):
    AHARONOV_CASHER = "AharonovCasher"
    HE_MCKELLAR_WILKENS = "HeMcKellarWilkens"


_SYMBOLS = {
    CouplingKind.AHARONOV_CASHER: ("μ", "E"),
    CouplingKind.HE_MCKELLAR_WILKENS: ("d", "B"),
}


@dataclass(frozen=True)
class PhysicalParams:
    """Dipole moment, charge density, rest mass and axial momentum.

    Construction checks finiteness and ``mass > 0``.  The bound-spectrum
    requirement ``mu * lam > 0`` is checked by :meth:`require_bound`, which
    every spectrum and oracle routine calls; the field evaluators accept a
    vanishing coupling.
    """

    mu: float
    lam: float
    mass: float = 1.0
    k: float = 0.0

    def __post_init__(self):
        for name in ("mu", "lam", "mass", "k"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
        if self.mass <= 0:
            raise ValueError(f"mass must be positive, got {self.mass!r}")

    @property
    def coupling(self) -> float:
        """The product ``mu * lam``, i.e. the effective field strength."""
        return self.mu * self.lam

    def require_bound(self) -> "PhysicalParams":
        if not self.coupling > 0:
            raise ValueError(
                f"mu * lambda must be positive for a bound spectrum, got {self.coupling!r}"
            )
        return self

    def to_dict(self) -> dict:
        return {"mu": self.mu, "lambda": self.lam, "mass": self.mass, "k": self.k}


@dataclass(frozen=True)
class FieldSample:
    point: tuple[float, float, float]
    e_field: tuple[float, float, float]

    def __post_init__(self):
        if not all(math.isfinite(c) for c in (*self.point, *self.e_field)):
            raise ValueError("field sample components must be finite")


@dataclass(frozen=True)
class DualityLabel:
    """Which dipole coupling the numbers are interpreted under."""

    coupling_kind: CouplingKind = CouplingKind.AHARONOV_CASHER
    moment_symbol: str = field(default="")
    field_symbol: str = field(default="")

    def __post_init__(self):
        kind = CouplingKind(self.coupling_kind)
        object.__setattr__(self, "coupling_kind", kind)
        moment, fld = _SYMBOLS[kind]
        if not self.moment_symbol:
            object.__setattr__(self, "moment_symbol", moment)
        if not self.field_symbol:
            object.__setattr__(self, "field_symbol", fld)
        if (self.moment_symbol, self.field_symbol) != (moment, fld):
            raise ValueError(
                f"symbols ({self.moment_symbol!r}, {self.field_symbol!r}) "
                f"inconsistent with {kind.value}"
            )

    @classmethod
    def aharonov_casher(cls) -> "DualityLabel":
        return cls(CouplingKind.AHARONOV_CASHER)

    @classmethod
    def he_mckellar_wilkens(cls) -> "DualityLabel":
        return cls(CouplingKind.HE_MCKELLAR_WILKENS)


def _point3(point: Sequence[float]) -> tuple[float, float, float]:
    x, y, z = (float(c) for c in point)
    return x, y, z


def electric_field_symmetric(params: PhysicalParams, point: Sequence[float]) -> FieldSample:
    """Radial field ``(lam/2) * (x, y, 0)`` between two coaxial cylinders."""
    x, y, z = _point3(point)
    half = params.lam / 2
    return FieldSample((x, y, z), (half * x, half * y, 0.0))


def electric_field_landau(params: PhysicalParams, point: Sequence[float]) -> FieldSample:
    """Field ``lam * (x, 0, 0)`` of a uniformly charged slab."""
    x, y, z = _point3(point)
    return FieldSample((x, y, z), (params.lam * x, 0.0, 0.0))


def effective_ac_field(params: PhysicalParams, gauge: Gauge | str = Gauge.SYMMETRIC) -> np.ndarray:
    """Curl of the effective dipole gauge potential; ``(0, 0, mu*lam)`` in either gauge."""
    Gauge(gauge)
    return np.array([0.0, 0.0, params.coupling])


def effective_potential(params: PhysicalParams, gauge: Gauge | str, point: Sequence[float]) -> np.ndarray:
    """Effective vector potential ``mu * z_hat x E`` felt by a dipole along z.

    The gradient-like term ``i mu (E_x, E_y) beta`` in the Dirac operator has
    no curl of its own; it acts as this rotated potential once the equation
    is squared, which gives ``(0, 0, mu*lam)`` as curl in both gauges.
    """
    p = _point3(point)
    if Gauge(gauge) is Gauge.SYMMETRIC:
        e = electric_field_symmetric(params, p).e_field
    else:
        e = electric_field_landau(params, p).e_field
    return params.mu * np.array([-e[1], e[0], 0.0])


@dataclass(frozen=True)
class ConditionReport:
    max_curl: float
    samples: int
    step: float
    static: bool = True

    def to_dict(self) -> dict:
        return {
            "max_curl": self.max_curl,
            "samples": self.samples,
            "step": self.step,
            "static": self.static,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


Box = Sequence[tuple[float, float]]


def validate_field_conditions(
    field_fn: Callable[[Sequence[float]], FieldSample],
    region: Box = ((-1.0, 1.0), (-1.0, 1.0), (-1.0, 1.0)),
    step: float = 1e-3,
    points_per_axis: int = 21,
) -> ConditionReport:
    """Central-difference curl of ``field_fn`` on a lattice spanning ``region``.

    Fields here carry no time argument, so the static condition holds by
    construction and is reported as such.
    """
    if not step > 0:
        raise ValueError(f"step must be positive, got {step!r}")
    if len(region) != 3:
        raise ValueError("region must give (lo, hi) bounds for x, y and z")
    for lo, hi in region:
        if not hi > lo:
            raise ValueError(f"degenerate region bound ({lo}, {hi})")
    if points_per_axis < 2:
        raise ValueError("need at least two points per axis")

    axes = [np.linspace(lo, hi, points_per_axis) for lo, hi in region]
    offsets = np.eye(3) * step

    def e_at(p):
        return np.asarray(field_fn(p).e_field, dtype=float)

    max_curl = 0.0
    count = 0
    for x in axes[0]:
        for y in axes[1]:
            for z in axes[2]:
                p = np.array([x, y, z])
                # jac[i, j] = dE_i / dx_j
                jac = np.empty((3, 3))
                for j in range(3):
                    jac[:, j] = (e_at(p + offsets[j]) - e_at(p - offsets[j])) / (2 * step)
                curl = (
                    jac[2, 1] - jac[1, 2],
                    jac[0, 2] - jac[2, 0],
                    jac[1, 0] - jac[0, 1],
                )
                max_curl = max(max_curl, max(abs(c) for c in curl))
                count += 1
    return ConditionReport(max_curl=float(max_curl), samples=count, step=float(step))


def hmw_dual(params: PhysicalParams, label: DualityLabel) -> tuple[PhysicalParams, DualityLabel]:
    """Swap between the magnetic-dipole/electric-field coupling and its dual.

    Only the interpretation changes (``mu -> d``, ``E -> B``); the numbers
    are returned untouched.
    """
    if label.coupling_kind is CouplingKind.AHARONOV_CASHER:
        dual = DualityLabel.he_mckellar_wilkens()
    else:
        dual = DualityLabel.aharonov_casher()
    return replace(params), dual
