"""Relativistic Landau levels of a neutral dipole in an electric field.

Closed-form spectra and eigenfunctions in the symmetric and Landau gauges,
plus finite-difference oracles that check them independently.
"""

from .landau import (
    LandauQuantumNumbers,
    LandauSpectrumEntry,
    OscillatorGeometry,
    eigenfunction_landau,
    energy_landau,
    energy_sq_landau,
    nonrel_energy_landau,
    oscillator_center,
    oscillator_eigenvalue,
)
from .model import (
    ConditionReport,
    CouplingKind,
    DualityLabel,
    FieldSample,
    Gauge,
    PhysicalParams,
    effective_ac_field,
    electric_field_landau,
    electric_field_symmetric,
    hmw_dual,
    validate_field_conditions,
)
from .oracle import (
    GridSpec,
    OracleResult,
    cartesian_fd_spectrum,
    radial_fd_spectrum,
    richardson_refine,
)
from .profiles import Profile, RadialProfile
from .special import hermite, kummer_terminating, laguerre_general
from .symmetric import (
    SpectrumEntry,
    SymmetricQuantumNumbers,
    beta_parameter,
    energy_sq_symmetric,
    energy_symmetric,
    nonrel_energy_symmetric,
    radial_wavefunction,
    spectrum_table,
    transverse_eigenvalue,
)

__version__ = "0.1.0"
