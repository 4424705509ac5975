"""Command-line front end: ``landau-ac {spectrum,wavefunction,verify,sweep}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
Settings come from built-in defaults, then an optional ``--config`` file of
``key = value`` lines, then command-line flags (highest precedence).
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, fields

import numpy as np

from . import landau, symmetric
from .model import (
    Gauge,
    PhysicalParams,
    electric_field_landau,
    electric_field_symmetric,
    validate_field_conditions,
)
from .oracle import (
    DEFAULT_POINTS,
    GridSpec,
    cartesian_fd_spectrum,
    default_cartesian_grid,
    default_radial_grid,
    max_rel_error,
    radial_fd_spectrum,
    richardson_refine,
)
from .output import to_csv, to_json

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

RAW_RTOL = 1e-3
RICHARDSON_RTOL = 1e-4
P_Y_RTOL = 1e-6
CURL_ATOL = 1e-8

COMMANDS = ("spectrum", "wavefunction", "verify", "sweep")
SWEEP_PARAMS = ("lambda", "mu", "mass", "k")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str = "spectrum"
    gauge: str = "symmetric"
    mu: float = 1.0
    lam: float = 1.0
    mass: float = 1.0
    k: float = 0.0
    n_max: int = 4
    l_min: int | None = None
    l_max: int | None = None
    p_y: float | None = None
    n: int = 0
    l: int | None = None
    include_k: bool = False
    output_format: str = "csv"
    output_path: str | None = None
    grid_points: int = DEFAULT_POINTS
    domain_min: float | None = None
    domain_max: float | None = None
    sweep_param: str | None = None
    start: float | None = None
    stop: float | None = None
    steps: int | None = None

    def validate(self) -> "RunConfig":
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.gauge not in (g.value for g in Gauge):
            raise UsageError(f"gauge must be symmetric or landau, got {self.gauge!r}")
        if self.output_format not in ("csv", "json"):
            raise UsageError(f"format must be csv or json, got {self.output_format!r}")
        if self.gauge == "landau":
            given = [f for f in ("l_min", "l_max", "l") if getattr(self, f) is not None]
            if given:
                raise UsageError(f"{', '.join(given)} not allowed with the landau gauge")
        elif self.p_y is not None:
            raise UsageError("p_y not allowed with the symmetric gauge")
        if self.n_max < 0:
            raise UsageError("n_max must be non-negative")
        if self.n < 0:
            raise UsageError("n must be non-negative")
        if self.l_range[0] > self.l_range[1]:
            raise UsageError("l_min exceeds l_max")
        if self.grid_points < 100:
            raise UsageError("grid points must be at least 100")
        for name in ("mu", "lam", "mass", "k"):
            if not math.isfinite(getattr(self, name)):
                raise UsageError(f"{name} must be finite")
        if self.mass <= 0:
            raise UsageError("mass must be positive")
        if self.command != "sweep" and not self.mu * self.lam > 0:
            raise UsageError("mu * lambda must be positive")
        if self.command == "sweep":
            self._validate_sweep()
        if self.command == "verify" and self.output_format != "json":
            raise UsageError("verify writes JSON only")
        return self

    def _validate_sweep(self):
        if self.sweep_param not in SWEEP_PARAMS:
            raise UsageError(f"sweep parameter must be one of {', '.join(SWEEP_PARAMS)}")
        if self.start is None or self.stop is None or self.steps is None:
            raise UsageError("sweep needs --start, --stop and --steps")
        if self.steps < 2:
            raise UsageError("sweep needs at least 2 steps")
        for value in self.sweep_values():
            try:
                self.params_with(value).require_bound()
            except ValueError as exc:
                raise UsageError(f"sweep value {value:g}: {exc}") from None

    @property
    def l_range(self) -> tuple[int, int]:
        lo = 0 if self.l_min is None else self.l_min
        hi = 0 if self.l_max is None else self.l_max
        return lo, hi

    @property
    def params(self) -> PhysicalParams:
        return PhysicalParams(self.mu, self.lam, self.mass, self.k)

    def params_with(self, value: float) -> PhysicalParams:
        attr = {"lambda": "lam"}.get(self.sweep_param, self.sweep_param)
        values = {"mu": self.mu, "lam": self.lam, "mass": self.mass, "k": self.k, attr: value}
        return PhysicalParams(values["mu"], values["lam"], values["mass"], values["k"])

    def sweep_values(self) -> list[float]:
        return [float(v) for v in np.linspace(self.start, self.stop, self.steps)]

    def domain(self, default: GridSpec) -> GridSpec:
        lo = default.x_min if self.domain_min is None else self.domain_min
        hi = default.x_max if self.domain_max is None else self.domain_max
        try:
            return GridSpec(self.grid_points, lo, hi)
        except ValueError as exc:
            raise UsageError(str(exc)) from None


# config-file keys and their types; flags share the names with dashes
_KEYS = {
    "gauge": str,
    "mu": float,
    "lambda": float,
    "mass": float,
    "k": float,
    "n_max": int,
    "l_min": int,
    "l_max": int,
    "p_y": float,
    "n": int,
    "l": int,
    "include_k": bool,
    "format": str,
    "output": str,
    "grid_points": int,
    "domain_min": float,
    "domain_max": float,
    "param": str,
    "start": float,
    "stop": float,
    "steps": int,
}
_RENAME = {
    "lambda": "lam",
    "format": "output_format",
    "output": "output_path",
    "param": "sweep_param",
}


def _convert(key: str, text: str):
    kind = _KEYS[key]
    text = text.strip()
    if kind is bool:
        lowered = text.lower()
        if lowered in ("true", "1", "yes"):
            return True
        if lowered in ("false", "0", "no"):
            return False
        raise UsageError(f"{key}: expected true or false, got {text!r}")
    if kind is str:
        return text.strip("\"'")
    try:
        if kind is int:
            value = float(text)
            if not value.is_integer():
                raise ValueError
            return int(value)
        return float(text)
    except ValueError:
        raise UsageError(f"{key}: expected {kind.__name__}, got {text!r}") from None


def read_config(path: str) -> dict:
    """Parse a ``key = value`` file; ``#`` starts a comment."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    values = {}
    for number, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{number}: expected key = value")
        key, _, text = line.partition("=")
        key = key.strip().replace("-", "_")
        if key not in _KEYS:
            raise UsageError(f"{path}:{number}: unknown key {key!r}")
        values[key] = _convert(key, text)
    return values


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int(text):
    try:
        return _convert("n", text)
    except UsageError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--config", help="key = value file; flags override it")
    common.add_argument("--gauge", choices=[g.value for g in Gauge])
    common.add_argument("--mu", type=float)
    common.add_argument("--lambda", dest="lambda", type=float)
    common.add_argument("--mass", type=float)
    common.add_argument("--k", type=float)
    common.add_argument("--n-max", dest="n_max", type=_int)
    common.add_argument("--l-min", dest="l_min", type=_int)
    common.add_argument("--l-max", dest="l_max", type=_int)
    common.add_argument("--p-y", dest="p_y", type=float)
    common.add_argument("--include-k", dest="include_k", action="store_const", const=True)
    common.add_argument("--format", choices=["csv", "json"])
    common.add_argument("--output", help="output file (default: standard output)")
    common.add_argument("--grid-points", dest="grid_points", type=_int)
    common.add_argument("--domain-min", dest="domain_min", type=float)
    common.add_argument("--domain-max", dest="domain_max", type=float)

    parser = _Parser(prog="landau-ac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("spectrum", parents=[common], help="tabulate energy levels")
    wf = sub.add_parser("wavefunction", parents=[common], help="sample a normalized eigenfunction")
    wf.add_argument("--n", type=_int)
    wf.add_argument("--l", type=_int)
    sub.add_parser("verify", parents=[common], help="check closed forms against the FD oracle")
    sw = sub.add_parser("sweep", parents=[common], help="exact vs first-order energies over a parameter")
    sw.add_argument("--param", choices=SWEEP_PARAMS)
    sw.add_argument("--start", type=float)
    sw.add_argument("--stop", type=float)
    sw.add_argument("--steps", type=_int)
    return parser


def load_config(argv) -> RunConfig:
    args = vars(build_parser().parse_args(argv))
    settings = {}
    if args.get("config"):
        settings.update(read_config(args["config"]))
    settings.update({k: v for k, v in args.items() if k in _KEYS and v is not None})
    config = RunConfig(command=args["command"])
    if config.command == "verify":
        config.output_format = "json"
    known = {f.name for f in fields(RunConfig)}
    for key, value in settings.items():
        name = _RENAME.get(key, key)
        if name in known:
            setattr(config, name, value)
    return config.validate()


# --- commands -------------------------------------------------------------


def run_spectrum(config: RunConfig) -> tuple[int, str]:
    params = config.params
    if config.gauge == "symmetric":
        entries = symmetric.spectrum_table(params, config.n_max, config.l_range, config.include_k)
        header = symmetric.SpectrumEntry.CSV_HEADER
    else:
        p_y = config.p_y or 0.0
        entries = landau.spectrum_table(params, config.n_max, p_y, config.include_k)
        header = landau.LandauSpectrumEntry.CSV_HEADER
    rows = [e.to_dict() for e in entries]
    if config.output_format == "json":
        text = to_json({"gauge": config.gauge, "params": params.to_dict(), "levels": rows})
    else:
        text = to_csv(header, ([r[h] for h in header] for r in rows))
    return EXIT_OK, text


def _wavefunction_grid(config: RunConfig) -> np.ndarray:
    params = config.params
    npts = config.grid_points
    if config.gauge == "symmetric":
        qn = symmetric.SymmetricQuantumNumbers(config.n, config.l or 0)
        lo = 0.0 if config.domain_min is None else config.domain_min
        hi = symmetric.profile_extent(params, qn) if config.domain_max is None else config.domain_max
        if not hi > lo >= 0:
            raise UsageError("radial domain must satisfy 0 <= domain-min < domain-max")
        grid = np.linspace(lo, hi, npts + 1)
        return grid[1:] if lo == 0 else grid
    center = landau.oscillator_center(params, config.p_y or 0.0).center
    reach = landau.profile_extent(params, config.n)
    if config.domain_min is None and config.domain_max is None:
        # mirror-symmetric offsets about the guiding center
        half = np.linspace(0.0, reach, npts // 2 + 1)
        return center + np.concatenate((-half[:0:-1], half))
    lo = center - reach if config.domain_min is None else config.domain_min
    hi = center + reach if config.domain_max is None else config.domain_max
    if not hi > lo:
        raise UsageError("domain-min must be below domain-max")
    return np.linspace(lo, hi, npts + 1)


def run_wavefunction(config: RunConfig) -> tuple[int, str]:
    params = config.params
    grid = _wavefunction_grid(config)
    try:
        if config.gauge == "symmetric":
            qn = symmetric.SymmetricQuantumNumbers(config.n, config.l or 0)
            profile = symmetric.radial_wavefunction(params, qn, grid, normalize=True)
        else:
            qn = landau.LandauQuantumNumbers(config.n, config.p_y or 0.0)
            profile = landau.eigenfunction_landau(params, qn, grid, normalize=True)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if config.output_format == "json":
        text = to_json(
            {
                "gauge": config.gauge,
                "n": config.n,
                "l": config.l if config.gauge == "symmetric" else None,
                "p_y": config.p_y if config.gauge == "landau" else None,
                "measure": profile.measure,
                "norm": profile.norm,
                "node_count": profile.node_count,
                "coordinate": profile.grid,
                "value": profile.values,
            }
        )
    else:
        text = to_csv(("coordinate", "value"), profile.rows(), comments=[f"node_count={profile.node_count}"])
    return EXIT_OK, text


def _level_record(qn_fields: dict, analytic: float, fd: float, extrapolated: float) -> dict:
    return {
        **qn_fields,
        "analytic": analytic,
        "fd": fd,
        "richardson": extrapolated,
        "rel_err": abs(fd - analytic) / abs(analytic),
        "rel_err_richardson": abs(extrapolated - analytic) / abs(analytic),
    }


def _field_reports(params: PhysicalParams) -> dict:
    return {
        "symmetric": validate_field_conditions(lambda p: electric_field_symmetric(params, p)).to_dict(),
        "landau": validate_field_conditions(lambda p: electric_field_landau(params, p)).to_dict(),
    }


def run_verify(config: RunConfig) -> tuple[int, str]:
    params = config.params
    m_levels = config.n_max + 1
    levels, oracles = [], []
    p_y_shift = None
    try:
        if config.gauge == "symmetric":
            for l in range(config.l_range[0], config.l_range[1] + 1):
                grid = config.domain(default_radial_grid(params))
                refs = [
                    symmetric.transverse_eigenvalue(params, (n, l)) for n in range(m_levels)
                ]
                coarse = radial_fd_spectrum(params, l, grid, m_levels, refs)
                refined = richardson_refine(coarse, radial_fd_spectrum(params, l, grid.refined(), m_levels))
                oracles.append({"l": l, **coarse.to_dict(), "richardson_estimate": refined.to_dict()["richardson_estimate"]})
                for n in range(m_levels):
                    levels.append(
                        _level_record({"n": n, "l": l}, refs[n], coarse.eigenvalues[n], refined.richardson_estimate[n])
                    )
        else:
            p_y = config.p_y or 0.0
            grid = config.domain(default_cartesian_grid(params, p_y))
            refs = [landau.oscillator_eigenvalue(params, n) for n in range(m_levels)]
            coarse = cartesian_fd_spectrum(params, p_y, grid, m_levels, refs)
            refined = richardson_refine(coarse, cartesian_fd_spectrum(params, p_y, grid.refined(), m_levels))
            oracles.append({"p_y": p_y, **coarse.to_dict(), "richardson_estimate": refined.to_dict()["richardson_estimate"]})
            for n in range(m_levels):
                levels.append(
                    _level_record({"n": n, "p_y": p_y}, refs[n], coarse.eigenvalues[n], refined.richardson_estimate[n])
                )
            # same grid shape recentred on x0 = 0
            shift = -p_y / params.coupling
            base_grid = GridSpec(grid.n_points, grid.x_min - shift, grid.x_max - shift)
            base = cartesian_fd_spectrum(params, 0.0, base_grid, m_levels)
            p_y_shift = max_rel_error(coarse.eigenvalues, base.eigenvalues)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    fields_report = _field_reports(params)
    max_raw = max(rec["rel_err"] for rec in levels)
    max_rich = max(rec["rel_err_richardson"] for rec in levels)
    max_curl = max(r["max_curl"] for r in fields_report.values())
    passed = max_raw <= RAW_RTOL and max_rich <= RICHARDSON_RTOL and max_curl < CURL_ATOL
    if p_y_shift is not None:
        passed = passed and p_y_shift <= P_Y_RTOL
    report = {
        "gauge": config.gauge,
        "params": params.to_dict(),
        "tolerances": {
            "raw": RAW_RTOL,
            "richardson": RICHARDSON_RTOL,
            "curl": CURL_ATOL,
            "p_y_invariance": P_Y_RTOL,
        },
        "levels": levels,
        "oracle": oracles,
        "field_conditions": fields_report,
        "max_rel_discrepancy": max_raw,
        "max_rel_discrepancy_richardson": max_rich,
        "p_y_invariance": p_y_shift,
        "passed": passed,
    }
    return (EXIT_OK if passed else EXIT_VERIFY), to_json(report)


def run_sweep(config: RunConfig) -> tuple[int, str]:
    rows = []
    for value in config.sweep_values():
        params = config.params_with(value)
        if config.gauge == "symmetric":
            for entry in symmetric.spectrum_table(params, config.n_max, config.l_range, config.include_k):
                rows.append((config.sweep_param, value, entry.qn.n, entry.qn.l, entry))
        else:
            for entry in landau.spectrum_table(params, config.n_max, config.p_y or 0.0, config.include_k):
                rows.append((config.sweep_param, value, entry.qn.n, entry.qn.p_y, entry))
    label = "l" if config.gauge == "symmetric" else "p_y"
    header = ("parameter", "value", "n", label, "include_k", "energy_sq", "energy", "nonrel_energy", "gap")
    records = [
        (param, value, n, q, e.include_k, e.energy_sq, e.energy, e.nonrel_energy, e.energy - e.nonrel_energy)
        for param, value, n, q, e in rows
    ]
    if config.output_format == "json":
        return EXIT_OK, to_json({"gauge": config.gauge, "rows": [dict(zip(header, r)) for r in records]})
    return EXIT_OK, to_csv(header, records)


_RUNNERS = {
    "spectrum": run_spectrum,
    "wavefunction": run_wavefunction,
    "verify": run_verify,
    "sweep": run_sweep,
}


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv=None) -> int:
    try:
        config = load_config(argv)
        code, text = _RUNNERS[config.command](config)
    except UsageError as exc:
        print(f"landau-ac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"landau-ac: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        _write(text, config.output_path)
    except OSError as exc:
        print(f"landau-ac: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return code


if __name__ == "__main__":
    sys.exit(main())
