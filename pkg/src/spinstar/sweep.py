"""Deterministic parameter-grid sweeps over (epsilon, eta, t).

Grid cells are pure functions of their inputs, so they can be evaluated by
any number of workers; results are buffered and written in canonical row
order (lexicographic by t, then eta, then epsilon), which makes the output
byte-identical regardless of parallelism.
"""

from __future__ import annotations

import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .entanglement import multipartite_negativity
from .operators import SpinStarParams, build_hamiltonian, sector_map
from .spectra import ground_manifold, spectrum_blocked
from .thermal import gibbs_state_from_spectrum, partial_trace, zero_temperature_state

# dims beyond 2**9 make dense grid sweeps impractically slow
MAX_SWEEP_M = 8


@dataclass(frozen=True)
class SweepGrid:
    """Axes of a sweep: (min, max, count) per coupling plus a temperature list."""

    m: int
    omega: float
    epsilon_axis: tuple[float, float, int]
    eta_axis: tuple[float, float, int]
    temperatures: tuple[float, ...]
    output_path: str = "-"

    def __post_init__(self):
        if not 2 <= self.m <= MAX_SWEEP_M:
            raise ValueError(f"sweep supports 2 <= m <= {MAX_SWEEP_M}, got {self.m}")
        if not self.omega > 0:
            raise ValueError(f"omega must be positive, got {self.omega}")
        for name, axis in (("epsilon", self.epsilon_axis), ("eta", self.eta_axis)):
            lo, hi, count = axis
            if count < 1:
                raise ValueError(f"{name} axis needs count >= 1, got {count}")
            if lo > hi:
                raise ValueError(f"{name} axis has min {lo} > max {hi}")
        if not self.temperatures:
            raise ValueError("at least one temperature is required")
        if any(t < 0 for t in self.temperatures):
            raise ValueError("temperatures must be >= 0 (0 selects the ground-manifold limit)")


@dataclass(frozen=True)
class SweepRecord:
    """One evaluated (epsilon, eta, t) cell."""

    epsilon: float
    eta: float
    t: float
    neg_multi: float
    per_cut: tuple[float, ...]
    ground_energy: float
    ground_degeneracy: int
    degenerate_cell: bool


def axis_values(axis: tuple[float, float, int]) -> np.ndarray:
    lo, hi, count = axis
    return np.linspace(lo, hi, count)


def evaluate_cell(m: int, omega: float, epsilon: float, eta: float,
                  temperatures) -> list[SweepRecord]:
    """All requested temperatures for one coupling pair, one diagonalization."""
    params = SpinStarParams(m=m, omega=omega, epsilon=epsilon, eta=eta)
    spec = spectrum_blocked(build_hamiltonian(params), sector_map(params.n_qubits))
    manifold = ground_manifold(spec)
    keep = range(1, m + 1)
    records = []
    for t in temperatures:
        if t == 0:
            full = zero_temperature_state(spec)
        else:
            full = gibbs_state_from_spectrum(spec, t, omega)
        reduced = partial_trace(full, keep, params.n_qubits)
        report = multipartite_negativity(reduced, m)
        records.append(SweepRecord(
            epsilon=float(epsilon),
            eta=float(eta),
            t=float(t),
            neg_multi=report.multipartite,
            per_cut=tuple(value for _, value in report.per_cut),
            ground_energy=manifold.energy,
            ground_degeneracy=manifold.degeneracy,
            degenerate_cell=manifold.degeneracy > 1,
        ))
    return records


def evaluate_point(params: SpinStarParams, t: float) -> SweepRecord:
    """Single-cell evaluation; shares the code path used by grid sweeps."""
    return evaluate_cell(params.m, params.omega, params.epsilon, params.eta, (t,))[0]


def sweep_records(grid: SweepGrid, threads: int | None = None) -> list[SweepRecord]:
    """Evaluate every grid cell; rows ordered lexicographically by (t, eta, epsilon)."""
    eps_values = axis_values(grid.epsilon_axis)
    eta_values = axis_values(grid.eta_axis)
    temps = tuple(sorted(grid.temperatures))
    cells = [(eps, eta) for eta in eta_values for eps in eps_values]

    def work(cell):
        eps, eta = cell
        return evaluate_cell(grid.m, grid.omega, eps, eta, temps)

    if threads is not None and threads < 1:
        raise ValueError(f"threads must be at least 1, got {threads}")
    if threads == 1:
        per_cell = [work(cell) for cell in cells]
    else:
        workers = threads if threads is not None else (os.cpu_count() or 1)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_cell = list(pool.map(work, cells))

    records = []
    for t_index in range(len(temps)):
        for cell_index in range(len(cells)):
            records.append(per_cell[cell_index][t_index])
    return records


def format_float(value: float) -> str:
    """12 significant digits; normalizes negative zero for stable diffs."""
    return f"{float(value) + 0.0:.12g}"


def csv_header(m: int) -> str:
    cut_names = ",".join(f"neg_cut_{k}" for k in range(1, m + 1))
    return f"epsilon,eta,t,neg_multi,{cut_names},ground_energy,ground_degeneracy,degenerate_cell"


def record_to_csv(record: SweepRecord) -> str:
    fields = [
        format_float(record.epsilon),
        format_float(record.eta),
        format_float(record.t),
        format_float(record.neg_multi),
        *(format_float(value) for value in record.per_cut),
        format_float(record.ground_energy),
        str(record.ground_degeneracy),
        "true" if record.degenerate_cell else "false",
    ]
    return ",".join(fields)


def record_to_json(record: SweepRecord) -> str:
    obj = {
        "epsilon": record.epsilon,
        "eta": record.eta,
        "t": record.t,
        "neg_multi": record.neg_multi,
    }
    for k, value in enumerate(record.per_cut, start=1):
        obj[f"neg_cut_{k}"] = value
    obj["ground_energy"] = record.ground_energy
    obj["ground_degeneracy"] = record.ground_degeneracy
    obj["degenerate_cell"] = record.degenerate_cell
    return json.dumps(obj)


def write_records(records, m: int, stream, fmt: str = "csv") -> None:
    if fmt == "csv":
        stream.write(csv_header(m) + "\n")
        for record in records:
            stream.write(record_to_csv(record) + "\n")
    elif fmt == "json":
        for record in records:
            stream.write(record_to_json(record) + "\n")
    else:
        raise ValueError(f"unknown output format {fmt!r}")


def run_sweep(grid: SweepGrid, fmt: str = "csv", threads: int | None = None) -> list[SweepRecord]:
    """Evaluate the grid and write it to grid.output_path ('-' for stdout)."""
    records = sweep_records(grid, threads=threads)
    if grid.output_path == "-":
        write_records(records, grid.m, sys.stdout, fmt)
    else:
        with open(grid.output_path, "w", encoding="ascii") as stream:
            write_records(records, grid.m, stream, fmt)
    return records
