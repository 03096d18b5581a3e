"""Command-line front end: spectrum tables, single-point negativity, ground
manifold summaries, and parameter-grid sweeps.

Exit codes: 0 on success, 2 on invalid arguments or unwritable output,
3 when a numerical invariant is violated.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

import numpy as np

from .entanglement import NumericalInvariantError
from .operators import SpinStarParams, build_hamiltonian, sector_map
from .spectra import analytic_ground_state_m3, analytic_spectrum_m3, ground_manifold, spectrum_blocked
from .sweep import (
    SweepGrid,
    csv_header,
    evaluate_point,
    format_float,
    record_to_csv,
    record_to_json,
    run_sweep,
)


def _parse_range(text: str) -> tuple[float, float, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected MIN:MAX:COUNT, got {text!r}")
    try:
        return float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected MIN:MAX:COUNT, got {text!r}") from None


def _parse_temps(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected T1,T2,..., got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("at least one temperature is required")
    return values


@contextlib.contextmanager
def _open_output(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="ascii") as stream:
            yield stream


def _params_from(args: argparse.Namespace) -> SpinStarParams:
    return SpinStarParams(m=args.m, omega=args.omega, epsilon=args.epsilon, eta=args.eta)


def cmd_spectrum(args: argparse.Namespace) -> int:
    params = _params_from(args)
    spec = spectrum_blocked(build_hamiltonian(params), sector_map(params.n_qubits))
    analytic = None
    max_deviation = None
    if params.m == 3:
        analytic = analytic_spectrum_m3(params.omega, params.epsilon, params.eta)
        max_deviation = float(np.max(np.abs(spec.eigenvalues - analytic)))

    with _open_output(args.output) as stream:
        if args.format == "json":
            payload = {
                "m": params.m,
                "omega": params.omega,
                "epsilon": params.epsilon,
                "eta": params.eta,
                "eigenvalues": [float(v) for v in spec.eigenvalues],
                "sector_labels": [int(k) for k in spec.sector_labels],
                "analytic": None if analytic is None else [float(v) for v in analytic],
                "max_abs_deviation": max_deviation,
            }
            stream.write(json.dumps(payload) + "\n")
        else:
            header = "index,eigenvalue,sector"
            if analytic is not None:
                header += ",analytic,abs_dev"
            stream.write(header + "\n")
            for i, (value, label) in enumerate(zip(spec.eigenvalues, spec.sector_labels)):
                row = f"{i},{format_float(value)},{int(label)}"
                if analytic is not None:
                    row += f",{format_float(analytic[i])},{format_float(abs(value - analytic[i]))}"
                stream.write(row + "\n")
    if max_deviation is not None and args.format == "csv":
        print(f"max_abs_deviation={format_float(max_deviation)}", file=sys.stderr)
    return 0


def cmd_negativity(args: argparse.Namespace) -> int:
    params = _params_from(args)
    if args.t < 0:
        raise ValueError(f"temperature must be nonnegative, got {args.t}")
    record = evaluate_point(params, args.t)
    with _open_output(args.output) as stream:
        if args.format == "json":
            stream.write(record_to_json(record) + "\n")
        else:
            stream.write(csv_header(params.m) + "\n")
            stream.write(record_to_csv(record) + "\n")
    return 0


def cmd_ground(args: argparse.Namespace) -> int:
    params = _params_from(args)
    spec = spectrum_blocked(build_hamiltonian(params), sector_map(params.n_qubits))
    manifold = ground_manifold(spec)
    fidelity = None
    if params.m == 3 and manifold.degeneracy == 1:
        try:
            reference = analytic_ground_state_m3(params.epsilon, params.eta)
        except ValueError:
            reference = None
        if reference is not None:
            overlap = reference.conj() @ manifold.basis[:, 0]
            fidelity = float(abs(overlap) ** 2)

    with _open_output(args.output) as stream:
        if args.format == "json":
            payload = {
                "m": params.m,
                "omega": params.omega,
                "epsilon": params.epsilon,
                "eta": params.eta,
                "ground_energy": manifold.energy,
                "ground_degeneracy": manifold.degeneracy,
                "analytic_ground_fidelity": fidelity,
            }
            stream.write(json.dumps(payload) + "\n")
        else:
            stream.write("m,omega,epsilon,eta,ground_energy,ground_degeneracy,"
                         "analytic_ground_fidelity\n")
            fid_field = "" if fidelity is None else format_float(fidelity)
            stream.write(f"{params.m},{format_float(params.omega)},{format_float(params.epsilon)},"
                         f"{format_float(params.eta)},{format_float(manifold.energy)},"
                         f"{manifold.degeneracy},{fid_field}\n")
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    grid = SweepGrid(
        m=args.m,
        omega=args.omega,
        epsilon_axis=args.epsilon_range,
        eta_axis=args.eta_range,
        temperatures=args.temps,
        output_path=args.output,
    )
    run_sweep(grid, fmt=args.format, threads=args.threads)
    return 0


def _add_common(parser: argparse.ArgumentParser, point: bool = True) -> None:
    parser.add_argument("--m", type=int, default=3, help="number of peripheral spins (default 3)")
    parser.add_argument("--omega", type=float, default=1.0,
                        help="natural frequency, the energy unit (default 1.0)")
    if point:
        parser.add_argument("--epsilon", type=float, default=0.0,
                            help="central coupling, in units of omega (default 0)")
        parser.add_argument("--eta", type=float, default=0.0,
                            help="ring coupling, in units of omega (default 0)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default csv)")
    parser.add_argument("--output", default="-", metavar="PATH",
                        help="output file, '-' for stdout (default)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinstar",
        description="Thermal entanglement of the peripheral spins of a spin-star network.",
        allow_abbrev=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p_spectrum = sub.add_parser("spectrum", help="eigenvalue table with excitation-sector labels",
                                allow_abbrev=False)
    _add_common(p_spectrum)
    p_spectrum.set_defaults(func=cmd_spectrum)

    p_neg = sub.add_parser("negativity", help="multipartite negativity of the reduced thermal state",
                           allow_abbrev=False)
    _add_common(p_neg)
    p_neg.add_argument("--t", type=float, required=True,
                       help="dimensionless temperature k_B T/(hbar omega); 0 for the ground-manifold limit")
    p_neg.set_defaults(func=cmd_negativity)

    p_ground = sub.add_parser("ground", help="ground manifold summary", allow_abbrev=False)
    _add_common(p_ground)
    p_ground.set_defaults(func=cmd_ground)

    p_sweep = sub.add_parser("sweep", help="grid sweep over (epsilon, eta, t)",
                             allow_abbrev=False)
    _add_common(p_sweep, point=False)
    p_sweep.add_argument("--epsilon-range", type=_parse_range, required=True, metavar="MIN:MAX:COUNT")
    p_sweep.add_argument("--eta-range", type=_parse_range, required=True, metavar="MIN:MAX:COUNT")
    p_sweep.add_argument("--temps", type=_parse_temps, required=True, metavar="T1,T2,...")
    p_sweep.add_argument("--threads", type=int, default=None,
                         help="worker cap; default is the available parallelism")
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NumericalInvariantError as exc:
        print(f"numerical invariant violated: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
