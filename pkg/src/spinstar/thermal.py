"""Gibbs states of the full network, their zero-temperature limit, and the
reduction to the peripheral spins.

Temperatures are dimensionless, t = k_B T / (hbar omega); t = 0 selects the
uniform mixture over the (possibly degenerate) ground manifold, which is the
t -> 0+ limit of the Gibbs family.
"""

from __future__ import annotations

import numpy as np

from .operators import SpinStarParams, build_hamiltonian, sector_map
from .spectra import (
    SpectralDecomposition,
    eigh,
    ground_manifold,
    spectrum_blocked,
)

# Boltzmann weights below this are flushed to zero after the max shift.
WEIGHT_FLOOR = 1e-300


def _as_state(rho: np.ndarray) -> np.ndarray:
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def gibbs_weights(eigenvalues: np.ndarray, t: float, energy_scale: float) -> np.ndarray:
    """Normalized Boltzmann weights exp(-(E - E_min)/(t*energy_scale))."""
    if t <= 0:
        raise ValueError(f"temperature must be positive, got {t}")
    if energy_scale <= 0:
        raise ValueError(f"energy scale must be positive, got {energy_scale}")
    shifted = np.asarray(eigenvalues, dtype=float) - float(np.min(eigenvalues))
    weights = np.exp(-shifted / (t * energy_scale))
    weights[weights < WEIGHT_FLOOR] = 0.0
    return weights / weights.sum()


def gibbs_state_from_spectrum(spec: SpectralDecomposition, t: float,
                              energy_scale: float = 1.0) -> np.ndarray:
    """Gibbs state assembled from a precomputed spectral decomposition."""
    if t == 0:
        return zero_temperature_state(spec)
    weights = gibbs_weights(spec.eigenvalues, t, energy_scale)
    rho = (spec.eigenvectors * weights) @ spec.eigenvectors.conj().T
    return _as_state(rho)


def gibbs_state(h: np.ndarray, t: float, energy_scale: float = 1.0) -> np.ndarray:
    """Normalized thermal state exp(-h/(t*energy_scale)) / Z.

    Computed through the spectral decomposition with the minimum eigenvalue
    subtracted in the exponent, so it is overflow safe at any temperature.
    t = 0 returns the uniform mixture over the ground manifold.
    """
    if t < 0:
        raise ValueError(f"temperature must be nonnegative, got {t}")
    return gibbs_state_from_spectrum(eigh(h), t, energy_scale)


def zero_temperature_state(spec: SpectralDecomposition, tol: float | None = None) -> np.ndarray:
    """Uniform mixture over the ground manifold, the t -> 0+ Gibbs limit."""
    manifold = ground_manifold(spec, tol)
    basis = manifold.basis
    return _as_state((basis @ basis.conj().T) / manifold.degeneracy)


def partial_trace(rho: np.ndarray, keep, n_qubits: int) -> np.ndarray:
    """Reduced density matrix on the kept qubits.

    Parameters
    ----------
    rho : density matrix of dimension 2**n_qubits
    keep : indices of the qubits to retain; the reduced matrix keeps them
        in their original relative order
    n_qubits : total number of qubits
    """
    rho = np.asarray(rho)
    dim = 2 ** n_qubits
    if rho.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix, got {rho.shape}")
    kept = sorted(set(int(q) for q in keep))
    if not kept:
        raise ValueError("keep must name at least one qubit")
    if kept[0] < 0 or kept[-1] >= n_qubits:
        raise ValueError(f"keep indices {kept} out of range for {n_qubits} qubits")
    if len(kept) == n_qubits:
        return rho.copy()

    # 2*n_qubits tensor axes: row bits then column bits, most significant first
    letters = "abcdefghijklmnopqrstuvwxyz"
    kept_set = set(kept)
    row = [letters[q] for q in range(n_qubits)]
    col = [letters[n_qubits + q] if q in kept_set else letters[q] for q in range(n_qubits)]
    out = [row[q] for q in kept] + [col[q] for q in kept]
    subs = "".join(row) + "".join(col) + "->" + "".join(out)
    tensor = rho.reshape((2,) * (2 * n_qubits))
    reduced_dim = 2 ** len(kept)
    return np.einsum(subs, tensor).reshape(reduced_dim, reduced_dim)


def reduced_thermal_state(params: SpinStarParams, t: float,
                          degeneracy_tol: float | None = None) -> np.ndarray:
    """Thermal state of the full star with the central spin traced out.

    Uses the sector-blocked diagonalization; t = 0 takes the ground-manifold
    limit with the given (or default) degeneracy tolerance.
    """
    if t < 0:
        raise ValueError(f"temperature must be nonnegative, got {t}")
    h = build_hamiltonian(params)
    spec = spectrum_blocked(h, sector_map(params.n_qubits))
    if t == 0:
        full = zero_temperature_state(spec, degeneracy_tol)
    else:
        full = gibbs_state_from_spectrum(spec, t, params.omega)
    return partial_trace(full, range(1, params.m + 1), params.n_qubits)
