"""Validation and small utilities for density matrices (plain complex ndarrays)."""
import numpy as np

from .errors import DomainError, PositivityError

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10


def check_density_matrix(rho, hermitian_tol=HERMITIAN_TOL, trace_tol=TRACE_TOL, psd_tol=PSD_TOL):
    """Raise unless ``rho`` is square, Hermitian, unit-trace and PSD within tolerances.

    Returns ``rho`` so calls can be chained.
    """
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1] or rho.shape[0] == 0:
        raise DomainError(f"density matrix must be square and nonempty, got shape {rho.shape}")
    if not np.all(np.isfinite(rho)):
        raise DomainError("density matrix has non-finite entries")
    herm = np.max(np.abs(rho - rho.conj().T))
    if herm > hermitian_tol:
        raise DomainError(f"density matrix is not Hermitian (max |rho - rho^H| = {herm:.3e})")
    tr = np.trace(rho)
    if abs(tr - 1) > trace_tol:
        raise DomainError(f"density matrix trace is {tr}, not 1")
    lowest = np.linalg.eigvalsh(rho).min()
    if lowest < -psd_tol:
        raise PositivityError(f"density matrix has eigenvalue {lowest:.3e}")
    return rho


def ground_state(dimension):
    """Projector onto basis vector 0."""
    rho = np.zeros((dimension, dimension), dtype=complex)
    rho[0, 0] = 1.0
    return rho


def trace_norm(a):
    """Schatten-1 norm of a Hermitian matrix."""
    return float(np.abs(np.linalg.eigvalsh(a)).sum())


def trace_distance(rho, sigma):
    """``0.5 * ||rho - sigma||_1``."""
    return 0.5 * trace_norm(np.asarray(rho) - np.asarray(sigma))
