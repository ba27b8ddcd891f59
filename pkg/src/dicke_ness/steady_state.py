"""Steady state of the coherently driven, collectively decaying Dicke ensemble.

Units: the collective decay rate is 1. The master equation is

    d rho/dt = i G [exp(-i phi) S+ + exp(i phi) S-, rho]
               - (S+ S- rho - 2 S- rho S+ + rho S+ S-)

with real drive amplitude ``G = N * omega_s / 2``, so the transition sits at
``omega_s = 1``.

Three constructions are provided: the closed-form series
(:func:`exact_steady_state`), the Liouvillian null vector
(:func:`steady_state_via_nullspace`) and long-time RK4 integration
(:func:`evolve`). In the series

    rho ~ sum_{m,n} x^m conj(x)^n (S-)^m (S+)^n,   x = -i exp(i phi) / G,

which is the convention the null-space solution selects. Element ``(p, q)``
therefore carries the phase ``i^(p-q) exp(-i phi (p-q))``, i.e. changing the
drive phase acts as ``U rho U^H`` with ``U = exp(-i phi Sz)``.
"""
from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np

from . import _kernels
from .collective_spin import DickeBasis, collective_operator_matrix
from .density import ground_state, trace_distance
from .errors import DegeneracyError, DomainError, IntegrationError, NumericRangeError, ResourceError

ORACLE_MAX_ATOMS = 30
UNIQUENESS_GAP = 1e-6
TRACE_DRIFT_TOL = 1e-9

_I_POWERS = np.array([1, 1j, -1, -1j])


@dataclass(frozen=True)
class DriveParams:
    """Drive configuration ``(N, omega_s, phi)`` in units of the collective decay rate."""

    n_atoms: int
    omega_s: float
    phase: float = 0.0

    def __post_init__(self):
        if int(self.n_atoms) != self.n_atoms or self.n_atoms < 1:
            raise DomainError(f"n_atoms must be a positive integer, got {self.n_atoms!r}")
        if not math.isfinite(self.omega_s) or self.omega_s < 0:
            raise DomainError(f"omega_s must be finite and nonnegative, got {self.omega_s!r}")
        if not math.isfinite(self.phase):
            raise DomainError(f"phase must be finite, got {self.phase!r}")

    @property
    def drive(self):
        """Drive amplitude ``G = N * omega_s / 2``."""
        return self.n_atoms * self.omega_s / 2

    @property
    def basis(self):
        return DickeBasis(int(self.n_atoms))


@dataclass(frozen=True)
class Trajectory:
    """Sampled solution of the master equation; ``states[k]`` is the state at ``times[k]``."""

    times: np.ndarray
    states: np.ndarray

    def __len__(self):
        return len(self.times)

    @property
    def final(self):
        return self.states[-1]


@lru_cache(maxsize=64)
def _log_ladder(n_atoms):
    table = _kernels.log_ladder_table(n_atoms)
    table.flags.writeable = False
    return table


@lru_cache(maxsize=64)
def _operators(n_atoms):
    basis = DickeBasis(n_atoms)
    up = collective_operator_matrix(basis, "raise")
    down = collective_operator_matrix(basis, "lower")
    for a in (up, down):
        a.flags.writeable = False
    return up, down


def _phase_matrix(n_atoms, phase):
    idx = np.arange(n_atoms + 1)
    d = idx[:, None] - idx[None, :]
    return _I_POWERS[d % 4] * np.exp(-1j * phase * d)


def exact_steady_state(params):
    """Closed-form steady state, normalised to unit trace.

    Each element is accumulated in the log domain (see
    :func:`dicke_ness._kernels.ness_log_magnitude`) and scaled by the largest
    element before exponentiation, so the result is finite for very weak and
    very strong drives alike. ``omega_s = 0`` returns the ground projector.
    """
    N = int(params.n_atoms)
    if params.omega_s == 0:
        return ground_state(N + 1)
    log_g = math.log(params.drive)
    logmag = _kernels.ness_log_magnitude(_log_ladder(N), log_g)
    top = logmag.max()
    if not np.isfinite(top) or np.isnan(logmag).any():
        raise NumericRangeError(f"steady state out of range for N={N}, omega_s={params.omega_s}")
    rho = np.exp(logmag - top) * _phase_matrix(N, params.phase)
    tr = np.trace(rho).real
    if not np.isfinite(tr) or tr <= 0:
        raise NumericRangeError(f"steady state normalisation failed for N={N}, omega_s={params.omega_s}")
    return rho / tr


def phase_averaged_steady_state(params):
    """Steady state averaged over a uniformly random drive phase.

    Averaging the ``exp(-i phi (p-q))`` dependence over ``phi`` removes every
    coherence, leaving the diagonal of the coherent state.
    """
    pops = exact_steady_state(params).diagonal().real
    rho = np.diag(pops).astype(complex)
    tr = pops.sum()
    if abs(tr - 1) > 1e-12:
        raise NumericRangeError(f"phase-averaged trace is {tr}")
    return rho


def liouvillian_matrix(params, max_atoms=ORACLE_MAX_ATOMS):
    """Superoperator ``L`` with ``vec(d rho/dt) = L vec(rho)``.

    ``vec`` stacks columns (Fortran order), so ``vec(A X B) = (B^T kron A) vec(X)``.
    Raises :class:`ResourceError` for ``N > max_atoms``.
    """
    N = int(params.n_atoms)
    if N > max_atoms:
        raise ResourceError(f"Liouvillian for N={N} exceeds the oracle size guard N <= {max_atoms}")
    up, down = _operators(N)
    eye = np.eye(N + 1)
    h = np.exp(-1j * params.phase) * up + np.exp(1j * params.phase) * down
    a = up @ down
    coherent = 1j * params.drive * (np.kron(eye, h) - np.kron(h.T, eye))
    dissipative = 2 * np.kron(up.T, down) - np.kron(eye, a) - np.kron(a.T, eye)
    return coherent + dissipative


def steady_state_via_nullspace(params, max_atoms=ORACLE_MAX_ATOMS):
    """Steady state from the right singular vector of the smallest singular value of ``L``."""
    N = int(params.n_atoms)
    if params.omega_s == 0:
        return ground_state(N + 1)
    L = liouvillian_matrix(params, max_atoms=max_atoms)
    _, s, vh = np.linalg.svd(L)
    if s[-2] <= UNIQUENESS_GAP:
        raise DegeneracyError(
            f"Liouvillian kernel is degenerate for N={N}, omega_s={params.omega_s} "
            f"(second-smallest singular value {s[-2]:.3e})"
        )
    rho = vh[-1].conj().reshape(N + 1, N + 1, order="F")
    # fix the arbitrary global phase before Hermitising
    rho = rho / np.trace(rho)
    rho = 0.5 * (rho + rho.conj().T)
    return rho / np.trace(rho).real


def default_time_step(params):
    """RK4 step resolving the fastest drive and collective-decay rates.

    ``rate`` bounds the norm of the Liouvillian. ``0.1 / rate`` keeps the
    truncation error on initially empty populations, which is what drives
    eigenvalues negative, below about 1e-8.
    """
    N = int(params.n_atoms)
    up, down = _operators(N)
    decay_norm = float(np.max(np.abs(np.diag(up @ down))))
    rate = 4 * decay_norm + 4 * params.drive * math.sqrt(decay_norm)
    return min(0.05, 0.1 / rate)


def master_equation_rhs(params):
    """Return ``f`` with ``f(rho) = d rho/dt`` acting on ``(N+1) x (N+1)`` arrays."""
    up, down = _operators(int(params.n_atoms))
    h = np.exp(-1j * params.phase) * up + np.exp(1j * params.phase) * down
    ig = 1j * params.drive
    a = up @ down

    def rhs(rho):
        return ig * (h @ rho - rho @ h) - (a @ rho + rho @ a) + 2 * (down @ rho @ up)

    return rhs


def evolve(params, initial, t_final, dt=None, sample_every=1):
    """Integrate the master equation with fixed-step classical RK4.

    Parameters
    ----------
    params : DriveParams
    initial : ndarray
        Starting density matrix in the Dicke basis.
    t_final : float
        End time; the step is shrunk slightly so the grid hits it exactly.
    dt : float, optional
        Step size; defaults to :func:`default_time_step`.
    sample_every : int
        Keep every ``sample_every``-th step. Both endpoints are always kept.

    Returns
    -------
    Trajectory
    """
    rho = np.array(initial, dtype=complex)
    d = int(params.n_atoms) + 1
    if rho.shape != (d, d):
        raise DomainError(f"initial state has shape {rho.shape}, expected {(d, d)}")
    if t_final < 0:
        raise DomainError("t_final must be nonnegative")
    if dt is None:
        dt = default_time_step(params)
    if dt <= 0:
        raise DomainError("dt must be positive")
    steps = max(1, math.ceil(t_final / dt - 1e-9)) if t_final > 0 else 0
    h = t_final / steps if steps else 0.0
    f = master_equation_rhs(params)
    tr0 = np.trace(rho).real

    times = [0.0]
    states = [rho.copy()]
    for k in range(1, steps + 1):
        k1 = f(rho)
        k2 = f(rho + 0.5 * h * k1)
        k3 = f(rho + 0.5 * h * k2)
        k4 = f(rho + h * k3)
        rho = rho + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
        if k % sample_every == 0 or k == steps:
            t = k * h
            drift = abs(np.trace(rho) - tr0)
            if not np.all(np.isfinite(rho)) or drift > TRACE_DRIFT_TOL or np.abs(rho).max() > 1 + 1e-6:
                raise IntegrationError(f"integration became unstable at t={t:.6g} (trace drift {drift:.3e})")
            times.append(t)
            states.append(rho.copy())
    return Trajectory(np.array(times), np.array(states))


def relaxation_time(params, threshold=1e-4, t_max=20.0, dt=None):
    """Time after which the trace distance to the exact steady state stays below ``threshold``.

    The ensemble starts in its ground state. Returns ``inf`` if the distance
    is still above ``threshold`` at ``t_max``.
    """
    target = exact_steady_state(params)
    traj = evolve(params, ground_state(int(params.n_atoms) + 1), t_max, dt=dt)
    dist = np.array([trace_distance(rho, target) for rho in traj.states])
    above = np.nonzero(dist >= threshold)[0]
    if len(above) == 0:
        return 0.0
    if above[-1] == len(dist) - 1:
        return math.inf
    return float(traj.times[above[-1] + 1])
