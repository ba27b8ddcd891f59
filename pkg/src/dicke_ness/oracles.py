"""Brute-force references in the explicit ``2^N`` qubit tensor space.

These are deliberately naive and only meant for small ``N`` (``2^N`` dense
matrices). Qubit ordering: the first tensor factor is atom 0, and the single
atom basis is ``(|down>, |up>)``.
"""
import numpy as np

from .errors import ResourceError

MAX_QUBITS = 12

_LOWER = np.array([[0.0, 1.0], [0.0, 0.0]])  # |down><up|


def qubit_lowering_operator(n_qubits):
    """Collective lowering ``sum_j s-_j`` on ``n_qubits`` qubits."""
    if n_qubits > MAX_QUBITS:
        raise ResourceError(f"{n_qubits} qubits exceeds the brute-force guard of {MAX_QUBITS}")
    dim = 2 ** n_qubits
    total = np.zeros((dim, dim))
    for j in range(n_qubits):
        op = np.ones((1, 1))
        for k in range(n_qubits):
            op = np.kron(op, _LOWER if k == j else np.eye(2))
        total += op
    return total


def dicke_embedding(n_qubits):
    """Isometry ``V`` of shape ``(2^N, N+1)`` whose column ``i`` is ``|N/2, i - N/2>``.

    Built by repeatedly lowering ``|up>^N`` and normalising, so all
    amplitudes are nonnegative.
    """
    lower = qubit_lowering_operator(n_qubits)
    dim = 2 ** n_qubits
    v = np.zeros(dim)
    v[-1] = 1.0  # all atoms up
    cols = [v]
    for _ in range(n_qubits):
        v = lower @ v
        v = v / np.linalg.norm(v)
        cols.append(v)
    return np.array(cols[::-1]).T


def partial_trace_last(rho, n_keep, n_total):
    """Trace out qubits ``n_keep..n_total-1`` of a ``2^n_total`` density matrix."""
    dk = 2 ** n_keep
    dt = 2 ** (n_total - n_keep)
    return np.einsum("ikjk->ij", rho.reshape(dk, dt, dk, dt))


def brute_force_reduction(rho, n_keep):
    """Embed a Dicke-basis state into qubit space, trace out, return the kept-qubit matrix."""
    n_total = rho.shape[0] - 1
    v = dicke_embedding(n_total)
    full = v @ rho @ v.T
    return partial_trace_last(full, n_keep, n_total)


def embed(rho):
    """Dicke-basis matrix as a ``2^N`` qubit matrix."""
    v = dicke_embedding(rho.shape[0] - 1)
    return v @ rho @ v.T


def coupled_state_coefficients(two_j1, two_j2):
    """Stretched coupling coefficients by explicit lowering in ``j1 (x) j2``.

    Returns ``c[p_index, a, b]``: the amplitude of ``|j1, a - j1> |j2, b - j2>``
    in ``|j1 + j2, p_index - (j1 + j2)>``. Spins are given doubled, so each
    block has ``two_j + 1`` states.
    """
    d1, d2 = two_j1 + 1, two_j2 + 1

    def lower(two_j):
        d = two_j + 1
        op = np.zeros((d, d))
        for i in range(1, d):
            # <i-1| S- |i> = sqrt((S + m)(S - m + 1)) with S + m = i
            op[i - 1, i] = np.sqrt(i * (two_j - i + 1.0))
        return op

    total_lower = np.kron(lower(two_j1), np.eye(d2)) + np.kron(np.eye(d1), lower(two_j2))
    v = np.zeros(d1 * d2)
    v[-1] = 1.0
    states = [v]
    for _ in range(two_j1 + two_j2):
        v = total_lower @ v
        v = v / np.linalg.norm(v)
        states.append(v)
    return np.array(states[::-1]).reshape(two_j1 + two_j2 + 1, d1, d2)
