"""Reduced density matrices of symmetric ``N``-atom states.

Writing each Dicke state as ``|N/2, p> = sum_{j+k=p} C_{j,k} |M/2, j> |(N-M)/2, k>``
and tracing out the ``N - M`` complement gives

    rho_M[mu, nu] = sum_l rho[mu + l, nu + l] C(mu, l) conj(C(nu, l)).

The coefficients are real in the stretched scheme, so the conjugate is a
no-op. The result is supported on the symmetric spin-``M/2`` sector, so an
``(M+1)``-dimensional matrix is the complete marginal.
"""
from dataclasses import dataclass

import numpy as np

from .collective_spin import CouplingScheme, cg_table
from .errors import DomainError


@dataclass(frozen=True)
class ReducedState:
    part_size: int
    parent_size: int
    matrix: np.ndarray


def reduce(rho, M):
    """Marginal of ``M`` atoms of the symmetric state ``rho``.

    ``rho`` is any ``(N+1) x (N+1)`` density matrix in the Dicke basis,
    including the matrix of an earlier :class:`ReducedState`, so reductions
    can be chained.
    """
    rho = np.asarray(rho)
    if isinstance(M, bool) or int(M) != M:
        raise DomainError(f"part size must be an integer, got {M!r}")
    N = rho.shape[0] - 1
    M = int(M)
    if not 1 <= M <= N - 1:
        raise DomainError(f"part size must satisfy 1 <= M <= N-1, got M={M}, N={N}")
    table = cg_table(CouplingScheme(N, M))
    a = np.arange(M + 1)
    b = np.arange(N - M + 1)
    # block[a, c, b] = rho[a + b, c + b]
    block = rho[(a[:, None] + b[None, :])[:, None, :], (a[:, None] + b[None, :])[None, :, :]]
    out = np.einsum("acb,ab,cb->ac", block, table, table)
    return ReducedState(part_size=M, parent_size=N, matrix=out)
