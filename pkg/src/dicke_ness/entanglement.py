"""Entropies of reduced states and the derived multipartite diagnostics.

All entropies are in bits; multiply by ``ln 2`` for nats.
"""
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .errors import DomainError, PositivityError

ZERO_EIGENVALUE = 1e-14
NEGATIVE_EIGENVALUE = -1e-10


@dataclass
class EntropyRecord:
    """Diagnostics at one drive strength.

    ``entropies`` maps part size ``M`` to ``S(rho_M)``. ``lieb_value`` and the
    two relative entropies are ``None`` unless parts 1, 2 and 3 were computed.
    """

    n_atoms: int
    omega_s: float
    entropies: dict = field(default_factory=dict)
    lieb_value: float | None = None
    relative_caption: float | None = None
    relative_eq8: float | None = None
    derivative: float | None = None
    phase_averaged: bool = False
    relative_variant: str = "caption"

    @property
    def relative_entropy(self):
        """The relative entropy of the selected variant."""
        return self.relative_caption if self.relative_variant == "caption" else self.relative_eq8


def von_neumann_entropy(rho):
    """``-Tr(rho log2 rho)`` from the eigenvalues of the Hermitian matrix ``rho``.

    Eigenvalues below ``1e-14`` count as zero; anything below ``-1e-10``
    raises :class:`PositivityError`.
    """
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {rho.shape}")
    lam = np.linalg.eigvalsh(rho)
    if lam.min() < NEGATIVE_EIGENVALUE:
        raise PositivityError(f"density matrix has eigenvalue {lam.min():.3e}")
    lam = lam[lam >= ZERO_EIGENVALUE]
    s = float(-(lam * np.log2(lam)).sum())
    # -0.0 from a single unit eigenvalue
    return s + 0.0


def entropy_derivative(omega_s, entropy):
    """``dS/d omega_s`` on a uniform grid.

    Central differences inside, second-order one-sided differences at both
    ends; the output has the same length as the input.
    """
    x = np.asarray(omega_s, dtype=float)
    y = np.asarray(entropy, dtype=float)
    if x.ndim != 1 or x.shape != y.shape:
        raise DomainError("abscissae and entropies must be 1-d arrays of equal length")
    if len(x) < 3:
        raise DomainError("need at least 3 samples")
    steps = np.diff(x)
    h = steps[0]
    if h <= 0 or np.any(steps <= 0):
        raise DomainError("abscissae must be strictly increasing")
    if np.max(np.abs(steps - h)) > 1e-9 * max(1.0, abs(h)):
        raise DomainError("abscissae must be uniformly spaced")
    return np.gradient(y, h, edge_order=2)


def relative_entropy_multipartite(entropies, M=3, variant="caption"):
    """Combination of subsystem entropies isolating genuine ``M``-party correlations.

    ``variant="eq8"`` is ``sum_{k=1}^{M} C(M, k) S_{M-k} - S_M``.
    ``variant="caption"`` alternates the signs,
    ``sum_{k=1}^{M} (-1)^(k+1) C(M, k) S_{M-k} - S_M``, which for ``M = 3``
    is ``3 S_2 - 3 S_1 - S_3``. ``S_0`` is zero by definition.
    """
    if variant not in ("caption", "eq8"):
        raise DomainError(f"unknown variant {variant!r}")
    missing = [m for m in range(1, M + 1) if m not in entropies]
    if missing:
        raise DomainError(f"missing entropies for part sizes {missing}")
    s = lambda m: 0.0 if m == 0 else float(entropies[m])
    total = 0.0
    for k in range(1, M + 1):
        sign = 1 if variant == "eq8" or k % 2 == 1 else -1
        total += sign * comb(M, k) * s(M - k)
    return total - s(M)


def lieb_quantity(S1, S2, S3):
    """``S1 + S3 - 2 S2``; nonpositive when the inequality holds."""
    return S1 + S3 - 2 * S2
