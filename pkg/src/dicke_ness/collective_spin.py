"""Dicke-basis bookkeeping, collective spin operators and stretched Clebsch-Gordan coefficients.

Spins and magnetic numbers are accepted as ints, floats, or
:class:`fractions.Fraction` and converted to doubled integers (``2S``,
``2m``) internally, so all index arithmetic is exact.

Basis convention: vector ``i`` in ``0..N`` carries ``m = i - N/2``; ``i = 0``
is the fully de-excited state ``|N/2, -N/2>``.

All Clebsch-Gordan coefficients here couple two symmetric blocks into the
stretched total spin ``J = j1 + j2``. In the Condon-Shortley convention they
are real and nonnegative, so reduced density matrices inherit no extra
phases.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math

import numpy as np

from .errors import DomainError, NumericRangeError


def doubled(x):
    """Return ``2*x`` as an int, raising :class:`DomainError` unless it is integral."""
    two_x = 2 * Fraction(x)
    if two_x.denominator != 1:
        raise DomainError(f"{x!r} is neither an integer nor a half-integer")
    return int(two_x)


def _check_pair(two_s, two_q):
    if two_s < 0:
        raise DomainError(f"spin must be nonnegative, got {Fraction(two_s, 2)}")
    if abs(two_q) > two_s or (two_s - two_q) % 2:
        raise DomainError(
            f"magnetic number {Fraction(two_q, 2)} is not valid for spin {Fraction(two_s, 2)}"
        )


@dataclass(frozen=True)
class DickeBasis:
    """Symmetric spin-``N/2`` sector of ``N`` two-level atoms."""

    n_atoms: int

    def __post_init__(self):
        if int(self.n_atoms) != self.n_atoms or self.n_atoms < 1:
            raise DomainError(f"n_atoms must be a positive integer, got {self.n_atoms!r}")

    @property
    def two_s(self):
        return int(self.n_atoms)

    @property
    def total_spin(self):
        return Fraction(self.n_atoms, 2)

    @property
    def dimension(self):
        return int(self.n_atoms) + 1

    def index(self, m):
        """Basis index of magnetic number ``m``."""
        two_m = doubled(m)
        _check_pair(self.two_s, two_m)
        return (two_m + self.two_s) // 2

    def magnetic(self, i):
        """Magnetic number of basis index ``i`` as a Fraction."""
        if not 0 <= i < self.dimension:
            raise DomainError(f"index {i} outside 0..{self.n_atoms}")
        return Fraction(2 * i - self.two_s, 2)

    def magnetic_numbers(self):
        """Array of ``m`` values in index order."""
        return np.arange(self.dimension) - self.n_atoms / 2


@dataclass(frozen=True)
class CouplingScheme:
    """Stretched coupling ``M/2 (x) (N-M)/2 -> N/2``."""

    total_atoms: int
    part_size: int

    def __post_init__(self):
        N, M = self.total_atoms, self.part_size
        if int(N) != N or int(M) != M:
            raise DomainError("atom counts must be integers")
        if not 1 <= M <= N - 1:
            raise DomainError(f"part size must satisfy 1 <= M <= N-1, got M={M}, N={N}")

    @property
    def j1(self):
        return Fraction(self.part_size, 2)

    @property
    def j2(self):
        return Fraction(self.total_atoms - self.part_size, 2)

    @property
    def total(self):
        return Fraction(self.total_atoms, 2)


def ladder_coefficient(S, q, n):
    """Norm ``f(q, n)`` with ``(S+)^n |S, q> = f(q, n) |S, q+n>``.

    The value is ``prod_{k<n} sqrt((S-q-k)(S+q+k+1))``; it is zero once
    ``q + n > S`` and one for ``n = 0``. Raises :class:`NumericRangeError`
    if the result overflows a double; use :func:`log_ladder_coefficient`
    for large spins.
    """
    two_s, two_q = doubled(S), doubled(q)
    _check_pair(two_s, two_q)
    if n < 0:
        raise DomainError(f"power must be nonnegative, got {n}")
    if two_q + 2 * n > two_s:
        return 0.0
    # S - q - k and S + q + k + 1 are integers
    a = (two_s - two_q) // 2
    b = (two_s + two_q) // 2
    squared = 1
    for k in range(n):
        squared *= (a - k) * (b + k + 1)
    try:
        return math.sqrt(squared)
    except OverflowError:
        raise NumericRangeError(
            f"ladder coefficient for S={S}, q={q}, n={n} overflows; use log_ladder_coefficient"
        ) from None


def log_ladder_coefficient(S, q, n):
    """Natural log of :func:`ladder_coefficient`; ``-inf`` marks an exact zero."""
    two_s, two_q = doubled(S), doubled(q)
    _check_pair(two_s, two_q)
    if n < 0:
        raise DomainError(f"power must be nonnegative, got {n}")
    if two_q + 2 * n > two_s:
        return -math.inf
    a = (two_s - two_q) // 2
    b = (two_s + two_q) // 2
    return 0.5 * (
        math.lgamma(a + 1) - math.lgamma(a - n + 1) + math.lgamma(b + n + 1) - math.lgamma(b + 1)
    )


def log_binomial(n, k):
    """``log C(n, k)``; ``-inf`` outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return -math.inf
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def collective_operator_matrix(basis, which):
    """Dense matrix of ``S+``, ``S-`` or ``Sz`` in the Dicke basis.

    Parameters
    ----------
    basis : DickeBasis
    which : {"raise", "lower", "z"}

    Returns
    -------
    ndarray, complex, shape (N+1, N+1)
    """
    d = basis.dimension
    N = basis.n_atoms
    if which == "z":
        return np.diag(basis.magnetic_numbers()).astype(complex)
    raise_op = np.zeros((d, d), dtype=complex)
    i = np.arange(N)
    # <m+1| S+ |m> = sqrt((S-m)(S+m+1)) with S-m = N-i, S+m = i
    raise_op[i + 1, i] = np.sqrt((N - i) * (i + 1.0))
    if which == "raise":
        return raise_op
    if which == "lower":
        return raise_op.T.copy()
    raise DomainError(f"unknown operator {which!r}; expected 'raise', 'lower' or 'z'")


def _cg_from_indices(N, M, a, b):
    # a = j + j1, b = k + j2; exact integer ratio, correctly rounded on division
    ratio = math.comb(M, a) * math.comb(N - M, b) / math.comb(N, a + b)
    return math.sqrt(ratio)


def clebsch_gordan(scheme, j, k):
    """``<j1, j; j2, k | j1+j2, j+k>`` for a stretched :class:`CouplingScheme`.

    Closed form ``sqrt(C(M, j1+j) C(N-M, j2+k) / C(N, N/2+j+k))``, which is
    checked against explicit lowering-operator construction in the tests.
    """
    two_j, two_k = doubled(j), doubled(k)
    M, N = scheme.part_size, scheme.total_atoms
    _check_pair(M, two_j)
    _check_pair(N - M, two_k)
    return _cg_from_indices(N, M, (two_j + M) // 2, (two_k + N - M) // 2)


@lru_cache(maxsize=256)
def _cg_table_cached(N, M):
    table = np.array(
        [[_cg_from_indices(N, M, a, b) for b in range(N - M + 1)] for a in range(M + 1)]
    )
    table.flags.writeable = False
    return table


def cg_table(scheme):
    """All stretched coefficients as a read-only array ``T[a, b]``.

    ``a = j + j1`` indexes the part, ``b = k + j2`` the complement, and the
    coupled state has Dicke index ``a + b`` in the ``N``-atom basis.
    """
    return _cg_table_cached(int(scheme.total_atoms), int(scheme.part_size))
