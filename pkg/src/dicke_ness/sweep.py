"""Sweeps of the steady-state entropies over the scaled drive strength."""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
import os

import numpy as np

from . import _accel
from .entanglement import (
    EntropyRecord,
    entropy_derivative,
    lieb_quantity,
    relative_entropy_multipartite,
    von_neumann_entropy,
)
from .errors import DomainError, NumericRangeError
from .reduction import reduce
from .steady_state import DriveParams, exact_steady_state, phase_averaged_steady_state

WORKERS_ENV = "DICKE_NESS_WORKERS"


@dataclass(frozen=True)
class SweepSpec:
    """Uniform grid of ``count`` drive strengths on ``[omega_min, omega_max]`` for one or more ``N``."""

    n_atoms: tuple
    omega_min: float = 0.0
    omega_max: float = 3.0
    count: int = 301
    parts: tuple = (1, 2, 3)
    phase: float = 0.0
    phase_averaged: bool = False
    relative_variant: str = "caption"
    derivative_for: int | None = None

    def __post_init__(self):
        atoms = (self.n_atoms,) if np.isscalar(self.n_atoms) else tuple(self.n_atoms)
        object.__setattr__(self, "n_atoms", tuple(sorted({int(n) for n in atoms})))
        object.__setattr__(self, "parts", tuple(int(m) for m in self.parts))
        if not self.n_atoms:
            raise DomainError("at least one atom number is required")
        if self.count < 2:
            raise DomainError(f"grid needs at least 2 points, got {self.count}")
        if self.omega_min < 0 or not self.omega_max > self.omega_min:
            raise DomainError(f"need 0 <= omega_min < omega_max, got [{self.omega_min}, {self.omega_max}]")
        if not self.parts:
            raise DomainError("at least one part size is required")
        if self.relative_variant not in ("caption", "eq8"):
            raise DomainError(f"unknown relative-entropy variant {self.relative_variant!r}")
        for n in self.n_atoms:
            bad = [m for m in self.parts if not 1 <= m <= n - 1]
            if bad:
                raise DomainError(f"part sizes {bad} are invalid for N={n}; need 1 <= M <= N-1")
        if self.derivative_for is not None and self.derivative_for not in self.parts:
            raise DomainError(f"derivative requested for M={self.derivative_for}, which is not among the parts")
        if self.derivative_for is not None and self.count < 3:
            raise DomainError("the derivative needs at least 3 grid points")

    @property
    def grid(self):
        return np.linspace(self.omega_min, self.omega_max, self.count)


@dataclass
class SweepResult:
    spec: SweepSpec
    rows: list
    provenance: dict = field(default_factory=dict)

    def curve(self, n_atoms, key):
        """``(omega_s, values)`` for one ``N``; ``key`` is a part size or a record attribute name."""
        rows = [r for r in self.rows if r.n_atoms == n_atoms]
        x = np.array([r.omega_s for r in rows])
        if isinstance(key, int):
            y = np.array([r.entropies[key] for r in rows])
        else:
            y = np.array([getattr(r, key) for r in rows], dtype=float)
        return x, y


def evaluate_point(n_atoms, omega_s, spec):
    """All per-point diagnostics for one ``(N, omega_s)``."""
    params = DriveParams(n_atoms, float(omega_s), spec.phase)
    build = phase_averaged_steady_state if spec.phase_averaged else exact_steady_state
    rho = build(params)
    entropies = {m: von_neumann_entropy(reduce(rho, m).matrix) for m in spec.parts}
    record = EntropyRecord(
        n_atoms=n_atoms,
        omega_s=float(omega_s),
        entropies=entropies,
        phase_averaged=spec.phase_averaged,
        relative_variant=spec.relative_variant,
    )
    if {1, 2, 3} <= set(spec.parts):
        record.lieb_value = lieb_quantity(entropies[1], entropies[2], entropies[3])
        record.relative_caption = relative_entropy_multipartite(entropies, 3, "caption")
        record.relative_eq8 = relative_entropy_multipartite(entropies, 3, "eq8")
    return record


def default_workers():
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_sweep(spec, workers=None):
    """Evaluate every grid point of ``spec``, then attach the derivative column.

    Points are independent and may run on a thread pool; rows are assembled
    in ``(N, grid index)`` order, so the output does not depend on
    scheduling.
    """
    grid = spec.grid
    tasks = [(n, w) for n in sorted(spec.n_atoms) for w in grid]
    workers = default_workers() if workers is None else max(1, int(workers))

    def task(item):
        n, w = item
        try:
            return evaluate_point(n, w, spec)
        except NumericRangeError as exc:
            raise NumericRangeError(f"sweep aborted at N={n}, omega_s={w}: {exc}") from exc

    if workers == 1:
        rows = [task(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(task, tasks))

    if spec.derivative_for is not None:
        for n in sorted(spec.n_atoms):
            block = [r for r in rows if r.n_atoms == n]
            ds = entropy_derivative(grid, [r.entropies[spec.derivative_for] for r in block])
            for r, v in zip(block, ds):
                r.derivative = float(v)

    provenance = {
        "solver": "closed-form series",
        "kernel": "numba" if _accel.USE_NUMBA else "numpy",
        "tolerances": {"zero_eigenvalue": 1e-14, "negative_eigenvalue": -1e-10},
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    return SweepResult(spec=spec, rows=rows, provenance=provenance)
