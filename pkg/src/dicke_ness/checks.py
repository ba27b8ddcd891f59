"""Self-check suites run by ``dicke-ness check``.

Each suite compares a production path against an independent reference
and reports the worst deviation it saw.
"""
from dataclasses import dataclass

import numpy as np

from . import oracles
from .collective_spin import CouplingScheme, cg_table
from .density import check_density_matrix
from .entanglement import von_neumann_entropy
from .reduction import reduce
from .steady_state import DriveParams, exact_steady_state, steady_state_via_nullspace
from .sweep import SweepSpec, run_sweep

ORACLE_OMEGAS = (0.1, 0.5, 0.9, 1.0, 1.1, 2.0, 5.0)
ORACLE_PHASES = (0.0, 1.2)


@dataclass
class CheckResult:
    module: str
    prop: str
    passed: bool
    detail: str


def _result(module, prop, worst, tol):
    return CheckResult(module, prop, bool(worst < tol), f"max deviation {worst:.2e} (tol {tol:g})")


def check_oracle_equivalence(atoms_max):
    worst = 0.0
    for n in range(1, atoms_max + 1):
        for w in ORACLE_OMEGAS:
            for phi in ORACLE_PHASES:
                p = DriveParams(n, w, phi)
                worst = max(worst, np.abs(exact_steady_state(p) - steady_state_via_nullspace(p)).max())
    return _result("steady_state", "closed form == Liouvillian null space", worst, 1e-10)


def check_density_invariants(atoms_max):
    failures = []
    for n in range(1, atoms_max + 1):
        for w in (0.0,) + ORACLE_OMEGAS:
            rho = exact_steady_state(DriveParams(n, w, 0.7))
            mats = [rho] + [reduce(rho, m).matrix for m in range(1, n)]
            for mat in mats:
                try:
                    check_density_matrix(mat, trace_tol=1e-10, hermitian_tol=1e-10)
                except ValueError as exc:
                    failures.append(f"N={n}, omega_s={w}: {exc}")
    detail = "all Hermitian, unit trace, PSD" if not failures else failures[0]
    return CheckResult("steady_state", "trace/Hermiticity/PSD", not failures, detail)


def check_phase_covariance(atoms_max):
    worst = 0.0
    phi = 1.2
    for n in range(1, atoms_max + 1):
        m = np.arange(n + 1) - n / 2
        u = np.exp(-1j * phi * m)
        rho0 = exact_steady_state(DriveParams(n, 0.9))
        rho = exact_steady_state(DriveParams(n, 0.9, phi))
        worst = max(worst, np.abs(rho - u[:, None] * rho0 * u.conj()[None, :]).max())
    return _result("steady_state", "phase covariance exp(-i phi Sz)", worst, 1e-12)


def check_cg_lowering(atoms_max):
    worst = 0.0
    for n in range(2, atoms_max + 1):
        for m in range(1, n):
            table = cg_table(CouplingScheme(n, m))
            coupled = oracles.coupled_state_coefficients(m, n - m)
            for a in range(m + 1):
                for b in range(n - m + 1):
                    worst = max(worst, abs(table[a, b] - coupled[a + b, a, b]))
    return _result("collective_spin", "stretched CG closed form == lowering construction", worst, 1e-12)


def check_embedding(atoms_max):
    worst = 0.0
    for n in range(2, min(atoms_max, 8) + 1):
        rho = exact_steady_state(DriveParams(n, 1.0, 0.4))
        for m in range(1, n):
            ours = oracles.embed(reduce(rho, m).matrix)
            ref = oracles.brute_force_reduction(rho, m)
            worst = max(worst, np.abs(ours - ref).max())
    return _result("reduction", "CG reduction == qubit partial trace", worst, 1e-10)


def check_reduction_chain(atoms_max):
    worst = 0.0
    for n in range(3, atoms_max + 1):
        rho = exact_steady_state(DriveParams(n, 1.1, 0.3))
        for m in range(2, n):
            inner = reduce(rho, m).matrix
            for k in range(1, m):
                worst = max(worst, np.abs(reduce(rho, k).matrix - reduce(inner, k).matrix).max())
    return _result("reduction", "N->M->K equals N->K", worst, 1e-10)


def check_lieb_and_bounds(atoms_max):
    n = max(4, atoms_max)
    result = run_sweep(SweepSpec(n_atoms=(n,), omega_min=0.0, omega_max=3.0, count=61), workers=1)
    worst = max(r.lieb_value for r in result.rows)
    out_of_bounds = [
        (r.omega_s, m)
        for r in result.rows
        for m, s in r.entropies.items()
        if not -1e-9 <= s <= np.log2(m + 1) + 1e-9
    ]
    lieb = CheckResult(
        "entanglement", f"Lieb S1+S3-2S2 <= 1e-12 (N={n})", bool(worst <= 1e-12), f"max value {worst:.2e}"
    )
    bounds = CheckResult(
        "entanglement",
        "0 <= S_M <= log2(M+1)",
        not out_of_bounds,
        "all within bounds" if not out_of_bounds else f"violations at {out_of_bounds[:3]}",
    )
    return [lieb, bounds]


def check_phase_entropy_invariance(atoms_max):
    worst = 0.0
    for n in range(2, atoms_max + 1):
        a = exact_steady_state(DriveParams(n, 1.0))
        b = exact_steady_state(DriveParams(n, 1.0, 2.1))
        for m in range(1, n):
            worst = max(
                worst, abs(von_neumann_entropy(reduce(a, m).matrix) - von_neumann_entropy(reduce(b, m).matrix))
            )
    return _result("entanglement", "entropy invariant under drive phase", worst, 1e-10)


def run_all(atoms_max=8):
    """Run every suite; returns a list of :class:`CheckResult`."""
    results = [
        check_oracle_equivalence(atoms_max),
        check_density_invariants(atoms_max),
        check_phase_covariance(atoms_max),
        check_cg_lowering(atoms_max),
        check_embedding(atoms_max),
        check_reduction_chain(atoms_max),
        check_phase_entropy_invariance(atoms_max),
    ]
    results.extend(check_lieb_and_bounds(atoms_max))
    return results
