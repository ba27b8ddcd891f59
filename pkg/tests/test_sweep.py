import numpy as np
import pytest

from dicke_ness.errors import DomainError, NumericRangeError
from dicke_ness.sweep import SweepSpec, default_workers, run_sweep


def test_small_sweep():
    res = run_sweep(SweepSpec(n_atoms=4, omega_min=0, omega_max=2, count=5))
    assert len(res.rows) == 5
    first = res.rows[0]
    assert first.omega_s == 0.0
    assert all(v == 0.0 for v in first.entropies.values())
    assert first.lieb_value == 0.0
    assert [r.omega_s for r in res.rows] == [0.0, 0.5, 1.0, 1.5, 2.0]


def test_rows_sorted_by_n_then_omega():
    res = run_sweep(SweepSpec(n_atoms=(9, 5), omega_max=1.0, count=4))
    keys = [(r.n_atoms, r.omega_s) for r in res.rows]
    assert keys == sorted(keys)
    assert len(res.rows) == 8


def test_determinism_serial_and_threaded():
    spec = SweepSpec(n_atoms=(6, 12), omega_max=2.5, count=26, derivative_for=2)
    a = run_sweep(spec, workers=1)
    b = run_sweep(spec, workers=1)
    c = run_sweep(spec, workers=4)
    for x, y, z in zip(a.rows, b.rows, c.rows):
        assert x == y == z


def test_parts_without_triple_omit_combinations():
    res = run_sweep(SweepSpec(n_atoms=5, parts=(2,), count=3))
    assert res.rows[1].lieb_value is None and res.rows[1].relative_caption is None
    assert set(res.rows[1].entropies) == {2}


def test_derivative_column():
    spec = SweepSpec(n_atoms=10, omega_max=2.0, count=41, derivative_for=2)
    res = run_sweep(spec)
    x, y = res.curve(10, 2)
    _, d = res.curve(10, "derivative")
    np.testing.assert_allclose(d, np.gradient(y, x[1] - x[0], edge_order=2))


def test_phase_averaged_flag():
    res = run_sweep(SweepSpec(n_atoms=6, count=3, phase_averaged=True))
    assert all(r.phase_averaged for r in res.rows)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n_atoms=3, parts=(2, 3)),
        dict(n_atoms=4, count=1),
        dict(n_atoms=4, omega_min=-0.1),
        dict(n_atoms=4, omega_min=2.0, omega_max=1.0),
        dict(n_atoms=4, derivative_for=3, parts=(1, 2)),
        dict(n_atoms=4, relative_variant="nope"),
    ],
)
def test_invalid_specs(kwargs):
    with pytest.raises(DomainError):
        SweepSpec(**kwargs)


def test_numeric_error_names_point(monkeypatch):
    from dicke_ness import sweep

    def boom(params):
        raise NumericRangeError("overflow")

    monkeypatch.setattr(sweep, "exact_steady_state", boom)
    with pytest.raises(NumericRangeError, match=r"N=4, omega_s="):
        run_sweep(SweepSpec(n_atoms=4, count=2), workers=1)


def test_workers_env(monkeypatch):
    monkeypatch.setenv("DICKE_NESS_WORKERS", "3")
    assert default_workers() == 3


def test_provenance():
    res = run_sweep(SweepSpec(n_atoms=3, parts=(1, 2), count=2))
    assert res.provenance["solver"] == "closed-form series"
    assert res.provenance["kernel"] in ("numba", "numpy")


def test_relative_variant_selection():
    a = run_sweep(SweepSpec(n_atoms=6, count=3)).rows[2]
    b = run_sweep(SweepSpec(n_atoms=6, count=3, relative_variant="eq8")).rows[2]
    assert a.relative_entropy == a.relative_caption
    assert b.relative_entropy == b.relative_eq8 != a.relative_entropy
