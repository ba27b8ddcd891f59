import numpy as np
import pytest

from dicke_ness import _kernels


@pytest.fixture(params=["numpy", "jit"])
def ness_kernel(request, monkeypatch):
    """Run a test once per kernel implementation."""
    kernel = getattr(_kernels, f"ness_log_magnitude_{request.param}")
    monkeypatch.setattr(_kernels, "ness_log_magnitude", kernel)
    return request.param


def is_density_matrix(rho, tol=1e-12, psd=1e-10):
    return (
        np.abs(rho - rho.conj().T).max() <= tol
        and abs(np.trace(rho) - 1) <= tol
        and np.linalg.eigvalsh(rho).min() >= -psd
    )
