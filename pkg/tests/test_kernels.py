import math
import os
import subprocess
import sys

import numpy as np
import pytest

from dicke_ness import _accel, _kernels
from dicke_ness.collective_spin import log_ladder_coefficient


@pytest.mark.parametrize("n", [1, 4, 17])
def test_ladder_table_matches_scalar(n):
    table = _kernels.log_ladder_table(n)
    for i in range(n + 1):
        for k in range(n + 1):
            ref = log_ladder_coefficient(n / 2, i - n / 2, k)
            if ref == -math.inf:
                assert table[i, k] == -math.inf
            else:
                assert table[i, k] == pytest.approx(ref, abs=1e-11)


@pytest.mark.parametrize("n", [1, 2, 7, 40, 150])
@pytest.mark.parametrize("omega_s", [1e-6, 0.3, 1.0, 4.0, 1e3])
def test_numba_and_numpy_agree(n, omega_s):
    lf = _kernels.log_ladder_table(n)
    log_g = math.log(n * omega_s / 2)
    a = _kernels.ness_log_magnitude_jit(lf, log_g)
    b = _kernels.ness_log_magnitude_numpy(lf, log_g)
    np.testing.assert_allclose(a, b, rtol=1e-13, atol=1e-11)
    np.testing.assert_array_equal(a, a.T)


def test_log_magnitude_direct_sum():
    # N = 3 against a plain double-precision sum of the series terms
    n, g = 3, 0.9
    s = n / 2
    m_vals = np.arange(n + 1) - s

    def f(q, k):
        out = 1.0
        for j in range(k):
            out *= math.sqrt(max((s - q - j) * (s + q + j + 1), 0.0))
        return out

    lf = _kernels.log_ladder_table(n)
    got = _kernels.ness_log_magnitude(lf, math.log(g))
    for ip, p in enumerate(m_vals):
        for iq, q in enumerate(m_vals):
            if ip < iq:
                continue
            d = ip - iq
            total = sum(g ** -(2 * m + d) * f(p, m) * f(q, m + d) for m in range(n - ip + 1))
            assert got[ip, iq] == pytest.approx(math.log(total), abs=1e-13)


def test_env_flag_selects_numpy():
    code = (
        "from dicke_ness import _accel, _kernels;"
        "print(_accel.USE_NUMBA, _kernels.ness_log_magnitude is _kernels.ness_log_magnitude_numpy)"
    )
    env = dict(os.environ, DICKE_NESS_NO_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "True"]


def test_default_uses_numba():
    if os.environ.get("DICKE_NESS_NO_NUMBA"):
        pytest.skip("numba disabled in this environment")
    assert _accel.USE_NUMBA == _accel.HAVE_NUMBA
