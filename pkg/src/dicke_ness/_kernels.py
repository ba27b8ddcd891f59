"""Hot inner loops of the closed-form steady state.

Every kernel exists twice: a numba version (``*_jit``) and a vectorised
numpy version (``*_numpy``). The public name is bound to one of them at
import time according to :data:`dicke_ness._accel.USE_NUMBA`. Both paths
are kept importable so tests and the benchmark can compare them.
"""
import math

import numpy as np

from ._accel import USE_NUMBA, njit


def log_ladder_table(n_atoms):
    """Table ``t[i, n] = log f(i, n)`` of log ladder norms for spin ``N/2``.

    ``i`` is the Dicke index (``m = i - N/2``) and ``f(i, n)`` is the norm of
    ``(S+)^n |N/2, m>``. Entries with ``i + n > N`` are ``-inf``.
    """
    N = int(n_atoms)
    i = np.arange(N + 1)[:, None]
    k = np.arange(N)[None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        # factor (S - m - k)(S + m + k + 1) in index form
        steps = 0.5 * (np.log((N - i - k).astype(float)) + np.log((i + k + 1).astype(float)))
    steps = np.where(N - i - k > 0, steps, -np.inf)
    table = np.empty((N + 1, N + 1))
    table[:, 0] = 0.0
    if N:
        table[:, 1:] = np.cumsum(steps, axis=1)
    table[np.isnan(table)] = -np.inf
    return table


@njit
def ness_log_magnitude_jit(lf, log_g):
    # scalar-loop twin of ness_log_magnitude_numpy
    N = lf.shape[0] - 1
    out = np.empty((N + 1, N + 1))
    terms = np.empty(N + 1)
    for ip in range(N + 1):
        for iq in range(ip + 1):
            d = ip - iq
            count = N - ip + 1
            top = -np.inf
            for m in range(count):
                t = -(2 * m + d) * log_g + lf[ip, m] + lf[iq, m + d]
                terms[m] = t
                if t > top:
                    top = t
            acc = 0.0
            for m in range(count):
                acc += math.exp(terms[m] - top)
            val = top + math.log(acc)
            out[ip, iq] = val
            out[iq, ip] = val
    return out


def ness_log_magnitude_numpy(lf, log_g):
    """Log magnitude of each unnormalised steady-state element.

    Parameters
    ----------
    lf : ndarray, shape (N+1, N+1)
        Output of :func:`log_ladder_table`.
    log_g : float
        Natural log of the drive amplitude ``G`` (decay rate 1).

    Returns
    -------
    ndarray, shape (N+1, N+1)
        Symmetric matrix of ``log sum_m G^-(2m+d) f(p, m) f(q, m+d)`` with
        ``d = |p - q|``; every term is log-sum-exp accumulated against its own
        running maximum so no intermediate leaves double range.
    """
    N = lf.shape[0] - 1
    out = np.empty((N + 1, N + 1))
    for d in range(N + 1):
        iq = np.arange(N - d + 1)
        ip = iq + d
        m = np.arange(N - d + 1)
        valid = m[None, :] <= (N - ip)[:, None]
        mm = np.where(valid, m[None, :], 0)
        t = -(2 * mm + d) * log_g + lf[ip[:, None], mm] + lf[iq[:, None], mm + d]
        t = np.where(valid, t, -np.inf)
        top = t.max(axis=1)
        val = top + np.log(np.exp(t - top[:, None]).sum(axis=1))
        out[ip, iq] = val
        out[iq, ip] = val
    return out


ness_log_magnitude = ness_log_magnitude_jit if USE_NUMBA else ness_log_magnitude_numpy
