"""Hot loops: the explicit 12-step recurrence and characteristic-root moduli.

Each kernel exists twice, a numba-compiled scalar loop and a numpy version.
``linear_recurrence`` and ``max_root_modulus`` dispatch to one of them
according to :data:`phasefit._jit.BACKEND`.
"""
import numpy as np

from ._jit import BACKEND, NUMBA_AVAILABLE, njit

STEPS = 12


# ---------------------------------------------------------------------------
# explicit recurrence for y'' = g(x) y

def _linear_recurrence_loop(y, a, btab, bidx, g, h2):
    n_steps = bidx.shape[0]
    for n in range(n_steps):
        k = bidx[n]
        acc_a = 0.0
        acc_b = 0.0
        for j in range(STEPS):
            yj = y[n + j]
            acc_a += a[j] * yj
            acc_b += btab[k, j] * g[n + j] * yj
        y[n + STEPS] = -acc_a + h2 * acc_b
    return y


def linear_recurrence_numpy(y, a, btab, bidx, g, h2):
    """Fill ``y[12:]`` in place.

    ``btab[k]`` is a 13-entry b-vector, ``bidx[n]`` selects the row used for
    the step producing ``y[n + 12]``, ``g`` samples the coefficient function
    on the grid and ``h2 = h**2``.
    """
    a12 = np.ascontiguousarray(a[:STEPS], dtype=float)
    gy = np.empty(STEPS)
    for n in range(bidx.shape[0]):
        window = y[n:n + STEPS]
        np.multiply(g[n:n + STEPS], window, out=gy)
        y[n + STEPS] = -(a12 @ window) + h2 * (btab[bidx[n], :STEPS] @ gy)
    return y


linear_recurrence_numba = njit(_linear_recurrence_loop) if NUMBA_AVAILABLE else None


# ---------------------------------------------------------------------------
# largest characteristic-root modulus for a batch of palindromic polynomials
#
# sum_j A_j (z^j + z^-j) + A_0 becomes a monic sextic in w = z + 1/z because
# z^j + z^-j = L_j(w) with L_0 = 2, L_1 = w, L_{j+1} = w L_j - L_{j-1}.

def _lucas_table():
    table = np.zeros((7, 7))
    table[0, 0] = 2.0
    table[1, 1] = 1.0
    for j in range(1, 6):
        table[j + 1, 1:] += table[j, :-1]
        table[j + 1] -= table[j - 1]
    return table


LUCAS = _lucas_table()


def reduced_polynomials(A):
    """Coefficients (ascending powers of w) of the reduced sextic, one row per input row.

    ``A`` has shape (n, 7) holding A_0..A_6 with A_6 = 1.
    """
    A = np.atleast_2d(np.asarray(A, dtype=float))
    P = A[:, 1:] @ LUCAS[1:]
    P[:, 0] += A[:, 0]
    return P


def _z_modulus(w):
    r = np.sqrt(w * w - 4.0 + 0j)
    return np.maximum(np.abs(w + r), np.abs(w - r)) / 2.0


def max_root_modulus_numpy(A):
    """max |z| over the 12 characteristic roots, for each row of ``A`` (n, 7).

    Returns ``(moduli, failed)``; ``failed`` flags rows whose root finding
    broke down (their modulus is ``inf``).
    """
    P = reduced_polynomials(A)
    n = P.shape[0]
    comp = np.zeros((n, 6, 6))
    comp[:, np.arange(1, 6), np.arange(5)] = 1.0
    comp[:, :, -1] = -P[:, :6] / P[:, 6:7]
    out = np.full(n, np.inf)
    failed = ~np.all(np.isfinite(comp.reshape(n, -1)), axis=1)
    ok = ~failed
    if ok.any():
        w = np.linalg.eigvals(comp[ok])
        out[ok] = _z_modulus(w).max(axis=1)
    return out, failed


def _aberth_sextic(p, roots):
    # p: 7 ascending coefficients of a monic sextic; roots filled in place.
    # returns True on convergence.
    n = 6
    bound = 0.0
    for k in range(n):
        bound = max(bound, abs(p[k]))
    radius = 1.0 + bound  # Cauchy bound
    for k in range(n):
        ang = 2.0 * np.pi * k / n + 0.4
        roots[k] = radius * complex(np.cos(ang), np.sin(ang))
    settled = False
    for _ in range(500):
        biggest = 0.0
        for k in range(n):
            z = roots[k]
            val = complex(p[n], 0.0)
            der = 0j
            for m in range(n - 1, -1, -1):
                der = der * z + val
                val = val * z + p[m]
            if val == 0:
                continue
            ratio = val / der if der != 0 else complex(1e-3, 1e-3)
            s = 0j
            for m in range(n):
                if m != k:
                    diff = z - roots[m]
                    if diff != 0:
                        s += 1.0 / diff
            corr = ratio / (1.0 - ratio * s)
            roots[k] = z - corr
            size = abs(corr) / (1.0 + abs(z))
            if size > biggest:
                biggest = size
        if settled:
            return True
        # cubic convergence: one more sweep after this reaches round-off
        settled = biggest < 1e-12
    return False


def _max_root_modulus_loop(A):
    n = A.shape[0]
    out = np.empty(n)
    failed = np.zeros(n, dtype=np.bool_)
    lucas = LUCAS
    p = np.empty(7)
    roots = np.empty(6, dtype=np.complex128)
    for i in range(n):
        for k in range(7):
            p[k] = 0.0
        p[0] = A[i, 0]
        for j in range(1, 7):
            for k in range(7):
                p[k] += A[i, j] * lucas[j, k]
        lead = p[6]
        finite = lead != 0.0
        for k in range(7):
            if not np.isfinite(p[k]):
                finite = False
        if not finite:
            out[i] = np.inf
            failed[i] = True
            continue
        for k in range(7):
            p[k] /= lead
        if not _aberth_sextic(p, roots):
            comp = np.zeros((6, 6), dtype=np.complex128)
            for k in range(5):
                comp[k + 1, k] = 1.0
            for k in range(6):
                comp[k, 5] = -p[k]
            roots[:] = np.linalg.eigvals(comp)
        best = 0.0
        for k in range(6):
            w = roots[k]
            r = np.sqrt(w * w - 4.0 + 0j)
            best = max(best, abs(w + r) / 2.0, abs(w - r) / 2.0)
        out[i] = best
    return out, failed


if NUMBA_AVAILABLE:
    _aberth_sextic = njit(_aberth_sextic)
    max_root_modulus_numba = njit(_max_root_modulus_loop)
else:  # pragma: no cover
    max_root_modulus_numba = None


if BACKEND == "numba":
    linear_recurrence = linear_recurrence_numba
    max_root_modulus = max_root_modulus_numba
else:
    linear_recurrence = linear_recurrence_numpy
    max_root_modulus = max_root_modulus_numpy
