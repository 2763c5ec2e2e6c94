"""Characteristic polynomial, root conditions and s-v stability rasters.

Applied to y'' = -sigma**2 y with ``s = sigma*h`` a method fitted at ``v``
has the palindromic characteristic polynomial ``sum_k (a_k + s**2 b_k(v)) z**k``.
The method is counted stable at (s, v) when every root satisfies
``|z| <= 1 + tol``.
"""
from __future__ import annotations

import csv
import io
import logging
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

import mpmath
import numpy as np

from . import kernels
from .coeffs import A_COEFFS, DEFAULT_POLICY, MethodId, PrecisionPolicy, b_half_mp, coefficients
from .errors import ConvergenceFailure

log = logging.getLogger(__name__)

DEGREE = 12
DEFAULT_TOL = 1e-8


@dataclass(frozen=True)
class CharPolynomial:
    coefficients: np.ndarray  # c_0 .. c_12, ascending powers of z

    def __call__(self, z):
        return np.polyval(self.coefficients[::-1], z)


def characteristic_polynomial(method, s: float, v: float, policy: PrecisionPolicy = DEFAULT_POLICY) -> CharPolynomial:
    cs = coefficients(method, v, policy)
    c = cs.a + float(s) ** 2 * cs.b
    c.setflags(write=False)
    return CharPolynomial(c)


def roots(p: CharPolynomial, *, polish: int = 2) -> np.ndarray:
    """All 12 roots via companion-matrix eigenvalues, Newton-polished.

    Raises :class:`ConvergenceFailure` if any relative residual
    ``|p(z)| / sum_k |c_k| |z|**k`` reaches 1e-8 (for roots inside the unit
    disk this is at least as strict as ``|p(z)| < 1e-8 * ||c||_1``).
    """
    c = np.asarray(p.coefficients, dtype=float)
    if c[-1] == 0:
        raise ConvergenceFailure("leading coefficient is zero")
    comp = np.zeros((DEGREE, DEGREE))
    comp[np.arange(1, DEGREE), np.arange(DEGREE - 1)] = 1.0
    comp[:, -1] = -c[:-1] / c[-1]
    try:
        z = np.linalg.eigvals(comp).astype(complex)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceFailure(str(exc)) from exc
    desc = c[::-1]
    ddesc = np.polyder(desc)
    for _ in range(polish):
        val = np.polyval(desc, z)
        der = np.polyval(ddesc, z)
        # multiple roots have tiny derivatives; leave those alone
        safe = np.abs(der) > 1e-6 * np.linalg.norm(c)
        z = np.where(safe, z - val / np.where(safe, der, 1.0), z)
    num = np.abs(np.polyval(desc, z))
    scale = np.polyval(np.abs(desc), np.abs(z))
    resid = np.divide(num, scale, out=np.zeros_like(num), where=scale > 0)
    if not np.all(np.isfinite(z)) or resid.max() >= 1e-8:
        raise ConvergenceFailure(f"root residual {resid.max():.3g} too large")
    return z


def is_stable(method, s: float, v: float, tol: float = DEFAULT_TOL, policy: PrecisionPolicy = DEFAULT_POLICY) -> bool:
    if not s > 0:
        raise ValueError("s must be positive; s = 0 has the consistency double root z = 1")
    z = roots(characteristic_polynomial(method, s, v, policy))
    return bool(np.abs(z).max() <= 1.0 + tol)


def principal_phase(method, s: float, v: float, *, dps: int = 50):
    """lambda(s) as an mpf: argument of the characteristic root closest to exp(i s).

    Computed with mpmath at ``dps`` digits, so ``s - lambda(s)`` can be
    resolved far below double precision.
    """
    with mpmath.workdps(dps):
        half = b_half_mp(method, v, dps)
        b = [mpmath.mpf(0)] + list(half) + list(half[-2::-1]) + [mpmath.mpf(0)]
        s_mp = mpmath.mpf(s)
        c = [A_COEFFS[k] + s_mp**2 * b[k] for k in range(DEGREE + 1)]
        zs = mpmath.polyroots(c[::-1], maxsteps=200, extraprec=2 * dps)
        target = mpmath.expj(s_mp)
        z = min(zs, key=lambda r: abs(r - target))
        return mpmath.arg(z)


@dataclass
class StabilityGrid:
    s_min: float
    s_max: float
    v_min: float
    v_max: float
    ns: int
    nv: int
    cells: np.ndarray  # (ns, nv) bool, cells[p, q] at (s_p, v_q)
    tol: float = DEFAULT_TOL
    max_modulus: np.ndarray | None = None
    failures: int = 0
    method: MethodId | None = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def s_values(self) -> np.ndarray:
        return _midpoints(self.s_min, self.s_max, self.ns)

    @property
    def v_values(self) -> np.ndarray:
        return _midpoints(self.v_min, self.v_max, self.nv)


def _midpoints(lo, hi, n):
    return lo + (np.arange(n) + 0.5) * (hi - lo) / n


def _A_rows(b, s):
    # A_j = a_{6-j} + s^2 b_{6-j}, one row per s
    a = np.asarray(A_COEFFS, dtype=float)
    j = np.arange(7)
    return a[6 - j][None, :] + (s * s)[:, None] * np.asarray(b)[6 - j][None, :]


def stability_grid(
    method,
    s_range=(0.0, 1.5),
    v_range=(0.0, 1.5),
    ns: int = 100,
    nv: int = 100,
    tol: float = DEFAULT_TOL,
    policy: PrecisionPolicy = DEFAULT_POLICY,
    *,
    kernel=None,
) -> StabilityGrid:
    """Raster of the stability predicate over cell midpoints of an s-v window.

    Cells whose roots cannot be found are marked unstable and counted in
    ``failures``. ``kernel`` overrides the root-modulus kernel
    (see :mod:`phasefit.kernels`).
    """
    if ns < 1 or nv < 1:
        raise ValueError("ns and nv must be positive")
    method = MethodId.parse(method)
    kernel = kernel or kernels.max_root_modulus
    s = _midpoints(*s_range, ns)
    v = _midpoints(*v_range, nv)
    modulus = np.empty((ns, nv))
    failed = np.zeros((ns, nv), dtype=bool)
    if method is MethodId.CLASSICAL:
        col, bad = kernel(_A_rows(coefficients(method).b, s))
        modulus[:] = col[:, None]
        failed[:] = bad[:, None]
    else:
        for q, vq in enumerate(v):
            col, bad = kernel(_A_rows(coefficients(method, vq, policy).b, s))
            modulus[:, q] = col
            failed[:, q] = bad
    cells = (modulus <= 1.0 + tol) & ~failed
    n_fail = int(failed.sum())
    if n_fail:
        log.warning("%d of %d cells failed root finding and are marked unstable", n_fail, ns * nv)
    return StabilityGrid(
        s_min=float(s_range[0]), s_max=float(s_range[1]),
        v_min=float(v_range[0]), v_max=float(v_range[1]),
        ns=ns, nv=nv, cells=cells, tol=tol, max_modulus=modulus,
        failures=n_fail, method=method,
        diagnostics={"cells": ns * nv, "stable": int(cells.sum()), "failures": n_fail},
    )


# ---------------------------------------------------------------------------
# output

def grid_to_csv(grid: StabilityGrid) -> str:
    """``s,v,stable`` rows, v-major (all s for the first v, then the next v)."""
    buf = io.StringIO()
    buf.write("s,v,stable\n")
    s, v = grid.s_values, grid.v_values
    for q in range(grid.nv):
        for p in range(grid.ns):
            buf.write(f"{s[p]:.9g},{v[q]:.9g},{int(grid.cells[p, q])}\n")
    return buf.getvalue()


def grid_to_pgm(grid: StabilityGrid) -> str:
    """Plain PGM: one image row per v (first row is the smallest v), stable = 255."""
    lines = ["P2", f"{grid.ns} {grid.nv}", "255"]
    for q in range(grid.nv):
        lines.append(" ".join("255" if grid.cells[p, q] else "0" for p in range(grid.ns)))
    return "\n".join(lines) + "\n"


def read_grid_csv(path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Read a grid CSV back as ``(s_values, v_values, cells)``."""
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    s_vals = sorted({float(r["s"]) for r in rows})
    v_vals = sorted({float(r["v"]) for r in rows})
    si = {x: i for i, x in enumerate(s_vals)}
    vi = {x: i for i, x in enumerate(v_vals)}
    cells = np.zeros((len(s_vals), len(v_vals)), dtype=bool)
    for r in rows:
        cells[si[float(r["s"])], vi[float(r["v"])]] = r["stable"] == "1"
    return np.array(s_vals), np.array(v_vals), cells


def atomic_write(path, text: str) -> None:
    """Write via a temporary file in the target directory and rename into place."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_grid(grid: StabilityGrid, path) -> tuple[Path, Path]:
    """Write ``<stem>.csv`` and ``<stem>.pgm`` next to ``path``; returns both paths."""
    path = Path(path)
    csv_path, pgm_path = path.with_suffix(".csv"), path.with_suffix(".pgm")
    atomic_write(csv_path, grid_to_csv(grid))
    atomic_write(pgm_path, grid_to_pgm(grid))
    return csv_path, pgm_path
