"""Dense complex eigensolver and the generalized-eigenvalue front end for pencils.

The path is Householder reduction to Hessenberg form followed by a
single-shift (Wilkinson) QR iteration with deflation -- complex arithmetic
throughout, since the pencils are genuinely complex.  Generalized
eigenvalues of z*C1 - C0 are obtained by shift-and-invert: with
M = sigma*C1 - C0 nonsingular, the eigenvalues theta of M^-1 C1 map to
pencil eigenvalues lambda = sigma - 1/theta, and theta near zero means an
eigenvalue at infinity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    NoConvergenceError,
    SingularMatrixError,
    SingularPencilEverywhereError,
)
from .linalg import as_cmatrix, lu_factor, lu_solve, pivot_ratio
from .matpoly import MatrixPolynomial, evaluate
from .pencils import CompanionPencil

__all__ = [
    "EigenResult",
    "hessenberg",
    "qr_eigenvalues",
    "eig",
    "generalized_eigenvalues",
    "eigen_residual",
]

# |theta| at or below this classifies the generalized eigenvalue as infinite.
# Tunable: spurious interpolation eigenvalues show up with |theta| well above
# it and have to be judged by magnitude and residual instead.
THETA_INF = 1e-8

SHIFT_RADIUS = 1.37
MAX_SHIFT_TRIES = 8


@dataclass(frozen=True)
class EigenResult:
    """Finite eigenvalues with residuals, plus the count classified infinite."""

    finite: tuple
    infinite_count: int
    shift_used: complex


def hessenberg(a) -> np.ndarray:
    """Reduce to upper Hessenberg form by unitary (Householder) similarity."""
    h = as_cmatrix(a).copy()
    n = h.shape[0]
    if n != h.shape[1]:
        raise ValueError("hessenberg needs a square matrix")
    for k in range(n - 2):
        x = h[k + 1:, k]
        norm_x = np.linalg.norm(x)
        if norm_x == 0.0:
            continue
        v = x.copy()
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v[0] += phase * norm_x
        nv = np.linalg.norm(v)
        if nv == 0.0:
            continue
        v /= nv
        h[k + 1:, k:] -= 2.0 * np.outer(v, v.conj() @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, v.conj())
        h[k + 2:, k] = 0.0
    return h


def _wilkinson(a, b, c, d):
    """Eigenvalue of [[a, b], [c, d]] closer to d."""
    disc = np.sqrt((a - d) * (a - d) + 4.0 * b * c)
    l1 = 0.5 * (a + d + disc)
    l2 = 0.5 * (a + d - disc)
    return l1 if abs(l1 - d) <= abs(l2 - d) else l2


def qr_eigenvalues(h, budget_factor: int = 100) -> np.ndarray:
    """All eigenvalues of an upper Hessenberg matrix by shifted QR.

    Single complex Wilkinson shift with Givens rotations and bottom-up
    deflation; an occasional ad hoc shift breaks symmetry stalls.  Raises
    NoConvergenceError once budget_factor * N sweeps are spent.
    """
    h = as_cmatrix(h).copy()
    n = h.shape[0]
    if n == 1:
        return h[0, :1].copy()
    eps = np.finfo(float).eps
    anorm = max(float(np.linalg.norm(h)), np.finfo(float).tiny)
    eigs = np.zeros(n, dtype=complex)
    budget = budget_factor * n
    sweeps = 0
    stall = 0
    m = n
    while m > 0:
        if m == 1:
            eigs[0] = h[0, 0]
            break
        small = eps * (abs(h[m - 2, m - 2]) + abs(h[m - 1, m - 1]))
        if small == 0.0:
            small = eps * anorm
        if abs(h[m - 1, m - 2]) <= small:
            eigs[m - 1] = h[m - 1, m - 1]
            m -= 1
            stall = 0
            continue
        lo = m - 1
        while lo > 0:
            small = eps * (abs(h[lo - 1, lo - 1]) + abs(h[lo, lo]))
            if small == 0.0:
                small = eps * anorm
            if abs(h[lo, lo - 1]) <= small:
                h[lo, lo - 1] = 0.0
                break
            lo -= 1
        sweeps += 1
        stall += 1
        if sweeps > budget:
            raise NoConvergenceError(f"QR iteration spent {sweeps} sweeps without deflating")
        if stall % 12 == 0:
            sigma = h[m - 1, m - 1] + 0.75 * abs(h[m - 1, m - 2])
        else:
            sigma = _wilkinson(h[m - 2, m - 2], h[m - 2, m - 1],
                               h[m - 1, m - 2], h[m - 1, m - 1])
        for i in range(lo, m):
            h[i, i] -= sigma
        rotations = []
        for i in range(lo, m - 1):
            aa, bb = h[i, i], h[i + 1, i]
            r = np.hypot(abs(aa), abs(bb))
            if r == 0.0:
                c, s = 1.0 + 0.0j, 0.0 + 0.0j
            else:
                c, s = aa / r, bb / r
            rotations.append((c, s))
            top = h[i, i:m].copy()
            bot = h[i + 1, i:m].copy()
            h[i, i:m] = np.conj(c) * top + np.conj(s) * bot
            h[i + 1, i:m] = -s * top + c * bot
        for idx, (c, s) in enumerate(rotations):
            i = lo + idx
            hi = min(i + 2, m - 1)
            left = h[lo:hi + 1, i].copy()
            right = h[lo:hi + 1, i + 1].copy()
            h[lo:hi + 1, i] = left * c + right * s
            h[lo:hi + 1, i + 1] = -left * np.conj(s) + right * np.conj(c)
        for i in range(lo, m):
            h[i, i] += sigma
    return eigs


def eig(a) -> np.ndarray:
    """Eigenvalues of a dense complex matrix."""
    return qr_eigenvalues(hessenberg(a))


def _inverse_iteration_residual(matrix, scale, rng):
    n = matrix.shape[0]
    v = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    v /= np.linalg.norm(v)
    try:
        f = lu_factor(matrix)
    except SingularMatrixError:
        return 0.0
    for _ in range(3):
        w = lu_solve(f, v.reshape(-1, 1)).ravel()
        norm_w = np.linalg.norm(w)
        if not np.isfinite(norm_w) or norm_w == 0.0:
            return 0.0
        v = w / norm_w
    return float(np.linalg.norm(matrix @ v) / scale)


def eigen_residual(p: MatrixPolynomial, lam, rng=None) -> float:
    """Smallest-singular-value proxy of P(lambda), scaled by the data size.

    A few inverse-iteration steps from a random vector align v with the
    near-null direction; the result is ||P(lambda) v|| / max_k ||P_k||_F.
    An exactly singular P(lambda) short-circuits to 0.
    """
    rng = np.random.default_rng(271828) if rng is None else rng
    payload = p.coefficients or p.samples
    if payload is None:
        payload = [m for group in p.hermite_samples for m in group]
    scale = max(float(np.linalg.norm(m)) for m in payload)
    if scale == 0.0:
        scale = 1.0
    return _inverse_iteration_residual(evaluate(p, lam), scale, rng)


def _pencil_residual(pc: CompanionPencil, lam, rng) -> float:
    scale = max(float(np.linalg.norm(pc.c1)), float(np.linalg.norm(pc.c0)), 1e-300)
    return _inverse_iteration_residual(pc.at(lam), scale * (1.0 + abs(lam)), rng)


def generalized_eigenvalues(pc: CompanionPencil, p: MatrixPolynomial = None,
                            rng=None, theta_inf: float = THETA_INF) -> EigenResult:
    """Eigenvalues of the pencil z*C1 - C0 by shift-and-invert.

    Shifts are drawn on the circle |sigma| = 1.37 until sigma*C1 - C0
    factors with a healthy pivot ratio (at most 8 tries).  Eigenvalues theta
    of (sigma C1 - C0)^-1 C1 with |theta| <= theta_inf are reported as
    infinite; the rest map to lambda = sigma - 1/theta, sorted by real then
    imaginary part.  Residuals come from eigen_residual when the polynomial
    is supplied, otherwise from the pencil itself.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    factors = None
    sigma = None
    for _ in range(MAX_SHIFT_TRIES):
        angle = rng.uniform(0.0, 2.0 * np.pi)
        candidate = SHIFT_RADIUS * complex(np.cos(angle), np.sin(angle))
        try:
            f = lu_factor(candidate * pc.c1 - pc.c0)
        except SingularMatrixError:
            continue
        if pivot_ratio(f) < 1e-12:
            continue
        factors, sigma = f, candidate
        break
    if factors is None:
        raise SingularPencilEverywhereError(
            f"no acceptable shift among {MAX_SHIFT_TRIES} tries; pencil may be singular"
        )
    thetas = eig(lu_solve(factors, pc.c1))
    finite = []
    infinite = 0
    for theta in thetas:
        if abs(theta) <= theta_inf:
            infinite += 1
            continue
        lam = sigma - 1.0 / theta
        if p is not None:
            res = eigen_residual(p, lam)
        else:
            res = _pencil_residual(pc, lam, np.random.default_rng(271828))
        finite.append((complex(lam), res))
    finite.sort(key=lambda pair: (pair[0].real, pair[0].imag))
    return EigenResult(finite=tuple(finite), infinite_count=infinite,
                       shift_used=complex(sigma))
