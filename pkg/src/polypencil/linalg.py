"""Dense complex matrix kernels: LU with partial pivoting, solves, determinants.

Everything operates on plain ``numpy.ndarray`` values with dtype complex128.
Matrices are small (pencil sizes at desk scale stay well under ~100), so the
factorizations below favour clarity over BLAS-grade performance.  numpy is
used as the array substrate; the factorization and substitution loops are
written out so that pivot information stays available to callers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, SingularMatrixError

__all__ = [
    "as_cmatrix",
    "identity",
    "zeros",
    "sip",
    "kron",
    "add",
    "sub",
    "matmul",
    "scalar_mul",
    "conj_transpose",
    "frobenius_norm",
    "LUFactors",
    "lu_factor",
    "lu_solve",
    "solve",
    "determinant",
    "det",
    "pivot_ratio",
]


def as_cmatrix(a, name="matrix"):
    """Coerce ``a`` to a 2-D complex128 array, rejecting NaN/Inf entries."""
    m = np.atleast_2d(np.asarray(a, dtype=complex))
    if m.ndim != 2:
        raise DimensionMismatchError(f"{name} must be two-dimensional, got shape {m.shape}")
    if m.shape[0] < 1 or m.shape[1] < 1:
        raise DimensionMismatchError(f"{name} must have at least one row and column")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError(f"{name} contains non-finite entries")
    return m


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=complex)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=complex)


def sip(n: int) -> np.ndarray:
    """Anti-identity J (ones on the anti-diagonal); J @ J == I."""
    return np.eye(n, dtype=complex)[::-1].copy()


def kron(a, b) -> np.ndarray:
    return np.kron(as_cmatrix(a), as_cmatrix(b))


# The remaining arithmetic is numpy's own; the named forms exist so callers
# get shape/finiteness validation instead of broadcasting surprises.

def add(a, b) -> np.ndarray:
    a, b = as_cmatrix(a), as_cmatrix(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"cannot add {a.shape} and {b.shape}")
    return a + b


def sub(a, b) -> np.ndarray:
    a, b = as_cmatrix(a), as_cmatrix(b)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"cannot subtract {b.shape} from {a.shape}")
    return a - b


def matmul(a, b) -> np.ndarray:
    a, b = as_cmatrix(a), as_cmatrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def scalar_mul(c, a) -> np.ndarray:
    return complex(c) * as_cmatrix(a)


def conj_transpose(a) -> np.ndarray:
    return as_cmatrix(a).conj().T.copy()


def frobenius_norm(a) -> float:
    return float(np.linalg.norm(np.asarray(a, dtype=complex)))


@dataclass(frozen=True)
class LUFactors:
    """Packed L\\U factors of a square matrix with partial (row) pivoting.

    ``lu`` stores U on and above the diagonal and the unit-lower-triangular
    multipliers strictly below it.  ``row_swaps[k]`` is the row exchanged
    with row k at elimination step k; ``parity`` is the sign of the
    accumulated permutation.
    """

    lu: np.ndarray
    row_swaps: np.ndarray
    parity: int

    @property
    def n(self) -> int:
        return self.lu.shape[0]

    def permutation(self) -> np.ndarray:
        """Row permutation p such that A[p] == L @ U."""
        p = np.arange(self.n)
        for k, r in enumerate(self.row_swaps):
            p[k], p[r] = p[r], p[k]
        return p


def lu_factor(a) -> LUFactors:
    """PA = LU with partial pivoting.

    Raises SingularMatrixError as soon as a pivot column is exactly zero from
    the diagonal down; near-singular input is the caller's concern.
    """
    lu = as_cmatrix(a).copy()
    n, m = lu.shape
    if n != m:
        raise DimensionMismatchError(f"lu_factor needs a square matrix, got {n}x{m}")
    swaps = np.arange(n)
    parity = 1
    for k in range(n):
        col = np.abs(lu[k:, k])
        pick = int(np.argmax(col))
        if col[pick] == 0.0:
            raise SingularMatrixError(f"exactly zero pivot column at elimination step {k}")
        if pick != 0:
            lu[[k, k + pick]] = lu[[k + pick, k]]
            parity = -parity
        swaps[k] = k + pick
        if k + 1 < n:
            lu[k + 1:, k] /= lu[k, k]
            lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return LUFactors(lu=lu, row_swaps=swaps, parity=parity)


def lu_solve(f: LUFactors, b) -> np.ndarray:
    """Solve A x = b given the factors of A.  b may have several columns."""
    rhs = as_cmatrix(b).copy()
    n = f.n
    if rhs.shape[0] != n:
        raise DimensionMismatchError(f"rhs has {rhs.shape[0]} rows, expected {n}")
    for k, r in enumerate(f.row_swaps):
        if r != k:
            rhs[[k, r]] = rhs[[r, k]]
    lu = f.lu
    for k in range(1, n):  # forward substitution, unit lower triangle
        rhs[k] -= lu[k, :k] @ rhs[:k]
    for k in range(n - 1, -1, -1):  # back substitution
        if k + 1 < n:
            rhs[k] -= lu[k, k + 1:] @ rhs[k + 1:]
        rhs[k] /= lu[k, k]
    return rhs


def solve(a, b) -> np.ndarray:
    """One-shot solve; raises SingularMatrixError on exact breakdown."""
    return lu_solve(lu_factor(a), b)


def determinant(f: LUFactors) -> complex:
    """parity * prod(diag U)."""
    return complex(f.parity * np.prod(np.diag(f.lu)))


def det(a) -> complex:
    """Determinant of a square matrix; exact pivot breakdown means zero."""
    try:
        return determinant(lu_factor(a))
    except SingularMatrixError:
        return 0.0 + 0.0j


def pivot_ratio(f: LUFactors) -> float:
    """min|u_kk| / max|u_kk| -- a cheap singularity indicator for guards."""
    d = np.abs(np.diag(f.lu))
    top = float(d.max())
    if top == 0.0:
        return 0.0
    return float(d.min()) / top
