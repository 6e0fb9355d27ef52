"""Companion pencil builders for every supported basis, plus pencil transforms.

Each builder assembles the pair (C1, C0) so that det(z*C1 - C0) = det P(z)
for every z, which is the executable form of the linearization property and
is what the test suite checks.  Sizes: N = n*ell for three-term and
Bernstein bases, N = n*(ell+2) for Lagrange and Hermite bases (those carry
spurious eigenvalues at infinity; no deflation is attempted).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bases import (
    Basis,
    Bernstein,
    Hermite,
    Lagrange,
    ThreeTermBasis,
    barycentric_weights,
    recurrence_row,
)
from .errors import (
    DimensionMismatchError,
    GradeTooSmallError,
    UnsupportedBasisError,
)
from .linalg import as_cmatrix, lu_factor, lu_solve, sip
from .matpoly import MatrixPolynomial

__all__ = [
    "CompanionPencil",
    "build",
    "build_three_term",
    "build_bernstein",
    "build_lagrange",
    "build_hermite",
    "flip",
    "transpose",
    "similarity",
]


@dataclass(frozen=True)
class CompanionPencil:
    """The pair (C1, C0) of N x N matrices with its construction metadata.

    ``basis`` is None for pencils that did not come from a single basis
    (flips and similarity transforms keep it; algebraic compositions do not).
    """

    c1: np.ndarray
    c0: np.ndarray
    n: int
    ell: int
    basis: Basis = None
    provenance: str = ""

    def __post_init__(self):
        if self.c1.shape != self.c0.shape or self.c1.shape[0] != self.c1.shape[1]:
            raise DimensionMismatchError("C1 and C0 must be square with equal shapes")

    @property
    def size(self) -> int:
        return self.c1.shape[0]

    def at(self, z) -> np.ndarray:
        """The pencil matrix z*C1 - C0."""
        return complex(z) * self.c1 - self.c0


def _blk(i, n):
    return slice(i * n, (i + 1) * n)


def build(p: MatrixPolynomial) -> CompanionPencil:
    """Dispatch to the builder matching the polynomial's basis."""
    if isinstance(p.basis, ThreeTermBasis):
        return build_three_term(p)
    if isinstance(p.basis, Bernstein):
        return build_bernstein(p)
    if isinstance(p.basis, Lagrange):
        return build_lagrange(p)
    if isinstance(p.basis, Hermite):
        return build_hermite(p)
    raise UnsupportedBasisError(f"no pencil builder for {type(p.basis).__name__}")


def build_three_term(p: MatrixPolynomial) -> CompanionPencil:
    """Companion pencil for a coefficient polynomial in a three-term basis.

    C1 is block diagonal with P_ell/alpha_{ell-1} in the corner; C0 carries
    the negated coefficients across the first block row and the recurrence
    band below it.  Each band row is divided by its alpha_k, which leaves
    the resolvent triple untouched (the scaling never reaches the first
    block row) and makes det(z*C1 - C0) equal det P(z) exactly instead of
    up to the product of the alphas.  Grade 1 degenerates to the
    single-block pencil (P_1/alpha_0, (beta_0/alpha_0) P_1 - P_0).
    """
    if not isinstance(p.basis, ThreeTermBasis) or p.coefficients is None:
        raise UnsupportedBasisError("build_three_term needs a three-term coefficient polynomial")
    ell, n = p.grade, p.n
    if ell < 1:
        raise GradeTooSmallError("three-term pencil needs grade >= 1")
    coeff = p.coefficients
    if ell == 1:
        a0, b0, _ = recurrence_row(p.basis, 0)
        c1 = coeff[1] / a0
        c0 = (b0 / a0) * coeff[1] - coeff[0]
        return CompanionPencil(c1=c1.copy(), c0=c0, n=n, ell=1, basis=p.basis,
                               provenance="three_term")
    N = ell * n
    eye = np.eye(n, dtype=complex)
    a_top, b_top, g_top = recurrence_row(p.basis, ell - 1)
    c1 = np.zeros((N, N), dtype=complex)
    c1[_blk(0, n), _blk(0, n)] = coeff[ell] / a_top
    c0 = np.zeros((N, N), dtype=complex)
    c0[_blk(0, n), _blk(0, n)] = (b_top / a_top) * coeff[ell] - coeff[ell - 1]
    c0[_blk(0, n), _blk(1, n)] = (g_top / a_top) * coeff[ell] - coeff[ell - 2]
    for j in range(2, ell):
        c0[_blk(0, n), _blk(j, n)] = -coeff[ell - 1 - j]
    for i in range(1, ell):
        a, b, g = recurrence_row(p.basis, ell - 1 - i)
        c1[_blk(i, n), _blk(i, n)] = eye / a
        c0[_blk(i, n), _blk(i - 1, n)] = eye
        c0[_blk(i, n), _blk(i, n)] = (b / a) * eye
        if i + 1 < ell:
            c0[_blk(i, n), _blk(i + 1, n)] = (g / a) * eye
    return CompanionPencil(c1=c1, c0=c0, n=n, ell=ell, basis=p.basis,
                           provenance="three_term")


def build_bernstein(p: MatrixPolynomial) -> CompanionPencil:
    """Companion pencil for a Bernstein-basis coefficient polynomial."""
    if not isinstance(p.basis, Bernstein) or p.coefficients is None:
        raise UnsupportedBasisError("build_bernstein needs a Bernstein coefficient polynomial")
    ell, n = p.grade, p.n
    if ell < 2:
        raise GradeTooSmallError("Bernstein pencil needs grade >= 2")
    coeff = p.coefficients
    N = ell * n
    eye = np.eye(n, dtype=complex)
    c0 = np.zeros((N, N), dtype=complex)
    for j in range(ell):
        c0[_blk(0, n), _blk(j, n)] = -coeff[ell - 1 - j]
    for i in range(1, ell):
        c0[_blk(i, n), _blk(i - 1, n)] = eye
    c1 = c0.copy()
    c1[_blk(0, n), _blk(0, n)] = coeff[ell] / ell - coeff[ell - 1]
    for i in range(1, ell):
        c1[_blk(i, n), _blk(i, n)] = ((i + 1.0) / (ell - i)) * eye
    return CompanionPencil(c1=c1, c0=c0, n=n, ell=ell, basis=p.basis,
                           provenance="bernstein")


def build_lagrange(p: MatrixPolynomial) -> CompanionPencil:
    """Arrowhead companion pencil for Lagrange interpolation data.

    The data row, the barycentric-weight column, and the node diagonal give
    det(tau_k C1 - C0) = det(rho_k) at each node; size is (ell+2) blocks.
    """
    if not isinstance(p.basis, Lagrange) or p.samples is None:
        raise UnsupportedBasisError("build_lagrange needs a Lagrange sample polynomial")
    nodes = p.basis.nodes
    if len(nodes) < 2:
        raise GradeTooSmallError("Lagrange pencil needs at least two nodes")
    n = p.n
    ell = len(nodes) - 1
    beta = barycentric_weights(p.basis)
    N = (ell + 2) * n
    eye = np.eye(n, dtype=complex)
    c1 = np.eye(N, dtype=complex)
    c1[_blk(0, n), _blk(0, n)] = 0.0
    c0 = np.zeros((N, N), dtype=complex)
    for k, tau in enumerate(nodes):
        c0[_blk(0, n), _blk(1 + k, n)] = -p.samples[k]
        c0[_blk(1 + k, n), _blk(0, n)] = beta[k] * eye
        c0[_blk(1 + k, n), _blk(1 + k, n)] = tau * eye
    return CompanionPencil(c1=c1, c0=c0, n=n, ell=ell, basis=p.basis,
                           provenance="lagrange")


def build_hermite(p: MatrixPolynomial) -> CompanionPencil:
    """Companion pencil for confluent (Hermite) interpolation data.

    Like the Lagrange pencil but each node block is a transposed Jordan-like
    block of its confluency, the data row lists scaled derivatives in
    descending order per node, and the weight column carries the confluent
    partial-fraction coefficients.
    """
    if not isinstance(p.basis, Hermite) or p.hermite_samples is None:
        raise UnsupportedBasisError("build_hermite needs a Hermite sample polynomial")
    nodes = p.basis.nodes
    confl = p.basis.confluencies
    n = p.n
    ell = p.basis.grade
    beta = barycentric_weights(p.basis)
    N = (ell + 2) * n
    eye = np.eye(n, dtype=complex)
    c1 = np.eye(N, dtype=complex)
    c1[_blk(0, n), _blk(0, n)] = 0.0
    c0 = np.zeros((N, N), dtype=complex)
    pos = 1  # current block column within the tail
    wpos = 0
    for i, (tau, s) in enumerate(zip(nodes, confl)):
        rho = p.hermite_samples[i]
        for j in range(s):
            col = pos + j
            c0[_blk(0, n), _blk(col, n)] = -rho[s - 1 - j]
            c0[_blk(col, n), _blk(0, n)] = beta[wpos + j] * eye
            c0[_blk(col, n), _blk(col, n)] = tau * eye
            if j > 0:
                c0[_blk(col, n), _blk(col - 1, n)] = eye
        pos += s
        wpos += s
    return CompanionPencil(c1=c1, c0=c0, n=n, ell=ell, basis=p.basis,
                           provenance="hermite")


def flip(pc: CompanionPencil) -> CompanionPencil:
    """Conjugate both matrices by the anti-identity (an involution)."""
    j = sip(pc.size)
    return CompanionPencil(c1=j @ pc.c1 @ j, c0=j @ pc.c0 @ j, n=pc.n,
                           ell=pc.ell, basis=pc.basis,
                           provenance=pc.provenance + "+flip")


def transpose(pc: CompanionPencil) -> CompanionPencil:
    return CompanionPencil(c1=pc.c1.T.copy(), c0=pc.c0.T.copy(), n=pc.n,
                           ell=pc.ell, basis=pc.basis,
                           provenance=pc.provenance + "+transpose")


def similarity(pc: CompanionPencil, s) -> CompanionPencil:
    """(S^-1 C1 S, S^-1 C0 S) for nonsingular S; generalized eigenvalues are kept."""
    s = as_cmatrix(s)
    if s.shape[0] != pc.size:
        raise DimensionMismatchError("similarity transform has the wrong size")
    f = lu_factor(s)
    return CompanionPencil(c1=lu_solve(f, pc.c1 @ s), c0=lu_solve(f, pc.c0 @ s),
                           n=pc.n, ell=pc.ell, basis=pc.basis,
                           provenance=pc.provenance + "+similarity")
