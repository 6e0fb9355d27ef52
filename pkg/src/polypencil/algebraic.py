"""Recursive algebraic linearization of H(z) = z A(z) B(z) + C.

Given resolvent triples for A and B (in any bases, possibly different) and a
constant coupling matrix C, the composed pencil z*DH - EH linearizes H.  The
composition only touches the triples' X/Y/C1/C0 blocks, so its output can be
fed back in as a component, one level after another.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, SingularPencilError
from .linalg import as_cmatrix, det
from .matpoly import MatrixPolynomial, evaluate
from .pencils import CompanionPencil
from .triples import GeneralizedStandardTriple

__all__ = ["AlgebraicLinearization", "build_algebraic", "composed_triple", "verify_algebraic"]


@dataclass(frozen=True)
class AlgebraicLinearization:
    """Pencil (DH, EH) for z A(z) B(z) + C, with the component sizes kept."""

    dh: np.ndarray
    eh: np.ndarray
    na: int
    nb: int
    n: int
    ell: int = None


def build_algebraic(ta: GeneralizedStandardTriple, tb: GeneralizedStandardTriple,
                    c) -> AlgebraicLinearization:
    """Assemble DH = diag(DA, I, DB) and the bordered EH.

    EH couples the two component pencils through -YA C XB in the upper right
    corner, -XA and -YB on the inner borders, and the components' constant
    terms EA and EB on the diagonal corners.
    """
    c = as_cmatrix(c)
    n = c.shape[0]
    if c.shape[1] != n:
        raise DimensionMismatchError("coupling matrix must be square")
    if ta.pencil.n != n or tb.pencil.n != n:
        raise DimensionMismatchError("component triples must share the block dimension of C")
    na, nb = ta.pencil.size, tb.pencil.size
    N = na + n + nb
    dh = np.zeros((N, N), dtype=complex)
    dh[:na, :na] = ta.pencil.c1
    dh[na:na + n, na:na + n] = np.eye(n, dtype=complex)
    dh[na + n:, na + n:] = tb.pencil.c1
    eh = np.zeros((N, N), dtype=complex)
    eh[:na, :na] = ta.pencil.c0
    eh[:na, na + n:] = -ta.y @ c @ tb.x
    eh[na:na + n, :na] = -ta.x
    eh[na + n:, na:na + n] = -tb.y
    eh[na + n:, na + n:] = tb.pencil.c0
    ell = None
    if ta.pencil.ell is not None and tb.pencil.ell is not None:
        ell = ta.pencil.ell + tb.pencil.ell + 1
    return AlgebraicLinearization(dh=dh, eh=eh, na=na, nb=nb, n=n, ell=ell)


def composed_triple(al: AlgebraicLinearization,
                    ta: GeneralizedStandardTriple,
                    tb: GeneralizedStandardTriple) -> GeneralizedStandardTriple:
    """Resolvent triple of the composed pencil: XH = [0 0 XB], YH = [YA; 0; 0].

    With these factors XH (z DH - EH)^-1 YH = H^-1(z), so the result plugs
    straight back into build_algebraic for the next recursion level.
    """
    n = al.n
    xh = np.zeros((n, al.na + n + al.nb), dtype=complex)
    xh[:, al.na + n:] = tb.x
    yh = np.zeros((al.na + n + al.nb, n), dtype=complex)
    yh[:al.na, :] = ta.y
    pc = CompanionPencil(c1=al.dh, c0=al.eh, n=n, ell=al.ell, basis=None,
                         provenance="algebraic")
    return GeneralizedStandardTriple(x=xh, pencil=pc, y=yh)


def _value(poly, z):
    if callable(poly) and not isinstance(poly, MatrixPolynomial):
        return np.atleast_2d(np.asarray(poly(z), dtype=complex))
    return evaluate(poly, z)


def verify_algebraic(al: AlgebraicLinearization, a, b, c, zs) -> float:
    """Relative spread of det(z DH - EH) / det(z A(z) B(z) + C) over the samples.

    ``a`` and ``b`` are MatrixPolynomials or plain callables z -> matrix.
    The ratio should be a z-independent constant (reported implicitly via the
    spread; the constant itself depends on the component pencils' leading
    structure and is not normalized away).
    """
    c = as_cmatrix(c)
    ratios = []
    for z in zs:
        z = complex(z)
        hz = z * (_value(a, z) @ _value(b, z)) + c
        dh = det(hz)
        if dh == 0:
            raise SingularPencilError(f"H(z) is singular at sample z={z}", z=z)
        ratios.append(det(z * al.dh - al.eh) / dh)
    ratios = np.asarray(ratios)
    mean = ratios.mean()
    if mean == 0:
        raise SingularPencilError("composed pencil vanished at every sample")
    return float(np.max(np.abs(ratios - mean)) / abs(mean))
