"""Polynomial basis definitions and the per-basis data the pencil builders need.

Supported families:

* three-term recurrence bases (monomial, shifted monomial, Taylor, Newton,
  Chebyshev T, Legendre P, and user-supplied recurrences), satisfying
  ``z*phi_k = alpha_k*phi_{k+1} + beta_k*phi_k + gamma_k*phi_{k-1}``;
* the Bernstein basis of a fixed grade on [0, 1];
* Lagrange interpolational bases on distinct nodes;
* Hermite interpolational bases on distinct nodes with confluencies.

Coefficient rows and matrices produced here follow one ordering convention
throughout: polynomial coefficients are listed with the highest power first,
and node blocks appear in the user-given node order with derivative data
descending inside each block.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import NamedTuple

import numpy as np

from .errors import (
    BadConfluencyError,
    DuplicateNodesError,
    UnsupportedBasisError,
)

__all__ = [
    "Basis",
    "ThreeTermBasis",
    "Monomial",
    "ShiftedMonomial",
    "Taylor",
    "Newton",
    "ChebyshevT",
    "LegendreP",
    "CustomThreeTerm",
    "Bernstein",
    "Lagrange",
    "Hermite",
    "RecurrenceRow",
    "recurrence_row",
    "eval_phi",
    "one_coefficients",
    "node_polynomial",
    "barycentric_weights",
    "null_vector_basis_matrix",
    "monomial_rows",
]


def _check_nodes(nodes):
    nodes = tuple(complex(t) for t in nodes)
    for t in nodes:
        if not (np.isfinite(t.real) and np.isfinite(t.imag)):
            raise ValueError("nodes must be finite")
    if len(set(nodes)) != len(nodes):
        raise DuplicateNodesError("duplicate node in node list")
    return nodes


class Basis:
    """Marker base class for every basis variant."""


class ThreeTermBasis(Basis):
    """Marker for bases defined by a three-term recurrence."""


@dataclass(frozen=True)
class Monomial(ThreeTermBasis):
    pass


@dataclass(frozen=True)
class ShiftedMonomial(ThreeTermBasis):
    shift: complex = 0.0


@dataclass(frozen=True)
class Taylor(ThreeTermBasis):
    shift: complex = 0.0


@dataclass(frozen=True)
class Newton(ThreeTermBasis):
    """Newton basis on nodes tau_0..tau_{m-1}; phi_k = prod_{j<k}(z - tau_j)."""

    nodes: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "nodes", _check_nodes(self.nodes))


@dataclass(frozen=True)
class ChebyshevT(ThreeTermBasis):
    pass


@dataclass(frozen=True)
class LegendreP(ThreeTermBasis):
    pass


@dataclass(frozen=True)
class CustomThreeTerm(ThreeTermBasis):
    """Explicit recurrence coefficients; alpha[k] must be nonzero."""

    alpha: tuple = ()
    beta: tuple = ()
    gamma: tuple = ()

    def __post_init__(self):
        alpha = tuple(complex(v) for v in self.alpha)
        if any(v == 0 for v in alpha):
            raise ValueError("custom recurrence needs alpha_k != 0 (degree must advance)")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", tuple(complex(v) for v in self.beta))
        object.__setattr__(self, "gamma", tuple(complex(v) for v in self.gamma))


@dataclass(frozen=True)
class Bernstein(Basis):
    """Bernstein basis B_k^grade on the interval [0, 1]."""

    grade: int = 1

    def __post_init__(self):
        if self.grade < 1:
            raise ValueError("Bernstein grade must be >= 1")


@dataclass(frozen=True)
class Lagrange(Basis):
    nodes: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "nodes", _check_nodes(self.nodes))


@dataclass(frozen=True)
class Hermite(Basis):
    nodes: tuple = ()
    confluencies: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "nodes", _check_nodes(self.nodes))
        conf = tuple(int(s) for s in self.confluencies)
        if len(conf) != len(self.nodes):
            raise BadConfluencyError("need one confluency per node")
        if any(s < 1 for s in conf):
            raise BadConfluencyError("confluencies must be >= 1")
        object.__setattr__(self, "confluencies", conf)

    @property
    def grade(self) -> int:
        return sum(self.confluencies) - 1


class RecurrenceRow(NamedTuple):
    alpha: complex
    beta: complex
    gamma: complex


def recurrence_row(basis: Basis, k: int) -> RecurrenceRow:
    """Recurrence coefficients (alpha_k, beta_k, gamma_k) of a three-term basis.

    The k = 0 row is the initial case: phi_1 = (z - beta_0)/alpha_0, so for
    Chebyshev it returns alpha_0 = 1 (phi_1 = z), not the generic 1/2.
    """
    if k < 0:
        raise ValueError("recurrence index must be >= 0")
    if isinstance(basis, Monomial):
        return RecurrenceRow(1.0, 0.0, 0.0)
    if isinstance(basis, ShiftedMonomial):
        return RecurrenceRow(1.0, complex(basis.shift), 0.0)
    if isinstance(basis, Taylor):
        return RecurrenceRow(k + 1.0, complex(basis.shift), 0.0)
    if isinstance(basis, Newton):
        if k >= len(basis.nodes):
            raise ValueError(f"Newton basis has {len(basis.nodes)} nodes; no row k={k}")
        return RecurrenceRow(1.0, basis.nodes[k], 0.0)
    if isinstance(basis, ChebyshevT):
        if k == 0:
            return RecurrenceRow(1.0, 0.0, 0.0)
        return RecurrenceRow(0.5, 0.0, 0.5)
    if isinstance(basis, LegendreP):
        return RecurrenceRow((k + 1.0) / (2.0 * k + 1.0), 0.0, k / (2.0 * k + 1.0))
    if isinstance(basis, CustomThreeTerm):
        if k >= len(basis.alpha):
            raise ValueError(f"custom recurrence defined up to k={len(basis.alpha) - 1}")
        gamma = basis.gamma[k] if k < len(basis.gamma) else 0.0
        return RecurrenceRow(basis.alpha[k], basis.beta[k], gamma)
    raise UnsupportedBasisError(f"{type(basis).__name__} has no three-term recurrence")


def eval_phi(basis: Basis, k: int, z: complex) -> complex:
    """Value of the k-th basis function at z."""
    if k < 0:
        raise ValueError("basis index must be >= 0")
    z = complex(z)
    if isinstance(basis, ThreeTermBasis):
        prev, cur = 0.0 + 0.0j, 1.0 + 0.0j  # phi_{-1}, phi_0
        for j in range(k):
            a, b, g = recurrence_row(basis, j)
            prev, cur = cur, ((z - b) * cur - g * prev) / a
        return cur
    if isinstance(basis, Bernstein):
        ell = basis.grade
        if k > ell:
            raise ValueError(f"Bernstein index {k} exceeds grade {ell}")
        return comb(ell, k) * z**k * (1.0 - z) ** (ell - k)
    if isinstance(basis, Lagrange):
        if k >= len(basis.nodes):
            raise ValueError(f"Lagrange index {k} exceeds node count")
        beta = barycentric_weights(basis)[k]
        out = beta
        for j, t in enumerate(basis.nodes):
            if j != k:
                out = out * (z - t)
        return complex(out)
    raise UnsupportedBasisError(
        "Hermite basis functions are evaluated through the interpolation formula, "
        "not individually"
    )


def one_coefficients(basis: Basis, ell: int) -> np.ndarray:
    """Coefficient row expanding the constant 1, ordered as the pencil expects.

    This row, tensored with the identity, is the left factor of the
    resolvent representation for every pencil built by this package.
    """
    if ell < 1:
        raise ValueError("grade must be >= 1")
    if isinstance(basis, ThreeTermBasis):
        row = np.zeros(ell, dtype=complex)
        row[-1] = 1.0
        return row
    if isinstance(basis, Bernstein):
        if ell != basis.grade:
            raise ValueError(f"grade {ell} does not match Bernstein grade {basis.grade}")
        return np.arange(1, ell + 1, dtype=complex) / ell
    if isinstance(basis, Lagrange):
        if ell != len(basis.nodes) - 1:
            raise ValueError("grade must equal node count minus one")
        row = np.ones(ell + 2, dtype=complex)
        row[0] = 0.0
        return row
    if isinstance(basis, Hermite):
        if ell != basis.grade:
            raise ValueError("grade must equal sum of confluencies minus one")
        row = np.zeros(ell + 2, dtype=complex)
        pos = 1
        for s in basis.confluencies:
            row[pos + s - 1] = 1.0
            pos += s
        return row
    raise UnsupportedBasisError(f"unknown basis {type(basis).__name__}")


def node_polynomial(basis: Basis) -> np.ndarray:
    """Monic node polynomial, coefficients in descending powers."""
    if isinstance(basis, Lagrange):
        pairs = [(t, 1) for t in basis.nodes]
    elif isinstance(basis, Hermite):
        pairs = list(zip(basis.nodes, basis.confluencies))
    else:
        raise UnsupportedBasisError("node polynomial needs a Lagrange or Hermite basis")
    poly = np.array([1.0 + 0.0j])
    for t, s in pairs:
        for _ in range(s):
            poly = np.convolve(poly, np.array([1.0, -t], dtype=complex))
    return poly


def _taylor_coefficients(desc, tau):
    """Ascending Taylor coefficients about tau, by repeated synthetic division."""
    work = list(desc)
    out = []
    while work:
        q = [work[0]]
        for x in work[1:]:
            q.append(q[-1] * tau + x)
        out.append(q.pop())
        work = q
    return out


def barycentric_weights(basis: Basis) -> np.ndarray:
    """Partial-fraction coefficients of 1/omega(z) over the nodes.

    Lagrange weights come from the product formula.  Hermite weights for node
    tau_i are the leading Taylor coefficients of 1/g_i about tau_i, where
    g_i(z) = omega(z)/(z - tau_i)^{s_i}; the flat result lists each node's
    weights with the derivative order descending, matching the first column
    of the Hermite pencil.
    """
    if isinstance(basis, Lagrange):
        nodes = basis.nodes
        out = np.empty(len(nodes), dtype=complex)
        for k, tk in enumerate(nodes):
            prod = 1.0 + 0.0j
            for j, tj in enumerate(nodes):
                if j != k:
                    prod *= tk - tj
            out[k] = 1.0 / prod
        return out
    if isinstance(basis, Hermite):
        flat = []
        for i, (ti, si) in enumerate(zip(basis.nodes, basis.confluencies)):
            g = np.array([1.0 + 0.0j])
            for j, (tj, sj) in enumerate(zip(basis.nodes, basis.confluencies)):
                if j == i:
                    continue
                for _ in range(sj):
                    g = np.convolve(g, np.array([1.0, -tj], dtype=complex))
            d = _taylor_coefficients(g, ti)
            d = (d + [0.0j] * si)[:si]
            c = [1.0 / d[0]]  # g(tau_i) != 0 because the nodes are distinct
            for k in range(1, si):
                acc = sum(d[m] * c[k - m] for m in range(1, k + 1))
                c.append(-acc / d[0])
            flat.extend(c)
        return np.asarray(flat, dtype=complex)
    raise UnsupportedBasisError("barycentric weights need a Lagrange or Hermite basis")


def monomial_rows(basis: ThreeTermBasis, count: int) -> np.ndarray:
    """Rows phi_{count-1} .. phi_0 in descending monomial coefficients."""
    rows = np.zeros((count, count), dtype=complex)
    prev = np.zeros(count, dtype=complex)
    cur = np.zeros(count, dtype=complex)
    cur[-1] = 1.0  # phi_0 = 1
    rows[count - 1] = cur
    for k in range(count - 1):
        a, b, g = recurrence_row(basis, k)
        shifted = np.roll(cur, -1)
        shifted[-1] = 0.0  # multiply by z within a fixed-width window
        nxt = (shifted - b * cur - g * prev) / a
        prev, cur = cur, nxt
        rows[count - 2 - k] = cur
    return rows


def null_vector_basis_matrix(basis: Basis, ell: int) -> np.ndarray:
    """Monomial expansion of the pencil's right-null-vector functions.

    Row r holds, in descending powers, the polynomial sitting in block row r
    of the pencil's null vector at an eigenvalue: phi_{ell-1}..phi_0 for
    three-term bases, the degree-reduced Bernstein companions
    psi_k = C(ell, k+1) z^(ell-1-k) (1-z)^k, and for Lagrange the node
    polynomial followed by the Lagrange basis polynomials.
    """
    if isinstance(basis, ThreeTermBasis):
        if ell < 1:
            raise ValueError("grade must be >= 1")
        return monomial_rows(basis, ell)
    if isinstance(basis, Bernstein):
        if ell != basis.grade:
            raise ValueError(f"grade {ell} does not match Bernstein grade {basis.grade}")
        out = np.zeros((ell, ell), dtype=complex)
        for k in range(ell):
            poly = np.array([1.0 + 0.0j])  # descending coefficients of (1-z)^k
            for _ in range(k):
                poly = np.convolve(poly, np.array([-1.0, 1.0], dtype=complex))
            pad = ell - 1 - k  # trailing zeros from the factor z^(ell-1-k)
            out[k] = np.concatenate([comb(ell, k + 1) * poly, np.zeros(pad, dtype=complex)])
        return out
    if isinstance(basis, Lagrange):
        nodes = basis.nodes
        if ell != len(nodes) - 1:
            raise ValueError("grade must equal node count minus one")
        size = ell + 2
        beta = barycentric_weights(basis)
        out = np.zeros((size, size), dtype=complex)
        out[0] = node_polynomial(basis)
        for k in range(len(nodes)):
            lk = np.array([beta[k]], dtype=complex)
            for j, tj in enumerate(nodes):
                if j != k:
                    lk = np.convolve(lk, np.array([1.0, -tj], dtype=complex))
            out[1 + k, 1:] = lk
        return out
    raise UnsupportedBasisError("no change-of-basis matrix for the Hermite pencil")
