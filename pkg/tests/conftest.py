import numpy as np
import pytest

from polypencil import (
    Bernstein,
    ChebyshevT,
    Hermite,
    Lagrange,
    LegendreP,
    MatrixPolynomial,
    Monomial,
    Newton,
    ShiftedMonomial,
    Taylor,
)

COEFF_KINDS = ("monomial", "shifted", "taylor", "newton", "chebyshev", "legendre", "bernstein")
ALL_KINDS = COEFF_KINDS + ("lagrange", "hermite")


def rand_matrix(rng, n):
    return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))


def spread_nodes(rng, count):
    """Distinct, well-separated nodes near the unit circle's real slice."""
    base = np.cos(np.pi * np.arange(count) / max(count - 1, 1))
    jitter = 0.05 * rng.standard_normal(count)
    nodes = base + jitter
    while len(set(nodes.tolist())) != count:  # pragma: no cover - vanishing chance
        nodes += 0.01 * rng.standard_normal(count)
    return [complex(t) for t in nodes]


def make_basis(kind, ell, rng):
    if kind == "monomial":
        return Monomial()
    if kind == "shifted":
        return ShiftedMonomial(shift=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)))
    if kind == "taylor":
        return Taylor(shift=complex(rng.uniform(-1, 1), rng.uniform(-1, 1)))
    if kind == "newton":
        return Newton(nodes=spread_nodes(rng, ell))
    if kind == "chebyshev":
        return ChebyshevT()
    if kind == "legendre":
        return LegendreP()
    if kind == "bernstein":
        return Bernstein(grade=ell)
    if kind == "lagrange":
        return Lagrange(nodes=spread_nodes(rng, ell + 1))
    if kind == "hermite":
        remaining = ell + 1
        confl = []
        while remaining > 0:
            s = int(rng.integers(1, min(3, remaining) + 1))
            confl.append(s)
            remaining -= s
        nodes = spread_nodes(rng, len(confl))
        return Hermite(nodes=nodes, confluencies=confl)
    raise ValueError(kind)


def random_polynomial(kind, n, ell, rng):
    """Random test polynomial, normalized to unit max payload norm."""
    basis = make_basis(kind, ell, rng)
    if kind in COEFF_KINDS:
        coeffs = [rand_matrix(rng, n) for _ in range(ell + 1)]
        scale = max(np.linalg.norm(c) for c in coeffs)
        return MatrixPolynomial.from_coefficients(basis, [c / scale for c in coeffs])
    if kind == "lagrange":
        samples = [rand_matrix(rng, n) for _ in basis.nodes]
        scale = max(np.linalg.norm(s) for s in samples)
        return MatrixPolynomial.from_samples(basis, [s / scale for s in samples])
    groups = [[rand_matrix(rng, n) for _ in range(s)] for s in basis.confluencies]
    scale = max(np.linalg.norm(m) for g in groups for m in g)
    return MatrixPolynomial.from_hermite_samples(
        basis, [[m / scale for m in g] for g in groups]
    )


def poly_nodes(p):
    return getattr(p.basis, "nodes", ())


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
