import numpy as np
import pytest

import golden
from conftest import ALL_KINDS, poly_nodes, random_polynomial
from polypencil import (
    Bernstein,
    ChebyshevT,
    GeneralizedStandardTriple,
    Hermite,
    Lagrange,
    MatrixPolynomial,
    Monomial,
    Newton,
    NotMonicError,
    SingularPencilError,
    build,
    evaluate,
    flip_triple,
    make_triple,
    monomial_standard_pair,
    resolvent,
    sample_points,
    similarity_triple,
    verify_triple,
)


def scalar(values):
    return [np.array([[v]], dtype=complex) for v in values]


class TestMakeTriple:
    def test_three_term_selectors(self, rng):
        p = random_polynomial("chebyshev", 2, 4, rng)
        t = make_triple(build(p))
        expected_x = np.zeros((2, 8))
        expected_x[:, 6:] = np.eye(2)
        expected_y = np.zeros((8, 2))
        expected_y[:2, :] = np.eye(2)
        assert np.array_equal(t.x, expected_x)
        assert np.array_equal(t.y, expected_y)

    def test_bernstein_reference_x(self):
        p = MatrixPolynomial.from_coefficients(Bernstein(grade=3),
                                               golden.BERNSTEIN_MONIC_COEFFS)
        t = make_triple(build(p))
        assert np.max(np.abs(t.x - golden.BERNSTEIN_MONIC_X)) <= 1e-15

    def test_hermite_reference_x(self):
        basis = Hermite(nodes=golden.HERMITE_SCALAR_NODES,
                        confluencies=golden.HERMITE_SCALAR_CONFL)
        groups = [scalar([1, 0]), scalar([1]), scalar([1]), scalar([1, 0, 0])]
        t = make_triple(build(MatrixPolynomial.from_hermite_samples(basis, groups)))
        assert np.array_equal(t.x, golden.HERMITE_SCALAR_X)


class TestResolvent:
    def test_lagrange_identity_polynomial(self):
        p = MatrixPolynomial.from_samples(Lagrange(nodes=golden.LAGRANGE_NODES),
                                          [np.eye(2)] * 3)
        t = make_triple(build(p))
        assert np.allclose(resolvent(t, 0.7), np.eye(2), atol=1e-12)

    def test_scalar_square(self):
        p = MatrixPolynomial.from_coefficients(Monomial(), scalar([0, 0, 1]))
        t = make_triple(build(p))
        assert resolvent(t, 2.0)[0, 0] == pytest.approx(0.25)

    def test_hermite_matrix_closed_form(self):
        basis = Hermite(nodes=golden.HERMITE_MATRIX_NODES,
                        confluencies=golden.HERMITE_MATRIX_CONFL)
        p = MatrixPolynomial.from_hermite_samples(basis, golden.HERMITE_MATRIX_RHO)
        t = make_triple(build(p))
        for z in (0.4, 2.0 + 1.0j, -1.7, 3.3 - 0.2j):
            expected = golden.hermite_matrix_resolvent(z)
            assert np.max(np.abs(resolvent(t, z) - expected)) <= 1e-10

    def test_raises_on_spectrum(self):
        p = MatrixPolynomial.from_coefficients(Monomial(), scalar([-1, 0, 1]))
        t = make_triple(build(p))
        with pytest.raises(SingularPencilError):
            resolvent(t, 1.0)


def reference_examples(rng):
    yield MatrixPolynomial.from_coefficients(ChebyshevT(), golden.CHEBYSHEV_COEFFS)
    yield MatrixPolynomial.from_coefficients(Newton(nodes=golden.NEWTON_NODES),
                                             golden.NEWTON_COEFFS)
    yield MatrixPolynomial.from_coefficients(Bernstein(grade=3),
                                             golden.BERNSTEIN_MONIC_COEFFS)
    yield MatrixPolynomial.from_coefficients(Bernstein(grade=3),
                                             golden.BERNSTEIN_SINGULAR_COEFFS)
    yield MatrixPolynomial.from_samples(Lagrange(nodes=golden.LAGRANGE_NODES),
                                        [np.eye(2)] * 3)
    basis = Hermite(nodes=golden.HERMITE_SCALAR_NODES,
                    confluencies=golden.HERMITE_SCALAR_CONFL)
    yield MatrixPolynomial.from_hermite_samples(
        basis, [scalar([1, 0]), scalar([1]), scalar([1]), scalar([1, 0, 0])])
    basis = Hermite(nodes=golden.HERMITE_MATRIX_NODES,
                    confluencies=golden.HERMITE_MATRIX_CONFL)
    yield MatrixPolynomial.from_hermite_samples(basis, golden.HERMITE_MATRIX_RHO)


class TestVerifyTriple:
    def test_reference_examples_within_tolerance(self, rng):
        for p in reference_examples(rng):
            pc = build(p)
            t = make_triple(pc)
            zs = sample_points(pc, 10, rng, radius=1.0, avoid=poly_nodes(p))
            assert verify_triple(t, p, zs) <= 1e-9

    def test_zeroed_y_is_detected(self, rng):
        p = random_polynomial("legendre", 2, 3, rng)
        pc = build(p)
        t = make_triple(pc)
        broken = GeneralizedStandardTriple(x=t.x, pencil=pc, y=np.zeros_like(t.y))
        zs = sample_points(pc, 5, rng)
        residual = verify_triple(broken, p, zs)
        assert residual == pytest.approx(np.sqrt(2), rel=1e-12)

    def test_similarity_leaves_residual(self, rng):
        p = random_polynomial("newton", 2, 3, rng)
        pc = build(p)
        t = make_triple(pc)
        zs = sample_points(pc, 5, rng, avoid=poly_nodes(p))
        base = verify_triple(t, p, zs)
        s = np.eye(pc.size) + 0.2 * rng.standard_normal((pc.size, pc.size))
        moved = similarity_triple(t, s)
        assert abs(verify_triple(moved, p, zs) - base) <= 1e-9


@pytest.mark.parametrize("kind", ALL_KINDS)
@pytest.mark.parametrize("n,ell", [(1, 3), (2, 3), (3, 2), (1, 6), (2, 5)])
def test_defining_identity_random(kind, n, ell, rng):
    p = random_polynomial(kind, n, ell, rng)
    pc = build(p)
    t = make_triple(pc)
    zs = sample_points(pc, 10, rng, avoid=poly_nodes(p))
    assert verify_triple(t, p, zs) <= 1e-8


@pytest.mark.parametrize("kind", ["monomial", "chebyshev", "bernstein", "lagrange", "hermite"])
def test_similarity_invariance_of_resolvent(kind, rng):
    p = random_polynomial(kind, 2, 3, rng)
    pc = build(p)
    t = make_triple(pc)
    zs = sample_points(pc, 5, rng, avoid=poly_nodes(p))
    for _ in range(5):
        s = np.eye(pc.size) + 0.25 * rng.standard_normal((pc.size, pc.size))
        moved = similarity_triple(t, s)
        for z in zs:
            assert np.max(np.abs(resolvent(moved, z) - resolvent(t, z))) <= 1e-9


@pytest.mark.parametrize("kind", ["monomial", "newton", "bernstein", "lagrange", "hermite"])
def test_flip_consistency(kind, rng):
    p = random_polynomial(kind, 2, 3, rng)
    pc = build(p)
    t = make_triple(pc)
    flipped = flip_triple(t)
    zs = sample_points(pc, 5, rng, avoid=poly_nodes(p))
    for z in zs:
        assert np.max(np.abs(resolvent(flipped, z) - resolvent(t, z))) <= 1e-9


class TestMonomialStandardPair:
    def test_square_minus_one(self):
        p = MatrixPolynomial.from_coefficients(Monomial(), scalar([-1, 0, 1]))
        pair = monomial_standard_pair(p)
        assert np.allclose(pair.t, [[0, 1], [1, 0]])
        assert np.allclose(pair.q, [[0, 1], [1, 0]])
        assert np.allclose(pair.y, [[1], [0]])

    def test_non_monic_rejected(self):
        # z padded to grade 2 has a zero leading coefficient
        p = MatrixPolynomial.from_coefficients(Monomial(), scalar([0, 1, 0]))
        with pytest.raises(NotMonicError):
            monomial_standard_pair(p)

    def test_random_monic_cubic(self, rng):
        coeffs = scalar(rng.standard_normal(3)) + [np.eye(1)]
        p = MatrixPolynomial.from_coefficients(Monomial(), coeffs)
        pair = monomial_standard_pair(p)
        acc = np.zeros((1, 3), dtype=complex)
        power = pair.x.copy()
        for ck in p.coefficients:  # brute-force Horner on T
            acc = acc + ck @ power
            power = power @ pair.t
        assert np.linalg.norm(acc) <= 1e-10

    def test_block_case(self, rng):
        coeffs = [rng.standard_normal((2, 2)) for _ in range(3)] + [np.eye(2)]
        p = MatrixPolynomial.from_coefficients(Monomial(), coeffs)
        pair = monomial_standard_pair(p)
        # resolvent through the standard pair matches the inverse polynomial
        for z in (1.7 + 0.3j, -2.2):
            lhs = pair.x @ np.linalg.solve(z * np.eye(6) - pair.t, pair.y)
            rhs = np.linalg.inv(evaluate(p, z))
            assert np.max(np.abs(lhs - rhs)) <= 1e-9
