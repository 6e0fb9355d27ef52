"""Companion pencils, generalized standard triples, and algebraic linearizations
for regular matrix polynomials in monomial, orthogonal, Newton, Bernstein,
Lagrange, and Hermite bases, with a self-contained dense complex eigensolver."""

from .algebraic import (
    AlgebraicLinearization,
    build_algebraic,
    composed_triple,
    verify_algebraic,
)
from .bases import (
    Basis,
    Bernstein,
    ChebyshevT,
    CustomThreeTerm,
    Hermite,
    Lagrange,
    LegendreP,
    Monomial,
    Newton,
    ShiftedMonomial,
    Taylor,
    ThreeTermBasis,
    barycentric_weights,
    eval_phi,
    node_polynomial,
    null_vector_basis_matrix,
    one_coefficients,
    recurrence_row,
)
from .eigen import (
    EigenResult,
    eig,
    eigen_residual,
    generalized_eigenvalues,
    hessenberg,
    qr_eigenvalues,
)
from .equivalence import (
    FROM_MONOMIAL,
    TO_MONOMIAL,
    EquivalencePair,
    equivalence_degree_graded,
    equivalence_lagrange,
    monomial_form,
    verify_equivalence,
)
from .errors import (
    BadConfluencyError,
    DimensionMismatchError,
    DocumentError,
    DuplicateNodesError,
    EquivalenceCheckError,
    GradeTooSmallError,
    NoConvergenceError,
    NotMonicError,
    PolyPencilError,
    SingularC0Error,
    SingularMatrixError,
    SingularPencilError,
    SingularPencilEverywhereError,
    UnsupportedBasisError,
)
from .matpoly import MatrixPolynomial, degree_defect, evaluate
from .pencils import (
    CompanionPencil,
    build,
    build_bernstein,
    build_hermite,
    build_lagrange,
    build_three_term,
    flip,
    similarity,
    transpose,
)
from .triples import (
    GeneralizedStandardTriple,
    StandardPair,
    flip_triple,
    make_triple,
    monomial_standard_pair,
    resolvent,
    sample_points,
    similarity_triple,
    verify_triple,
)

__version__ = "0.1.0"
