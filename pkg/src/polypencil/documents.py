"""JSON polynomial documents: the one on-disk format the CLI reads and writes.

A document is an object with a ``basis`` description, the block dimension
``n``, the ``grade``, and exactly one payload key: ``coefficients`` (list of
n x n matrices, ascending basis index), ``samples`` (one matrix per node), or
``hermite_samples`` (per node, a list of matrices: value, then scaled
derivatives ascending).  Complex scalars are two-element [re, im] arrays;
bare numbers are accepted on input and normalized to pairs on output.
"""

from __future__ import annotations

import numpy as np

from .bases import (
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
)
from .errors import DocumentError
from .matpoly import MatrixPolynomial

__all__ = [
    "parse_scalar",
    "parse_matrix",
    "scalar_to_json",
    "matrix_to_json",
    "parse_basis",
    "parse_document",
]

BASIS_KINDS = (
    "monomial", "shifted", "taylor", "newton", "chebyshev", "legendre",
    "custom", "bernstein", "lagrange", "hermite",
)


def parse_scalar(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, (list, tuple)) and len(v) == 2 and all(isinstance(x, (int, float)) for x in v):
        return complex(v[0], v[1])
    raise DocumentError(f"expected a number or [re, im] pair, got {v!r}")


def parse_matrix(rows, n) -> np.ndarray:
    if not isinstance(rows, list) or len(rows) != n:
        raise DocumentError(f"expected an {n}x{n} matrix")
    out = np.zeros((n, n), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise DocumentError(f"matrix row {i} must have {n} entries")
        for j, v in enumerate(row):
            out[i, j] = parse_scalar(v)
    return out


def scalar_to_json(z) -> list:
    z = complex(z)
    return [z.real, z.imag]


def matrix_to_json(m) -> list:
    m = np.atleast_2d(np.asarray(m, dtype=complex))
    return [[scalar_to_json(v) for v in row] for row in m]


def parse_basis(desc, grade):
    if not isinstance(desc, dict) or "kind" not in desc:
        raise DocumentError('basis must be an object with a "kind" key')
    kind = desc["kind"]
    if kind not in BASIS_KINDS:
        raise DocumentError(f"unknown basis kind {kind!r}; expected one of {', '.join(BASIS_KINDS)}")
    if kind == "monomial":
        return Monomial()
    if kind == "shifted":
        return ShiftedMonomial(shift=parse_scalar(desc.get("shift", 0.0)))
    if kind == "taylor":
        return Taylor(shift=parse_scalar(desc.get("shift", 0.0)))
    if kind == "chebyshev":
        return ChebyshevT()
    if kind == "legendre":
        return LegendreP()
    if kind == "newton":
        nodes = desc.get("nodes")
        if not isinstance(nodes, list) or not nodes:
            raise DocumentError("newton basis needs a nonempty node list")
        return Newton(nodes=tuple(parse_scalar(t) for t in nodes))
    if kind == "custom":
        rec = desc.get("recurrence")
        if not isinstance(rec, dict) or "alpha" not in rec:
            raise DocumentError('custom basis needs a "recurrence" object with alpha/beta/gamma')
        return CustomThreeTerm(
            alpha=tuple(parse_scalar(v) for v in rec.get("alpha", [])),
            beta=tuple(parse_scalar(v) for v in rec.get("beta", [])),
            gamma=tuple(parse_scalar(v) for v in rec.get("gamma", [])),
        )
    if kind == "bernstein":
        if grade is None:
            raise DocumentError("bernstein basis needs the document grade")
        return Bernstein(grade=grade)
    if kind == "lagrange":
        nodes = desc.get("nodes")
        if not isinstance(nodes, list) or len(nodes) < 1:
            raise DocumentError("lagrange basis needs a node list")
        return Lagrange(nodes=tuple(parse_scalar(t) for t in nodes))
    confl = desc.get("confluencies")
    nodes = desc.get("nodes")
    if not isinstance(nodes, list) or not isinstance(confl, list):
        raise DocumentError("hermite basis needs node and confluency lists")
    return Hermite(nodes=tuple(parse_scalar(t) for t in nodes),
                   confluencies=tuple(confl))


def parse_document(doc) -> MatrixPolynomial:
    """Validate a parsed JSON object and build the matrix polynomial."""
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    for key in ("basis", "n"):
        if key not in doc:
            raise DocumentError(f'document is missing the "{key}" key')
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise DocumentError('"n" must be a positive integer')
    grade = doc.get("grade")
    if grade is not None and (not isinstance(grade, int) or grade < 0):
        raise DocumentError('"grade" must be a nonnegative integer')
    payload_keys = [k for k in ("coefficients", "samples", "hermite_samples") if k in doc]
    if len(payload_keys) != 1:
        raise DocumentError("document needs exactly one of coefficients | samples | hermite_samples")
    key = payload_keys[0]
    if key == "coefficients" and grade is None:
        if not isinstance(doc[key], list) or not doc[key]:
            raise DocumentError("coefficients must be a nonempty list of matrices")
        grade = len(doc[key]) - 1
    basis = parse_basis(doc["basis"], grade)
    if key == "coefficients":
        mats = doc[key]
        if not isinstance(mats, list) or not mats:
            raise DocumentError("coefficients must be a nonempty list of matrices")
        if grade is not None and len(mats) != grade + 1:
            raise DocumentError(f"grade {grade} needs {grade + 1} coefficient matrices")
        return MatrixPolynomial.from_coefficients(basis, [parse_matrix(m, n) for m in mats])
    if key == "samples":
        mats = doc[key]
        if not isinstance(mats, list) or not mats:
            raise DocumentError("samples must be a nonempty list of matrices")
        if grade is not None and len(mats) != grade + 1:
            raise DocumentError(f"grade {grade} needs {grade + 1} sample matrices")
        return MatrixPolynomial.from_samples(basis, [parse_matrix(m, n) for m in mats])
    groups = doc[key]
    if not isinstance(groups, list) or not all(isinstance(g, list) for g in groups):
        raise DocumentError("hermite_samples must be a list of per-node matrix lists")
    if grade is not None and grade != basis.grade:
        raise DocumentError(
            f"grade {grade} does not match the confluencies (sum - 1 = {basis.grade})")
    return MatrixPolynomial.from_hermite_samples(
        basis, [[parse_matrix(m, n) for m in g] for g in groups]
    )
