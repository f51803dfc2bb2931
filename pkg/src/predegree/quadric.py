"""The smooth quadric surface pipeline.

Fixes the quadric Q = V(x0*x3 - x1*x2) in P^3, the image of the standard
Segre embedding of P1 x P1.  The transformations whose image lies inside Q
form two components, swept out by the two rulings of Q; each is the image of
P1 x P7 under an explicit Segre embedding into the P^15 of 4x4 matrices.
This module provides the point conditions cut out by Q, membership in that
base locus, the two parameterizations, the full predegree polynomial of Q,
and the two summary tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import segre
from .chow import ChowClass, ProductSpace
from .linalg import Matrix, Vector, det, is_zero_vector, mat, mat_mul, mat_vec, rank, transpose, vec
from .polynomial import (
    PredegreePolynomial,
    deg_po,
    format_polynomial,
    max_component_dim,
    predegree_from_segre,
)

# Dimension of the orbit of a smooth quadric surface: the orbit is dense in
# the P^9 of quadric surfaces.
ORBIT_DIM_P3 = 9

# The two components of the base locus meet along a locus of codimension 10
# in P^15 (the rank-one matrices whose image lies on the quadric, a copy of
# Q x P^3).  10 > 9 is the inequality that certifies dropping the
# intersection when assembling the polynomial from the component classes.
BASE_INTERSECTION_CODIM = 10


@dataclass(frozen=True)
class ProjMatrix:
    """A point of the P^15 of 4x4 matrices: nonzero entries up to scale."""

    entries: Matrix

    def __post_init__(self):
        rows = mat(self.entries)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("expected a 4x4 matrix")
        if all(is_zero_vector(r) for r in rows):
            raise ValueError("the zero matrix is not a projective point")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_flat(cls, values: Sequence) -> "ProjMatrix":
        values = vec(values)
        if len(values) != 16:
            raise ValueError("expected 16 entries in row-major order")
        return cls(tuple(values[4 * i : 4 * i + 4] for i in range(4)))

    def flatten(self) -> Vector:
        return tuple(x for row in self.entries for x in row)

    def apply(self, point: Sequence) -> Vector:
        return mat_vec(self.entries, vec(point))

    def rank(self) -> int:
        return rank(self.entries)

    def proportional_to(self, other: "ProjMatrix") -> bool:
        """Equality as points of projective space (up to a nonzero scalar)."""
        u, v = self.flatten(), other.flatten()
        pivot = next(i for i, x in enumerate(u) if x != 0)
        if v[pivot] == 0:
            return False
        scale = u[pivot] / v[pivot]
        return all(a == scale * b for a, b in zip(u, v))


@dataclass(frozen=True)
class QuadricGram:
    """Symmetric Gram matrix M of a quadratic form f(x) = x^T M x."""

    entries: Matrix

    def __post_init__(self):
        rows = mat(self.entries)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("expected a 4x4 matrix")
        if rows != transpose(rows):
            raise ValueError("the Gram matrix must be symmetric")
        if det(rows) == 0:
            raise ValueError("the quadric must be smooth (nonzero determinant)")
        object.__setattr__(self, "entries", rows)

    def value(self, point: Sequence) -> Fraction:
        v = vec(point)
        return sum((a * b for a, b in zip(v, mat_vec(self.entries, v))), Fraction(0))

    def gradient(self, point: Sequence) -> Vector:
        """Gradient of the quadratic form: 2 M x."""
        return tuple(2 * x for x in mat_vec(self.entries, vec(point)))


# Gram matrix of x0*x3 - x1*x2, the Segre quadric surface.
SEGRE_QUADRIC = QuadricGram(
    (
        (0, 0, 0, Fraction(1, 2)),
        (0, 0, Fraction(-1, 2), 0),
        (0, Fraction(-1, 2), 0, 0),
        (Fraction(1, 2), 0, 0, 0),
    )
)


def point_condition_value(phi: ProjMatrix, point: Sequence, gram: QuadricGram = SEGRE_QUADRIC) -> Fraction:
    """Value at phi of the point condition attached to a point q.

    The point condition is the quadric of transformations psi with
    f(psi(q)) = 0; the returned representative is f(phi(q)), well defined up
    to squared rescalings of phi and q.
    """
    q = vec(point)
    if is_zero_vector(q):
        raise ValueError("the point of P^3 must be nonzero")
    return gram.value(phi.apply(q))


def point_condition_gradient(phi: ProjMatrix, point: Sequence, gram: QuadricGram = SEGRE_QUADRIC) -> Matrix:
    """Gradient of the point condition at phi, as a 4x4 matrix of partials.

    Equals 2 (M phi q) q^T; pairing it entrywise with psi gives the
    directional derivative grad f(phi q) . (psi q).
    """
    q = vec(point)
    if is_zero_vector(q):
        raise ValueError("the point of P^3 must be nonzero")
    weights = mat_vec(gram.entries, phi.apply(q))
    return tuple(tuple(2 * a * b for b in q) for a in weights)


def _segre_rows(p: Vector, xi: Matrix, interleave: bool) -> Matrix:
    top, bottom = xi
    if interleave:
        return (
            tuple(p[0] * t for t in top),
            tuple(p[1] * t for t in top),
            tuple(p[0] * t for t in bottom),
            tuple(p[1] * t for t in bottom),
        )
    return (
        tuple(p[0] * t for t in top),
        tuple(p[0] * t for t in bottom),
        tuple(p[1] * t for t in top),
        tuple(p[1] * t for t in bottom),
    )


def _validated_ruling_input(p: Sequence, xi: Sequence[Sequence]) -> tuple[Vector, Matrix]:
    pv = vec(p)
    xim = mat(xi)
    if len(pv) != 2:
        raise ValueError("expected a point of P^1 (two coordinates)")
    if len(xim) != 2 or any(len(r) != 4 for r in xim):
        raise ValueError("expected a 2x4 matrix for the P^7 factor")
    if is_zero_vector(pv) or all(is_zero_vector(r) for r in xim):
        raise ValueError("projective coordinates cannot all vanish")
    return pv, xim


def sigma1(p: Sequence, xi: Sequence[Sequence]) -> ProjMatrix:
    """Segre embedding of P^1 x P^7 sweeping the first family of rulings.

    The 2x4 matrix xi = (t0..t3; t4..t7) is the P^7 coordinate; rows of the
    output are (s0*t0..t3, s0*t4..t7, s1*t0..t3, s1*t4..t7).
    """
    pv, xim = _validated_ruling_input(p, xi)
    return ProjMatrix(_segre_rows(pv, xim, interleave=False))


def sigma2(p: Sequence, xi: Sequence[Sequence]) -> ProjMatrix:
    """Segre embedding of P^1 x P^7 sweeping the second family of rulings.

    Rows of the output are (s0*t0..t3, s1*t0..t3, s0*t4..t7, s1*t4..t7).
    """
    pv, xim = _validated_ruling_input(p, xi)
    return ProjMatrix(_segre_rows(pv, xim, interleave=True))


def base_scheme_member(phi: ProjMatrix, gram: QuadricGram = SEGRE_QUADRIC) -> bool:
    """Whether the image of phi lies inside the quadric.

    The composite form f(phi(x)) has Gram matrix phi^T M phi, so membership
    is the exact matrix identity phi^T M phi = 0.
    """
    composite = mat_mul(mat_mul(transpose(phi.entries), gram.entries), phi.entries)
    return all(is_zero_vector(row) for row in composite)


def doubled_ruling_segre_class() -> ChowClass:
    """Class of the base locus used for the quadric surface: both ruling
    components contribute the same pushed-forward Segre class, so the sum is
    twice the class of one P^1 x P^7."""
    return 2 * segre.segre_class_pushforward(ProductSpace((1, 7)))


def predegree_quadric_p3() -> PredegreePolynomial:
    """Predegree polynomial of a smooth quadric surface in P^3.

    The coefficients come out as (1, 2, 4, 8, 16, 32, 64, 112, 140, 40).
    """
    assert BASE_INTERSECTION_CODIM > ORBIT_DIM_P3
    n_total = 15
    return predegree_from_segre(n_total, 2, doubled_ruling_segre_class(), ORBIT_DIM_P3)


@dataclass(frozen=True)
class Table1Row:
    """Summary row for a smooth quadric in P^n.

    ``coeffs`` runs from degree 0 to the orbit dimension; entries that the
    class-level computation does not determine are None, never zero.
    """

    n: int
    quadric_space_dim: int
    max_base_component_dim: int
    coeffs: tuple[int | None, ...]

    @property
    def orbit_dim(self) -> int:
        return self.quadric_space_dim

    def polynomial_string(self) -> str:
        return format_polynomial(self.coeffs)


def table1_row(n: int) -> Table1Row:
    """Row of the quadric summary table for P^n.

    Coefficients a_i = 2^i hold while i is below the codimension of the base
    locus; the top coefficient is the degree of the stabilizer closure.  For
    n = 3 the full polynomial is filled in from the pipeline.
    """
    if n < 1:
        raise ValueError("the quadric must live in P^n with n >= 1")
    space_dim = (n + 1) * (n + 2) // 2 - 1
    base_dim = max_component_dim(n)
    orbit_dim = space_dim
    if n == 3:
        coeffs = predegree_quadric_p3().coeffs[: orbit_dim + 1]
        return Table1Row(n, space_dim, base_dim, tuple(coeffs))
    base_codim = n * n + 2 * n - base_dim
    coeffs = [2 ** i if i < base_codim else None for i in range(orbit_dim)]
    coeffs.append(deg_po(n + 1))
    return Table1Row(n, space_dim, base_dim, tuple(coeffs))


def table2() -> list[tuple[int, int]]:
    """Counts of quadric translates through general points.

    Row i pairs the dimension of the general linear condition space with the
    number of translates through i general points; the top row divides out
    the stabilizer degree, with which those translates are counted.
    """
    poly = predegree_quadric_p3()
    stabilizer_degree = deg_po(4)
    top = poly.coeffs[ORBIT_DIM_P3]
    if top % stabilizer_degree:
        raise ArithmeticError("top coefficient is not a multiple of the stabilizer degree")
    rows = [(i, poly.coeffs[i]) for i in range(ORBIT_DIM_P3)]
    rows.append((ORBIT_DIM_P3, top // stabilizer_degree))
    return rows
