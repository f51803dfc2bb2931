"""Exact tangent-space checks at points of the base locus.

The base locus of the quadric pipeline is swept out by two ruling components
meeting along the rank-one matrices with image on the quadric.  Everything
proved about tangent spaces there is finite linear algebra once one key fact
is used: the gradient of a point condition depends on the point q only
through the symmetric tensor q q^T, so the span of the gradients over the ten
points {e_i} and {e_i + e_j} equals the span over all of P^3.

Coordinates on the space of 4x4 matrices are flattened row-major, so the
matrix entry a_{i,j} is coordinate 4*i + j of a 16-vector.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import LinearSubspace, Matrix, Vector, dot, flatten, is_zero_vector, mat, outer, rank, vec
from .quadric import SEGRE_QUADRIC, ProjMatrix, QuadricGram, point_condition_gradient, sigma1

# e_i and e_i + e_j: enough points to span every symmetric tensor q q^T.
POLARIZATION_POINTS: tuple[Vector, ...] = tuple(
    vec(row)
    for row in [
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 1, 0),
        (0, 0, 0, 1),
        (1, 1, 0, 0),
        (1, 0, 1, 0),
        (1, 0, 0, 1),
        (0, 1, 1, 0),
        (0, 1, 0, 1),
        (0, 0, 1, 1),
    ]
)

MATRIX_SPACE_DIM = 16


def gradient_span(phi: ProjMatrix, gram: QuadricGram = SEGRE_QUADRIC) -> LinearSubspace:
    """Span of the point-condition gradients at phi over all points of P^3.

    The common tangent space of all point conditions at phi is the annihilator
    of this span; its projective dimension is 15 minus the span dimension.
    """
    gradients = [
        flatten(point_condition_gradient(phi, q, gram)) for q in POLARIZATION_POINTS
    ]
    return LinearSubspace.span(gradients, MATRIX_SPACE_DIM)


def _ruling_lift(which: int, s: Sequence, t_matrix: Matrix) -> Vector:
    """Bilinear lift of the ruling parameterization, without projectivity checks."""
    s0, s1 = vec(s)
    top, bottom = t_matrix
    if which == 1:
        rows = (
            tuple(s0 * t for t in top),
            tuple(s0 * t for t in bottom),
            tuple(s1 * t for t in top),
            tuple(s1 * t for t in bottom),
        )
    else:
        rows = (
            tuple(s0 * t for t in top),
            tuple(s1 * t for t in top),
            tuple(s0 * t for t in bottom),
            tuple(s1 * t for t in bottom),
        )
    return flatten(rows)


def tangent_ruling_component(which: int, p: Sequence, xi: Sequence[Sequence]) -> LinearSubspace:
    """Embedded tangent space to a ruling component at the point (p, xi).

    Spanned by the lifts of the eight coordinate directions in the P^7 factor
    and the two coordinate directions in the P^1 factor; the result always has
    linear dimension 9 (a projective P^8).
    """
    if which not in (1, 2):
        raise ValueError("the ruling component index is 1 or 2")
    pv = vec(p)
    xim = mat(xi)
    if len(pv) != 2 or is_zero_vector(pv):
        raise ValueError("expected a nonzero point of P^1")
    if len(xim) != 2 or any(len(r) != 4 for r in xim) or all(is_zero_vector(r) for r in xim):
        raise ValueError("expected a nonzero 2x4 matrix")
    directions = []
    for j in range(8):
        unit = [Fraction(0)] * 8
        unit[j] = Fraction(1)
        t_matrix = (tuple(unit[:4]), tuple(unit[4:]))
        directions.append(_ruling_lift(which, pv, t_matrix))
    directions.append(_ruling_lift(which, (1, 0), xim))
    directions.append(_ruling_lift(which, (0, 1), xim))
    return LinearSubspace.span(directions, MATRIX_SPACE_DIM)


def quadric_point(p: Sequence, q: Sequence) -> Vector:
    """Point of the quadric surface parameterized by P^1 x P^1.

    Coordinate ordering (p0*q0 : p1*q0 : p0*q1 : p1*q1); the image satisfies
    x0*x3 - x1*x2 = 0.
    """
    p0, p1 = vec(p)
    q0, q1 = vec(q)
    return (p0 * q0, p1 * q0, p0 * q1, p1 * q1)


def rank_one_matrix(p: Sequence, q: Sequence, k: Sequence) -> ProjMatrix:
    """Rank-one matrix with image the quadric point of (p, q) and kernel the
    plane annihilated by k."""
    return ProjMatrix(outer(quadric_point(p, q), vec(k)))


def pencil_matrix(a: Sequence, k: Sequence) -> Matrix:
    """The 2x4 matrix a k^T, the P^7 coordinate of a rank-one intersection point."""
    a0, a1 = vec(a)
    kv = vec(k)
    return (tuple(a0 * x for x in kv), tuple(a1 * x for x in kv))


def tangent_intersection_locus(p: Sequence, q: Sequence, k: Sequence) -> LinearSubspace:
    """Tangent space to the locus where the two ruling components meet.

    That locus is the rank-one matrices with image on the quadric,
    parameterized trilinearly by (p, q, k); the tangent space is the span of
    the lifts of all coordinate directions and has linear dimension 6 (a
    projective P^5).
    """
    pv, qv, kv = vec(p), vec(q), vec(k)
    if len(pv) != 2 or len(qv) != 2 or len(kv) != 4:
        raise ValueError("expected two points of P^1 and one point of P^3")
    if is_zero_vector(pv) or is_zero_vector(qv) or is_zero_vector(kv):
        raise ValueError("projective coordinates cannot all vanish")
    directions = []
    for unit in ((1, 0), (0, 1)):
        directions.append(flatten(outer(quadric_point(unit, qv), kv)))
        directions.append(flatten(outer(quadric_point(pv, unit), kv)))
    for c in range(4):
        unit = [Fraction(0)] * 4
        unit[c] = Fraction(1)
        directions.append(flatten(outer(quadric_point(pv, qv), unit)))
    return LinearSubspace.span(directions, MATRIX_SPACE_DIM)


def verify_tangent_intersection(p: Sequence, q: Sequence, k: Sequence) -> bool:
    """Check that the two ruling tangent spaces meet exactly in the tangent
    space of the intersection locus at the rank-one point of (p, q, k)."""
    t1 = tangent_ruling_component(1, q, pencil_matrix(p, k))
    t2 = tangent_ruling_component(2, p, pencil_matrix(q, k))
    expected = tangent_intersection_locus(p, q, k)
    return t1.intersect(t2) == expected


def verify_gradient_rank(p: Sequence, q: Sequence, k: Sequence) -> bool:
    """Check the two facts that make the rank-one stratum uniform:

    the point-condition gradients at the rank-one point span exactly four
    dimensions (so the common tangent space is a projective P^11), and that
    common tangent space contains the tangent space of the intersection locus.
    """
    phi = rank_one_matrix(p, q, k)
    span = gradient_span(phi)
    if span.dim() != 4:
        return False
    locus = tangent_intersection_locus(p, q, k)
    return all(dot(g, t) == 0 for g in span.basis for t in locus.basis)


# Canonical sample points: the rank-one matrix E_00 (image (1:0:0:0), kernel
# x0 = 0) and the rank-one matrix E_22 used for the intersection check.
CANONICAL_RANK_ONE = ((1, 0), (1, 0), (1, 0, 0, 0))
CANONICAL_INTERSECTION = ((1, 0), (0, 1), (0, 0, 1, 0))

# Rank-two normal form on the first ruling component: rows (e0; e1) in the
# P^7 factor.
RANK_TWO_NORMAL_FORM = ((1, 0), ((1, 0, 0, 0), (0, 1, 0, 0)))


def sigma_normal_form() -> ProjMatrix:
    """The rank-two normal form on the first ruling component."""
    return sigma1(*RANK_TWO_NORMAL_FORM)


# Gradient span at the rank-two normal form: one mixed generator
# a_{2,0} - a_{3,1} plus six single coordinates.
_RANK_TWO_GENERATORS = [
    {8: 1, 13: -1},  # a_{2,0} - a_{3,1}
    {9: 1},  # a_{2,1}
    {10: 1},  # a_{2,2}
    {11: 1},  # a_{2,3}
    {12: 1},  # a_{3,0}
    {14: 1},  # a_{3,2}
    {15: 1},  # a_{3,3}
]


def rank_two_expected_span() -> LinearSubspace:
    vectors = []
    for gen in _RANK_TWO_GENERATORS:
        v = [Fraction(0)] * MATRIX_SPACE_DIM
        for idx, c in gen.items():
            v[idx] = Fraction(c)
        vectors.append(tuple(v))
    return LinearSubspace.span(vectors, MATRIX_SPACE_DIM)


# -- seeded sampling -------------------------------------------------------


def random_fraction(rng: random.Random, bound: int = 10) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_projective_point(rng: random.Random, length: int) -> Vector:
    while True:
        candidate = tuple(random_fraction(rng) for _ in range(length))
        if not is_zero_vector(candidate):
            return candidate


def random_pencil(rng: random.Random, target_rank: int = 2) -> Matrix:
    """Random nonzero 2x4 matrix of the requested rank."""
    while True:
        candidate = (random_projective_point(rng, 4), random_projective_point(rng, 4))
        if rank(candidate) == target_rank:
            return candidate


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)


@dataclass
class TangentReport:
    seed: int
    samples: int
    checks: list[CheckResult]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_payload(self) -> dict:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "all_passed": self.all_passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
        }


def run_tangent_checks(seed: int = 0, samples: int = 20) -> TangentReport:
    """Run the full battery of tangent-space checks.

    Failures report the seed so any run can be reproduced exactly.
    """
    rng = random.Random(seed)
    checks: list[CheckResult] = []

    span = gradient_span(rank_one_matrix(*CANONICAL_RANK_ONE))
    checks.append(
        CheckResult(
            "gradient-rank-canonical",
            verify_gradient_rank(*CANONICAL_RANK_ONE),
            {
                "gradient_span_dim": span.dim(),
                "common_tangent_projective_dim": 15 - span.dim(),
            },
        )
    )

    failures = []
    for index in range(samples):
        point = (
            random_projective_point(rng, 2),
            random_projective_point(rng, 2),
            random_projective_point(rng, 4),
        )
        if not verify_gradient_rank(*point):
            failures.append(index)
    checks.append(
        CheckResult(
            "gradient-rank-random",
            not failures,
            {"samples": samples, "failures": failures},
        )
    )

    normal_span = gradient_span(sigma_normal_form())
    checks.append(
        CheckResult(
            "gradient-span-rank-two-normal-form",
            normal_span == rank_two_expected_span(),
            {"gradient_span_dim": normal_span.dim()},
        )
    )

    checks.append(
        CheckResult(
            "tangent-intersection-canonical",
            verify_tangent_intersection(*CANONICAL_INTERSECTION),
            {},
        )
    )

    failures = []
    for index in range(samples):
        point = (
            random_projective_point(rng, 2),
            random_projective_point(rng, 2),
            random_projective_point(rng, 4),
        )
        if not verify_tangent_intersection(*point):
            failures.append(index)
    checks.append(
        CheckResult(
            "tangent-intersection-random",
            not failures,
            {"samples": samples, "failures": failures},
        )
    )

    return TangentReport(seed, samples, checks)
