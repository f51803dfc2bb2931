import random
from fractions import Fraction

import pytest

from predegree.linalg import vec
from predegree.polynomial import deg_po
from predegree.quadric import (
    BASE_INTERSECTION_CODIM,
    ORBIT_DIM_P3,
    ProjMatrix,
    QuadricGram,
    SEGRE_QUADRIC,
    base_scheme_member,
    doubled_ruling_segre_class,
    point_condition_gradient,
    point_condition_value,
    predegree_quadric_p3,
    sigma1,
    sigma2,
    table1_row,
    table2,
)
from predegree.segre import segre_class_pushforward
from predegree.chow import ProductSpace

IDENTITY = ProjMatrix([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
E00 = ProjMatrix([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])


def random_fraction(rng):
    return Fraction(rng.randint(-10, 10), rng.randint(1, 10))


def random_point(rng, length):
    while True:
        candidate = tuple(random_fraction(rng) for _ in range(length))
        if any(candidate):
            return candidate


def random_pencil(rng):
    while True:
        candidate = (random_point(rng, 4), random_point(rng, 4))
        if any(any(row) for row in candidate):
            return candidate


def test_gram_matrix_is_the_segre_quadric():
    # f(x) = x0 x3 - x1 x2
    assert SEGRE_QUADRIC.value((1, 0, 0, 0)) == 0
    assert SEGRE_QUADRIC.value((1, 0, 0, 1)) == 1
    assert SEGRE_QUADRIC.value((0, 1, 1, 0)) == -1
    assert SEGRE_QUADRIC.value((1, 1, 1, 1)) == 0


def test_gram_validation():
    with pytest.raises(ValueError):
        QuadricGram([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])  # not symmetric
    with pytest.raises(ValueError):
        QuadricGram([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]])  # singular


def test_proj_matrix_validation():
    with pytest.raises(ValueError):
        ProjMatrix([[0] * 4] * 4)
    with pytest.raises(ValueError):
        ProjMatrix([[1, 0], [0, 1]])
    phi = ProjMatrix.from_flat([1] + [0] * 15)
    assert phi == E00
    assert phi.rank() == 1
    assert phi.proportional_to(ProjMatrix.from_flat([Fraction(1, 2)] + [0] * 15))
    assert not phi.proportional_to(IDENTITY)


def test_point_condition_value_examples():
    assert point_condition_value(IDENTITY, (1, 0, 0, 0)) == 0
    assert point_condition_value(IDENTITY, (1, 0, 0, 1)) == 1
    with pytest.raises(ValueError):
        point_condition_value(IDENTITY, (0, 0, 0, 0))


def test_point_condition_vanishes_on_ruling_images():
    rng = random.Random(5)
    for _ in range(20):
        p, xi = random_point(rng, 2), random_pencil(rng)
        q = random_point(rng, 4)
        assert point_condition_value(sigma1(p, xi), q) == 0
        assert point_condition_value(sigma2(p, xi), q) == 0


def test_point_condition_gradient_examples():
    grad = point_condition_gradient(E00, (1, 0, 0, 0))
    expected = tuple(
        tuple(Fraction(1) if (i, j) == (3, 0) else Fraction(0) for j in range(4)) for i in range(4)
    )
    assert grad == expected
    # q in the kernel of a rank-one matrix gives the zero gradient
    zero = point_condition_gradient(E00, (0, 1, 0, 0))
    assert all(x == 0 for row in zero for x in row)


def test_gradient_polarization_identity():
    # s_q(phi + t psi) - s_q(phi) - t^2 s_q(psi) = t < grad, psi > exactly
    rng = random.Random(17)
    for _ in range(20):
        phi = ProjMatrix([random_point(rng, 4) for _ in range(4)])
        psi = ProjMatrix([random_point(rng, 4) for _ in range(4)])
        q = random_point(rng, 4)
        t = random_fraction(rng)
        if t == 0:
            t = Fraction(1)
        mixed = ProjMatrix(
            [
                [a + t * b for a, b in zip(r1, r2)]
                for r1, r2 in zip(phi.entries, psi.entries)
            ]
        )
        lhs = (
            point_condition_value(mixed, q)
            - point_condition_value(phi, q)
            - t * t * point_condition_value(psi, q)
        )
        grad = point_condition_gradient(phi, q)
        pairing = sum(
            g * x for grow, xrow in zip(grad, psi.entries) for g, x in zip(grow, xrow)
        )
        assert lhs == t * pairing


def test_sigma_row_patterns():
    phi = sigma1((1, 0), [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert phi.entries == (
        (1, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 0, 0),
        (0, 0, 0, 0),
    )
    phi2 = sigma2((1, 0), [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert phi2.entries == (
        (1, 0, 0, 0),
        (0, 0, 0, 0),
        (0, 1, 0, 0),
        (0, 0, 0, 0),
    )


def test_sigma_rank_matches_pencil_rank():
    rng = random.Random(3)
    from predegree.linalg import rank as mat_rank

    for _ in range(20):
        p, xi = random_point(rng, 2), random_pencil(rng)
        assert sigma1(p, xi).rank() == mat_rank(xi)
        assert sigma2(p, xi).rank() == mat_rank(xi)


def test_sigma_rejects_zero_inputs():
    with pytest.raises(ValueError):
        sigma1((0, 0), [[1, 0, 0, 0], [0, 0, 0, 0]])
    with pytest.raises(ValueError):
        sigma2((1, 0), [[0, 0, 0, 0], [0, 0, 0, 0]])


def test_base_scheme_membership():
    assert not base_scheme_member(IDENTITY)
    assert base_scheme_member(E00)  # image (1:0:0:0) lies on the quadric
    off_quadric = ProjMatrix([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0]])
    assert not base_scheme_member(off_quadric)  # image (1:0:0:1)


def test_ruling_images_are_members():
    rng = random.Random(9)
    for _ in range(20):
        p, xi = random_point(rng, 2), random_pencil(rng)
        assert base_scheme_member(sigma1(p, xi))
        assert base_scheme_member(sigma2(p, xi))


def test_membership_matches_point_condition_vanishing():
    # membership means every point condition vanishes; check on the spanning set
    from predegree.tangent import POLARIZATION_POINTS

    rng = random.Random(13)
    for _ in range(10):
        phi = sigma1(random_point(rng, 2), random_pencil(rng))
        assert all(point_condition_value(phi, q) == 0 for q in POLARIZATION_POINTS)


def test_predegree_quadric_p3_golden():
    poly = predegree_quadric_p3()
    assert poly.nonzero_prefix() == (1, 2, 4, 8, 16, 32, 64, 112, 140, 40)
    assert poly.coeffs[0] == 1
    assert all(c == 0 for c in poly.coeffs[ORBIT_DIM_P3 + 1 :])


def test_predegree_quadric_p3_cross_checks():
    poly = predegree_quadric_p3()
    assert poly.coeffs[9] == deg_po(4)
    assert poly.coeffs[:7] == tuple(2 ** i for i in range(7))
    assert BASE_INTERSECTION_CODIM > ORBIT_DIM_P3


def test_component_classes_are_interchangeable():
    # both ruling components push to the same class, so the doubled class can
    # be assembled from either one or from the sum of the two
    one_component = segre_class_pushforward(ProductSpace((1, 7)))
    assert doubled_ruling_segre_class() == one_component + one_component
    assert doubled_ruling_segre_class() == 2 * one_component
    assert doubled_ruling_segre_class().coefficient((7,)) == 16


@pytest.mark.parametrize(
    "n,space_dim,base_dim",
    [(1, 2, 1), (2, 5, 3), (3, 9, 8), (4, 14, 12)],
)
def test_table1_dimensions(n, space_dim, base_dim):
    row = table1_row(n)
    assert row.quadric_space_dim == space_dim
    assert row.max_base_component_dim == base_dim


def test_table1_polynomials():
    assert table1_row(1).coeffs == (1, 2, 2)
    assert table1_row(2).coeffs == (1, 2, 4, 8, 16, 8)
    assert table1_row(3).coeffs == (1, 2, 4, 8, 16, 32, 64, 112, 140, 40)
    row4 = table1_row(4)
    assert row4.coeffs[:12] == tuple(2 ** i for i in range(12))
    assert row4.coeffs[12] is None and row4.coeffs[13] is None
    assert row4.coeffs[14] == 384
    assert row4.polynomial_string().endswith("*t^12 + *t^13 + 384t^14")
    with pytest.raises(ValueError):
        table1_row(0)


def test_table2_counts():
    rows = table2()
    assert rows == [
        (0, 1),
        (1, 2),
        (2, 4),
        (3, 8),
        (4, 16),
        (5, 32),
        (6, 64),
        (7, 112),
        (8, 140),
        (9, 1),
    ]
    # the top row divides the top coefficient by the stabilizer degree
    assert rows[9][1] == predegree_quadric_p3().coeffs[9] // deg_po(4)
