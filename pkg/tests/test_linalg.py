from fractions import Fraction

import pytest

from predegree.linalg import (
    LinearSubspace,
    det,
    dot,
    flatten,
    mat,
    mat_mul,
    mat_vec,
    nullspace,
    outer,
    rank,
    rref,
    transpose,
    vec,
)


def test_vec_coerces_strings_and_ints():
    assert vec([1, "1/2", Fraction(3, 4)]) == (Fraction(1), Fraction(1, 2), Fraction(3, 4))


def test_dot_and_outer():
    assert dot(vec([1, 2]), vec([3, 4])) == 11
    assert outer(vec([1, 2]), vec([0, 1])) == ((0, 1), (0, 2))
    with pytest.raises(ValueError):
        dot(vec([1]), vec([1, 2]))


def test_mat_mul_and_transpose():
    a = mat([[1, 2], [3, 4]])
    b = mat([[0, 1], [1, 0]])
    assert mat_mul(a, b) == mat([[2, 1], [4, 3]])
    assert transpose(a) == mat([[1, 3], [2, 4]])
    assert mat_vec(a, vec([1, 1])) == (3, 7)
    assert flatten(a) == (1, 2, 3, 4)


def test_rref_and_rank():
    rows = [[1, 2, 3], [2, 4, 6], [1, 1, 1]]
    reduced = rref(rows)
    assert len(reduced) == 2
    assert rank(rows) == 2
    assert rref([[0, 0], [0, 0]]) == ()


def test_nullspace_is_exact_kernel():
    rows = mat([[1, 2, 3], [0, 1, 1]])
    basis = nullspace(rows)
    assert len(basis) == 1
    for v in basis:
        assert mat_vec(rows, v) == (0, 0)


def test_det_integer_and_rational():
    assert det([[2, 1], [1, 1]]) == 1
    assert det([[1, 2], [2, 4]]) == 0
    assert det([["1/2", 0], [0, "1/3"]]) == Fraction(1, 6)
    # column swap flips the sign
    assert det([[0, 1], [1, 0]]) == -1
    with pytest.raises(ValueError):
        det([[1, 2, 3], [4, 5, 6]])


def test_subspace_span_and_equality():
    u = LinearSubspace.span([[1, 0, 0], [0, 1, 0]])
    v = LinearSubspace.span([[1, 1, 0], [1, -1, 0]])
    assert u == v
    assert u.dim() == 2
    assert u.projective_dim() == 1
    assert u.contains([5, -7, 0])
    assert not u.contains([0, 0, 1])


def test_subspace_intersection():
    u = LinearSubspace.span([[1, 0, 0], [0, 1, 0]])
    v = LinearSubspace.span([[0, 1, 0], [0, 0, 1]])
    w = u.intersect(v)
    assert w == LinearSubspace.span([[0, 1, 0]])
    assert u.contains_subspace(w)
    assert v.contains_subspace(w)
    empty = u.intersect(LinearSubspace.span([[0, 0, 1]]))
    assert empty.dim() == 0


def test_subspace_validation():
    with pytest.raises(ValueError):
        LinearSubspace.span([])
    with pytest.raises(ValueError):
        LinearSubspace.span([[1, 0]], ambient_dim=3)
    assert LinearSubspace.span([], ambient_dim=4).dim() == 0
