"""Exact linear algebra over the rationals.

Vectors are tuples of ``fractions.Fraction`` and matrices are tuples of such
row vectors.  Every elimination here is exact; there is no floating point and
no tolerance anywhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]


def vec(entries: Iterable) -> Vector:
    """Coerce an iterable of rationals (int, str or Fraction) to a vector."""
    return tuple(Fraction(x) for x in entries)


def mat(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vec(row) for row in rows)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise ValueError("dot product of vectors of different lengths")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> Vector:
    return tuple(dot(row, v) for row in m)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def outer(u: Sequence[Fraction], v: Sequence[Fraction]) -> Matrix:
    return tuple(tuple(x * y for y in v) for x in u)


def flatten(m: Matrix) -> Vector:
    """Row-major flattening of a matrix into a single vector."""
    return tuple(x for row in m for x in row)


def rref(rows: Iterable[Sequence]) -> Matrix:
    """Reduced row echelon form with zero rows dropped."""
    work = [list(vec(r)) for r in rows]
    if not work:
        return ()
    ncols = len(work[0])
    if any(len(r) != ncols for r in work):
        raise ValueError("rows of unequal length")
    pivot_row = 0
    for col in range(ncols):
        pivot = next((i for i in range(pivot_row, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
        inv = 1 / work[pivot_row][col]
        work[pivot_row] = [x * inv for x in work[pivot_row]]
        for i in range(len(work)):
            if i != pivot_row and work[i][col] != 0:
                factor = work[i][col]
                work[i] = [a - factor * b for a, b in zip(work[i], work[pivot_row])]
        pivot_row += 1
        if pivot_row == len(work):
            break
    return tuple(tuple(r) for r in work[:pivot_row] if not is_zero_vector(r))


def rank(rows: Iterable[Sequence]) -> int:
    return len(rref(rows))


def nullspace(rows: Iterable[Sequence]) -> list[Vector]:
    """Basis of the right kernel {x : A x = 0}."""
    reduced = rref(rows)
    if not reduced:
        raise ValueError("nullspace of an empty matrix is ambiguous")
    ncols = len(reduced[0])
    pivots = [next(j for j, x in enumerate(row) if x != 0) for row in reduced]
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def det(rows: Iterable[Sequence]) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    For integer input every intermediate division is exact in the integers;
    rational input works the same way with exact Fraction division.
    """
    m = [list(vec(r)) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@dataclass(frozen=True)
class LinearSubspace:
    """Linear span inside a fixed coordinate space.

    The basis is kept in reduced row echelon form, so two subspaces are equal
    as dataclasses exactly when they are equal as subspaces.
    """

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int | None = None) -> "LinearSubspace":
        vs = [vec(v) for v in vectors]
        if ambient_dim is None:
            if not vs:
                raise ValueError("ambient dimension required for an empty span")
            ambient_dim = len(vs[0])
        if any(len(v) != ambient_dim for v in vs):
            raise ValueError("vector length does not match the ambient dimension")
        return cls(ambient_dim, rref(vs))

    def dim(self) -> int:
        return len(self.basis)

    def projective_dim(self) -> int:
        """Dimension of the projectivization (one less than the linear dim)."""
        return self.dim() - 1

    def contains(self, v: Sequence) -> bool:
        reduced = list(vec(v))
        if len(reduced) != self.ambient_dim:
            raise ValueError("vector length does not match the ambient dimension")
        for row in self.basis:
            p = next(j for j, x in enumerate(row) if x != 0)
            if reduced[p] != 0:
                factor = reduced[p]
                reduced = [a - factor * b for a, b in zip(reduced, row)]
        return is_zero_vector(reduced)

    def contains_subspace(self, other: "LinearSubspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def intersect(self, other: "LinearSubspace") -> "LinearSubspace":
        """Exact intersection of two spans.

        A vector lies in both spans iff it is u·a with (a, b) in the kernel of
        the matrix whose columns are the basis vectors of self and other.
        """
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("subspaces live in different ambient spaces")
        if not self.basis or not other.basis:
            return LinearSubspace.span([], self.ambient_dim)
        columns = transpose(self.basis + other.basis)
        k = len(self.basis)
        vectors = []
        for coeffs in nullspace(columns):
            combo = [Fraction(0)] * self.ambient_dim
            for c, row in zip(coeffs[:k], self.basis):
                combo = [a + c * b for a, b in zip(combo, row)]
            vectors.append(tuple(combo))
        return LinearSubspace.span(vectors, self.ambient_dim)
