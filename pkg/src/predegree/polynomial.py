"""Predegree-polynomial calculus.

The predegree polynomial of a degree-d hypersurface X in P^n collects the
multidegrees a_i of the graph of the rational map extending the PGL(n+1)
action on X: a_i counts translates of X through i general points under
n^2 + 2n - i general linear conditions on the transformation.  This module
implements the class-level route to those numbers: the twist of a class by a
line bundle, coefficient extraction from a (partial) Segre class of the base
locus, the Chern-character form, and the closed-form degrees and dimension
counts used to assemble the quadric tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, isqrt

from .chow import ChowClass, ProductSpace
from .linalg import det


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out fractional.

    This signals an internally inconsistent input (typically a class that is
    not the Segre class of any base scheme), never a rounding problem.
    """


@dataclass(frozen=True)
class PredegreePolynomial:
    """Coefficients a_0 ... a_{n^2+2n} of the predegree polynomial.

    ``ambient_dim`` is the dimension n of the projective space containing the
    hypersurface; the space of transformations then has dimension n^2 + 2n.
    """

    ambient_dim: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        n = self.ambient_dim
        if n < 1:
            raise ValueError("ambient dimension must be at least 1")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != n * n + 2 * n + 1:
            raise ValueError("expected n^2 + 2n + 1 coefficients")
        if any(c < 0 for c in coeffs):
            raise ValueError("predegree coefficients are counts and cannot be negative")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def transformation_space_dim(self) -> int:
        return self.ambient_dim ** 2 + 2 * self.ambient_dim

    def degree(self) -> int:
        """Largest i with a_i nonzero (0 for the zero polynomial)."""
        return max((i for i, c in enumerate(self.coeffs) if c), default=0)

    def nonzero_prefix(self) -> tuple[int, ...]:
        """Coefficients up to the last nonzero one."""
        return self.coeffs[: self.degree() + 1]

    def as_string(self) -> str:
        return format_polynomial(self.nonzero_prefix())


def format_polynomial(coeffs) -> str:
    """Render coefficients as a polynomial in t; None renders as ``*`` (unknown)."""
    pieces = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if c is None:
            label = "*"
        elif c == 1 and i > 0:
            label = ""
        else:
            label = str(c)
        if i == 0:
            pieces.append(label or "1")
        elif i == 1:
            pieces.append(f"{label}t")
        else:
            pieces.append(f"{label}t^{i}")
    return " + ".join(pieces) if pieces else "0"


@lru_cache(maxsize=None)
def _twist_inverse_power(ambient_total_dim: int, twist: int, j: int) -> ChowClass:
    """(1 + twist*H)^{-j} on P^N, cached because the twist reuses them heavily."""
    ambient = ProductSpace((ambient_total_dim,))
    if j == 0:
        return ChowClass.one(ambient)
    if j == 1:
        h = ChowClass.hyperplane(ambient)
        return (ChowClass.one(ambient) + twist * h).invert_unit()
    half = _twist_inverse_power(ambient_total_dim, twist, j // 2)
    result = half * half
    if j % 2:
        result = result * _twist_inverse_power(ambient_total_dim, twist, 1)
    return result


def tensor_class(cls: ChowClass, twist: int) -> ChowClass:
    """Twist of a class on a single projective space by O(twist).

    Acts on the codimension-j piece by division by (1 + twist*H)^j; the
    codimension-0 piece is unchanged.
    """
    ambient = cls.ambient
    if ambient.num_factors != 1:
        raise ValueError("the twist is defined on a single projective space")
    result = ChowClass.zero(ambient)
    for j in cls.codimensions():
        result = result + cls.codim_part(j) * _twist_inverse_power(ambient.total_dim, twist, j)
    return result


@lru_cache(maxsize=None)
def _degree_series(ambient_total_dim: int, d: int) -> ChowClass:
    """(1 - d*H)^{-1} on P^N, cached per (N, d)."""
    ambient = ProductSpace((ambient_total_dim,))
    h = ChowClass.hyperplane(ambient)
    return (ChowClass.one(ambient) - d * h).invert_unit()


def predegree_coefficient(ambient_total_dim: int, d: int, segre_class: ChowClass | None, i: int) -> int:
    """Multidegree a_i extracted from a class agreeing with the Segre class
    of the base locus up to codimension i.

    Evaluates the degree of H^{N-i} (1 - dH)^{-1} ([P^N] - S twisted by O(-d))
    and insists on an integer result.
    """
    n_total = ambient_total_dim
    if not 0 <= i <= n_total:
        raise ValueError("coefficient index out of range")
    ambient = ProductSpace((n_total,))
    one = ChowClass.one(ambient)
    if segre_class is None or segre_class.is_zero:
        bracket = one
    else:
        if segre_class.ambient != ambient:
            raise ValueError("the Segre class must live on the same projective space")
        bracket = one - tensor_class(segre_class, -d)
    h = ChowClass.hyperplane(ambient)
    value = (h ** (n_total - i) * _degree_series(n_total, d) * bracket).integrate()
    if value.denominator != 1:
        raise IntegralityError(f"coefficient a_{i} evaluated to the non-integer {value}")
    return int(value)


def predegree_from_segre(
    ambient_total_dim: int, d: int, segre_class: ChowClass | None, orbit_dim: int
) -> PredegreePolynomial:
    """Assemble the full polynomial from a partial Segre class.

    The caller certifies that the supplied class agrees with the Segre class
    of the base locus away from a locus of codimension greater than
    ``orbit_dim``; coefficients beyond the orbit dimension vanish.
    """
    if not 0 <= orbit_dim <= ambient_total_dim:
        raise ValueError("orbit dimension out of range")
    n = isqrt(ambient_total_dim + 1) - 1
    if (n + 1) ** 2 != ambient_total_dim + 1:
        raise ValueError("ambient dimension is not of the form n^2 + 2n")
    coeffs = [
        predegree_coefficient(ambient_total_dim, d, segre_class, i) for i in range(orbit_dim + 1)
    ]
    coeffs += [0] * (ambient_total_dim - orbit_dim)
    return PredegreePolynomial(n, tuple(coeffs))


def chern_character_form(poly: PredegreePolynomial) -> tuple[Fraction, ...]:
    """The sequence a_i / i! as exact rationals."""
    return tuple(Fraction(c, factorial(i)) for i, c in enumerate(poly.coeffs))


def deg_so(m: int) -> int:
    """Degree of the closure of SO(m) in the projective space of matrices.

    Computed as 2^{m-1} times the determinant of the binomial-coefficient
    matrix (C(2m - 2i - 2j, m - 2i)) for 1 <= i, j <= floor(m/2), over exact
    integers.
    """
    if m < 2:
        raise ValueError("the orthogonal group degree needs m >= 2")
    size = m // 2
    matrix = [
        [comb(2 * m - 2 * i - 2 * j, m - 2 * i) for j in range(1, size + 1)]
        for i in range(1, size + 1)
    ]
    value = det(matrix)
    assert value.denominator == 1
    return 2 ** (m - 1) * int(value)


def deg_po(m: int) -> int:
    """Degree of the closure of PO(m); equals the degree of SO(m)."""
    return deg_so(m)


def fano_dim(n: int, k: int) -> int:
    """Dimension of the family of k-planes on a smooth quadric in P^n."""
    if n < 1:
        raise ValueError("the quadric must live in P^n with n >= 1")
    if not 0 <= k <= (n - 1) // 2:
        raise ValueError("no k-planes of that dimension lie on a smooth quadric")
    # (n - 1 - 3k/2)(k + 1), an integer because k(k+1) is even.
    return (2 * (n - 1) - 3 * k) * (k + 1) // 2


def max_component_dim(n: int) -> int:
    """Maximal dimension of a component of the base locus for a quadric in P^n.

    The largest component fibers the k-planes on the quadric, k = floor((n-1)/2),
    over the matrices with image inside a fixed k-plane.
    """
    if n < 1:
        raise ValueError("the quadric must live in P^n with n >= 1")
    k = (n - 1) // 2
    return fano_dim(n, k) + (n + 1) * (k + 1) - 1
