"""Chow rings of products of projective spaces with exact coefficients.

For factor dimensions (n_1, ..., n_r) the ring is the truncated polynomial
ring Q[h_1, ..., h_r] / (h_1^{n_1+1}, ..., h_r^{n_r+1}), where h_i is the
hyperplane class pulled back from the i-th factor.  Classes are stored
sparsely as exponent tuple -> rational coefficient.  A class may mix
codimensions; the codimension of a term is the total exponent.

Values are immutable once built and every operation returns a new class, so
everything here is safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class ProductSpace:
    """Ambient product of projective spaces, recorded by factor dimensions."""

    factor_dims: tuple[int, ...]

    def __post_init__(self):
        dims = tuple(int(n) for n in self.factor_dims)
        if len(dims) < 1:
            raise ValueError("a product space needs at least one factor")
        if any(n < 0 for n in dims):
            raise ValueError("factor dimensions must be non-negative")
        object.__setattr__(self, "factor_dims", dims)

    @property
    def num_factors(self) -> int:
        return len(self.factor_dims)

    @property
    def total_dim(self) -> int:
        return sum(self.factor_dims)

    @property
    def top_exponents(self) -> Exponents:
        """Exponent tuple of the point class h_1^{n_1} ... h_r^{n_r}."""
        return self.factor_dims


def _normalize(ambient: ProductSpace, items: Iterable[tuple[Exponents, Fraction]]) -> dict:
    dims = ambient.factor_dims
    terms: dict[Exponents, Fraction] = {}
    for exps, coeff in items:
        if type(exps) is not tuple or any(type(e) is not int for e in exps):
            exps = tuple(int(e) for e in exps)
        if len(exps) != len(dims):
            raise ValueError("exponent tuple does not match the number of factors")
        if any(e < 0 for e in exps):
            raise ValueError("negative exponent")
        if any(e > n for e, n in zip(exps, dims)):
            # h_i^{n_i+1} = 0, so the monomial vanishes in the quotient.
            continue
        if type(coeff) is not Fraction:
            coeff = Fraction(coeff)
        total = terms.get(exps, Fraction(0)) + coeff
        if total:
            terms[exps] = total
        elif exps in terms:
            del terms[exps]
    return terms


@dataclass(frozen=True)
class ChowClass:
    """Element of the Chow ring of a product of projective spaces."""

    ambient: ProductSpace
    terms: Mapping[Exponents, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _normalize(self.ambient, dict(self.terms).items()))

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ambient: ProductSpace) -> "ChowClass":
        return cls(ambient, {})

    @classmethod
    def one(cls, ambient: ProductSpace) -> "ChowClass":
        return cls(ambient, {(0,) * ambient.num_factors: Fraction(1)})

    @classmethod
    def hyperplane(cls, ambient: ProductSpace, index: int = 0) -> "ChowClass":
        """The class h_index pulled back from the chosen factor."""
        if not 0 <= index < ambient.num_factors:
            raise ValueError("factor index out of range")
        exps = tuple(1 if i == index else 0 for i in range(ambient.num_factors))
        return cls(ambient, {exps: Fraction(1)})

    @classmethod
    def monomial(cls, ambient: ProductSpace, exps: Iterable[int], coeff=1) -> "ChowClass":
        return cls(ambient, {tuple(exps): Fraction(coeff)})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.ambient.num_factors)

    def codimensions(self) -> list[int]:
        """Sorted list of codimensions in which the class has a term."""
        return sorted({sum(e) for e in self.terms})

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "ChowClass":
        if isinstance(other, ChowClass):
            if other.ambient != self.ambient:
                raise ValueError("classes live in different ambient spaces")
            return other
        if isinstance(other, (int, Fraction)):
            zero_exps = (0,) * self.ambient.num_factors
            return ChowClass(self.ambient, {zero_exps: Fraction(other)})
        return NotImplemented

    def __add__(self, other) -> "ChowClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        merged = dict(self.terms)
        for exps, coeff in other.terms.items():
            merged[exps] = merged.get(exps, Fraction(0)) + coeff
        return ChowClass(self.ambient, merged)

    __radd__ = __add__

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.ambient, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "ChowClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ChowClass":
        return (-self) + other

    def __mul__(self, other) -> "ChowClass":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        dims = self.ambient.factor_dims
        product: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                if any(e > n for e, n in zip(exps, dims)):
                    continue
                product[exps] = product.get(exps, Fraction(0)) + c1 * c2
        return ChowClass(self.ambient, product)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ChowClass":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ChowClass.one(self.ambient)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def invert_unit(self) -> "ChowClass":
        """Inverse of a class of the form 1 + (positive-codimension part).

        Computed by the geometric series in the nilpotent part, which
        terminates because every positive-codimension class is nilpotent in a
        truncated ring.
        """
        if self.constant_term() != 1:
            raise ValueError("only classes with constant term 1 are invertible here")
        nilpotent = self - 1
        result = ChowClass.one(self.ambient)
        power = ChowClass.one(self.ambient)
        for _ in range(self.ambient.total_dim):
            power = power * (-nilpotent)
            if power.is_zero:
                break
            result = result + power
        return result

    # -- grading and degree ------------------------------------------------

    def codim_part(self, j: int) -> "ChowClass":
        """The piece of the class in codimension j (total exponent j)."""
        if not 0 <= j <= self.ambient.total_dim:
            raise ValueError("codimension out of range for the ambient space")
        return ChowClass(self.ambient, {e: c for e, c in self.terms.items() if sum(e) == j})

    def integrate(self) -> Fraction:
        """Degree of the zero-dimensional piece: coefficient of the point class."""
        return self.coefficient(self.ambient.top_exponents)

    # -- presentation ------------------------------------------------------

    def to_records(self) -> list[dict]:
        """Serializable form: exponents in factor order, coefficients as strings."""
        records = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            records.append({"exponents": list(exps), "coeff": str(self.terms[exps])})
        return records

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        names = (
            ["H"]
            if self.ambient.num_factors == 1
            else [f"h{i + 1}" for i in range(self.ambient.num_factors)]
        )
        pieces = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            coeff = self.terms[exps]
            monom = "*".join(
                f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(exps) if e
            )
            if not monom:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(monom)
            elif coeff == -1:
                pieces.append(f"-{monom}")
            else:
                pieces.append(f"{coeff}*{monom}")
        out = pieces[0]
        for piece in pieces[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out
