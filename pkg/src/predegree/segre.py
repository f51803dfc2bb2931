"""Segre-embedding machinery for products of projective spaces.

Covers the pushforward of monomial classes along a Segre embedding, the
inverse Chern class of the normal bundle to the embedded product, and the
resulting pushed-forward Segre class of the image.
"""

from __future__ import annotations

from math import factorial, prod

from .chow import ChowClass, ProductSpace


def ambient_dim(space: ProductSpace) -> int:
    """Dimension of the target projective space of the Segre embedding."""
    return prod(n + 1 for n in space.factor_dims) - 1


def multinomial(parts: tuple[int, ...]) -> int:
    return factorial(sum(parts)) // prod(factorial(p) for p in parts)


def pushforward_monomial(space: ProductSpace, exps: tuple[int, ...]) -> tuple[int, int]:
    """Pushforward of h_1^{a_1} ... h_r^{a_r} on the embedded product.

    The monomial cuts out a product of linear subspaces of dimensions
    d_i = n_i - a_i, whose image under the Segre embedding is a subvariety of
    degree (sum d_i)! / prod d_i!.  Returns (coefficient, power) of the image
    class c * H^power in the target projective space.
    """
    exps = tuple(int(e) for e in exps)
    dims = space.factor_dims
    if len(exps) != len(dims):
        raise ValueError("exponent tuple does not match the number of factors")
    if any(e < 0 or e > n for e, n in zip(exps, dims)):
        raise ValueError("exponent out of range for the ambient space")
    m = ambient_dim(space)
    complementary = tuple(n - e for e, n in zip(exps, dims))
    power = (m - space.total_dim) + sum(exps)
    return multinomial(complementary), power


def pushforward_class(cls: ChowClass) -> ChowClass:
    """Term-by-term pushforward of a class on a product to the Segre target."""
    space = cls.ambient
    target = ProductSpace((ambient_dim(space),))
    terms: dict[tuple[int, ...], object] = {}
    for exps, coeff in cls.terms.items():
        c, power = pushforward_monomial(space, exps)
        key = (power,)
        terms[key] = terms.get(key, 0) + c * coeff
    return ChowClass(target, terms)


def normal_inverse_chern(space: ProductSpace) -> ChowClass:
    """Inverse Chern class of the normal bundle to the Segre-embedded product.

    Equals prod (1 + h_i)^{n_i + 1} / (1 + sum h_i)^{m + 1} where m is the
    dimension of the target projective space.
    """
    if space.num_factors < 2:
        raise ValueError("a Segre embedding needs at least two factors")
    m = ambient_dim(space)
    one = ChowClass.one(space)
    numerator = one
    hyperplane_sum = ChowClass.zero(space)
    for i, n in enumerate(space.factor_dims):
        h = ChowClass.hyperplane(space, i)
        numerator = numerator * (one + h) ** (n + 1)
        hyperplane_sum = hyperplane_sum + h
    denominator = (one + hyperplane_sum) ** (m + 1)
    return numerator * denominator.invert_unit()


def segre_class_pushforward(space: ProductSpace) -> ChowClass:
    """Pushed-forward Segre class of the Segre-embedded product.

    For a smooth subvariety the Segre class is the inverse normal Chern class
    capped with the fundamental class, so this is the pushforward of
    ``normal_inverse_chern``.  The leading term is deg(image) * H^codim.
    """
    return pushforward_class(normal_inverse_chern(space))
