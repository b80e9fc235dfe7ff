from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from sympy import Matrix

from src.algebra.laurent import LaurentPoly
from src.errors import DomainError

# A signed monomial: (sign, exponent vector over the output variables)
SignedMonomial = tuple[int, tuple[int, ...]]


@dataclass(frozen=True, slots=True)
class MonomialSubstitution:
    """Ring homomorphism sending each input variable t_i to a signed monomial
    in the output variables"""
    nvars_in: int
    nvars_out: int
    images: tuple[SignedMonomial, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.nvars_in:
            raise DomainError(f'Expected {self.nvars_in} images, got {len(self.images)}')
        for sign, exps in self.images:
            if sign not in (1, -1) or len(exps) != self.nvars_out:
                raise DomainError(f'Invalid monomial image {(sign, exps)}')

    @staticmethod
    def identity(nvars: int) -> MonomialSubstitution:
        return MonomialSubstitution.from_exponents([_unit(i, nvars) for i in range(nvars)], nvars)

    @staticmethod
    def from_exponents(rows: Sequence[Sequence[int]], nvars_out: int,
                       signs: Sequence[int] | None = None) -> MonomialSubstitution:
        """Build the substitution t_i -> sign_i * s^rows[i]"""
        signs = signs or [1] * len(rows)
        return MonomialSubstitution(len(rows), nvars_out, tuple((s, tuple(r)) for s, r in zip(signs, rows)))

    @staticmethod
    def meridian(nvars: int) -> MonomialSubstitution:
        """Return t_i -> t_i (i < n), t_n -> t_1...t_n"""
        rows = [_unit(i, nvars) for i in range(nvars - 1)] + [(1,) * nvars]
        return MonomialSubstitution.from_exponents(rows, nvars)

    @staticmethod
    def fiber(nvars: int) -> MonomialSubstitution:
        """Return the inverse of the meridian substitution, t_n -> t_n (t_1...t_(n-1))^-1"""
        rows = [_unit(i, nvars) for i in range(nvars - 1)] + [(-1,) * (nvars - 1) + (1,)]
        return MonomialSubstitution.from_exponents(rows, nvars)

    @staticmethod
    def diagonal(nvars: int) -> MonomialSubstitution:
        """Return t_i -> t for every i"""
        return MonomialSubstitution.from_exponents([(1,)] * nvars, 1)

    @staticmethod
    def relabel(order: Sequence[int]) -> MonomialSubstitution:
        """Return the substitution sending t_i to t_order[i] (1-based labels)"""
        nvars = len(order)
        return MonomialSubstitution.from_exponents([_unit(j - 1, nvars) for j in order], nvars)

    @staticmethod
    def reorient(nvars: int, labels: Sequence[int]) -> MonomialSubstitution:
        """Return t_i -> t_i^-1 for i in [labels], t_i -> t_i otherwise"""
        rows = [tuple(-e for e in _unit(i, nvars)) if i + 1 in labels else _unit(i, nvars) for i in range(nvars)]
        return MonomialSubstitution.from_exponents(rows, nvars)

    @property
    def is_sign_free(self) -> bool:
        return all(sign == 1 for sign, _ in self.images)

    def is_invertible(self) -> bool:
        """Return True if the exponent matrix is square and unimodular"""
        if self.nvars_in != self.nvars_out:
            return False
        return abs(Matrix([list(exps) for _, exps in self.images]).det()) == 1

    def then(self, other: MonomialSubstitution) -> MonomialSubstitution:
        """Return the substitution applying self first, then [other]"""
        if self.nvars_out != other.nvars_in:
            raise DomainError(f'Cannot compose substitutions of arities {self.nvars_out} and {other.nvars_in}')
        images = []
        for sign, exps in self.images:
            image = substitute(LaurentPoly.monomial(exps, sign), other)
            (new_exps, new_sign), = image.terms.items()
            images.append((new_sign, new_exps))
        return MonomialSubstitution(self.nvars_in, other.nvars_out, tuple(images))


def _unit(index: int, nvars: int) -> tuple[int, ...]:
    return tuple(1 if j == index else 0 for j in range(nvars))


def substitute(poly: LaurentPoly, sub: MonomialSubstitution) -> LaurentPoly:
    """Return the image of [poly] under the monomial substitution [sub]"""
    if poly.nvars != sub.nvars_in:
        raise DomainError(f'Cannot substitute {sub.nvars_in} variables into a polynomial in {poly.nvars}')
    terms: dict[tuple[int, ...], int] = {}
    for exps, coeff in poly.terms.items():
        image = [0] * sub.nvars_out
        sign = 1
        for e, (s, row) in zip(exps, sub.images):
            if not e:
                continue
            if s < 0 and e % 2:
                sign = -sign
            for j, r in enumerate(row):
                image[j] += e * r
        key = tuple(image)
        terms[key] = terms.get(key, 0) + sign * coeff
    return LaurentPoly(sub.nvars_out, terms)
