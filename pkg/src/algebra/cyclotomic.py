from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Sequence

from sympy import isprime

from src.algebra.laurent import LaurentPoly
from src.errors import DomainError


def check_prime(p: int) -> int:
    """Return [p] if it is prime, raise a DomainError otherwise"""
    if not isinstance(p, int) or not isprime(p):
        raise DomainError(f'Cannot work with p-th roots of unity for non-prime p={p}')
    return p


@dataclass(frozen=True, slots=True)
class CyclotomicValue:
    """Element sum(c_a * zeta^a) of Z[zeta], zeta a primitive p-th root of unity"""
    prime: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.prime:
            raise DomainError(f'Expected {self.prime} coefficients, got {len(self.coeffs)}')

    @staticmethod
    def from_int(value: int, p: int) -> CyclotomicValue:
        return CyclotomicValue(p, (value,) + (0,) * (p - 1))

    def _coerce(self, other: CyclotomicValue | int) -> CyclotomicValue:
        if isinstance(other, int):
            return CyclotomicValue.from_int(other, self.prime)
        if other.prime != self.prime:
            raise DomainError(f'Cannot mix roots of unity of order {self.prime} and {other.prime}')
        return other

    def __add__(self, other: CyclotomicValue | int) -> CyclotomicValue:
        other = self._coerce(other)
        return CyclotomicValue(self.prime, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CyclotomicValue:
        return CyclotomicValue(self.prime, tuple(-a for a in self.coeffs))

    def __sub__(self, other: CyclotomicValue | int) -> CyclotomicValue:
        return self + (-self._coerce(other))

    def __rsub__(self, other: int) -> CyclotomicValue:
        return (-self) + other

    def __mul__(self, other: CyclotomicValue | int) -> CyclotomicValue:
        other = self._coerce(other)
        p = self.prime
        coeffs = [0] * p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        coeffs[(i + j) % p] += a * b
        return CyclotomicValue(p, tuple(coeffs))

    __rmul__ = __mul__

    @property
    def is_zero(self) -> bool:
        # 1 + zeta + ... + zeta^(p-1) = 0 is the only relation
        return len(set(self.coeffs)) == 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = CyclotomicValue.from_int(other, self.prime)
        if not isinstance(other, CyclotomicValue):
            return NotImplemented
        return self.prime == other.prime and (self - other).is_zero

    def __hash__(self) -> int:
        base = self.coeffs[0]
        return hash((self.prime, tuple(c - base for c in self.coeffs)))

    def __complex__(self) -> complex:
        zeta = cmath.exp(2j * cmath.pi / self.prime)
        return sum(c * zeta ** a for a, c in enumerate(self.coeffs))


def eval_torsion(poly: LaurentPoly, p: int, point: Sequence[int]) -> CyclotomicValue:
    """Evaluate [poly] at t_i = zeta^point_i, zeta a primitive [p]-th root of unity"""
    check_prime(p)
    if len(point) != poly.nvars:
        raise DomainError(f'Point {tuple(point)} does not have {poly.nvars} coordinates')
    if any(not 0 <= a < p for a in point):
        raise DomainError(f'Residues of {tuple(point)} must lie in 0..{p - 1}')
    coeffs = [0] * p
    for exps, coeff in poly.terms.items():
        coeffs[sum(a * e for a, e in zip(point, exps)) % p] += coeff
    return CyclotomicValue(p, tuple(coeffs))
