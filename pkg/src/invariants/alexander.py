from __future__ import annotations
"""
Alexander invariants of arrangements. Provides:
- gassner, the Gassner matrices of pure braids through Fox calculus
- alexander_matrix and ek_minors, the presentation matrix of the Alexander
  module and the generators of its determinantal ideals
- alexander_poly, link_alexander_poly, single_var_poly and delta
- artin_alexander_matrix and artin_link_poly, the same invariants computed
  from the closure of a full braid
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from src.algebra.laurent import LaurentPoly, normalize_unit
from src.algebra.substitution import MonomialSubstitution, substitute
from src.arrangements.spec import ArrangementSpec, Cable
from src.braids.artin import artin_automorphism
from src.braids.braid_word import BraidWord, PureBraidWord
from src.braids.free_word import FreeWord, change_basis, fox_jacobian
from src.errors import DomainError
from src.invariants.links import iterated_cable
from src.invariants.matrices import MinorCache, mat_mul

Basis = tuple[FreeWord, ...]
Entries = tuple[tuple[LaurentPoly, ...], ...]


@dataclass(frozen=True)
class GassnerMatrix:
    """Image of a pure braid in the Gassner representation, over t_1..t_size"""
    size: int
    entries: Entries

    def __mul__(self, other: GassnerMatrix) -> GassnerMatrix:
        if not self.size:
            return self
        return GassnerMatrix(self.size, tuple(tuple(row) for row in mat_mul(self.entries, other.entries)))

    def at_one(self) -> list[list[int]]:
        """Return the integer matrix obtained at t_i = 1"""
        return [[entry.evaluate([1] * self.size) for entry in row] for row in self.entries]

    def determinant(self) -> LaurentPoly:
        cache = MinorCache(self.entries, LaurentPoly.one(self.size), lambda entry: entry.is_zero)
        return cache.minor(tuple(range(self.size)), tuple(range(self.size)))


@dataclass(frozen=True)
class AlexMatrix:
    """The (n-1) x n matrix (t_n id - Theta(xi^2) | 1 - t_i) presenting the
    Alexander module, with the basis its rows and columns are written in"""
    rows: int
    cols: int
    entries: Entries
    basis: Basis | None = None

    def times_meridians(self) -> list[LaurentPoly]:
        """Return M . (t_1 - 1, ..., t_n - 1), which vanishes identically"""
        meridians = [LaurentPoly.variable(j, self.cols) - 1 for j in range(1, self.cols + 1)]
        return [sum((row[j] * meridians[j] for j in range(self.cols)), LaurentPoly.zero(self.cols))
                for row in self.entries]

    def minor_cache(self) -> MinorCache:
        return MinorCache(self.entries, LaurentPoly.one(self.cols), lambda entry: entry.is_zero)


def gassner(xi: PureBraidWord | BraidWord, basis: Sequence[FreeWord] | None = None) -> GassnerMatrix:
    """Return the Gassner matrix of [xi], optionally written in the free basis y_i = basis[i-1]"""
    return _gassner(xi, tuple(basis) if basis is not None else None)


@lru_cache(maxsize=256)
def _gassner(xi: PureBraidWord | BraidWord, basis: Basis | None) -> GassnerMatrix:
    auto = artin_automorphism(xi)
    size = auto.rank
    identity = [[int(i == j) for j in range(size)] for i in range(size)]
    if auto.abelian_matrix() != identity:
        raise DomainError(f'{xi} is not a pure braid')
    if basis is not None:
        auto = change_basis(auto, basis)
    return GassnerMatrix(size, tuple(tuple(fox_jacobian(image)) for image in auto.images))


def alexander_matrix(spec: ArrangementSpec, basis: Sequence[FreeWord] | None = None) -> AlexMatrix:
    """Return the presentation matrix of the Alexander module of [spec]"""
    n, xi = spec.resolve()
    return _alexander_matrix(n, xi, tuple(basis) if basis is not None else None)


@lru_cache(maxsize=64)
def _alexander_matrix(n: int, xi: PureBraidWord, basis: Basis | None) -> AlexMatrix:
    theta = gassner(xi ** 2, basis)
    fiber = LaurentPoly.variable(n, n)
    entries = []
    for i in range(n - 1):
        row = [fiber * int(i == j) - theta.entries[i][j].extend(n) for j in range(n - 1)]
        row.append(1 - LaurentPoly.variable(i + 1, n))
        entries.append(tuple(row))
    return AlexMatrix(n - 1, n, tuple(entries), basis)


def ek_minors(matrix: AlexMatrix, k: int) -> list[LaurentPoly]:
    """Return the (n-k) x (n-k) minors of [matrix], generating the ideal E_k"""
    n = matrix.cols
    if not 1 <= k <= n:
        raise DomainError(f'Ideal index k={k} out of range 1..{n}')
    if k == n:
        return [LaurentPoly.one(n)]
    return list(matrix.minor_cache().minors(n - k))


def alexander_poly(spec: ArrangementSpec, basis: Sequence[FreeWord] | None = None) -> LaurentPoly:
    """Return Delta_A = det(t_n id - Theta(xi^2)) / (t_n - 1), up to units"""
    if isinstance(spec, Cable):
        if basis is not None:
            raise DomainError(f'{spec} has no combed braid to change the basis of')
        return normalize_unit(substitute(link_alexander_poly(spec), MonomialSubstitution.fiber(spec.n)))
    n = spec.n
    if n < 2:
        raise DomainError(f'The Alexander polynomial needs at least two planes, {spec} has {n}')
    matrix = alexander_matrix(spec, basis)
    square = matrix.minor_cache().minor(tuple(range(n - 1)), tuple(range(n - 1)))
    return normalize_unit(square.exact_divide(LaurentPoly.variable(n, n) - 1))


def link_alexander_poly(spec: ArrangementSpec) -> LaurentPoly:
    """Return the Alexander polynomial of the link of [spec] in meridian
    coordinates, t_n -> t_1...t_n applied to Delta_A, with the lines
    reoriented back to those of [spec] when its top plane was rotated"""
    if isinstance(spec, Cable):
        base = link_alexander_poly(spec.base)
        poly, _ = iterated_cable(base, spec.component, spec.sign, spec.r, spec.base.component_linking(spec.component))
        return poly
    n = spec.n
    if n == 1:
        return LaurentPoly.one(1)
    poly = substitute(alexander_poly(spec), MonomialSubstitution.meridian(n))
    if reversed_lines := spec.reversed_lines():
        poly = substitute(poly, MonomialSubstitution.reorient(n, reversed_lines))
    return normalize_unit(poly)


def single_var_poly(spec: ArrangementSpec) -> LaurentPoly:
    """Return Delta_A(t) = (t-1) Delta_L(t, ..., t), which may vanish"""
    n = spec.n
    if n == 1:
        return LaurentPoly.one(1)
    diagonal = substitute(link_alexander_poly(spec), MonomialSubstitution.diagonal(n))
    poly = (LaurentPoly.variable(1, 1) - 1) * diagonal
    return poly if poly.is_zero else normalize_unit(poly)


def delta(spec: ArrangementSpec) -> int:
    """Return 1 if Delta_A(t) vanishes at t = -1, 0 otherwise"""
    return int(single_var_poly(spec).evaluate([-1]) == 0)


def artin_alexander_matrix(beta: BraidWord) -> list[list[LaurentPoly]]:
    """Return the Fox Jacobian of the relators beta(x_i) x_i^-1 of the
    closure of the pure braid [beta]"""
    auto = artin_automorphism(beta)
    n = beta.strands
    if auto.abelian_matrix() != [[int(i == j) for j in range(n)] for i in range(n)]:
        raise DomainError(f'{beta} is not a pure braid')
    rows = []
    for i, image in enumerate(auto.images):
        rows.append([entry - int(i == j) for j, entry in enumerate(fox_jacobian(image))])
    return rows


def artin_link_poly(beta: BraidWord, column: int | None = None) -> LaurentPoly:
    """Return the Alexander polynomial of the closure of [beta]: the last row
    and the given [column] are deleted, and the minor is divided by t_column - 1"""
    n = beta.strands
    if n == 1:
        return LaurentPoly.one(1)
    column = column or n
    if not 1 <= column <= n:
        raise DomainError(f'Column {column} out of range 1..{n}')
    jacobian = artin_alexander_matrix(beta)
    cols = tuple(j for j in range(n) if j != column - 1)
    cache = MinorCache(jacobian, LaurentPoly.one(n), lambda entry: entry.is_zero)
    minor = cache.minor(tuple(range(n - 1)), cols)
    return normalize_unit(minor.exact_divide(LaurentPoly.variable(column, n) - 1))
