from __future__ import annotations
"""
Determinants and minors of small matrices over exact commutative rings
(Laurent polynomials, cyclotomic integers). Cofactor expansion is memoized
on (rows, columns) so that every minor of a matrix shares its sub-minors
"""

import itertools
from math import comb
from typing import Any, Callable, Iterator, Sequence, TypeVar

from src.errors import DomainError

T = TypeVar('T')


class MinorCache:
    """Memoized minors of a fixed rectangular [matrix]"""

    def __init__(self, matrix: Sequence[Sequence[T]], one: T, zero_test: Callable[[T], bool]) -> None:
        self.matrix = matrix
        self.one = one
        self.zero_test = zero_test
        self._cache: dict[tuple[tuple[int, ...], tuple[int, ...]], T] = {}

    def minor(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> T:
        """Return the determinant of the submatrix on the given [rows] and [cols]"""
        if len(rows) != len(cols):
            raise DomainError(f'Cannot take a minor on {len(rows)} rows and {len(cols)} columns')
        if not rows:
            return self.one
        key = (rows, cols)
        if key in self._cache:
            return self._cache[key]

        row, rest = rows[0], rows[1:]
        total = None
        for position, col in enumerate(cols):
            entry = self.matrix[row][col]
            if self.zero_test(entry):
                continue
            term = entry * self.minor(rest, cols[:position] + cols[position + 1:])
            if position % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = self.one - self.one
        self._cache[key] = total
        return total

    def minors(self, size: int) -> Iterator[T]:
        """Yield every [size] x [size] minor, rows and columns in lexicographic order"""
        nrows = len(self.matrix)
        ncols = len(self.matrix[0]) if nrows else 0
        if size < 0 or size > min(nrows, ncols) and size:
            raise DomainError(f'No {size}x{size} minors in a {nrows}x{ncols} matrix')
        for rows in itertools.combinations(range(nrows), size):
            for cols in itertools.combinations(range(ncols), size):
                yield self.minor(rows, cols)


def determinant(matrix: Sequence[Sequence[Any]], one: Any, zero_test: Callable[[Any], bool]) -> Any:
    """Return the determinant of the square [matrix]"""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise DomainError('Cannot take the determinant of a non-square matrix')
    return MinorCache(matrix, one, zero_test).minor(tuple(range(size)), tuple(range(size)))


def minor_count(nrows: int, ncols: int, size: int) -> int:
    return comb(nrows, size) * comb(ncols, size)


def mat_mul(first: Sequence[Sequence[Any]], second: Sequence[Sequence[Any]]) -> list[list[Any]]:
    """Return the product of two matrices whose entries support + and *"""
    inner = len(second)
    return [[sum((first[i][k] * second[k][j] for k in range(1, inner)), first[i][0] * second[0][j])
             for j in range(len(second[0]))] for i in range(len(first))]
