from __future__ import annotations
"""
Normal forms of arrangements of depth at most two. An arrangement in normal
form A(I_1, ..., I_r, J) has negative blocks I_1 < ... < I_r of nondecreasing
sizes at least two, followed by one positive block J. Provides:
- NormalFormD2 and depth2_normal_form, which reduces a permutation
- sigma_lists and bottom_components_d2, the components of V_(n-2)
- normal_form_basis, the adapted free basis these components are written in
- enumerate_normal_forms and count_d2_classes
- the closed forms depth2_alexander_poly and depth2_tors
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from src.algebra.laurent import LaurentPoly, product
from src.arrangements.permutations import (Permutation, blocks, contract_blocks, mirror_perm, perm_depth, top_move,
                                           validate_perm)
from src.braids.free_word import FreeWord
from src.errors import DomainError
from src.invariants.subtorus import Subtorus
from src.utils.math_utils import format_multiset, partition_number


@dataclass(frozen=True, slots=True)
class NormalFormD2:
    """Sizes |I_1| <= ... <= |I_r| of the negative blocks and size |J| of the
    positive block. r = 0 stands for the complex arrangement A_n"""
    negative: tuple[int, ...]
    positive: int

    def __post_init__(self) -> None:
        if self.positive < 1 or any(size < 2 for size in self.negative):
            raise DomainError(f'Invalid block sizes {self.negative}, {self.positive}')
        if list(self.negative) != sorted(self.negative):
            raise DomainError(f'Negative block sizes {self.negative} must be nondecreasing')
        if len(self.negative) == 1 and self.negative[0] > self.positive:
            raise DomainError(f'A single negative block of size {self.negative[0]} cannot exceed |J|={self.positive}')

    @property
    def n(self) -> int:
        return self.positive + sum(self.negative)

    @property
    def r(self) -> int:
        return len(self.negative)

    @property
    def depth(self) -> int:
        if self.n == 1:
            return 0
        return 1 if not self.r else 2

    def negative_blocks(self) -> list[tuple[int, ...]]:
        """Return the index sets I_1, ..., I_r"""
        result, start = [], 1
        for size in self.negative:
            result.append(tuple(range(start, start + size)))
            start += size
        return result

    def positive_block(self) -> tuple[int, ...]:
        return tuple(range(self.n - self.positive + 1, self.n + 1))

    @property
    def permutation(self) -> Permutation:
        """Return the permutation of A(I_1, ..., I_r, J)"""
        values: list[int] = []
        for block in self.negative_blocks():
            values.extend(reversed(block))
        return tuple(values) + self.positive_block()

    def format(self) -> str:
        sizes = ','.join(str(size) for size in self.negative)
        return f'S={{{sizes}}}, |J|={self.positive}'

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True, slots=True)
class SigmaLists:
    """Codimensions of the components of V_(n-2): those through 1 and all of them"""
    sigma1: tuple[int, ...]
    sigma: tuple[int, ...]

    def format(self) -> str:
        return format_multiset(list(self.sigma))

    def __str__(self) -> str:
        return self.format()


def _identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def _candidates(perm: Permutation) -> list[Permutation]:
    moved = top_move(perm)
    result: list[Permutation] = []
    for candidate in (perm, mirror_perm(perm), moved, mirror_perm(moved)):
        if candidate not in result:
            result.append(candidate)
    return result


def depth2_normal_form(perm: Sequence[int]) -> NormalFormD2:
    """Return the normal form of A([perm]), trying the permutation, its mirror
    and their top moves until one contracts to an increasing permutation"""
    perm = validate_perm(perm)
    n = len(perm)
    for candidate in _candidates(perm):
        if candidate == _identity(n):
            return NormalFormD2((), n)
        contracted = contract_blocks(candidate)
        if contracted == candidate or contracted != _identity(len(contracted)):
            continue
        sizes = sorted(len(block) for block in blocks(candidate) if len(block) > 1 and block[0] > block[1])
        positive = n - sum(sizes)
        if not positive:
            continue
        if len(sizes) == 1 and sizes[0] > positive:
            if positive == 1:
                return NormalFormD2((), n)
            sizes, positive = [positive], sizes[0]
        return NormalFormD2(tuple(sizes), positive)
    raise DomainError(f'A{tuple(perm)} does not have depth at most two at the permutation level')


def arrangement_depth(perm: Sequence[int]) -> int | None:
    """Return the depth of A([perm]) when it has a normal form, else the number
    of contraction rounds of the permutation itself"""
    try:
        return depth2_normal_form(perm).depth
    except DomainError:
        return perm_depth(perm)


def sigma_lists(nf: NormalFormD2) -> SigmaLists:
    """Return the codimension lists of the components of V_(n-2)"""
    n = nf.n
    if n <= 2:
        return SigmaLists((0,), (0,))
    sigma1 = [n + 1 - size for size in nf.negative]
    if nf.positive > 1:
        sigma1.append(n + 1 - nf.positive)
    extra = [nf.r + 1 + sum(nf.negative[p] - 1 for p in range(nf.r) if p not in chosen)
             for chosen in _nonempty_subsets(nf.r)]
    return SigmaLists(tuple(sorted(sigma1)), tuple(sorted(sigma1 + extra)))


def expected_lengths(nf: NormalFormD2) -> tuple[int, int]:
    """Return the lengths d_1 = r + e_J + 1 and d = 2^r + r + e_J of the
    codimension lists, e_J being 0 when |J| > 1 and -1 otherwise"""
    epsilon = 0 if nf.positive > 1 else -1
    return nf.r + epsilon + 1, 2 ** nf.r + nf.r + epsilon


def _nonempty_subsets(r: int) -> Iterator[frozenset[int]]:
    for size in range(1, r + 1):
        for chosen in itertools.combinations(range(r), size):
            yield frozenset(chosen)


def bottom_components_d2(nf: NormalFormD2) -> list[Subtorus]:
    """Return the components of V_(n-2), written in normal_form_basis(nf)"""
    n = nf.n
    if n <= 2:
        return []
    everything = set(range(1, n + 1))
    blocks_ = nf.negative_blocks()
    components = []
    for block in blocks_:
        components.append(Subtorus.coordinate((everything - set(block)) | {max(block)}, (), n))
    if nf.positive > 1:
        positive = nf.positive_block()
        components.append(Subtorus.coordinate((everything - set(positive)) | {n}, (), n))
    for chosen in _nonempty_subsets(nf.r):
        ones = {n}.union(*(blocks_[p] for p in range(nf.r) if p not in chosen))
        minus_ones = {max(blocks_[p]) for p in chosen}
        components.append(Subtorus.coordinate(ones, minus_ones, n))
    return components


def normal_form_basis(nf: NormalFormD2) -> tuple[FreeWord, ...]:
    """Return the basis y_i = x_i, except y_(max I_p) = product of x_i over I_p"""
    rank = nf.n - 1
    basis = [FreeWord.generator(i, rank) for i in range(1, rank + 1)]
    for block in nf.negative_blocks():
        basis[max(block) - 1] = FreeWord.product_of(block, rank)
    return tuple(basis)


def enumerate_normal_forms(n: int) -> list[NormalFormD2]:
    """Return every normal form of depth at most two on [n] planes"""
    if n < 1:
        raise DomainError(f'Cannot enumerate arrangements of {n} planes')
    result = [NormalFormD2((), n)]

    def extend(prefix: tuple[int, ...], smallest: int, remaining: int) -> None:
        for size in range(smallest, remaining):
            sizes = prefix + (size,)
            positive = remaining - size
            if len(sizes) > 1 or size <= positive:
                result.append(NormalFormD2(sizes, positive))
            extend(sizes, size, positive)

    extend((), 2, n)
    return result


def count_d2_classes(n: int) -> int:
    """Return p(n-1) - floor((n-1)/2), the number of homotopy types of
    arrangements of [n] planes of depth at most two"""
    if n < 1:
        raise DomainError(f'Cannot count arrangements of {n} planes')
    return partition_number(n - 1) - (n - 1) // 2


def depth2_alexander_poly(nf: NormalFormD2) -> LaurentPoly:
    """Return (t_n - 1)^(|J|+r-2) times the product of (t_n - t_k^2)^(|I_q|-1),
    k = max I_q, the Alexander polynomial in normal_form_basis(nf)"""
    n = nf.n
    if n < 2:
        raise DomainError('The Alexander polynomial needs at least two planes')
    fiber = LaurentPoly.variable(n, n)
    factors = [(fiber - 1) ** (nf.positive + nf.r - 2)]
    for block in nf.negative_blocks():
        factors.append((fiber - LaurentPoly.variable(max(block), n) ** 2) ** (len(block) - 1))
    return product(factors, n)


def depth2_tors(nf: NormalFormD2, p: int) -> int:
    """Return Tors_(p,1) of the normal form: 2^(n-1) for p = 2 and
    p^(n-r-1) (p^(r+1) - (p-1)^(r+1)) for odd p"""
    n, r = nf.n, nf.r
    if n <= 2:
        return n - 1
    if p == 2:
        return 2 ** (n - 1)
    return p ** (n - r - 1) * (p ** (r + 1) - (p - 1) ** (r + 1))
