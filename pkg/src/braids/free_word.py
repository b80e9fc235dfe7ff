from __future__ import annotations
"""
Words in free groups and their automorphisms. Provides:
- FreeWord, always stored freely reduced
- FreeAutomorphism, given by the images of the generators
- fox_derivative_ab and fox_jacobian, the abelianized free differential calculus
- change_basis, which rewrites an automorphism in a new free basis
"""

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from sympy import Matrix

from src.algebra.laurent import LaurentPoly
from src.errors import DomainError, ParseError

Letter = tuple[int, int]


def _reduce(letters: Sequence[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for gen, exp in letters:
        if stack and stack[-1] == (gen, -exp):
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True, slots=True)
class FreeWord:
    """Freely reduced word in the generators x_1..x_rank of a free group"""
    rank: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        for gen, exp in self.letters:
            if not 1 <= gen <= self.rank or exp not in (1, -1):
                raise DomainError(f'Invalid letter {(gen, exp)} in a free group of rank {self.rank}')
        object.__setattr__(self, 'letters', _reduce(self.letters))

    @staticmethod
    def identity(rank: int) -> FreeWord:
        return FreeWord(rank)

    @staticmethod
    def generator(index: int, rank: int) -> FreeWord:
        """Return the generator x_[index]"""
        return FreeWord(rank, ((index, 1),))

    @staticmethod
    def product_of(indices: Sequence[int], rank: int) -> FreeWord:
        """Return x_i1 x_i2 ... for the given [indices]"""
        return FreeWord(rank, tuple((i, 1) for i in indices))

    @staticmethod
    def parse(text: str, rank: int, symbol: str = 'x') -> FreeWord:
        """Parse words like 'x1 x2 x1^-1' or 'y2*y1*y2^-1'; '1' is the identity"""
        letters: list[Letter] = []
        position = 0
        pattern = re.compile(rf'\s*\*?\s*{symbol}(\d+)(?:\^(-?\d+))?')
        stripped = text.strip()
        if stripped in ('', '1'):
            return FreeWord(rank)
        while position < len(text):
            if not text[position:].strip():
                break
            match = pattern.match(text, position)
            if match is None:
                raise ParseError(f'Expected a letter {symbol}<i>', text, position)
            index = int(match.group(1))
            power = int(match.group(2) or 1)
            if not 1 <= index <= rank:
                raise ParseError(f'Generator {symbol}{index} out of range 1..{rank}', text, match.start(1))
            letters.extend([(index, 1 if power > 0 else -1)] * abs(power))
            position = match.end()
        return FreeWord(rank, tuple(letters))

    def __mul__(self, other: FreeWord) -> FreeWord:
        if self.rank != other.rank:
            raise DomainError(f'Cannot multiply words of ranks {self.rank} and {other.rank}')
        return FreeWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeWord:
        return FreeWord(self.rank, tuple((gen, -exp) for gen, exp in reversed(self.letters)))

    def __invert__(self) -> FreeWord:
        return self.inverse()

    def __pow__(self, exponent: int) -> FreeWord:
        base = self if exponent >= 0 else self.inverse()
        return FreeWord(self.rank, base.letters * abs(exponent))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def abelianize(self) -> tuple[int, ...]:
        """Return the exponent sum of each generator"""
        exps = [0] * self.rank
        for gen, exp in self.letters:
            exps[gen - 1] += exp
        return tuple(exps)

    def substitute(self, images: Sequence[FreeWord]) -> FreeWord:
        """Return the image of this word under x_i -> images[i-1]"""
        if len(images) != self.rank:
            raise DomainError(f'Expected {self.rank} images, got {len(images)}')
        target = images[0].rank if images else 0
        letters: list[Letter] = []
        inverses: dict[int, tuple[Letter, ...]] = {}
        for gen, exp in self.letters:
            if exp > 0:
                letters.extend(images[gen - 1].letters)
            else:
                if gen not in inverses:
                    inverses[gen] = images[gen - 1].inverse().letters
                letters.extend(inverses[gen])
        return FreeWord(target, tuple(letters))

    def format(self, symbol: str = 'x') -> str:
        if not self.letters:
            return '1'
        return ' '.join(f'{symbol}{gen}' if exp == 1 else f'{symbol}{gen}^-1' for gen, exp in self.letters)

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True, slots=True)
class FreeAutomorphism:
    """Endomorphism of the free group of the given rank, x_i -> images[i-1]"""
    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank or any(image.rank != self.rank for image in self.images):
            raise DomainError(f'An automorphism of rank {self.rank} needs {self.rank} images of that rank')

    @staticmethod
    def identity(rank: int) -> FreeAutomorphism:
        return FreeAutomorphism(rank, tuple(FreeWord.generator(i, rank) for i in range(1, rank + 1)))

    def apply(self, word: FreeWord) -> FreeWord:
        """Return the image of the given [word]"""
        if word.rank != self.rank:
            raise DomainError(f'Cannot apply an automorphism of rank {self.rank} to a word of rank {word.rank}')
        return word.substitute(self.images)

    def then(self, other: FreeAutomorphism) -> FreeAutomorphism:
        """Return the automorphism applying self first, then [other]"""
        return FreeAutomorphism(self.rank, tuple(other.apply(image) for image in self.images))

    def abelian_matrix(self) -> list[list[int]]:
        """Return the matrix whose i-th row is the abelianized image of x_i"""
        return [list(image.abelianize()) for image in self.images]

    def format(self, symbol: str = 'x') -> str:
        return ', '.join(f'{symbol}{i} -> {image.format(symbol)}' for i, image in enumerate(self.images, start=1))

    def __str__(self) -> str:
        return self.format()


def fox_jacobian(word: FreeWord) -> list[LaurentPoly]:
    """Return the abelianized Fox derivatives of [word] with respect to every
    generator, computed in a single pass over the letters"""
    rank = word.rank
    derivatives: list[dict[tuple[int, ...], int]] = [{} for _ in range(rank)]
    prefix = [0] * rank
    for gen, exp in word.letters:
        if exp > 0:
            key = tuple(prefix)
            derivatives[gen - 1][key] = derivatives[gen - 1].get(key, 0) + 1
            prefix[gen - 1] += 1
        else:
            prefix[gen - 1] -= 1
            key = tuple(prefix)
            derivatives[gen - 1][key] = derivatives[gen - 1].get(key, 0) - 1
    return [LaurentPoly(rank, terms) for terms in derivatives]


def fox_derivative_ab(word: FreeWord, j: int) -> LaurentPoly:
    """Return the abelianized Fox derivative of [word] with respect to x_[j]"""
    if not 1 <= j <= word.rank:
        raise DomainError(f'Generator index {j} out of range 1..{word.rank}')
    return fox_jacobian(word)[j - 1]


def invert_basis(basis: Sequence[FreeWord]) -> tuple[FreeWord, ...]:
    """Return the words v_k in the letters y_i such that x_k = v_k(y), where
    y_i = basis[i-1]. The basis is Nielsen-reduced to the standard generators,
    keeping track of each current element as a word in the y-letters"""
    rank = len(basis)
    if any(word.rank != rank for word in basis):
        raise DomainError(f'A basis of a free group of rank {rank} needs {rank} words of that rank')
    matrix = Matrix([list(word.abelianize()) for word in basis]) if rank else Matrix()
    if rank and abs(matrix.det()) != 1:
        raise DomainError(f'{[str(w) for w in basis]} is not a free basis (abelianization not unimodular)')

    current = list(basis)
    tracked = [FreeWord.generator(i, rank) for i in range(1, rank + 1)]
    improved = True
    while improved:
        improved = False
        for i in range(rank):
            for j in range(rank):
                if i == j:
                    continue
                for exp in (1, -1):
                    other, other_tracked = current[j] ** exp, tracked[j] ** exp
                    for candidate, candidate_tracked in ((current[i] * other, tracked[i] * other_tracked),
                                                         (other * current[i], other_tracked * tracked[i])):
                        if len(candidate) < len(current[i]):
                            current[i], tracked[i] = candidate, candidate_tracked
                            improved = True

    inverse: list[FreeWord | None] = [None] * rank
    for word, expression in zip(current, tracked):
        if len(word) != 1:
            raise DomainError(f'{[str(w) for w in basis]} is not a free basis (Nielsen reduction stalled)')
        (gen, exp), = word.letters
        inverse[gen - 1] = expression if exp > 0 else expression.inverse()
    if any(word is None for word in inverse):
        raise DomainError(f'{[str(w) for w in basis]} is not a free basis')
    return tuple(inverse)


def change_basis(auto: FreeAutomorphism, basis: Sequence[FreeWord]) -> FreeAutomorphism:
    """Return [auto] written in the basis y_i = basis[i-1]: the i-th image is
    auto(y_i) expressed as a word in the y-letters"""
    if len(basis) != auto.rank:
        raise DomainError(f'A basis for rank {auto.rank} needs {auto.rank} words, got {len(basis)}')
    inverse = invert_basis(basis)
    return FreeAutomorphism(auto.rank, tuple(auto.apply(word).substitute(inverse) for word in basis))
