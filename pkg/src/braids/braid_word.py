from __future__ import annotations
"""
Words in the braid group B_n and in its pure subgroup P_n. Provides:
- BraidWord, words in the Artin generators s1..s(n-1)
- PureBraidWord, words in the generators A(i,j), expanded on demand
- the text grammars `s3 s2 s1^-1` and `A(1,3) A(2,3)^-1`
"""

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from src.errors import DomainError, ParseError

Letter = tuple[int, int]
Factor = tuple[tuple[int, int], int]

_SIGMA = re.compile(r'\s*s(\d+)(?:\^(-?\d+))?')
_PURE = re.compile(r'\s*\*?\s*A\(\s*(\d+)\s*,\s*(\d+)\s*\)(?:\^(-?\d+))?')


@dataclass(frozen=True, slots=True)
class BraidWord:
    """Word in the Artin generators of the braid group on [strands] strands.
    Letters are applied from left to right"""
    strands: int
    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 0:
            raise DomainError(f'Invalid strand count {self.strands}')
        for index, exp in self.letters:
            if not 1 <= index <= self.strands - 1 or exp not in (1, -1):
                raise DomainError(f'Invalid letter s{index}^{exp} on {self.strands} strands')

    @staticmethod
    def identity(strands: int) -> BraidWord:
        return BraidWord(strands)

    @staticmethod
    def parse(text: str, strands: int) -> BraidWord:
        """Parse words like 's3 s2 s1 s3 s2 s3^-1'; '1' or '' is the identity"""
        if text.strip() in ('', '1'):
            return BraidWord(strands)
        letters: list[Letter] = []
        position = 0
        while text[position:].strip():
            match = _SIGMA.match(text, position)
            if match is None:
                raise ParseError('Expected a braid letter s<i>', text, position)
            index, power = int(match.group(1)), int(match.group(2) or 1)
            if not 1 <= index <= strands - 1:
                raise ParseError(f'Generator s{index} out of range 1..{strands - 1}', text, match.start(1))
            if power == 0:
                raise ParseError('Zero exponent', text, match.start(2))
            letters.extend([(index, 1 if power > 0 else -1)] * abs(power))
            position = match.end()
        return BraidWord(strands, tuple(letters))

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise DomainError(f'Cannot multiply braids on {self.strands} and {other.strands} strands')
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple((index, -exp) for index, exp in reversed(self.letters)))

    def __pow__(self, exponent: int) -> BraidWord:
        base = self if exponent >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(exponent))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def permutation(self) -> tuple[int, ...]:
        """Return the induced strand permutation: entry k is the final position
        of the strand starting at position k"""
        positions = list(range(1, self.strands + 1))
        for index, _ in self.letters:
            for k, position in enumerate(positions):
                if position == index:
                    positions[k] = index + 1
                elif position == index + 1:
                    positions[k] = index
        return tuple(positions)

    @property
    def is_pure(self) -> bool:
        return self.permutation() == tuple(range(1, self.strands + 1))

    def format(self) -> str:
        if not self.letters:
            return '1'
        return ' '.join(f's{index}' if exp == 1 else f's{index}^-1' for index, exp in self.letters)

    def __str__(self) -> str:
        return self.format()


def pure_generator(i: int, j: int, strands: int) -> BraidWord:
    """Return A(i,j) = s(j-1)...s(i+1) s(i)^2 s(i+1)^-1...s(j-1)^-1"""
    if not 1 <= i < j <= strands:
        raise DomainError(f'Invalid pure braid generator A({i},{j}) on {strands} strands')
    down = tuple((k, 1) for k in range(j - 1, i, -1))
    up = tuple((k, -1) for k in range(i + 1, j))
    return BraidWord(strands, down + ((i, 1), (i, 1)) + up)


@dataclass(frozen=True, slots=True)
class PureBraidWord:
    """Word in the generators A(i,j) of the pure braid group"""
    strands: int
    factors: tuple[Factor, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 0:
            raise DomainError(f'Invalid strand count {self.strands}')
        merged: list[Factor] = []
        for (i, j), exp in self.factors:
            if not 1 <= i < j <= self.strands:
                raise DomainError(f'Invalid pure braid generator A({i},{j}) on {self.strands} strands')
            if merged and merged[-1][0] == (i, j):
                total = merged.pop()[1] + exp
                if total:
                    merged.append(((i, j), total))
            elif exp:
                merged.append(((i, j), exp))
        object.__setattr__(self, 'factors', tuple(merged))

    @staticmethod
    def identity(strands: int) -> PureBraidWord:
        return PureBraidWord(strands)

    @staticmethod
    def parse(text: str, strands: int) -> PureBraidWord:
        """Parse words like 'A(1,3) A(2,3) A(4,5)^-1'; '1' or '' is the identity"""
        if text.strip() in ('', '1'):
            return PureBraidWord(strands)
        factors: list[Factor] = []
        position = 0
        while text[position:].strip():
            match = _PURE.match(text, position)
            if match is None:
                raise ParseError('Expected a pure braid factor A(i,j)', text, position)
            i, j = int(match.group(1)), int(match.group(2))
            if not 1 <= i < j <= strands:
                raise ParseError(f'Invalid generator A({i},{j}) on {strands} strands', text, match.start(1))
            factors.append(((i, j), int(match.group(3) or 1)))
            position = match.end()
        return PureBraidWord(strands, tuple(factors))

    def __mul__(self, other: PureBraidWord) -> PureBraidWord:
        if self.strands != other.strands:
            raise DomainError(f'Cannot multiply braids on {self.strands} and {other.strands} strands')
        return PureBraidWord(self.strands, self.factors + other.factors)

    def inverse(self) -> PureBraidWord:
        return PureBraidWord(self.strands, tuple((pair, -exp) for pair, exp in reversed(self.factors)))

    def __pow__(self, exponent: int) -> PureBraidWord:
        base = self if exponent >= 0 else self.inverse()
        return PureBraidWord(self.strands, base.factors * abs(exponent))

    def conjugate(self, other: PureBraidWord) -> PureBraidWord:
        """Return other^-1 * self * other"""
        return other.inverse() * self * other

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[Factor]:
        return iter(self.factors)

    def expand(self) -> BraidWord:
        """Return the same braid as a word in the Artin generators"""
        result = BraidWord(self.strands)
        for (i, j), exp in self.factors:
            result = result * pure_generator(i, j, self.strands) ** exp
        return result

    def format(self) -> str:
        if not self.factors:
            return '1'
        return ' '.join(f'A({i},{j})' if exp == 1 else f'A({i},{j})^{exp}' for (i, j), exp in self.factors)

    def __str__(self) -> str:
        return self.format()


def pure_word(pairs: Sequence[tuple[int, int]], strands: int) -> PureBraidWord:
    """Return the product of A(i,j) over the given [pairs]"""
    return PureBraidWord(strands, tuple((pair, 1) for pair in pairs))
