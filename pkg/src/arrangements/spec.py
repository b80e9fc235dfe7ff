from __future__ import annotations
"""
Descriptions of 2-arrangements. Provides:
- an ArrangementSpec abstract base class resolving to (n, xi)
- the Horizontal, XiWord, Catalog and Cable specs
- a parse_spec function reading the text grammar, with one parser per
  prefix registered through the register decorator
"""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable

from src.arrangements.permutations import (Matrix, Permutation, format_perm, linking_matrix, parse_perm,
                                           reversed_lines, validate_perm)
from src.braids.braid_word import PureBraidWord
from src.braids.constructions import xi_braid
from src.errors import DomainError, ParseError

LinkingRows = tuple[tuple[int, ...], ...]


class ArrangementSpec(ABC):
    """Combinatorial description of an arrangement of n planes"""

    @property
    @abstractmethod
    def n(self) -> int:
        """Return the number of planes"""
        pass

    @abstractmethod
    def resolve(self) -> tuple[int, PureBraidWord]:
        """Return n and the pure braid xi on n-1 strands"""
        pass

    @abstractmethod
    def linking(self) -> Matrix | None:
        """Return the linking matrix of the lines, or None when unknown"""
        pass

    @abstractmethod
    def text(self) -> str:
        """Return the spec in the text grammar read by parse_spec"""
        pass

    def reversed_lines(self) -> tuple[int, ...]:
        """Return the lines whose orientation is reversed between the combed
        braid returned by resolve and the arrangement itself"""
        return ()

    def component_linking(self, component: int) -> tuple[int, ...]:
        """Return the linking numbers of [component] with the other lines, in
        increasing order of the other labels. Without a linking matrix only the
        top line, which links every other line positively, is known"""
        if not 1 <= component <= self.n:
            raise DomainError(f'Component {component} out of range 1..{self.n} for {self.text()}')
        matrix = self.linking()
        if matrix is None:
            if component != self.n:
                raise DomainError(f'The linking numbers of component {component} of {self.text()} are unknown')
            return (1,) * (self.n - 1)
        return tuple(value for j, value in enumerate(matrix[component - 1], start=1) if j != component)

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class Horizontal(ArrangementSpec):
    """Horizontal arrangement A(tau)"""
    perm: Permutation

    def __post_init__(self) -> None:
        object.__setattr__(self, 'perm', validate_perm(self.perm))

    @property
    def n(self) -> int:
        return len(self.perm)

    def resolve(self) -> tuple[int, PureBraidWord]:
        return self.n, xi_braid(self.perm)

    def reversed_lines(self) -> tuple[int, ...]:
        return reversed_lines(self.perm)

    def linking(self) -> Matrix:
        return linking_matrix(self.perm)

    def text(self) -> str:
        return 'perm:' + format_perm(self.perm).strip('()')


@dataclass(frozen=True)
class XiWord(ArrangementSpec):
    """Arrangement given by its combed pure braid on n-1 strands"""
    xi: PureBraidWord
    planes: int
    links: LinkingRows | None = None

    def __post_init__(self) -> None:
        if self.xi.strands != max(self.planes - 1, 0):
            raise DomainError(f'An arrangement of {self.planes} planes needs a braid on {self.planes - 1} strands')

    @staticmethod
    def from_negative_pairs(xi: PureBraidWord, planes: int, pairs: list[list[int]]) -> XiWord:
        """Return the spec whose linking numbers are +1 except on the given [pairs]"""
        negative = {frozenset(pair) for pair in pairs}
        rows = tuple(tuple(0 if i == j else (-1 if frozenset((i, j)) in negative else 1)
                           for j in range(1, planes + 1)) for i in range(1, planes + 1))
        return XiWord(xi, planes, rows)

    @property
    def n(self) -> int:
        return self.planes

    def resolve(self) -> tuple[int, PureBraidWord]:
        return self.planes, self.xi

    def linking(self) -> Matrix | None:
        return [list(row) for row in self.links] if self.links is not None else None

    def text(self) -> str:
        return f'xi:n={self.planes};{self.xi.format().replace(" ", "")}'


@dataclass(frozen=True)
class Catalog(ArrangementSpec):
    """Named arrangement of the catalog"""
    name: str

    @property
    def target(self) -> ArrangementSpec:
        from src.arrangements.catalog import catalog
        return catalog(self.name)

    @property
    def n(self) -> int:
        return self.target.n

    def resolve(self) -> tuple[int, PureBraidWord]:
        return self.target.resolve()

    def reversed_lines(self) -> tuple[int, ...]:
        return self.target.reversed_lines()

    def linking(self) -> Matrix | None:
        return self.target.linking()

    def text(self) -> str:
        return f'cat:{self.name}'


@dataclass(frozen=True)
class Cable(ArrangementSpec):
    """The r-cable of sign [sign] about the line [component] of [base]. Its
    lines are the other lines of [base] in order, then [component], then the
    r new lines"""
    base: ArrangementSpec
    component: int
    sign: int = 1
    r: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1) or self.r < 1:
            raise DomainError(f'Invalid cable parameters sign={self.sign}, r={self.r}')
        if not 1 <= self.component <= self.base.n:
            raise DomainError(f'Component {self.component} out of range 1..{self.base.n} for {self.base}')

    @property
    def n(self) -> int:
        return self.base.n + self.r

    def resolve(self) -> tuple[int, PureBraidWord]:
        raise DomainError(f'{self.text()} has no combed braid, its invariants come from its link polynomial')

    def component_linking(self, component: int) -> tuple[int, ...]:
        if component == self.n:
            return self.base.component_linking(self.component) + (self.sign,) * self.r
        return super().component_linking(component)

    def linking(self) -> Matrix | None:
        base = self.base.linking()
        if base is None:
            return None
        vector = self.base.component_linking(self.component)
        others = [i for i in range(1, self.base.n + 1) if i != self.component]
        n = self.n
        matrix = [[0] * n for _ in range(n)]
        for a, i in enumerate(others):
            for b, j in enumerate(others):
                if a != b:
                    matrix[a][b] = base[i - 1][j - 1]
        for a in range(len(others)):
            for c in range(len(others), n):
                matrix[a][c] = matrix[c][a] = vector[a]
        for c in range(len(others), n):
            for d in range(len(others), n):
                if c != d:
                    matrix[c][d] = self.sign
        return matrix

    def text(self) -> str:
        sign = '+' if self.sign > 0 else '-'
        return f'cable({self.base.text()},k={self.component},sign={sign},r={self.r})'


_parsers: dict[str, Callable[[str, str, int], ArrangementSpec]] = {}


def register(prefix: str) -> Callable:
    """Register the decorated function as the parser of specs starting with [prefix]"""
    def decorator(function: Callable[[str, str, int], ArrangementSpec]) -> Callable:
        _parsers[prefix] = function
        return function
    return decorator


def parse_spec(text: str) -> ArrangementSpec:
    """Return the arrangement described by [text]"""
    return _parse(text, text.strip(), text.find(text.strip()))


def _parse(full: str, text: str, offset: int) -> ArrangementSpec:
    for prefix, parser in _parsers.items():
        if text.startswith(prefix):
            return parser(full, text[len(prefix):], offset + len(prefix))
    raise ParseError(f'Unknown spec kind, expected one of {", ".join(_parsers)}', full, offset)


@register('perm:')
def _parse_horizontal(full: str, body: str, offset: int) -> ArrangementSpec:
    try:
        return Horizontal(parse_perm(body))
    except ParseError as error:
        raise ParseError(error.args[0], full, offset + error.position) from None


_XI = re.compile(r'\s*n\s*=\s*(\d+)\s*;(.*)$')


@register('xi:')
def _parse_xi(full: str, body: str, offset: int) -> ArrangementSpec:
    match = _XI.match(body)
    if match is None:
        raise ParseError("Expected 'n=<planes>;<pure braid word>'", full, offset)
    planes = int(match.group(1))
    try:
        xi = PureBraidWord.parse(match.group(2), max(planes - 1, 0))
    except ParseError as error:
        raise ParseError(error.args[0], full, offset + match.start(2) + error.position) from None
    return XiWord(xi, planes)


@register('cat:')
def _parse_catalog(full: str, body: str, offset: int) -> ArrangementSpec:
    from src.arrangements.catalog import catalog_names, is_complex_name
    name = body.strip()
    if name not in catalog_names() and not is_complex_name(name):
        raise ParseError(f'Unknown catalog name {name!r}', full, offset)
    return Catalog(name)


_OPTION = re.compile(r',\s*(k|sign|r)\s*=\s*([+-]?\d*)\s*$')


@register('cable(')
def _parse_cable(full: str, body: str, offset: int) -> ArrangementSpec:
    if not body.rstrip().endswith(')'):
        raise ParseError('Missing closing parenthesis', full, offset + len(body))
    inner = body.rstrip()[:-1]
    options: dict[str, str] = {}
    while (match := _OPTION.search(inner)) is not None:
        key, value = match.groups()
        if key in options:
            raise ParseError(f'Duplicate option {key}', full, offset + match.start(1))
        options[key] = value
        inner = inner[:match.start()]
    base = _parse(full, inner.strip(), offset + len(inner) - len(inner.lstrip()))
    try:
        component = int(options.get('k', base.n))
        sign = {'+': 1, '+1': 1, '1': 1, '-': -1, '-1': -1}[options.get('sign', '+')]
        r = int(options.get('r', 1))
    except (KeyError, ValueError):
        raise ParseError('Invalid cable option, expected k=<int>, sign=+|- and r=<int>', full, offset) from None
    try:
        return Cable(base, component, sign, r)
    except DomainError as error:
        raise ParseError(str(error), full, offset) from None
