from __future__ import annotations
"""
Exact multivariate Laurent polynomials over the integers. Provides:
- the LaurentPoly value type with ring operations and exact division
- normalize_unit to pick a canonical representative up to unit monomials
- a small text grammar used by tests, catalog files and the CLI
"""

import re
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Mapping, Sequence

from src.errors import ComputationError, DomainError, ParseError

Exponents = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class LaurentPoly:
    """Element of Z[t_1^±1, ..., t_n^±1], stored as a map from exponent
    vectors to nonzero integer coefficients"""
    nvars: int
    terms: Mapping[Exponents, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned = {}
        for exps, coeff in self.terms.items():
            if len(exps) != self.nvars:
                raise DomainError(f'Cannot store exponent vector {exps} in a ring with {self.nvars} variables')
            if coeff:
                cleaned[tuple(exps)] = coeff
        object.__setattr__(self, 'terms', cleaned)

    @staticmethod
    def zero(nvars: int) -> LaurentPoly:
        return LaurentPoly(nvars)

    @staticmethod
    def constant(value: int, nvars: int) -> LaurentPoly:
        """Return the constant polynomial [value] in [nvars] variables"""
        return LaurentPoly(nvars, {(0,) * nvars: value})

    @staticmethod
    def one(nvars: int) -> LaurentPoly:
        return LaurentPoly.constant(1, nvars)

    @staticmethod
    def monomial(exps: Sequence[int], coeff: int = 1) -> LaurentPoly:
        """Return coeff * t^exps"""
        return LaurentPoly(len(exps), {tuple(exps): coeff})

    @staticmethod
    def variable(index: int, nvars: int) -> LaurentPoly:
        """Return the variable t_[index] (1-based)"""
        if not 1 <= index <= nvars:
            raise DomainError(f'Variable index {index} out of range 1..{nvars}')
        exps = [0] * nvars
        exps[index - 1] = 1
        return LaurentPoly.monomial(exps)

    @staticmethod
    def from_json(data: list[dict[str, Any]], nvars: int) -> LaurentPoly:
        """Return the polynomial described by a list of {exps, coeff} records"""
        return LaurentPoly(nvars, {tuple(item['exps']): int(item['coeff']) for item in data})

    @staticmethod
    def parse(text: str, nvars: int, symbol: str = 't') -> LaurentPoly:
        """Parse expressions like '(t4-1)*(t4-t2^2)' or '3*t1^-1*t2 + 1'"""
        return _Parser(text, nvars, symbol).parse()

    # Ring structure

    def _coerce(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.nvars)
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise DomainError(f'Cannot combine polynomials in {self.nvars} and {other.nvars} variables')
            return other
        return NotImplemented

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return LaurentPoly(self.nvars, terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.nvars, {exps: -coeff for exps, coeff in self.terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: int) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                terms[exps] = terms.get(exps, 0) + c1 * c2
        return LaurentPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> LaurentPoly:
        if exponent < 0:
            if not self.is_monomial:
                raise DomainError(f'Cannot invert the non-monomial {self}')
            (exps, coeff), = self.terms.items()
            if coeff not in (1, -1):
                raise DomainError(f'Cannot invert the non-unit {self}')
            return LaurentPoly.monomial([-e * -exponent for e in exps], coeff ** -exponent)
        result = LaurentPoly.one(self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __len__(self) -> int:
        """Return the number of terms"""
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[Exponents, int]]:
        """Iterate over (exponents, coefficient) pairs in canonical order"""
        for exps in sorted(self.terms, reverse=True):
            yield exps, self.terms[exps]

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_unit(self) -> bool:
        """Return True if the polynomial is ±t^a"""
        return self.is_monomial and next(iter(self.terms.values())) in (1, -1)

    # Evaluation and variable handling

    def evaluate(self, values: Sequence[Any]) -> Any:
        """Evaluate at the given [values], which may be integers, fractions or
        complex numbers. Negative exponents need invertible values"""
        total = 0
        for exps, coeff in self.terms.items():
            term = coeff
            for value, e in zip(values, exps):
                if e:
                    term = term * value ** e
            total = total + term
        return total

    def extend(self, nvars: int) -> LaurentPoly:
        """Return the same polynomial seen in a ring with more variables"""
        padding = (0,) * (nvars - self.nvars)
        return LaurentPoly(nvars, {exps + padding: coeff for exps, coeff in self.terms.items()})

    def degree_bounds(self) -> list[tuple[int, int]]:
        """Return (min, max) exponent of each variable"""
        if self.is_zero:
            return [(0, 0)] * self.nvars
        columns = list(zip(*self.terms))
        return [(min(column), max(column)) for column in columns]

    def shift(self, exps: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial t^exps"""
        return LaurentPoly(self.nvars, {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()})

    def exact_divide(self, divisor: LaurentPoly) -> LaurentPoly:
        """Return the quotient of this polynomial by [divisor]. The division
        must be exact, otherwise a ComputationError is raised"""
        if divisor.is_zero:
            raise ComputationError('Division by the zero polynomial')
        if self.is_zero:
            return LaurentPoly.zero(self.nvars)

        lead = max(divisor.terms)
        lead_coeff = divisor.terms[lead]

        # Exponents of an exact quotient live in this box
        bounds = [(fmin - gmax, fmax - gmin) for (fmin, fmax), (gmin, gmax)
                  in zip(self.degree_bounds(), divisor.degree_bounds())]

        remainder = dict(self.terms)
        quotient: dict[Exponents, int] = {}
        while remainder:
            top = max(remainder)
            coeff, rest = divmod(remainder[top], lead_coeff)
            exps = tuple(a - b for a, b in zip(top, lead))
            if rest or any(not low <= e <= high for e, (low, high) in zip(exps, bounds)):
                raise ComputationError(f'{divisor} does not divide {self}')
            quotient[exps] = coeff
            for dexps, dcoeff in divisor.terms.items():
                key = tuple(a + b for a, b in zip(exps, dexps))
                value = remainder.get(key, 0) - coeff * dcoeff
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return LaurentPoly(self.nvars, quotient)

    # Text and JSON

    def to_json(self) -> list[dict[str, Any]]:
        return [{'exps': list(exps), 'coeff': coeff} for exps, coeff in self]

    def format(self, symbol: str = 't') -> str:
        """Return the canonical text form, terms in decreasing lexicographic order"""
        if self.is_zero:
            return '0'
        text = ''
        for exps, coeff in self:
            factors = [f'{symbol}{i}' if e == 1 else f'{symbol}{i}^{e}'
                       for i, e in enumerate(exps, start=1) if e]
            magnitude = abs(coeff)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = '*'.join(factors)
            else:
                body = '*'.join([str(magnitude)] + factors)
            sign = '-' if coeff < 0 else '+'
            text += f'{sign}{body}' if not text else f' {sign} {body}'
        return text.lstrip('+')

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f'LaurentPoly({self.nvars}, {self.format()!r})'


def normalize_unit(poly: LaurentPoly) -> LaurentPoly:
    """Return the representative of [poly] up to units: every variable has
    minimal exponent 0 and the lexicographically smallest exponent vector has
    a positive coefficient"""
    if poly.is_zero:
        raise DomainError('Cannot normalize the zero polynomial')
    lows = [low for low, _ in poly.degree_bounds()]
    shifted = poly.shift([-low for low in lows])
    if shifted.terms[min(shifted.terms)] < 0:
        shifted = -shifted
    return shifted


def equal_up_to_unit(first: LaurentPoly, second: LaurentPoly) -> bool:
    if first.is_zero or second.is_zero:
        return first.is_zero and second.is_zero
    return normalize_unit(first) == normalize_unit(second)


def product(factors: Iterable[LaurentPoly], nvars: int) -> LaurentPoly:
    result = LaurentPoly.one(nvars)
    for factor in factors:
        result = result * factor
    return result


_TOKEN = re.compile(r'\s*(?:(\d+)|([A-Za-z]+)(\d+)|(\^-?\d+)|(.))')


class _Parser:
    """Recursive-descent parser for sums of products of powers"""

    def __init__(self, text: str, nvars: int, symbol: str) -> None:
        self.text = text
        self.nvars = nvars
        self.symbol = symbol
        self.tokens = self._tokenize()
        self.index = 0

    def _tokenize(self) -> list[tuple[str, Any, int]]:
        tokens = []
        position = 0
        while position < len(self.text):
            match = _TOKEN.match(self.text, position)
            if match is None or match.end() == position:
                break
            start = position + len(match.group(0)) - len(match.group(0).lstrip())
            number, name, index, power, char = match.groups()
            if number is not None:
                tokens.append(('int', int(number), start))
            elif name is not None:
                if name != self.symbol:
                    raise ParseError(f'Unknown variable {name}{index}', self.text, start)
                tokens.append(('var', int(index), start))
            elif power is not None:
                tokens.append(('pow', int(power[1:]), start))
            elif char is not None and not char.isspace():
                tokens.append(('op', char, start))
            position = match.end()
        return tokens

    def _peek(self) -> tuple[str, Any, int] | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _error(self, message: str) -> ParseError:
        token = self._peek()
        return ParseError(message, self.text, token[2] if token else len(self.text))

    def parse(self) -> LaurentPoly:
        if not self.tokens:
            raise self._error('Empty polynomial')
        result = self._sum()
        if self._peek() is not None:
            raise self._error('Unexpected token')
        return result

    def _sum(self) -> LaurentPoly:
        sign = 1
        token = self._peek()
        if token and token[0] == 'op' and token[1] in '+-':
            sign = -1 if token[1] == '-' else 1
            self.index += 1
        result = self._product() * sign
        while (token := self._peek()) and token[0] == 'op' and token[1] in '+-':
            self.index += 1
            term = self._product()
            result = result + term if token[1] == '+' else result - term
        return result

    def _product(self) -> LaurentPoly:
        result = self._power()
        while (token := self._peek()) and (token[0] == 'op' and token[1] in '*(' or token[0] in ('var', 'int')):
            if token[1] == '*':
                self.index += 1
            result = result * self._power()
        return result

    def _power(self) -> LaurentPoly:
        base = self._atom()
        token = self._peek()
        if token and token[0] == 'pow':
            self.index += 1
            return base ** token[1]
        return base

    def _atom(self) -> LaurentPoly:
        token = self._peek()
        if token is None:
            raise self._error('Unexpected end of input')
        kind, value, position = token
        self.index += 1
        if kind == 'int':
            return LaurentPoly.constant(value, self.nvars)
        if kind == 'var':
            if not 1 <= value <= self.nvars:
                raise ParseError(f'Variable index {value} out of range 1..{self.nvars}', self.text, position)
            return LaurentPoly.variable(value, self.nvars)
        if kind == 'op' and value == '(':
            inner = self._sum()
            closing = self._peek()
            if closing is None or closing[1] != ')':
                raise self._error('Missing closing parenthesis')
            self.index += 1
            return inner
        raise ParseError(f'Unexpected token {value!r}', self.text, position)
