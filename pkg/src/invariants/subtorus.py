from __future__ import annotations
"""
Translated subtori of the complex torus (C*)^n cut out by monomial equations
t^a = +1 or -1, with their text grammar `t4=1 & t2=-1`, `t6=t5=t4=1` or
`t6=t4^2*t3^-2`
"""

import re
from dataclasses import dataclass
from typing import Any, Sequence

from sympy import Matrix

from src.algebra.substitution import MonomialSubstitution
from src.errors import DomainError, ParseError

Equation = tuple[tuple[int, ...], int]

_FACTOR = re.compile(r'\s*\*?\s*t(\d+)(?:\^(-?\d+))?')


@dataclass(frozen=True, slots=True)
class Subtorus:
    """Subtorus {t : t^a = sign for every (a, sign) in equations}"""
    nvars: int
    equations: tuple[Equation, ...] = ()

    def __post_init__(self) -> None:
        for exps, sign in self.equations:
            if len(exps) != self.nvars or sign not in (1, -1):
                raise DomainError(f'Invalid equation {(exps, sign)} in {self.nvars} variables')
        if self.equations and Matrix([list(exps) for exps, _ in self.equations]).rank() != len(self.equations):
            raise DomainError(f'Equations of {self} are not independent')

    @staticmethod
    def coordinate(ones: Sequence[int], minus_ones: Sequence[int], nvars: int) -> Subtorus:
        """Return T(ones) intersected with the translated torus T-bar(minus_ones),
        both given as 1-based variable indices"""
        def unit(index: int) -> tuple[int, ...]:
            return tuple(int(j == index) for j in range(1, nvars + 1))
        equations = [(unit(i), 1) for i in sorted(ones, reverse=True)]
        equations += [(unit(i), -1) for i in sorted(minus_ones, reverse=True)]
        return Subtorus(nvars, tuple(equations))

    @staticmethod
    def parse(text: str, nvars: int) -> Subtorus:
        """Parse conjunctions of (chained) monomial equations"""
        equations: list[Equation] = []
        offset = 0
        for clause in text.split('&'):
            equations.extend(_parse_clause(text, clause, offset, nvars))
            offset += len(clause) + 1
        return Subtorus(nvars, tuple(equations))

    @staticmethod
    def from_json(data: list[dict[str, Any]], nvars: int) -> Subtorus:
        return Subtorus(nvars, tuple((tuple(item['exps']), int(item['sign'])) for item in data))

    @property
    def codimension(self) -> int:
        return len(self.equations)

    @property
    def is_translated(self) -> bool:
        return any(sign < 0 for _, sign in self.equations)

    def contains(self, point: Sequence[int], p: int) -> bool:
        """Return True if the p-torsion point t_i = zeta^point_i lies on this torus"""
        for exps, sign in self.equations:
            residue = sum(a * e for a, e in zip(point, exps)) % p
            if sign > 0 and residue:
                return False
            # -1 is a p-th root of unity only for p = 2
            if sign < 0 and (p != 2 or residue != 1):
                return False
        return True

    def parametrization(self) -> MonomialSubstitution:
        """Return a substitution from the free coordinates onto this torus:
        each equation is solved for a variable with exponent +1 or -1"""
        n = self.nvars
        # pivot variable -> (sign, exponents over all variables)
        solved: dict[int, tuple[int, list[int]]] = {}
        for exps, sign in self.equations:
            current, current_sign = list(exps), sign
            for pivot, (pivot_sign, pivot_exps) in solved.items():
                e = current[pivot]
                if e:
                    current[pivot] = 0
                    current = [c + e * v for c, v in zip(current, pivot_exps)]
                    if pivot_sign < 0 and e % 2:
                        current_sign = -current_sign
            pivot = next((j for j in range(n - 1, -1, -1) if current[j] in (1, -1)), None)
            if pivot is None:
                raise DomainError(f'Cannot parametrize {self}: no equation can be solved for a single variable')
            e = current[pivot]
            # t_pivot^e * t^rest = sign gives t_pivot = sign * t^(-e * rest)
            rest = [0 if j == pivot else -e * c for j, c in enumerate(current)]
            for other, (other_sign, other_exps) in list(solved.items()):
                f = other_exps[pivot]
                if f:
                    other_exps = list(other_exps)
                    other_exps[pivot] = 0
                    other_exps = [c + f * v for c, v in zip(other_exps, rest)]
                    if current_sign < 0 and f % 2:
                        other_sign = -other_sign
                    solved[other] = (other_sign, other_exps)
            solved[pivot] = (current_sign, rest)

        free = [j for j in range(n) if j not in solved]
        images = []
        for j in range(n):
            if j in solved:
                sign, exps = solved[j]
                images.append((sign, tuple(exps[k] for k in free)))
            else:
                images.append((1, tuple(int(k == j) for k in free)))
        return MonomialSubstitution(n, len(free), tuple(images))

    def to_json(self) -> list[dict[str, Any]]:
        return [{'exps': list(exps), 'sign': sign} for exps, sign in self.equations]

    def format(self) -> str:
        if not self.equations:
            return 'full torus'
        clauses = []
        for exps, sign in self.equations:
            factors = [f't{i}' if e == 1 else f't{i}^{e}' for i, e in enumerate(exps, start=1) if e]
            clauses.append(f'{"*".join(factors)}={sign}')
        return ' & '.join(clauses)

    def __str__(self) -> str:
        return self.format()


def _parse_monomial(text: str, part: str, offset: int, nvars: int) -> tuple[tuple[int, ...], int]:
    stripped = part.strip()
    sign = 1
    if stripped.startswith('-'):
        sign, stripped = -1, stripped[1:].strip()
    if stripped == '1':
        return (0,) * nvars, sign
    exps = [0] * nvars
    position = 0
    start = offset + part.find(stripped) if stripped else offset
    while position < len(stripped):
        match = _FACTOR.match(stripped, position)
        if match is None:
            raise ParseError('Expected a monomial like t4^2*t3^-2, 1 or -1', text, start + position)
        index = int(match.group(1))
        if not 1 <= index <= nvars:
            raise ParseError(f'Variable t{index} out of range 1..{nvars}', text, start + match.start(1))
        exps[index - 1] += int(match.group(2) or 1)
        position = match.end()
    if not stripped:
        raise ParseError('Empty side of an equation', text, offset)
    return tuple(exps), sign


def _parse_clause(text: str, clause: str, offset: int, nvars: int) -> list[Equation]:
    parts = clause.split('=')
    if len(parts) < 2:
        raise ParseError("Expected an equation with '='", text, offset)
    sides = []
    position = offset
    for part in parts:
        sides.append(_parse_monomial(text, part, position, nvars))
        position += len(part) + 1

    def equation(left: tuple[tuple[int, ...], int], right: tuple[tuple[int, ...], int]) -> Equation:
        exps = tuple(a - b for a, b in zip(left[0], right[0]))
        return exps, left[1] * right[1]

    last = sides[-1]
    if not any(last[0]):
        # chains ending with a constant set every side to that constant
        return [equation(side, last) for side in sides[:-1]]
    return [equation(left, right) for left, right in zip(sides, sides[1:])]
