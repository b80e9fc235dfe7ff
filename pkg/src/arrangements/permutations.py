from __future__ import annotations
"""
Combinatorics of horizontal arrangements A(tau), tau a permutation of 1..n.
Lines are labelled through the inverse permutation: the line met in position
i from the bottom carries the label tau^-1(i), and all linking matrices,
braids and polynomials use that labelling
"""

import itertools
from dataclasses import dataclass
from typing import Sequence

from src import env
from src.errors import DomainError, ParseError

Permutation = tuple[int, ...]
Matrix = list[list[int]]


def validate_perm(perm: Sequence[int]) -> Permutation:
    """Return [perm] as a tuple if it is a bijection on 1..n"""
    perm = tuple(perm)
    if not perm or sorted(perm) != list(range(1, len(perm) + 1)):
        raise DomainError(f'{perm} is not a permutation of 1..{len(perm)}')
    return perm


def parse_perm(text: str) -> Permutation:
    """Parse '341256' (single digits) or '3,4,1,2,5,6'"""
    stripped = text.strip().strip('()')
    try:
        if ',' in stripped:
            values = tuple(int(value) for value in stripped.split(','))
        else:
            values = tuple(int(char) for char in stripped)
    except ValueError:
        position = next((k for k, char in enumerate(text) if not (char.isdigit() or char in ',() ')), 0)
        raise ParseError('Expected a permutation like 341256 or 3,4,1,2,5,6', text, position) from None
    try:
        return validate_perm(values)
    except DomainError as error:
        raise ParseError(str(error), text, 0) from None


def format_perm(perm: Sequence[int]) -> str:
    separator = ',' if len(perm) > 9 else ''
    return '(' + separator.join(str(value) for value in perm) + ')'


def inverse_perm(perm: Sequence[int]) -> Permutation:
    perm = validate_perm(perm)
    inverse = [0] * len(perm)
    for position, value in enumerate(perm, start=1):
        inverse[value - 1] = position
    return tuple(inverse)


def top_move(perm: Sequence[int]) -> Permutation:
    """Rotate [perm] so that its largest value comes last: if tau_k = n,
    return (tau_(k+1), ..., tau_n, tau_1, ..., tau_k)"""
    perm = validate_perm(perm)
    k = perm.index(len(perm)) + 1
    return perm[k:] + perm[:k]


def reversed_lines(perm: Sequence[int]) -> tuple[int, ...]:
    """Return the labels of the lines placed after n in [perm]. The top move
    keeps every label but reverses the orientation of these lines relative to
    the others, which negates their linking numbers with the rotated block"""
    perm = validate_perm(perm)
    return tuple(sorted(perm[perm.index(len(perm)) + 1:]))


def mirror_perm(perm: Sequence[int]) -> Permutation:
    """Return (n+1-tau_1, ..., n+1-tau_n), which negates every linking number"""
    perm = validate_perm(perm)
    return tuple(len(perm) + 1 - value for value in perm)


def linking_matrix(perm: Sequence[int]) -> Matrix:
    """Return the linking numbers of the lines of A([perm])"""
    order = inverse_perm(perm)
    n = len(order)
    return [[0 if i == j else (1 if (order[i] < order[j]) == (i < j) else -1)
             for j in range(n)] for i in range(n)]


@dataclass(frozen=True, slots=True)
class Relabeling:
    """Relabeling i -> order[i-1] carrying one linking matrix to another,
    possibly after negating every entry"""
    order: Permutation
    mirrored: bool = False


def linking_equivalent(first: Matrix, second: Matrix) -> Relabeling | None:
    """Return the first relabeling, in lexicographic order, carrying [first] to
    [second]; plain relabelings are tried before mirrored ones"""
    n = len(first)
    if n != len(second):
        return None
    if n > env.LINKING_SEARCH_LIMIT:
        raise DomainError(f'Brute force search over {n}! relabelings is above the limit of {env.LINKING_SEARCH_LIMIT}')
    for mirrored in (False, True):
        sign = -1 if mirrored else 1
        for order in itertools.permutations(range(n)):
            if all(second[order[i]][order[j]] == sign * first[i][j]
                   for i in range(n) for j in range(i + 1, n)):
                return Relabeling(tuple(k + 1 for k in order), mirrored)
    return None


def cable_perm(perm: Sequence[int], k: int, sign: int, r: int) -> Permutation:
    """Replace the value [k] by a block of r+1 consecutive values, increasing
    for sign +1 and decreasing for sign -1, shifting larger values by [r]"""
    perm = validate_perm(perm)
    if k not in perm:
        raise DomainError(f'Cannot cable {k}: it does not occur in {perm}')
    if sign not in (1, -1) or r < 1:
        raise DomainError(f'Invalid cable parameters sign={sign}, r={r}')
    block = tuple(range(k, k + r + 1)) if sign > 0 else tuple(range(k + r, k - 1, -1))
    result: list[int] = []
    for value in perm:
        if value == k:
            result.extend(block)
        else:
            result.append(value + r if value > k else value)
    return tuple(result)


def decable_perm(perm: Sequence[int], k: int, r: int) -> Permutation:
    """Inverse of cable_perm: contract the block of values k..k+r"""
    perm = validate_perm(perm)
    values = set(range(k, k + r + 1))
    if not values <= set(perm):
        raise DomainError(f'Values {k}..{k + r} do not all occur in {perm}')
    start = min(perm.index(value) for value in values)
    block = perm[start:start + r + 1]
    if set(block) != values or block not in (tuple(sorted(block)), tuple(sorted(block, reverse=True))):
        raise DomainError(f'Values {k}..{k + r} do not form a monotone block of {perm}')
    return tuple(value - r if value > k + r else value
                 for value in perm[:start] + (k,) + perm[start + r + 1:])


def blocks(perm: Sequence[int]) -> list[Permutation]:
    """Greedily split [perm] into maximal runs of consecutive values, each
    increasing or decreasing by one at every step"""
    perm = validate_perm(perm)
    result: list[Permutation] = []
    start = 0
    while start < len(perm):
        end = start + 1
        if end < len(perm) and abs(perm[end] - perm[start]) == 1:
            step = perm[end] - perm[start]
            while end < len(perm) and perm[end] - perm[end - 1] == step:
                end += 1
        result.append(perm[start:end])
        start = end
    return result


def contract_blocks(perm: Sequence[int]) -> Permutation:
    """Contract every block to a single value and renumber"""
    parts = blocks(perm)
    if all(len(part) == 1 for part in parts):
        return tuple(perm)
    ranks = {value: rank for rank, value in enumerate(sorted(min(part) for part in parts), start=1)}
    return tuple(ranks[min(part)] for part in parts)


def perm_depth(perm: Sequence[int]) -> int | None:
    """Return the number of contraction rounds needed to reach (1), or None
    when a round leaves the permutation unchanged"""
    current = validate_perm(perm)
    depth = 0
    while len(current) > 1:
        contracted = contract_blocks(current)
        if contracted == current:
            return None
        current, depth = contracted, depth + 1
    return depth
