from __future__ import annotations
"""
Braids attached to a horizontal arrangement A(tau): the half-twist, the
half-braid alpha, the full braid beta, the reduced half-braid and the
combed pure braid xi on n-1 strands
"""

from src.arrangements.permutations import inverse_perm, top_move, validate_perm
from src.braids.braid_word import BraidWord, PureBraidWord
from src.errors import DomainError


def garside(n: int) -> BraidWord:
    """Return the half-twist (s(n-1)...s1)(s(n-1)...s2)...(s(n-1))"""
    if n < 1:
        raise DomainError(f'The half-twist needs at least one strand, got {n}')
    letters = [(index, 1) for low in range(1, n) for index in range(n - 1, low - 1, -1)]
    return BraidWord(n, tuple(letters))


def full_twist(n: int) -> BraidWord:
    return garside(n) ** 2


def half_braid(perm: tuple[int, ...]) -> BraidWord:
    """Return the half-braid alpha of A([perm]) on n strands. It is the
    half-twist with the crossing of lines i < j made negative when their
    labels come in the opposite order"""
    order = inverse_perm(perm)
    m = len(order)
    letters = []
    for j in range(m, 1, -1):
        for i in range(j - 1, 0, -1):
            sign = 1 if order[i - 1] < order[j - 1] else -1
            letters.append((m - j + i, sign))
    return BraidWord(m, tuple(letters))


def full_braid(perm: tuple[int, ...]) -> BraidWord:
    """Return beta = alpha * Delta * alpha * Delta^-1, whose closure is the
    link of A([perm])"""
    alpha = half_braid(perm)
    delta = garside(alpha.strands)
    return alpha * delta * alpha * delta.inverse()


def reduced_half_braid(alpha: BraidWord) -> BraidWord:
    """Strip the top strand from [alpha]: cancel the leading s(n-1)...s1 and
    return the rest on n-1 strands"""
    m = alpha.strands
    stack: list[tuple[int, int]] = []
    for letter in [(index, -1) for index in range(1, m)] + list(alpha.letters):
        if stack and stack[-1] == (letter[0], -letter[1]):
            stack.pop()
        else:
            stack.append(letter)
    if any(index < 2 for index, _ in stack):
        raise DomainError(f'The top strand of {alpha} does not cross first')
    return BraidWord(m - 1, tuple((index - 1, exp) for index, exp in stack))


def xi_braid(perm: tuple[int, ...]) -> PureBraidWord:
    """Return the combed pure braid xi = xi_2 ... xi_(n-1) on n-1 strands,
    where xi_j is the product of A(i,j) over i < j whose labels are in the
    opposite order. The top line is first rotated to the last position"""
    perm = validate_perm(perm)
    n = len(perm)
    if perm[-1] != n:
        perm = top_move(perm)
    order = inverse_perm(perm)
    factors = [((i, j), 1) for j in range(2, n) for i in range(1, j) if order[i - 1] > order[j - 1]]
    return PureBraidWord(max(n - 1, 0), tuple(factors))
