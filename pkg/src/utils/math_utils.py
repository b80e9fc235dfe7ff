from functools import lru_cache
from typing import Iterator

from src.errors import ParseError


def pentagonal_numbers() -> Iterator[tuple[int, int]]:
    """Yield (sign, k(3k-1)/2) for k = 1, -1, 2, -2, ..."""
    k = 1
    while True:
        sign = 1 if k % 2 else -1
        yield sign, k * (3 * k - 1) // 2
        yield sign, k * (3 * k + 1) // 2
        k += 1


@lru_cache(maxsize=None)
def partition_number(n: int) -> int:
    """Return the number of partitions of [n], using Euler's pentagonal recurrence"""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total = 0
    for sign, pentagonal in pentagonal_numbers():
        if pentagonal > n:
            break
        total += sign * partition_number(n - pentagonal)
    return total


def parse_int_list(text: str) -> list[int]:
    """Return the integers of a comma separated list like '2,3'"""
    try:
        return [int(value) for value in text.split(',') if value.strip()]
    except ValueError:
        raise ParseError('Expected a comma separated list of integers', text, 0) from None


def format_multiset(values: list[int]) -> str:
    """Return the multiset [values] written as 'value_count', like 3,4_4"""
    counts: dict[int, int] = {}
    for value in sorted(values):
        counts[value] = counts.get(value, 0) + 1
    return ','.join(str(value) if count == 1 else f'{value}_{count}' for value, count in counts.items())


def parse_multiset(text: str) -> list[int]:
    """Inverse of format_multiset"""
    values = []
    for item in text.split(','):
        value, _, count = item.strip().partition('_')
        values.extend([int(value)] * int(count or 1))
    return sorted(values)
