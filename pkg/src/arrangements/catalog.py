from __future__ import annotations

import re
from functools import lru_cache
from typing import Any

from src import env
from src.arrangements.spec import ArrangementSpec, Horizontal, XiWord
from src.braids.braid_word import PureBraidWord
from src.braids.free_word import FreeWord
from src.errors import DomainError

_COMPLEX = re.compile(r'^A_?(\d+)$')


def is_complex_name(name: str) -> bool:
    """Return True for the names A<n> or A_<n> of complex arrangements"""
    match = _COMPLEX.match(name)
    return match is not None and int(match.group(1)) >= 1


def catalog_names() -> list[str]:
    return [entry['name'] for entry in env.CATALOG]


def _entry(name: str) -> dict[str, Any]:
    for entry in env.CATALOG:
        if entry['name'] == name:
            return entry
    raise DomainError(f'Unknown catalog name {name!r}, expected A<n> or one of {", ".join(catalog_names())}')


@lru_cache(maxsize=None)
def catalog(name: str) -> ArrangementSpec:
    """Return the arrangement registered under the given [name]"""
    if is_complex_name(name):
        n = int(_COMPLEX.match(name).group(1))
        return Horizontal(tuple(range(1, n + 1)))

    data = _entry(name)
    if data['kind'] == 'perm':
        return Horizontal(tuple(data['perm']))
    if data['kind'] == 'xi':
        xi = PureBraidWord.parse(data['xi'], data['n'] - 1)
        if 'negative' in data:
            return XiWord.from_negative_pairs(xi, data['n'], data['negative'])
        return XiWord(xi, data['n'])
    raise DomainError(f'Unknown kind {data["kind"]!r} for catalog entry {name!r}')


def catalog_basis(name: str) -> tuple[FreeWord, ...] | None:
    """Return the adapted basis y_1..y_(n-1) registered for [name], if any"""
    if is_complex_name(name):
        return None
    data = _entry(name)
    if 'basis' not in data:
        return None
    rank = catalog(name).n - 1
    return tuple(FreeWord.parse(word, rank) for word in data['basis'])
