from __future__ import annotations
"""
Reports gathering the invariants of an arrangement. Provides:
- a Report dataclass with its JSON form
- build_report, which computes every requested invariant of a spec
- helpers resolving ideal indices like 'n-2' and the horizontal permutation
  hidden behind a spec
"""

import re
from dataclasses import dataclass, field
from typing import Any, Sequence

from src.arrangements.normal_form import (NormalFormD2, arrangement_depth, bottom_components_d2, depth2_normal_form,
                                          sigma_lists)
from src.arrangements.permutations import Permutation
from src.arrangements.spec import ArrangementSpec, Catalog, Horizontal
from src.errors import DomainError, ParseError
from src.invariants.alexander import alexander_poly, delta, single_var_poly
from src.invariants.torsion import check_prime, tors_count

UNAVAILABLE = 'unavailable: out of scope'

_IDEAL = re.compile(r'^\s*(?:(\d+)|n\s*(?:-\s*(\d+))?)\s*$')


@dataclass(frozen=True, slots=True)
class TorsEntry:
    p: int
    k: int
    count: int | str

    def to_json(self) -> dict[str, Any]:
        return {'p': self.p, 'k': self.k, 'count': self.count}


@dataclass
class Report:
    """Invariants of one arrangement. Fields that cannot be computed for the
    given spec hold the UNAVAILABLE marker"""
    spec: str
    n: int
    alexander_poly: str = UNAVAILABLE
    single_var_poly: str = UNAVAILABLE
    delta: int | str = UNAVAILABLE
    tors: list[TorsEntry] = field(default_factory=list)
    depth: int | str = UNAVAILABLE
    normal_form: str = UNAVAILABLE
    sigma: str = UNAVAILABLE
    sigma1: str = UNAVAILABLE
    components: list[str] | str = UNAVAILABLE

    def to_json(self) -> dict[str, Any]:
        return {
            'spec': self.spec,
            'n': self.n,
            'alexander_poly': self.alexander_poly,
            'single_var_poly': self.single_var_poly,
            'delta': self.delta,
            'tors': [entry.to_json() for entry in self.tors],
            'depth': self.depth,
            'normal_form': self.normal_form,
            'sigma': self.sigma,
            'sigma1': self.sigma1,
            'components': self.components,
        }

    @staticmethod
    def from_json(data: dict[str, Any]) -> Report:
        tors = [TorsEntry(item['p'], item['k'], item['count']) for item in data['tors']]
        return Report(**{**data, 'tors': tors})

    def tors_value(self, p: int, k: int) -> int | str | None:
        """Return the count stored for Tors_(p,k), if it was requested"""
        return next((entry.count for entry in self.tors if entry.p == p and entry.k == k), None)


def parse_ideal(text: str, n: int) -> int:
    """Return the ideal index written as an integer or relative to n, like 'n-2'"""
    match = _IDEAL.match(text)
    if match is None:
        raise ParseError("Expected an ideal index like 1, n or n-2", text, 0)
    if match.group(1) is not None:
        return int(match.group(1))
    return n - int(match.group(2) or 0)


def horizontal_perm(spec: ArrangementSpec) -> Permutation | None:
    """Return the permutation of [spec] when it is a horizontal arrangement"""
    target = spec.target if isinstance(spec, Catalog) else spec
    return target.perm if isinstance(target, Horizontal) else None


def normal_form_of(spec: ArrangementSpec) -> NormalFormD2 | None:
    perm = horizontal_perm(spec)
    if perm is None:
        return None
    try:
        return depth2_normal_form(perm)
    except DomainError:
        return None


def build_report(spec: ArrangementSpec, primes: Sequence[int], ideals: Sequence[str], *,
                 components: bool = False) -> Report:
    """Return the report of [spec] with Tors_(p,k) for every p in [primes] and k in [ideals]"""
    for p in primes:
        check_prime(p)
    n = spec.n
    report = Report(spec.text(), n)
    if n >= 2:
        report.alexander_poly = alexander_poly(spec).format()
    report.single_var_poly = single_var_poly(spec).format()
    report.delta = delta(spec)

    for p in primes:
        for text in ideals:
            k = parse_ideal(text, n)
            if not 1 <= k <= n:
                continue
            try:
                report.tors.append(TorsEntry(p, k, tors_count(spec, p, k).count))
            except DomainError:
                report.tors.append(TorsEntry(p, k, UNAVAILABLE))

    perm = horizontal_perm(spec)
    if perm is not None:
        depth = arrangement_depth(perm)
        report.depth = depth if depth is not None else UNAVAILABLE
    nf = normal_form_of(spec)
    if nf is not None:
        lists = sigma_lists(nf)
        report.normal_form = nf.format()
        report.sigma = lists.format()
        report.sigma1 = ','.join(str(value) for value in lists.sigma1)
        if components:
            report.components = [torus.format() for torus in bottom_components_d2(nf)]
    return report
