from __future__ import annotations
"""
Alexander polynomials of links built from other links. Provides:
- cable_link_poly, the polynomial of the (a,b)-cable about one component
- iterated_cable, the r-cable obtained by cabling the newest component
- torres_specialize, the polynomial of the sublink without one component
All polynomials are in meridian coordinates and defined up to units
"""

from math import gcd
from typing import Sequence

from src.algebra.laurent import LaurentPoly, normalize_unit
from src.algebra.substitution import MonomialSubstitution, substitute
from src.errors import DomainError


def _move_last(poly: LaurentPoly, component: int) -> LaurentPoly:
    """Relabel the variables so that t_[component] becomes the last one"""
    n = poly.nvars
    if not 1 <= component <= n:
        raise DomainError(f'Component {component} out of range 1..{n}')
    order = [i if i < component else i - 1 for i in range(1, n + 1)]
    order[component - 1] = n
    return substitute(poly, MonomialSubstitution.relabel(order))


def _monomial(exps: Sequence[int]) -> LaurentPoly:
    return LaurentPoly.monomial(list(exps))


def cable_link_poly(linkpoly: LaurentPoly, component: int, a: int, b: int,
                    linking: Sequence[int]) -> LaurentPoly:
    """Return the polynomial of the (a,b)-cable of the link about [component],
    whose linking numbers with the other components are [linking]. The
    cabled component becomes t_n and the new one t_(n+1)"""
    n = linkpoly.nvars
    if gcd(a, b) != 1:
        raise DomainError(f'Cable parameters a={a} and b={b} are not coprime')
    if len(linking) != n - 1:
        raise DomainError(f'Expected {n - 1} linking numbers, got {len(linking)}')
    poly = _move_last(linkpoly, component)

    rows = [tuple(int(i == j) for j in range(n + 1)) for i in range(n - 1)]
    rows.append(tuple(a if j == n - 1 else int(j == n) for j in range(n + 1)))
    cabled = substitute(poly, MonomialSubstitution.from_exponents(rows, n + 1))

    # T^a t_n^b t_(n+1)^b with T the product of t_i^(l_i)
    exps = [a * l for l in linking] + [b, b]
    result = (_monomial(exps) - 1) * cabled
    if n == 1:
        result = result.exact_divide(_monomial([a, 1]) - 1)
    return normalize_unit(result)


def iterated_cable(linkpoly: LaurentPoly, component: int, sign: int, r: int,
                   linking: Sequence[int]) -> tuple[LaurentPoly, tuple[int, ...]]:
    """Return the polynomial of the r-cable of sign [sign] about [component],
    built by r successive (1, sign)-cables about the newest component, along
    with the linking numbers of the newest component"""
    if sign not in (1, -1) or r < 1:
        raise DomainError(f'Invalid cable parameters sign={sign}, r={r}')
    poly, vector = linkpoly, tuple(linking)
    for _ in range(r):
        poly = cable_link_poly(poly, component, 1, sign, vector)
        component, vector = poly.nvars, vector + (sign,)
    return poly, vector


def torres_specialize(linkpoly: LaurentPoly, component: int, linking: Sequence[int]) -> LaurentPoly:
    """Return the polynomial of the sublink obtained by deleting [component],
    whose linking numbers with the other components are [linking]"""
    n = linkpoly.nvars
    if n < 2:
        raise DomainError('Cannot delete the only component of a knot')
    if len(linking) != n - 1:
        raise DomainError(f'Expected {n - 1} linking numbers, got {len(linking)}')
    poly = _move_last(linkpoly, component)
    rows = [tuple(int(i == j) for j in range(n - 1)) for i in range(n - 1)] + [(0,) * (n - 1)]
    specialized = substitute(poly, MonomialSubstitution.from_exponents(rows, n - 1))
    if specialized.is_zero:
        return specialized

    if n == 2:
        if not linking[0]:
            raise DomainError('Torres formula for two components needs a nonzero linking number')
        t = LaurentPoly.variable(1, 1)
        result = (specialized * (t - 1)).exact_divide(_monomial([linking[0]]) - 1)
    else:
        result = specialized.exact_divide(_monomial(linking) - 1)
    return normalize_unit(result)
