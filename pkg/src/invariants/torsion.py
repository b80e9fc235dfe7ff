from __future__ import annotations
"""
Torsion points on characteristic varieties. Provides:
- tors_count, the number of p-torsion points of V_k for an arrangement
- torsion_zeros, the vectorized zero set of a polynomial on the torsion grid
- verify_subtorus, the certificate that a subtorus lies in V_k
- tors2_recursion, the closed count of 2-torsion points of V_1
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from src import env, view
from src.algebra.cyclotomic import CyclotomicValue, check_prime, eval_torsion
from src.algebra.laurent import LaurentPoly
from src.algebra.substitution import substitute
from src.arrangements.spec import ArrangementSpec, Cable
from src.braids.free_word import FreeWord
from src.errors import DomainError
from src.invariants.alexander import alexander_matrix, alexander_poly
from src.invariants.matrices import MinorCache
from src.invariants.subtorus import Subtorus


@dataclass(frozen=True, slots=True)
class TorsionCount:
    """Number of points of V_k whose coordinates are p-th roots of unity"""
    p: int
    k: int
    count: int

    def __str__(self) -> str:
        return f'Tors_{self.p},{self.k} = {self.count}'


def torsion_grid(p: int, n: int) -> np.ndarray:
    """Return the p^n points of (Z/p)^n, one per row, in lexicographic order"""
    return np.indices((p,) * n, dtype=np.int64).reshape(n, -1).T


def _zero_mask(poly: LaurentPoly, p: int, points: np.ndarray) -> np.ndarray:
    exps = np.array(list(poly.terms), dtype=np.int64).reshape(len(poly.terms), poly.nvars)
    coeffs = np.array(list(poly.terms.values()), dtype=object if _large(poly) else np.int64)
    residues = (points @ exps.T) % p
    buckets = [(coeffs * (residues == r)).sum(axis=1) for r in range(p)]
    # the value vanishes iff every bucket carries the same coefficient sum
    return np.all([bucket == buckets[0] for bucket in buckets[1:]], axis=0)


def _large(poly: LaurentPoly) -> bool:
    return sum(abs(coeff) for coeff in poly.terms.values()) >= 2 ** 62


def _chunks(points: np.ndarray) -> list[np.ndarray]:
    return [points[start:start + env.CHUNK_SIZE] for start in range(0, len(points), env.CHUNK_SIZE)]


def _map_chunks(function, chunks: list, label: str) -> list:
    """Apply [function] to every chunk, on env.THREADS threads, keeping the order"""
    total = len(chunks)
    show = env.SHOW_PROGRESS and total * env.CHUNK_SIZE > env.PROGRESS_THRESHOLD
    results = []
    with ThreadPoolExecutor(max_workers=max(env.THREADS, 1)) as executor:
        for done, result in enumerate(executor.map(function, chunks), start=1):
            results.append(result)
            if show:
                view.print_progress(done, total, label)
    return results


def torsion_zeros(poly: LaurentPoly, p: int) -> np.ndarray:
    """Return the points of the p-torsion grid where [poly] vanishes"""
    check_prime(p)
    points = torsion_grid(p, poly.nvars)
    if poly.is_zero:
        return points
    masks = _map_chunks(lambda chunk: _zero_mask(poly, p, chunk), _chunks(points), f'zeros mod {p}')
    return points[np.concatenate(masks)] if masks else points[:0]


def _in_variety(entries: Sequence[Sequence[LaurentPoly]], p: int, point: Sequence[int], size: int) -> bool:
    """Return True if every size x size minor vanishes at the torsion [point]"""
    values = [[eval_torsion(entry, p, point) for entry in row] for row in entries]
    cache = MinorCache(values, CyclotomicValue.from_int(1, p), lambda value: value.is_zero)
    return all(minor.is_zero for minor in cache.minors(size))


def tors_count(spec: ArrangementSpec, p: int, k: int) -> TorsionCount:
    """Return Tors_(p,k) of [spec]"""
    check_prime(p)
    n = spec.n
    if not 1 <= k <= n:
        raise DomainError(f'Ideal index k={k} out of range 1..{n}')
    if k == n:
        return TorsionCount(p, k, 0)
    if k == 1 and n >= 3:
        return TorsionCount(p, k, len(torsion_zeros(alexander_poly(spec), p)))
    if isinstance(spec, Cable):
        raise DomainError(f'Only Tors_(p,1) is available for the cable {spec}')

    matrix = alexander_matrix(spec)
    candidates = torsion_zeros(alexander_poly(spec), p) if n >= 3 else torsion_grid(p, n)
    size = n - k

    def count(chunk: np.ndarray) -> int:
        return sum(_in_variety(matrix.entries, p, tuple(int(a) for a in point), size) for point in chunk)

    counts = _map_chunks(count, _chunks(candidates), f'V_{k} mod {p}')
    return TorsionCount(p, k, sum(counts))


def minor_check(spec: ArrangementSpec, torus: Subtorus, k: int,
                basis: Sequence[FreeWord] | None = None) -> list[bool]:
    """Return, for every (n-k) x (n-k) minor, whether it vanishes on [torus]"""
    matrix = alexander_matrix(spec, basis)
    n = matrix.cols
    if torus.nvars != n:
        raise DomainError(f'{torus} is not a subtorus of (C*)^{n}')
    if not 1 <= k <= n:
        raise DomainError(f'Ideal index k={k} out of range 1..{n}')
    if k == n:
        return [False]
    sub = torus.parametrization()
    entries = [[substitute(entry, sub) for entry in row] for row in matrix.entries]
    cache = MinorCache(entries, LaurentPoly.one(sub.nvars_out), lambda entry: entry.is_zero)
    return [minor.is_zero for minor in cache.minors(n - k)]


def verify_subtorus(spec: ArrangementSpec, torus: Subtorus, k: int,
                    basis: Sequence[FreeWord] | None = None) -> bool:
    """Return True if [torus] lies in V_k, every minor of E_k vanishing on it"""
    return all(minor_check(spec, torus, k, basis))


def tors2_recursion(n: int, delta_a: int, gamma_deltas: Sequence[int]) -> int:
    """Return 2^(n-1) - (1 + (-1)^n)/2 + delta(A) + sum of the delta values of
    the indecomposable odd proper subarrangements"""
    if n < 2:
        raise DomainError(f'The recursion needs at least two planes, got {n}')
    return 2 ** (n - 1) - (1 + (-1) ** n) // 2 + delta_a + sum(gamma_deltas)
