from __future__ import annotations
"""
Counting p-torsion points on unions of subtori. Provides:
- subtori_tors, the Moebius-function count over the intersection lattice of
  the subspaces of (Z/p)^n attached to subtori through 1
- count_union_points, the direct enumeration, which also accepts translated tori
"""

from typing import Sequence

import networkx as nx
import numpy as np

from src.algebra.cyclotomic import check_prime
from src.errors import DomainError
from src.invariants.subtorus import Subtorus

Rows = tuple[tuple[int, ...], ...]


def row_reduce(rows: Sequence[Sequence[int]], p: int) -> Rows:
    """Return the reduced row echelon form of [rows] over Z/p, zero rows dropped"""
    matrix = [[value % p for value in row] for row in rows]
    ncols = len(matrix[0]) if matrix else 0
    pivot_row = 0
    for col in range(ncols):
        pivot = next((r for r in range(pivot_row, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[pivot_row], matrix[pivot] = matrix[pivot], matrix[pivot_row]
        inverse = pow(matrix[pivot_row][col], -1, p)
        matrix[pivot_row] = [value * inverse % p for value in matrix[pivot_row]]
        for r in range(len(matrix)):
            if r != pivot_row and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [(a - factor * b) % p for a, b in zip(matrix[r], matrix[pivot_row])]
        pivot_row += 1
    return tuple(tuple(row) for row in matrix[:pivot_row])


def intersection_lattice(tori: Sequence[Subtorus], p: int) -> nx.DiGraph:
    """Return the intersection poset of the subspaces attached to [tori]. Nodes
    are the reduced normal spaces, the bottom node () being the whole space,
    and each edge z -> z' intersects z with one more subspace"""
    normals = [row_reduce([exps for exps, _ in torus.equations], p) for torus in tori]
    graph = nx.DiGraph()
    bottom: Rows = ()
    graph.add_node(bottom)
    frontier = [bottom]
    while frontier:
        node = frontier.pop()
        for normal in normals:
            meet = row_reduce(node + normal, p) if node + normal else ()
            if meet != node:
                if meet not in graph:
                    frontier.append(meet)
                graph.add_edge(node, meet)
    return graph


def subtori_tors(tori: Sequence[Subtorus], p: int) -> int:
    """Return the number of p-torsion points on the union of [tori], all
    of them passing through 1, as -sum of mu(0, x) p^dim(x) over x != 0"""
    check_prime(p)
    if not tori:
        return 0
    if any(torus.is_translated for torus in tori):
        raise DomainError('Moebius counting needs subtori through 1, translated tori were given')
    n = tori[0].nvars
    graph = intersection_lattice(tori, p)
    if any(not row_reduce([exps for exps, _ in torus.equations], p) for torus in tori):
        return p ** n

    mobius: dict[Rows, int] = {(): 1}
    total = 0
    for node in nx.topological_sort(graph):
        if node == ():
            continue
        mobius[node] = -sum(mobius[ancestor] for ancestor in nx.ancestors(graph, node))
        total -= mobius[node] * p ** (n - len(node))
    return total


def count_union_points(tori: Sequence[Subtorus], p: int) -> int:
    """Return the number of p-torsion points on the union of [tori] by
    enumerating every point of the torsion grid"""
    check_prime(p)
    if not tori:
        return 0
    n = tori[0].nvars
    points = np.indices((p,) * n).reshape(n, -1).T
    covered = np.zeros(len(points), dtype=bool)
    for torus in tori:
        inside = np.ones(len(points), dtype=bool)
        for exps, sign in torus.equations:
            residues = (points @ np.array(exps, dtype=np.int64)) % p
            if sign > 0:
                inside &= residues == 0
            elif p == 2:
                inside &= residues == 1
            else:
                inside[:] = False
        covered |= inside
    return int(covered.sum())
