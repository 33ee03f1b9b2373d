"""Materialized finite limits: fiber products, products, diagonals.

A fiber product is stored as an honest object whose n-simplices are the
pairs (x, y) with f(x) = g(y), indexed in lexicographic order of (x, y); the
projections are simplicial maps.  Pair order is part of the contract so that
witnesses and serialized instances are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import TruncatedSSet
from .maps import SimplicialMap, terminal_map


@dataclass
class FiberProduct:
    object: TruncatedSSet
    pr1: SimplicialMap
    pr2: SimplicialMap
    along: tuple[SimplicialMap, SimplicialMap]
    # pairs[n][p] is the (x, y) pair realizing cell p at degree n
    pairs: list[list[tuple[int, int]]]
    index: list[dict[tuple[int, int], int]]


def pullback(f: SimplicialMap, g: SimplicialMap) -> FiberProduct:
    """Fiber product of f and g over their shared target."""
    if f.target != g.target:
        raise ValueError("pullback requires a shared target")
    X, Y = f.source, g.source
    N = X.truncation
    pairs: list[list[tuple[int, int]]] = []
    index: list[dict[tuple[int, int], int]] = []
    for n in range(N + 1):
        by_image: dict[int, list[int]] = {}
        for y in range(Y.cells[n]):
            by_image.setdefault(g.level[n][y], []).append(y)
        at_n = [
            (x, y)
            for x in range(X.cells[n])
            for y in by_image.get(f.level[n][x], ())
        ]
        at_n.sort()
        pairs.append(at_n)
        index.append({p: i for i, p in enumerate(at_n)})
    face: list[list[list[int]]] = [[]]
    for n in range(1, N + 1):
        face.append(
            [
                [
                    index[n - 1][(X.face[n][i][x], Y.face[n][i][y])]
                    for (x, y) in pairs[n]
                ]
                for i in range(n + 1)
            ]
        )
    degeneracy = []
    for n in range(N):
        degeneracy.append(
            [
                [
                    index[n + 1][(X.degeneracy[n][i][x], Y.degeneracy[n][i][y])]
                    for (x, y) in pairs[n]
                ]
                for i in range(n + 1)
            ]
        )
    P = TruncatedSSet(N, [len(p) for p in pairs], face, degeneracy)
    pr1 = SimplicialMap(P, X, [[x for (x, _) in pairs[n]] for n in range(N + 1)])
    pr2 = SimplicialMap(P, Y, [[y for (_, y) in pairs[n]] for n in range(N + 1)])
    return FiberProduct(P, pr1, pr2, (f, g), pairs, index)


def product(X: TruncatedSSet, Y: TruncatedSSet) -> FiberProduct:
    """Binary product, realized as the fiber product over the point."""
    if X.truncation != Y.truncation:
        raise ValueError("truncation mismatch in product")
    return pullback(terminal_map(X), terminal_map(Y))


@dataclass
class DiagonalData:
    fiber_product: FiberProduct
    delta: SimplicialMap
    # image[n] is the sorted list of fiber-product cells of the form (x, x)
    image: list[list[int]]


def diagonal(h: SimplicialMap) -> DiagonalData:
    """The relative diagonal A -> A x_B A of h: A -> B."""
    fp = pullback(h, h)
    A = h.source
    level = [
        [fp.index[n][(x, x)] for x in range(A.cells[n])]
        for n in range(A.truncation + 1)
    ]
    delta = SimplicialMap(A, fp.object, level)
    image = [sorted(set(row)) for row in level]
    return DiagonalData(fp, delta, image)
