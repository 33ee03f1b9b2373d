"""Simplicial maps between truncated objects of equal truncation."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    TruncatedSSet,
    ValidationFailure,
    ValidationReport,
    closure_step,
    discrete_sset,
    disjoint_union,
)
from .standard import skeleton_sset, _cyclic_skeleton


@dataclass(eq=True)
class SimplicialMap:
    """Degreewise function commuting with faces and degeneracies.

    level[n][x] is the image of the n-simplex x.  Source and target must have
    the same truncation.
    """

    source: TruncatedSSet
    target: TruncatedSSet
    level: list[list[int]]

    def __call__(self, n: int, x: int) -> int:
        return self.level[n][x]


@dataclass(frozen=True)
class MapClass:
    injective: bool
    surjective: bool

    @property
    def isomorphism(self) -> bool:
        return self.injective and self.surjective


def identity_map(X: TruncatedSSet) -> SimplicialMap:
    return SimplicialMap(X, X, [list(range(c)) for c in X.cells])


def validate_map(f: SimplicialMap) -> ValidationReport:
    """Check totality and naturality, reporting the first violation."""
    A, B = f.source, f.target
    if A.truncation != B.truncation:
        return ValidationReport(
            ok=False,
            failure=ValidationFailure("shape", -1, {"reason": "truncation mismatch"}),
        )
    N = A.truncation
    if len(f.level) != N + 1:
        return ValidationReport(
            ok=False,
            failure=ValidationFailure("shape", -1, {"reason": "level table length"}),
        )
    for n in range(N + 1):
        if len(f.level[n]) != A.cells[n]:
            return ValidationReport(
                ok=False,
                failure=ValidationFailure("shape", n, {"reason": "level row length"}),
            )
        if any(not (0 <= v < B.cells[n]) for v in f.level[n]):
            return ValidationReport(
                ok=False,
                failure=ValidationFailure("shape", n, {"reason": "level out of range"}),
            )
    for n in range(1, N + 1):
        for i in range(n + 1):
            for x in range(A.cells[n]):
                if f.level[n - 1][A.face[n][i][x]] != B.face[n][i][f.level[n][x]]:
                    return ValidationReport(
                        ok=False,
                        failure=ValidationFailure(
                            "naturality", n, {"op": "face", "i": i, "simplex": x}
                        ),
                    )
    for n in range(N):
        for i in range(n + 1):
            for x in range(A.cells[n]):
                if f.level[n + 1][A.degeneracy[n][i][x]] != B.degeneracy[n][i][f.level[n][x]]:
                    return ValidationReport(
                        ok=False,
                        failure=ValidationFailure(
                            "naturality", n, {"op": "degeneracy", "i": i, "simplex": x}
                        ),
                    )
    return ValidationReport(ok=True)


def compose(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """g after f."""
    if f.target != g.source:
        raise ValueError("endpoint mismatch: target of f must equal source of g")
    return SimplicialMap(
        f.source, g.target, [[g.level[n][v] for v in f.level[n]] for n in range(len(f.level))]
    )


def classify(f: SimplicialMap) -> MapClass:
    inj = all(len(set(row)) == len(row) for row in f.level)
    surj = all(
        len(set(f.level[n])) == f.target.cells[n] for n in range(f.target.truncation + 1)
    )
    return MapClass(inj, surj)


def inverse(f: SimplicialMap) -> SimplicialMap:
    """Two-sided inverse of an isomorphism."""
    if not classify(f).isomorphism:
        raise ValueError("map is not an isomorphism")
    level = []
    for n in range(f.source.truncation + 1):
        inv = [0] * f.target.cells[n]
        for x, v in enumerate(f.level[n]):
            inv[v] = x
        level.append(inv)
    return SimplicialMap(f.target, f.source, level)


def vertex_of(f_or_X, n: int, x: int, j: int) -> int:
    """j-th vertex of x, accepting either an object or anything with .source."""
    X = f_or_X if isinstance(f_or_X, TruncatedSSet) else f_or_X.source
    return X.vertex(n, x, j)


def copair(f: SimplicialMap, g: SimplicialMap) -> SimplicialMap:
    """Map out of the disjoint union of the two sources, into a shared target."""
    if f.target != g.target:
        raise ValueError("copair requires a shared target")
    U = disjoint_union(f.source, g.source)
    return SimplicialMap(
        U, f.target, [f.level[n] + g.level[n] for n in range(U.truncation + 1)]
    )


def fold_map(X: TruncatedSSet) -> SimplicialMap:
    """Codiagonal X + X -> X."""
    i = identity_map(X)
    return copair(i, i)


def terminal_map(X: TruncatedSSet) -> SimplicialMap:
    """Unique map to the one-point object at the same truncation."""
    T = discrete_sset(1, X.truncation)
    return SimplicialMap(X, T, [[0] * c for c in X.cells])


def point_inclusion(X: TruncatedSSet, v: int) -> SimplicialMap:
    """Inclusion of the vertex v as a map from the one-point object."""
    if not 0 <= v < X.cells[0]:
        raise ValueError("vertex out of range")
    P = discrete_sset(1, X.truncation)
    level = [[v]]
    cur = v
    for n in range(X.truncation):
        cur = X.degeneracy[n][0][cur]
        level.append([cur])
    return SimplicialMap(P, X, level)


def extend_map(f: SimplicialMap, truncation: int) -> SimplicialMap:
    """Raise the truncation of a map by degeneracy closure on both ends.

    Each new source cell is s_t(parent) for a canonical presentation, so its
    image is forced by naturality.
    """
    if truncation < f.source.truncation:
        raise ValueError("cannot lower a truncation by closure")
    src, tgt = f.source, f.target
    level = [list(r) for r in f.level]
    while src.truncation < truncation:
        prev = src.truncation
        tgt, _ = closure_step(tgt)
        src, parents = closure_step(src)
        level.append(
            [tgt.degeneracy[prev][t][level[prev][parent]] for (t, parent) in parents]
        )
    return SimplicialMap(src, tgt, level)


def cyclic_cover_projection(k: int, truncation: int) -> SimplicialMap:
    """The k-fold cover of the circle, wrapping k vertices and k edges around."""
    counts_k, faces_k = _cyclic_skeleton(k)
    counts_1, faces_1 = _cyclic_skeleton(1)
    C, keys_c = skeleton_sset(counts_k, faces_k, truncation)
    S, keys_s = skeleton_sset(counts_1, faces_1, truncation)
    index_s = [{key: i for i, key in enumerate(keys)} for keys in keys_s]
    level = [
        [index_s[m][(phi, d, 0)] for (phi, d, c) in keys_c[m]]
        for m in range(truncation + 1)
    ]
    return SimplicialMap(C, S, level)
