"""Finite truncated simplicial sets stored as explicit face/degeneracy tables.

An object truncated at degree N keeps, for every degree n in 0..N, a finite
set of n-simplices (identified with the indices 0..cells[n]-1), together with
total face tables d_i : X_n -> X_{n-1} for degrees 1..N and degeneracy tables
s_i : X_n -> X_{n+1} for degrees 0..N-1.  Everything above the truncation is
forgotten; everything below is stored explicitly, including degenerate cells.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass
class ValidationFailure:
    """First law violation found by a validator.

    kind is one of "shape", "identity", "naturality"; detail carries the
    offending law, indices and simplex so the failure can be re-checked
    independently.
    """

    kind: str
    degree: int
    detail: dict

    def __str__(self) -> str:
        bits = ", ".join(f"{k}={v}" for k, v in self.detail.items())
        return f"{self.kind} failure at degree {self.degree}: {bits}"


@dataclass
class ValidationReport:
    ok: bool
    failure: ValidationFailure | None = None
    # True when the top degree carries no nondegenerate cells (or the object
    # is empty).  Constructions such as nerves may legitimately lack a buffer
    # degree, so this is reported rather than treated as a failure.
    has_buffer: bool = True

    def __bool__(self) -> bool:
        return self.ok


@dataclass(eq=True)
class TruncatedSSet:
    """Degreewise finite simplicial set truncated at ``truncation``.

    cells[n] is the number of n-simplices.  face[n][i][x] is d_i(x) for
    1 <= n <= truncation, 0 <= i <= n (face[0] is an empty placeholder).
    degeneracy[n][i][x] is s_i(x) for 0 <= n <= truncation - 1, 0 <= i <= n.
    Simplex identity is positional; tables are treated as immutable once the
    object has been validated.
    """

    truncation: int
    cells: list[int]
    face: list[list[list[int]]]
    degeneracy: list[list[list[int]]]

    def n_cells(self, n: int) -> int:
        if 0 <= n <= self.truncation:
            return self.cells[n]
        return 0

    def d(self, n: int, i: int, x: int) -> int:
        """Face d_i of the n-simplex x."""
        return self.face[n][i][x]

    def s(self, n: int, i: int, x: int) -> int:
        """Degeneracy s_i of the n-simplex x."""
        return self.degeneracy[n][i][x]

    def is_degenerate(self, n: int, x: int) -> bool:
        # x = s_i(y) forces y = d_i(x), so degeneracy is decidable by table
        # lookups alone.
        for i in range(n):
            if self.degeneracy[n - 1][i][self.face[n][i][x]] == x:
                return True
        return False

    def nondegenerate(self, n: int) -> list[bool]:
        return [not self.is_degenerate(n, x) for x in range(self.cells[n])]

    @property
    def nondegenerate_dim(self) -> int:
        """Largest degree carrying a nondegenerate simplex, -1 if empty."""
        for n in range(self.truncation, -1, -1):
            if any(self.nondegenerate(n)):
                return n
        return -1

    def vertex(self, n: int, x: int, j: int) -> int:
        """j-th vertex of the n-simplex x.

        Canonical composite: apply d_0 j times, then d_1 until degree zero.
        """
        deg, c = n, x
        for _ in range(j):
            c = self.face[deg][0][c]
            deg -= 1
        while deg > 0:
            c = self.face[deg][1][c]
            deg -= 1
        return c

    def ez(self, n: int, x: int) -> tuple[tuple[int, ...], int, int]:
        """Eilenberg-Zilber normal form of x.

        Returns (phi, m, y) with y a nondegenerate m-simplex and phi a
        monotone surjection [n] ->> [m] such that x = X(phi)(y).  Peels the
        least applicable degeneracy index at each step, which makes the
        output canonical.
        """
        phi = list(range(n + 1))
        deg, y = n, x
        while deg > 0:
            for i in range(deg):
                base = self.face[deg][i][y]
                if self.degeneracy[deg - 1][i][base] == y:
                    # y = s_i(base), so prepend sigma_i to phi.
                    phi = [t if t <= i else t - 1 for t in phi]
                    deg, y = deg - 1, base
                    break
            else:
                break
        return tuple(phi), deg, y


def empty_sset(truncation: int) -> TruncatedSSet:
    n = truncation
    return TruncatedSSet(
        truncation=n,
        cells=[0] * (n + 1),
        face=[[]] + [[[] for _ in range(m + 1)] for m in range(1, n + 1)],
        degeneracy=[[[] for _ in range(m + 1)] for m in range(n)],
    )


def discrete_sset(points: int, truncation: int) -> TruncatedSSet:
    """Discrete object on ``points`` vertices: all structure maps identities."""
    n = truncation
    ident = list(range(points))
    return TruncatedSSet(
        truncation=n,
        cells=[points] * (n + 1),
        face=[[]] + [[list(ident) for _ in range(m + 1)] for m in range(1, n + 1)],
        degeneracy=[[list(ident) for _ in range(m + 1)] for m in range(n)],
    )


def _shape_failure(X: TruncatedSSet) -> ValidationFailure | None:
    N = X.truncation
    if N < 0:
        return ValidationFailure("shape", -1, {"reason": "negative truncation"})
    if len(X.cells) != N + 1 or any(c < 0 for c in X.cells):
        return ValidationFailure("shape", -1, {"reason": "bad cell counts"})
    if len(X.face) != N + 1:
        return ValidationFailure("shape", -1, {"reason": "face table length"})
    if len(X.degeneracy) != N:
        return ValidationFailure("shape", -1, {"reason": "degeneracy table length"})
    for n in range(1, N + 1):
        if len(X.face[n]) != n + 1:
            return ValidationFailure("shape", n, {"reason": "face row count"})
        for i, row in enumerate(X.face[n]):
            if len(row) != X.cells[n]:
                return ValidationFailure("shape", n, {"reason": "face row length", "i": i})
            if any(not (0 <= v < X.cells[n - 1]) for v in row):
                return ValidationFailure("shape", n, {"reason": "face out of range", "i": i})
    for n in range(N):
        if len(X.degeneracy[n]) != n + 1:
            return ValidationFailure("shape", n, {"reason": "degeneracy row count"})
        for i, row in enumerate(X.degeneracy[n]):
            if len(row) != X.cells[n]:
                return ValidationFailure(
                    "shape", n, {"reason": "degeneracy row length", "i": i}
                )
            if any(not (0 <= v < X.cells[n + 1]) for v in row):
                return ValidationFailure(
                    "shape", n, {"reason": "degeneracy out of range", "i": i}
                )
    return None


def validate(X: TruncatedSSet) -> ValidationReport:
    """Check the simplicial identities on every stored degree.

    Stops at the first violated identity instance and reports its law,
    indices and simplex.  A missing buffer degree (nondegenerate cells at the
    truncation) is reported via ``has_buffer``, not as a failure.
    """
    bad = _shape_failure(X)
    if bad is not None:
        return ValidationReport(ok=False, failure=bad, has_buffer=False)
    N = X.truncation
    fc, dg = X.face, X.degeneracy

    # d_i d_j = d_{j-1} d_i for i < j
    for n in range(2, N + 1):
        for j in range(n + 1):
            for i in range(j):
                for x in range(X.cells[n]):
                    if fc[n - 1][i][fc[n][j][x]] != fc[n - 1][j - 1][fc[n][i][x]]:
                        return ValidationReport(
                            ok=False,
                            failure=ValidationFailure(
                                "identity", n, {"law": "dd", "i": i, "j": j, "simplex": x}
                            ),
                        )
    # s_i s_j = s_{j+1} s_i for i <= j
    for n in range(N - 1):
        for j in range(n + 1):
            for i in range(j + 1):
                for x in range(X.cells[n]):
                    if dg[n + 1][i][dg[n][j][x]] != dg[n + 1][j + 1][dg[n][i][x]]:
                        return ValidationReport(
                            ok=False,
                            failure=ValidationFailure(
                                "identity", n, {"law": "ss", "i": i, "j": j, "simplex": x}
                            ),
                        )
    # d_i s_j, split into the three ranges
    for n in range(N):
        for j in range(n + 1):
            for x in range(X.cells[n]):
                sx = dg[n][j][x]
                for i in range(n + 2):
                    got = fc[n + 1][i][sx]
                    if i == j or i == j + 1:
                        want = x
                    elif i < j:
                        want = dg[n - 1][j - 1][fc[n][i][x]]
                    else:
                        want = dg[n - 1][j][fc[n][i - 1][x]]
                    if got != want:
                        return ValidationReport(
                            ok=False,
                            failure=ValidationFailure(
                                "identity", n, {"law": "ds", "i": i, "j": j, "simplex": x}
                            ),
                        )
    nd = X.nondegenerate_dim
    return ValidationReport(ok=True, has_buffer=nd < N)


def vertex_table(X: TruncatedSSet) -> list[list[tuple[int, ...]]]:
    """All vertices of all simplices, computed bottom-up.

    table[n][x] is the (n+1)-tuple of vertices of x.  Uses a different face
    composite than TruncatedSSet.vertex, which the tests exploit as a cross
    check.
    """
    table: list[list[tuple[int, ...]]] = [[(v,) for v in range(X.cells[0])]]
    for n in range(1, X.truncation + 1):
        last, first = X.face[n][n], X.face[n][0]
        prev = table[n - 1]
        table.append(
            [prev[last[x]] + (prev[first[x]][n - 1],) for x in range(X.cells[n])]
        )
    return table


def apply_epi(X: TruncatedSSet, phi: tuple[int, ...], deg: int, y: int) -> int:
    """Evaluate X(phi)(y) for a monotone surjection phi: [p] ->> [deg].

    Resolves phi into elementary degeneracies against the stored tables; the
    result degree p must not exceed the truncation.
    """
    p = len(phi) - 1
    if p == deg:
        return y
    t = max(t for t in range(p) if phi[t] == phi[t + 1])
    z = apply_epi(X, phi[: t + 1] + phi[t + 2 :], deg, y)
    return X.degeneracy[p - 1][t][z]


def apply_monotone(X: TruncatedSSet, alpha: tuple[int, ...], deg: int, x: int) -> int:
    """Evaluate X(alpha)(x) for any monotone alpha: [p] -> [deg], x in X_deg.

    Factors alpha as a surjection after an injection and replays the
    elementary operators against the stored tables.
    """
    image = sorted(set(alpha))
    z, cur = x, deg
    for v in range(deg, -1, -1):
        if v not in image:
            z = X.face[cur][v][z]
            cur -= 1
    rank = {v: r for r, v in enumerate(image)}
    return apply_epi(X, tuple(rank[a] for a in alpha), cur, z)


def closure_step(X: TruncatedSSet) -> tuple[TruncatedSSet, list[tuple[int, int]]]:
    """Extend by one degree with formal degeneracies only.

    Returns the extended object and, per new top cell, a presentation
    (t, parent) with the cell equal to s_t(parent).
    """
    N = X.truncation
    M = N + 1
    # Canonical keys (m, y, phi): y nondegenerate of degree m, phi: [M] ->> [m].
    keys: set[tuple[int, int, tuple[int, ...]]] = set()
    new_degeneracy_row = [[0] * X.cells[N] for _ in range(N + 1)]
    key_of: dict[tuple[int, int], tuple[int, int, tuple[int, ...]]] = {}
    for x in range(X.cells[N]):
        phi, m, y = X.ez(N, x)
        for i in range(N + 1):
            # s_i(x) = X(phi o sigma_i)(y)
            lifted = phi[: i + 1] + phi[i:]
            key = (m, y, lifted)
            keys.add(key)
            key_of[(i, x)] = key
    ordered = sorted(keys)
    index = {k: c for c, k in enumerate(ordered)}
    for (i, x), key in key_of.items():
        new_degeneracy_row[i][x] = index[key]

    parents: list[tuple[int, int]] = []
    new_face_row = [[0] * len(ordered) for _ in range(M + 1)]
    for c, (m, y, phi) in enumerate(ordered):
        t = max(t for t in range(M) if phi[t] == phi[t + 1])
        parent = apply_epi(X, phi[: t + 1] + phi[t + 2 :], m, y)
        parents.append((t, parent))
        for i in range(M + 1):
            alpha = phi[:i] + phi[i + 1 :]
            new_face_row[i][c] = apply_monotone(X, alpha, m, y)

    ext = TruncatedSSet(
        truncation=M,
        cells=X.cells + [len(ordered)],
        face=[[r[:] for r in rows] for rows in X.face] + [new_face_row],
        degeneracy=[[r[:] for r in rows] for rows in X.degeneracy]
        + [new_degeneracy_row],
    )
    return ext, parents


def degeneracy_closure(X: TruncatedSSet, truncation: int) -> TruncatedSSet:
    """Raise the truncation, adding only degenerate cells."""
    if truncation < X.truncation:
        raise ValueError("cannot lower a truncation by closure")
    out = X
    while out.truncation < truncation:
        out, _ = closure_step(out)
    return out


def disjoint_union(X: TruncatedSSet, Y: TruncatedSSet) -> TruncatedSSet:
    """Coproduct with X's cells first; inclusions are index shifts."""
    if X.truncation != Y.truncation:
        raise ValueError("truncation mismatch in disjoint union")
    N = X.truncation
    cells = [X.cells[n] + Y.cells[n] for n in range(N + 1)]
    face: list[list[list[int]]] = [[]]
    for n in range(1, N + 1):
        off = X.cells[n - 1]
        face.append(
            [X.face[n][i] + [v + off for v in Y.face[n][i]] for i in range(n + 1)]
        )
    degeneracy = []
    for n in range(N):
        off = X.cells[n + 1]
        degeneracy.append(
            [X.degeneracy[n][i] + [v + off for v in Y.degeneracy[n][i]] for i in range(n + 1)]
        )
    return TruncatedSSet(N, cells, face, degeneracy)
