"""Decidable morphism classifiers and the equivalence verdicts between them.

All quantifiers run over the stored degrees 0..N of the (equal) truncations
of source and target; this finiteness convention is what makes every check a
terminating table scan.  Scans are full: statistics count every violation,
and the reported witness is always the first one in the documented order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import vertex_table
from .components import injection_cartesian_check, pi0, pi0_map, trivial_covering_check
from .limits import DiagonalData, diagonal
from .maps import SimplicialMap
from .report import (
    AmbiguousLift,
    CheckReport,
    ComparisonClash,
    ComparisonMiss,
    ComponentLeak,
    MissingHornFiller,
    MissingLift,
)


def _fibers(h: SimplicialMap) -> list[dict[int, list[int]]]:
    out = []
    for n in range(h.source.truncation + 1):
        at_n: dict[int, list[int]] = {}
        for x in range(h.source.cells[n]):
            at_n.setdefault(h.level[n][x], []).append(x)
        out.append(at_n)
    return out


def covering_check(h: SimplicialMap) -> CheckReport:
    """Unique vertex-anchored lifts in every degree.

    For every degree n, vertex position j, base cell u and source vertex a
    with h(a) the j-th vertex of u, there must be exactly one x over u whose
    j-th vertex is a.  Scan order (n, j, u, a); the witness is the first
    square with zero or two lifts.
    """
    A, B = h.source, h.target
    N = A.truncation
    va, vb = vertex_table(A), vertex_table(B)
    anchors: dict[int, list[int]] = {}
    for a in range(A.cells[0]):
        anchors.setdefault(h.level[0][a], []).append(a)
    witness = None
    squares = missing = ambiguous = 0
    for n in range(N + 1):
        for j in range(n + 1):
            buckets: dict[tuple[int, int], list[int]] = {}
            for x in range(A.cells[n]):
                buckets.setdefault((h.level[n][x], va[n][x][j]), []).append(x)
            for u in range(B.cells[n]):
                for a in anchors.get(vb[n][u][j], ()):
                    squares += 1
                    lifts = buckets.get((u, a), ())
                    if not lifts:
                        missing += 1
                        if witness is None:
                            witness = MissingLift(n, j, u, a)
                    elif len(lifts) > 1:
                        ambiguous += 1
                        if witness is None:
                            witness = AmbiguousLift(n, j, u, a, lifts[0], lifts[1])
    stats = {"squares": squares, "missing": missing, "ambiguous": ambiguous}
    return CheckReport("covering", witness is None, witness, stats)


def _compatible_families(
    cands: list[list[int]], slots: list[int], face_row: list[list[int]]
):
    """Backtrack over horn slots in ascending order, yielding families.

    face_row is the face table one degree down.  Compatibility: for slots
    i < j, d_i(y_j) = d_{j-1}(y_i).
    """
    chosen: list[int] = []

    def rec(p: int):
        if p == len(slots):
            yield tuple(chosen)
            return
        jp = slots[p]
        for y in cands[p]:
            ok = True
            for q in range(p):
                if face_row[slots[q]][y] != face_row[jp - 1][chosen[q]]:
                    ok = False
                    break
            if ok:
                chosen.append(y)
                yield from rec(p + 1)
                chosen.pop()

    yield from rec(0)


def kan_check(h: SimplicialMap, bound: int | None = None) -> CheckReport:
    """Horn filling against the base, for all horns of degree <= bound.

    Every compatible family (y_i) over the faces of a base cell u must admit
    x with d_i(x) = y_i and h(x) = u.  The witness is the first unfillable
    horn in (degree, horn index, base cell, family) order.
    """
    A, B = h.source, h.target
    N = A.truncation
    bound = N if bound is None else min(bound, N)
    fibers = _fibers(h)
    witness = None
    horns = missing = 0
    for n in range(1, bound + 1):
        face_tuple = [
            tuple(A.face[n][i][x] for i in range(n + 1)) for x in range(A.cells[n])
        ]
        face_row = A.face[n - 1] if n >= 2 else []
        for k in range(n + 1):
            slots = [i for i in range(n + 1) if i != k]
            for u in range(B.cells[n]):
                cands = [fibers[n - 1].get(B.face[n][i][u], []) for i in slots]
                if any(not c for c in cands):
                    continue
                filled = {
                    tuple(face_tuple[x][i] for i in slots)
                    for x in fibers[n].get(u, ())
                }
                for fam in _compatible_families(cands, slots, face_row):
                    horns += 1
                    if fam not in filled:
                        missing += 1
                        if witness is None:
                            witness = MissingHornFiller(
                                n, k, u, tuple(zip(slots, fam))
                            )
    stats = {"horns": horns, "missing": missing}
    return CheckReport("kan", witness is None, witness, stats)


def separable_via_lifting(h: SimplicialMap) -> CheckReport:
    """Uniqueness of vertex-anchored lifts (existence not required).

    Two distinct cells over the same base sharing any one vertex violate
    separability.  The witness minimizes (degree, vertex position, first
    cell, second cell).
    """
    A = h.source
    N = A.truncation
    va = vertex_table(A)
    witness = None
    squares = ambiguous = 0
    for n in range(N + 1):
        for j in range(n + 1):
            buckets: dict[tuple[int, int], list[int]] = {}
            for x in range(A.cells[n]):
                buckets.setdefault((h.level[n][x], va[n][x][j]), []).append(x)
            squares += len(buckets)
            best = None
            for (u, a), xs in buckets.items():
                if len(xs) > 1:
                    ambiguous += 1
                    pair = (xs[0], xs[1], u, a)
                    if best is None or pair < best:
                        best = pair
            if witness is None and best is not None:
                witness = AmbiguousLift(n, j, best[2], best[3], best[0], best[1])
    stats = {"squares": squares, "ambiguous": ambiguous}
    return CheckReport("separable-lifting", witness is None, witness, stats)


def separable_direct(h: SimplicialMap, diag: DiagonalData | None = None) -> CheckReport:
    """Separability via the relative diagonal.

    Builds the diagonal A -> A x_B A (always injective) and checks it with
    the component-containment criterion.  The witness, when present, is a
    component leak inside the fiber product; fiber-product cells are indexed
    by lexicographic pair order, so the witness is reproducible from h alone.
    """
    dd = diag or diagonal(h)
    inner = injection_cartesian_check(dd.delta)
    return CheckReport("separable-direct", inner.verdict, inner.witness, inner.stats)


@dataclass
class SeparabilityAgreement:
    """Both separability characterizations, and whether they agree."""

    direct: CheckReport
    lifting: CheckReport

    @property
    def agree(self) -> bool:
        return self.direct.verdict == self.lifting.verdict

    def to_doc(self) -> dict:
        return {
            "equivalence": "separability",
            "agree": self.agree,
            "direct": self.direct.to_doc(),
            "lifting": self.lifting.to_doc(),
        }


@dataclass
class CoveringAgreement:
    """Separability versus covering, conditional on the Kan hypothesis.

    When the map fails kan_check the instance is out of hypothesis and no
    agreement claim is made.  ambiguous_only records that a failing covering
    check on a Kan map never lacks lifts, only uniqueness.
    """

    kan: CheckReport
    out_of_hypothesis: bool
    direct: CheckReport | None = None
    covering: CheckReport | None = None

    @property
    def agree(self) -> bool | None:
        if self.out_of_hypothesis:
            return None
        return self.direct.verdict == self.covering.verdict

    @property
    def ambiguous_only(self) -> bool | None:
        if self.out_of_hypothesis:
            return None
        return self.covering.stats.get("missing", 0) == 0

    def to_doc(self) -> dict:
        doc: dict = {
            "equivalence": "covering",
            "out_of_hypothesis": self.out_of_hypothesis,
            "kan": self.kan.to_doc(),
        }
        if not self.out_of_hypothesis:
            doc["agree"] = self.agree
            doc["ambiguous_only"] = self.ambiguous_only
            doc["direct"] = self.direct.to_doc()
            doc["covering"] = self.covering.to_doc()
        return doc


def separability_agreement(h: SimplicialMap) -> SeparabilityAgreement:
    """Compare the diagonal and lifting characterizations of separability."""
    dd = diagonal(h)
    return SeparabilityAgreement(separable_direct(h, dd), separable_via_lifting(h))


def covering_agreement(
    h: SimplicialMap,
    kan: CheckReport | None = None,
    direct: CheckReport | None = None,
    covering: CheckReport | None = None,
) -> CoveringAgreement:
    """Compare separability with being a covering, under the Kan hypothesis."""
    kan = kan or kan_check(h)
    if not kan.verdict:
        return CoveringAgreement(kan, True)
    return CoveringAgreement(
        kan, False, direct or separable_direct(h), covering or covering_check(h)
    )


def revalidate_witness(h: SimplicialMap, report: CheckReport) -> bool:
    """Independently re-check a failure witness against the raw tables.

    h must be the map the report was produced for (for separable-direct the
    diagonal is rebuilt from h).  Returns True when the witness demonstrates
    a genuine violation.
    """
    if report.verdict or report.witness is None:
        return report.verdict and report.witness is None
    w = report.witness
    if report.check == "separable-direct":
        dd = diagonal(h)
        return _recheck_leak(dd.delta, w)
    if report.check == "injection-cartesian":
        return _recheck_leak(h, w)
    if report.check == "trivial-covering":
        return _recheck_comparison(h, w)
    if report.check == "covering":
        return _recheck_covering(h, w)
    if report.check == "separable-lifting":
        return _recheck_lifting(h, w)
    if report.check == "kan":
        return _recheck_horn(h, w)
    raise ValueError(f"unknown check {report.check!r}")


def _recheck_leak(m: SimplicialMap, w) -> bool:
    if not isinstance(w, ComponentLeak):
        return False
    B = m.target
    pb = pi0(B)
    if not (0 <= w.degree <= B.truncation and 0 <= w.cell < B.cells[w.degree]):
        return False
    if pb.class_of[w.degree][w.cell] != w.component:
        return False
    if w.cell in set(m.level[w.degree]):
        return False
    for n in range(B.truncation + 1):
        for y in set(m.level[n]):
            if pb.class_of[n][y] == w.component:
                return True
    return False


def _recheck_comparison(h: SimplicialMap, w) -> bool:
    A = h.source
    pa, pb = pi0(A), pi0(h.target)
    if isinstance(w, ComparisonClash):
        n = w.degree
        if w.first == w.second:
            return False
        return (
            h.level[n][w.first] == h.level[n][w.second]
            and pa.class_of[n][w.first] == pa.class_of[n][w.second]
        )
    if isinstance(w, ComparisonMiss):
        n, b, c = w.degree, w.target_cell, w.component
        p0 = pi0_map(h, pa, pb)
        if not (0 <= c < pa.count and 0 <= b < h.target.cells[n]):
            return False
        if pb.class_of[n][b] != p0[c]:
            return False  # not a pullback pair at all
        return all(
            h.level[n][x] != b or pa.class_of[n][x] != c for x in range(A.cells[n])
        )
    return False


def _recheck_covering(h: SimplicialMap, w) -> bool:
    A, B = h.source, h.target
    if isinstance(w, (MissingLift, AmbiguousLift)):
        n, j, u, a = w.degree, w.vertex, w.base, w.anchor
        if h.level[0][a] != B.vertex(n, u, j):
            return False
        lifts = [
            x
            for x in range(A.cells[n])
            if h.level[n][x] == u and A.vertex(n, x, j) == a
        ]
        if isinstance(w, MissingLift):
            return not lifts
        return (
            w.first != w.second
            and w.first in lifts
            and w.second in lifts
        )
    return False


def _recheck_lifting(h: SimplicialMap, w) -> bool:
    if not isinstance(w, AmbiguousLift):
        return False
    A = h.source
    n, j = w.degree, w.vertex
    x1, x2 = w.first, w.second
    return (
        x1 != x2
        and h.level[n][x1] == w.base == h.level[n][x2]
        and A.vertex(n, x1, j) == w.anchor == A.vertex(n, x2, j)
    )


def _recheck_horn(h: SimplicialMap, w) -> bool:
    if not isinstance(w, MissingHornFiller):
        return False
    A, B = h.source, h.target
    n, k, u = w.degree, w.horn, w.base
    faces = dict(w.faces)
    slots = [i for i in range(n + 1) if i != k]
    if sorted(faces) != slots:
        return False
    for i in slots:
        if h.level[n - 1][faces[i]] != B.face[n][i][u]:
            return False
    for j in slots:
        for i in slots:
            if i < j and n >= 2:
                if A.face[n - 1][i][faces[j]] != A.face[n - 1][j - 1][faces[i]]:
                    return False
    for x in range(A.cells[n]):
        if h.level[n][x] == u and all(A.face[n][i][x] == faces[i] for i in slots):
            return False
    return True
