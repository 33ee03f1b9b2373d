"""Check reports and the witness vocabulary shared by all classifiers.

Every classifier returns a CheckReport: a boolean verdict, scan statistics,
and on failure a witness that is self-contained enough to be re-verified by
an independent pass over the raw tables.  Witnesses are always the
lexicographically least violation in the documented scan order.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AmbiguousLift:
    """Two distinct lifts of ``base`` sharing the anchored vertex.

    degree n, vertex position j, base cell u in the target, anchor vertex a
    in the source, and the two offending source cells.
    """

    degree: int
    vertex: int
    base: int
    anchor: int
    first: int
    second: int

    kind = "ambiguous_lift"

    def to_doc(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "vertex": self.vertex,
            "base": self.base,
            "anchor": self.anchor,
            "first": self.first,
            "second": self.second,
        }


@dataclass(frozen=True)
class MissingLift:
    """No lift of ``base`` through the anchored vertex exists."""

    degree: int
    vertex: int
    base: int
    anchor: int

    kind = "missing_lift"

    def to_doc(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "vertex": self.vertex,
            "base": self.base,
            "anchor": self.anchor,
        }


@dataclass(frozen=True)
class MissingHornFiller:
    """A compatible horn over ``base`` with no filler.

    faces lists (i, y_i) for every slot i != horn, in ascending i.
    """

    degree: int
    horn: int
    base: int
    faces: tuple[tuple[int, int], ...]

    kind = "missing_horn_filler"

    def to_doc(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "horn": self.horn,
            "base": self.base,
            "faces": [list(p) for p in self.faces],
        }


@dataclass(frozen=True)
class ComponentLeak:
    """A target component that meets the image but is not contained in it.

    cell is a simplex of the stated degree lying in the component but outside
    the image.
    """

    component: int
    degree: int
    cell: int

    kind = "component_leak"

    def to_doc(self) -> dict:
        return {
            "kind": self.kind,
            "component": self.component,
            "degree": self.degree,
            "cell": self.cell,
        }


@dataclass(frozen=True)
class ComparisonMiss:
    """A pair (target cell, source component) missed by the comparison map."""

    degree: int
    target_cell: int
    component: int

    kind = "comparison_miss"

    def to_doc(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "target_cell": self.target_cell,
            "component": self.component,
        }


@dataclass(frozen=True)
class ComparisonClash:
    """Two source cells identified by the comparison map."""

    degree: int
    first: int
    second: int

    kind = "comparison_clash"

    def to_doc(self) -> dict:
        return {
            "kind": self.kind,
            "degree": self.degree,
            "first": self.first,
            "second": self.second,
        }


Witness = (
    AmbiguousLift
    | MissingLift
    | MissingHornFiller
    | ComponentLeak
    | ComparisonMiss
    | ComparisonClash
)


@dataclass
class CheckReport:
    """Outcome of one classifier run."""

    check: str
    verdict: bool
    witness: Witness | None
    stats: dict[str, int]

    def __bool__(self) -> bool:
        return self.verdict

    def to_doc(self) -> dict:
        doc: dict = {"check": self.check, "verdict": self.verdict, "stats": dict(self.stats)}
        if self.witness is not None:
            doc["witness"] = self.witness.to_doc()
        return doc
