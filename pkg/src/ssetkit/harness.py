"""Seeded instance generation and verification campaigns.

Trials are driven by a counter-based RNG keyed by (seed, trial index), so any
subset of trials can be reproduced independently and campaigns can be merged
or parallelized without changing results.  Corrupted near-miss draws must
fail validation and are counted as skipped, never scored.
"""

from __future__ import annotations

import copy
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .checks import (
    covering_check,
    kan_check,
    revalidate_witness,
    separable_direct,
    separable_via_lifting,
)
from .components import injection_cartesian_check, trivial_covering_check
from .core import TruncatedSSet, disjoint_union, empty_sset, validate
from .groupoids import codiscrete_groupoid, cyclic_group_groupoid, nerve
from .limits import diagonal, product
from .maps import (
    SimplicialMap,
    classify,
    copair,
    cyclic_cover_projection,
    fold_map,
    terminal_map,
    validate_map,
)
from .report import CheckReport
from .standard import StandardObjectSpec, build_standard, circle_spec, simplex_spec
from . import io

_FAMILY_NAMES = ("gluing", "cyclic-cover", "fold", "nerve-product", "corrupted")

DEFAULT_MIX = {
    "gluing": 0.35,
    "cyclic-cover": 0.15,
    "fold": 0.15,
    "nerve-product": 0.20,
    "corrupted": 0.15,
}


@dataclass
class GenConfig:
    seed: int = 0
    max_nondegenerate_dim: int = 2
    max_cells_per_degree: int = 6
    trials: int = 100
    fixture_mix: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_MIX))
    include_curated: bool = True

    def check(self) -> None:
        if self.max_nondegenerate_dim < 0:
            raise ValueError("max_nondegenerate_dim must be >= 0")
        if self.max_cells_per_degree < 1:
            raise ValueError("max_cells_per_degree must be >= 1")
        if self.trials < 0:
            raise ValueError("trials must be >= 0")
        unknown = set(self.fixture_mix) - set(_FAMILY_NAMES)
        if unknown:
            raise ValueError(f"unknown fixture families: {sorted(unknown)}")
        if any(w < 0 for w in self.fixture_mix.values()):
            raise ValueError("fixture weights must be nonnegative")
        if not any(w > 0 for w in self.fixture_mix.values()):
            raise ValueError("at least one fixture weight must be positive")

    def to_doc(self) -> dict:
        return {
            "seed": self.seed,
            "max_nondegenerate_dim": self.max_nondegenerate_dim,
            "max_cells_per_degree": self.max_cells_per_degree,
            "trials": self.trials,
            "fixture_mix": dict(self.fixture_mix),
            "include_curated": self.include_curated,
        }

    @staticmethod
    def from_doc(doc: dict) -> "GenConfig":
        return GenConfig(
            seed=doc["seed"],
            max_nondegenerate_dim=doc["max_nondegenerate_dim"],
            max_cells_per_degree=doc["max_cells_per_degree"],
            trials=doc["trials"],
            fixture_mix=dict(doc["fixture_mix"]),
            include_curated=doc["include_curated"],
        )


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    key = [seed & 0xFFFFFFFFFFFFFFFF, trial & 0xFFFFFFFFFFFFFFFF]
    return np.random.Generator(np.random.Philox(key=key))


def quotient(
    X: TruncatedSSet, pairs: list[tuple[int, int, int]]
) -> tuple[TruncatedSSet, SimplicialMap]:
    """Quotient by the simplicial congruence generated by (degree, a, b) pairs.

    Merging two cells propagates to all their faces and degeneracies until a
    fixed point; face and degeneracy tables then descend to the classes.
    Classes are numbered by least member per degree.
    """
    N = X.truncation
    parent = [list(range(c)) for c in X.cells]

    def find(n: int, a: int) -> int:
        p = parent[n]
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    work = [(n, a, b) for (n, a, b) in pairs]
    while work:
        n, a, b = work.pop()
        ra, rb = find(n, a), find(n, b)
        if ra == rb:
            continue
        parent[n][max(ra, rb)] = min(ra, rb)
        if n >= 1:
            for i in range(n + 1):
                work.append((n - 1, X.face[n][i][a], X.face[n][i][b]))
        if n < N:
            for i in range(n + 1):
                work.append((n + 1, X.degeneracy[n][i][a], X.degeneracy[n][i][b]))

    label: list[list[int]] = []
    members: list[list[int]] = []
    for n in range(N + 1):
        lab = [-1] * X.cells[n]
        mem = []
        for x in range(X.cells[n]):
            r = find(n, x)
            if lab[r] == -1:
                lab[r] = len(mem)
                mem.append(r)
            lab[x] = lab[r]
        label.append(lab)
        members.append(mem)
    cells = [len(m) for m in members]
    face: list[list[list[int]]] = [[]]
    for n in range(1, N + 1):
        face.append(
            [[label[n - 1][X.face[n][i][m]] for m in members[n]] for i in range(n + 1)]
        )
    degeneracy = []
    for n in range(N):
        degeneracy.append(
            [[label[n + 1][X.degeneracy[n][i][m]] for m in members[n]] for i in range(n + 1)]
        )
    Y = TruncatedSSet(N, cells, face, degeneracy)
    return Y, SimplicialMap(X, Y, label)


_PIECE_CATALOG: list[tuple[str, tuple[int, ...], list[int]]] = [
    ("simplex", (0,), [1]),
    ("simplex", (1,), [2, 1]),
    ("simplex", (2,), [3, 3, 1]),
    ("circle", (), [1, 1]),
    ("boundary", (2,), [3, 3]),
    ("horn", (2, 1), [3, 2]),
]


def _gen_object(rng: np.random.Generator, cfg: GenConfig) -> TruncatedSSet:
    dim = cfg.max_nondegenerate_dim
    N = dim + 1
    if rng.random() < 0.04:
        return empty_sset(N)
    budget = [cfg.max_cells_per_degree] * (dim + 1)
    pieces: list[TruncatedSSet] = []
    for _ in range(int(rng.integers(1, 4))):
        feasible = [
            (kind, params, prof)
            for kind, params, prof in _PIECE_CATALOG
            if len(prof) - 1 <= dim and all(prof[m] <= budget[m] for m in range(len(prof)))
        ]
        if not feasible:
            break
        kind, params, prof = feasible[int(rng.integers(0, len(feasible)))]
        for m, c in enumerate(prof):
            budget[m] -= c
        pieces.append(build_standard(StandardObjectSpec(kind, params), N))
    X = pieces[0] if pieces else build_standard(simplex_spec(0), N)
    for p in pieces[1:]:
        X = disjoint_union(X, p)
    pairs: list[tuple[int, int, int]] = []
    for _ in range(int(rng.integers(0, max(2, X.cells[0])))):
        deg = 0 if (dim == 0 or rng.random() < 0.8) else 1
        if X.cells[deg] >= 2:
            a = int(rng.integers(0, X.cells[deg]))
            b = int(rng.integers(0, X.cells[deg]))
            if a != b:
                pairs.append((deg, a, b))
    if pairs:
        X, _ = quotient(X, pairs)
    return X


def _family_gluing(rng: np.random.Generator, cfg: GenConfig) -> SimplicialMap:
    roll = rng.random()
    if roll < 0.5:
        X = _gen_object(rng, cfg)
        pairs = []
        for _ in range(int(rng.integers(1, 4))):
            deg = 0 if rng.random() < 0.8 else min(1, X.truncation)
            if X.cells[deg] >= 2:
                a = int(rng.integers(0, X.cells[deg]))
                b = int(rng.integers(0, X.cells[deg]))
                if a != b:
                    pairs.append((deg, a, b))
        return quotient(X, pairs)[1]
    if roll < 0.8:
        X = _gen_object(rng, cfg)
        Y = _gen_object(rng, cfg)
        U = disjoint_union(X, Y)
        return SimplicialMap(X, U, [list(range(c)) for c in X.cells])
    return terminal_map(_gen_object(rng, cfg))


def _family_cyclic(rng: np.random.Generator, cfg: GenConfig) -> SimplicialMap:
    N = max(2, cfg.max_nondegenerate_dim + 1)
    p = cyclic_cover_projection(int(rng.integers(1, 5)), N)
    if rng.random() < 0.3:
        q = cyclic_cover_projection(int(rng.integers(1, 5)), N)
        return copair(p, q)
    return p


def _family_fold(rng: np.random.Generator, cfg: GenConfig) -> SimplicialMap:
    return fold_map(_gen_object(rng, cfg))


_GROUPS = (
    lambda: cyclic_group_groupoid(2),
    lambda: cyclic_group_groupoid(3),
    lambda: codiscrete_groupoid(2),
    lambda: cyclic_group_groupoid(1),
)


def _family_nerve_product(rng: np.random.Generator, cfg: GenConfig) -> SimplicialMap:
    X = _gen_object(rng, cfg)
    pick = rng.choice(len(_GROUPS), p=[0.4, 0.25, 0.25, 0.1])
    K = nerve(_GROUPS[int(pick)](), X.truncation)
    return product(X, K).pr1


def _instance_valid(h: SimplicialMap) -> bool:
    return bool(validate(h.source)) and bool(validate(h.target)) and bool(validate_map(h))


def _family_corrupted(rng: np.random.Generator, cfg: GenConfig) -> SimplicialMap:
    others = [n for n in _FAMILY_NAMES if n != "corrupted"]
    base = _FAMILIES[others[int(rng.integers(0, len(others)))]](rng, cfg)
    for _ in range(40):
        h = copy.deepcopy(base)
        spots: list[tuple] = []
        A, B = h.source, h.target
        for n in range(A.truncation + 1):
            if A.cells[n] and B.cells[n] >= 2:
                spots.append(("level", n))
        for n in range(1, A.truncation + 1):
            if A.cells[n] and A.cells[n - 1] >= 2:
                spots.append(("face", n))
        for n in range(A.truncation):
            if A.cells[n] and A.cells[n + 1] >= 2:
                spots.append(("degeneracy", n))
        if not spots:
            break
        kind, n = spots[int(rng.integers(0, len(spots)))]
        if kind == "level":
            row, size = h.level[n], B.cells[n]
        elif kind == "face":
            i = int(rng.integers(0, n + 1))
            row, size = A.face[n][i], A.cells[n - 1]
        else:
            i = int(rng.integers(0, n + 1))
            row, size = A.degeneracy[n][i], A.cells[n + 1]
        x = int(rng.integers(0, len(row)))
        bump = int(rng.integers(1, size))
        row[x] = (row[x] + bump) % size
        if not _instance_valid(h):
            return h
    # nothing mutable (degenerate draw): break the map shape instead
    h = copy.deepcopy(base)
    h.level = h.level[:-1]
    return h


_FAMILIES = {
    "gluing": _family_gluing,
    "cyclic-cover": _family_cyclic,
    "fold": _family_fold,
    "nerve-product": _family_nerve_product,
    "corrupted": _family_corrupted,
}


def gen_sset(cfg: GenConfig, trial: int = 0) -> TruncatedSSet:
    """One generated object for the given trial index."""
    cfg.check()
    return _gen_object(trial_rng(cfg.seed, trial), cfg)


def gen_morphism(cfg: GenConfig, trial: int = 0) -> tuple[str, SimplicialMap]:
    """One generated (family, map) instance for the given trial index."""
    cfg.check()
    rng = trial_rng(cfg.seed, trial)
    names = sorted(n for n, w in cfg.fixture_mix.items() if w > 0)
    weights = np.array([cfg.fixture_mix[n] for n in names], dtype=float)
    name = names[int(rng.choice(len(names), p=weights / weights.sum()))]
    return name, _FAMILIES[name](rng, cfg)


def curated_instances(truncation: int = 3) -> list[tuple[str, SimplicialMap]]:
    """The named fixture maps, one per behavior class."""
    interval = build_standard(simplex_spec(1), truncation)
    circle = build_standard(circle_spec(), truncation)
    k2 = nerve(cyclic_group_groupoid(2), truncation)
    return [
        ("curated:cyclic-double-cover", cyclic_cover_projection(2, truncation)),
        ("curated:interval-to-point", terminal_map(interval)),
        ("curated:fold-interval", fold_map(interval)),
        ("curated:circle-nerve-projection", product(circle, k2).pr1),
    ]


@dataclass
class InstanceVerdicts:
    """Every classifier run on one instance, plus derived comparisons."""

    direct: CheckReport
    lifting: CheckReport
    covering: CheckReport
    kan: CheckReport
    trivial: CheckReport
    trivial_delta: CheckReport
    injective: bool
    injection_cartesian: CheckReport | None

    def implication_failures(self) -> list[str]:
        out = []
        if self.trivial.verdict and not self.covering.verdict:
            out.append("trivial-covering implies covering")
        if self.covering.verdict and not self.kan.verdict:
            out.append("covering implies kan")
        if self.covering.verdict and not self.direct.verdict:
            out.append("covering implies separable")
        return out

    def injection_failures(self) -> list[str]:
        out = []
        if self.injection_cartesian is not None:
            if self.injection_cartesian.verdict != self.trivial.verdict:
                out.append("injection-cartesian vs trivial-covering on the map")
        if self.trivial_delta.verdict != self.direct.verdict:
            out.append("injection-cartesian vs trivial-covering on the diagonal")
        return out


def evaluate_instance(h: SimplicialMap) -> InstanceVerdicts:
    """Run every classifier once, sharing the diagonal construction."""
    dd = diagonal(h)
    direct = separable_direct(h, dd)
    return InstanceVerdicts(
        direct=direct,
        lifting=separable_via_lifting(h),
        covering=covering_check(h),
        kan=kan_check(h),
        trivial=trivial_covering_check(h),
        trivial_delta=trivial_covering_check(dd.delta),
        injective=classify(h).injective,
        injection_cartesian=(
            injection_cartesian_check(h) if classify(h).injective else None
        ),
    )


def _witness_audit(h: SimplicialMap, v: InstanceVerdicts) -> list[str]:
    """Re-check every failure witness; return the checks whose witness is bogus."""
    bad = []
    dd_delta = None
    for rep in (v.direct, v.lifting, v.covering, v.kan, v.trivial):
        if not rep.verdict and not revalidate_witness(h, rep):
            bad.append(rep.check)
    if not v.trivial_delta.verdict:
        dd_delta = diagonal(h).delta
        if not revalidate_witness(dd_delta, v.trivial_delta):
            bad.append("trivial-covering(diagonal)")
    if v.injection_cartesian is not None and not v.injection_cartesian.verdict:
        if not revalidate_witness(h, v.injection_cartesian):
            bad.append("injection-cartesian")
    return bad


def _verdict_doc(v: InstanceVerdicts) -> dict:
    doc = {
        "separable_direct": v.direct.to_doc(),
        "separable_lifting": v.lifting.to_doc(),
        "covering": v.covering.to_doc(),
        "kan": v.kan.to_doc(),
        "trivial_covering": v.trivial.to_doc(),
    }
    if v.injection_cartesian is not None:
        doc["injection_cartesian"] = v.injection_cartesian.to_doc()
    return doc


def _roundtrip_verdicts_match(h: SimplicialMap, v: InstanceVerdicts) -> bool:
    """Serialize the instance, re-parse, re-run, and compare verdicts."""
    h2 = io.map_from_doc(io.map_to_doc(h))
    v2 = evaluate_instance(h2)
    return (
        v.direct.verdict == v2.direct.verdict
        and v.lifting.verdict == v2.lifting.verdict
        and v.covering.verdict == v2.covering.verdict
        and v.kan.verdict == v2.kan.verdict
        and v.trivial.verdict == v2.trivial.verdict
    )


def _adequacy_class(v: InstanceVerdicts) -> list[str]:
    classes = []
    if v.covering.verdict and v.direct.verdict:
        classes.append("separable-covering")
    if v.kan.verdict and not v.direct.verdict:
        classes.append("nonseparable-kan")
    if v.trivial.verdict:
        classes.append("trivial-covering")
    if not v.kan.verdict:
        classes.append("non-kan")
    return classes


_ADEQUACY_CLASSES = (
    "separable-covering",
    "nonseparable-kan",
    "trivial-covering",
    "non-kan",
)


def _trial_record(cfg_doc: dict, trial: int) -> dict:
    """Generate, validate and score one trial; JSON-ready output."""
    cfg = GenConfig.from_doc(cfg_doc)
    family, h = gen_morphism(cfg, trial)
    if not _instance_valid(h):
        return {"trial": trial, "family": family, "skipped": True}
    return _score(f"trial:{trial}", family, h)


def _score(label: str, family: str, h: SimplicialMap) -> dict:
    v = evaluate_instance(h)
    rec: dict = {
        "trial": label,
        "family": family,
        "skipped": False,
        "classes": _adequacy_class(v),
        "separability_agree": v.direct.verdict == v.lifting.verdict,
        "kan": v.kan.verdict,
        "covering_agree": (
            None if not v.kan.verdict else v.direct.verdict == v.covering.verdict
        ),
        "ambiguous_only": (
            None if not v.kan.verdict else v.covering.stats.get("missing", 0) == 0
        ),
        "implication_failures": v.implication_failures(),
        "injection_failures": v.injection_failures(),
        "witness_failures": _witness_audit(h, v),
    }
    disagreed = (
        not rec["separability_agree"]
        or rec["covering_agree"] is False
        or rec["ambiguous_only"] is False
        or rec["implication_failures"]
        or rec["injection_failures"]
    )
    if disagreed:
        rec["verdicts"] = _verdict_doc(v)
        rec["instance"] = io.map_to_doc(h)
        rec["recheck_same"] = _roundtrip_verdicts_match(h, v)
    return rec


@dataclass
class CampaignReport:
    config: dict
    scored: int
    skipped: int
    curated: int
    families: dict[str, int]
    separability_agreements: int
    separability_disagreements: list[dict]
    kan_instances: int
    covering_agreements: int
    covering_disagreements: list[dict]
    missing_lift_violations: list[dict]
    implication_violations: list[dict]
    injection_violations: list[dict]
    witness_failures: list[dict]
    adequacy: dict
    runtime_seconds: float

    @property
    def ok(self) -> bool:
        return not (
            self.separability_disagreements
            or self.covering_disagreements
            or self.missing_lift_violations
            or self.implication_violations
            or self.injection_violations
            or self.witness_failures
        )

    def to_doc(self, include_runtime: bool = True) -> dict:
        doc = {
            "config": dict(self.config),
            "scored": self.scored,
            "skipped": self.skipped,
            "curated": self.curated,
            "families": dict(self.families),
            "separability_agreements": self.separability_agreements,
            "separability_disagreements": self.separability_disagreements,
            "kan_instances": self.kan_instances,
            "covering_agreements": self.covering_agreements,
            "covering_disagreements": self.covering_disagreements,
            "missing_lift_violations": self.missing_lift_violations,
            "implication_violations": self.implication_violations,
            "injection_violations": self.injection_violations,
            "witness_failures": self.witness_failures,
            "adequacy": dict(self.adequacy),
            "ok": self.ok,
        }
        if include_runtime:
            doc["runtime_seconds"] = self.runtime_seconds
        return doc


def run_campaign(cfg: GenConfig, jobs: int = 1) -> CampaignReport:
    """Score every trial (plus the curated fixtures) and aggregate.

    Aggregation is order-stable and trials are independent, so the report is
    identical for any job count; only runtime_seconds varies between runs.
    """
    cfg.check()
    started = time.perf_counter()
    records: list[dict] = []
    if cfg.include_curated:
        for name, h in curated_instances(max(2, cfg.max_nondegenerate_dim + 1)):
            records.append(_score(name, "curated", h))
    cfg_doc = cfg.to_doc()
    if jobs > 1 and cfg.trials > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records.extend(
                pool.map(_trial_record, [cfg_doc] * cfg.trials, range(cfg.trials), chunksize=8)
            )
    else:
        records.extend(_trial_record(cfg_doc, t) for t in range(cfg.trials))

    families: dict[str, int] = {}
    adequacy_counts = {c: 0 for c in _ADEQUACY_CLASSES}
    scored = skipped = curated = 0
    sep_agree = kan_instances = cov_agree = 0
    sep_dis: list[dict] = []
    cov_dis: list[dict] = []
    missing_viol: list[dict] = []
    implication_viol: list[dict] = []
    injection_viol: list[dict] = []
    witness_fail: list[dict] = []
    for rec in records:
        if rec["skipped"]:
            skipped += 1
            continue
        scored += 1
        if rec["family"] == "curated":
            curated += 1
        families[rec["family"]] = families.get(rec["family"], 0) + 1
        for c in rec["classes"]:
            adequacy_counts[c] += 1
        if rec["separability_agree"]:
            sep_agree += 1
        else:
            sep_dis.append(rec)
        if rec["kan"]:
            kan_instances += 1
            if rec["covering_agree"]:
                cov_agree += 1
            else:
                cov_dis.append(rec)
            if not rec["ambiguous_only"]:
                missing_viol.append(rec)
        if rec["implication_failures"]:
            implication_viol.append(rec)
        if rec["injection_failures"]:
            injection_viol.append(rec)
        if rec["witness_failures"]:
            witness_fail.append(rec)
    adequacy = dict(adequacy_counts)
    adequacy["adequate"] = all(adequacy_counts[c] > 0 for c in _ADEQUACY_CLASSES)
    return CampaignReport(
        config=cfg.to_doc(),
        scored=scored,
        skipped=skipped,
        curated=curated,
        families=families,
        separability_agreements=sep_agree,
        separability_disagreements=sep_dis,
        kan_instances=kan_instances,
        covering_agreements=cov_agree,
        covering_disagreements=cov_dis,
        missing_lift_violations=missing_viol,
        implication_violations=implication_viol,
        injection_violations=injection_viol,
        witness_failures=witness_fail,
        adequacy=adequacy,
        runtime_seconds=time.perf_counter() - started,
    )
