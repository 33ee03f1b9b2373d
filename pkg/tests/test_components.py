"""Connected components and the two component-comparison checks."""

import pytest

import oracles as orc
import ssetkit as sk
from ssetkit.components import (
    component_object,
    component_unit,
    injection_cartesian_check,
    pi0,
    pi0_map,
    trivial_covering_check,
)
from ssetkit.core import validate
from ssetkit.harness import GenConfig, gen_morphism, gen_sset
from ssetkit.limits import diagonal
from ssetkit.maps import point_inclusion, validate_map
from ssetkit.report import ComparisonClash, ComponentLeak
from ssetkit.standard import build_standard, simplex_spec


def test_pi0_matches_bfs(zoo):
    for name, X in zoo.items():
        part = pi0(X)
        comps = orc.bfs_components(X)
        assert part.count == len(comps), name
        for v in range(X.cells[0]):
            assert v in comps[part.vertex_class[v]]
        for n in range(X.truncation + 1):
            for x in range(X.cells[n]):
                assert part.class_of[n][x] == orc.component_of_cell(X, comps, n, x)


def test_pi0_matches_bfs_on_generated():
    cfg = GenConfig(seed=17, trials=0)
    for t in range(40):
        X = gen_sset(cfg, t)
        if not validate(X).ok:
            continue
        part = pi0(X)
        comps = orc.bfs_components(X)
        assert part.count == len(comps)
        for n in range(X.truncation + 1):
            for x in range(X.cells[n]):
                assert part.class_of[n][x] == orc.component_of_cell(X, comps, n, x)


def test_pi0_of_simplices_connected():
    for n in range(5):
        X = build_standard(simplex_spec(n), n + 1)
        assert pi0(X).count == 1


def test_component_numbering_by_least_vertex(zoo):
    U = sk.disjoint_union(zoo["two-points"], zoo["interval"])
    part = pi0(U)
    # vertices 0,1 are the discrete points, 2,3 span the interval
    assert part.vertex_class == [0, 1, 2, 2]


def test_component_unit_and_naturality(zoo, named_maps):
    for X in zoo.values():
        unit = component_unit(X)
        assert validate_map(unit).ok
        assert validate(unit.target).ok
    for h in named_maps.values():
        pa, pb = pi0(h.source), pi0(h.target)
        p0 = pi0_map(h, pa, pb)
        for n in range(h.source.truncation + 1):
            for x in range(h.source.cells[n]):
                assert pb.class_of[n][h.level[n][x]] == p0[pa.class_of[n][x]]


def test_component_object_is_discrete(zoo):
    part = pi0(zoo["two-points"])
    K = component_object(part, 3)
    assert K.cells == [2, 2, 2, 2]
    assert K.nondegenerate_dim == 0


def test_trivial_covering_verdicts(named_maps):
    want = {
        "curated:cyclic-double-cover": False,
        "curated:interval-to-point": False,
        "curated:fold-interval": True,
        "curated:circle-nerve-projection": False,
        "vertex-into-interval": False,
    }
    for name, expected in want.items():
        report = trivial_covering_check(named_maps[name])
        assert report.verdict == expected, name
        assert report.verdict == orc.naive_trivial_covering(named_maps[name]), name


def test_trivial_covering_witness_golden(named_maps):
    # the double cover folds two sheets onto one pullback cell
    report = trivial_covering_check(named_maps["curated:cyclic-double-cover"])
    w = report.witness
    assert isinstance(w, ComparisonClash)
    assert (w.degree, w.first, w.second) == (0, 0, 1)
    assert report.stats["clashes"] > 0


def test_trivial_covering_on_identity(zoo):
    for X in (zoo["interval"], zoo["circle"], zoo["nerve-z2"]):
        assert trivial_covering_check(sk.identity_map(X)).verdict


def test_trivial_covering_matches_oracle_on_generated():
    cfg = GenConfig(seed=23, trials=0)
    checked = 0
    for t in range(80):
        _, h = gen_morphism(cfg, t)
        if not (
            validate(h.source).ok and validate(h.target).ok and validate_map(h).ok
        ):
            continue
        checked += 1
        assert trivial_covering_check(h).verdict == orc.naive_trivial_covering(h)
    assert checked >= 40


def test_injection_cartesian_requires_injectivity(named_maps):
    with pytest.raises(ValueError):
        injection_cartesian_check(named_maps["curated:fold-interval"])


def test_injection_cartesian_golden(zoo):
    report = injection_cartesian_check(point_inclusion(zoo["interval"], 0))
    assert not report.verdict
    w = report.witness
    assert isinstance(w, ComponentLeak)
    assert (w.component, w.degree, w.cell) == (0, 0, 1)
    # inclusion into the second summand leaks inside component 1 only
    U = sk.disjoint_union(zoo["interval"], zoo["interval"])
    report = injection_cartesian_check(point_inclusion(U, 2))
    assert not report.verdict
    assert report.witness == ComponentLeak(1, 0, 3)
    # a component equal to its image passes even when others are untouched
    V = sk.disjoint_union(zoo["interval"], zoo["point"])
    assert injection_cartesian_check(point_inclusion(V, 2)).verdict


def test_injection_cartesian_matches_oracle_on_diagonals():
    cfg = GenConfig(seed=29, trials=0)
    checked = 0
    for t in range(60):
        _, h = gen_morphism(cfg, t)
        if not (
            validate(h.source).ok and validate(h.target).ok and validate_map(h).ok
        ):
            continue
        checked += 1
        m = diagonal(h).delta
        report = injection_cartesian_check(m)
        verdict, first = orc.naive_injection_cartesian(m)
        assert report.verdict == verdict
        if not verdict:
            w = report.witness
            assert (w.component, w.degree, w.cell) == first
    assert checked >= 30


def test_pi0_map_composes(named_maps):
    h = named_maps["curated:cyclic-double-cover"]
    t = sk.terminal_map(h.target)
    left = pi0_map(sk.compose(t, h))
    step = [pi0_map(t)[c] for c in pi0_map(h)]
    assert left == step
