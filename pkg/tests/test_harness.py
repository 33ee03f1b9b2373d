"""Instance generator, scoring, and campaign determinism."""

from pathlib import Path

import pytest

import ssetkit as sk
from ssetkit.core import validate
from ssetkit.harness import (
    DEFAULT_MIX,
    GenConfig,
    curated_instances,
    evaluate_instance,
    gen_morphism,
    gen_sset,
    quotient,
    run_campaign,
    trial_rng,
)
from ssetkit.io import dumps_canonical, load_json, map_to_doc, object_to_doc
from ssetkit.maps import validate_map

GOLDEN = Path(__file__).parent / "golden"


def test_config_checks():
    with pytest.raises(ValueError):
        GenConfig(trials=-1).check()
    with pytest.raises(ValueError):
        GenConfig(max_cells_per_degree=0).check()
    with pytest.raises(ValueError):
        GenConfig(fixture_mix={"moebius": 1.0}).check()
    with pytest.raises(ValueError):
        GenConfig(fixture_mix={"gluing": 0.0}).check()
    with pytest.raises(ValueError):
        GenConfig(fixture_mix={"gluing": -1.0}).check()
    GenConfig().check()


def test_config_round_trip():
    cfg = GenConfig(seed=9, trials=12, max_cells_per_degree=4)
    assert GenConfig.from_doc(cfg.to_doc()) == cfg


def test_trial_rng_is_stable():
    a = trial_rng(5, 3).integers(0, 1 << 30, 8).tolist()
    b = trial_rng(5, 3).integers(0, 1 << 30, 8).tolist()
    c = trial_rng(5, 4).integers(0, 1 << 30, 8).tolist()
    assert a == b
    assert a != c


def test_generated_objects_validate():
    cfg = GenConfig(seed=13, trials=0)
    for t in range(40):
        X = gen_sset(cfg, t)
        report = validate(X)
        assert report.ok, t
        assert X.nondegenerate_dim <= cfg.max_nondegenerate_dim
        assert all(
            sum(X.nondegenerate(n)) <= cfg.max_cells_per_degree
            for n in range(X.truncation + 1)
        )


def test_family_mix_and_validity():
    cfg = GenConfig(seed=19, trials=0)
    seen = {}
    for t in range(120):
        family, h = gen_morphism(cfg, t)
        seen[family] = seen.get(family, 0) + 1
        objects_ok = validate(h.source).ok and validate(h.target).ok
        if family == "corrupted":
            assert not (objects_ok and validate_map(h).ok), t
        else:
            assert objects_ok and validate_map(h).ok, (t, family)
    assert set(seen) == set(DEFAULT_MIX)


def test_quotient_gluing(zoo):
    X = zoo["interval"]
    Q, proj = quotient(X, [(0, 0, 1)])
    assert validate(Q).ok
    assert validate_map(proj).ok
    assert Q.cells[0] == 1
    assert sk.pi0(Q).count == 1
    # gluing nothing is the identity
    same, proj2 = quotient(X, [])
    assert same.cells == X.cells
    assert proj2.level == [list(range(c)) for c in X.cells]


def test_quotient_is_congruence(zoo):
    # identifying one vertex pair must not merge unrelated degrees wrongly;
    # the projection commutes with every face and degeneracy by validation
    X = zoo["circle"]
    Q, proj = quotient(X, [(1, 0, 1)])
    assert validate(Q).ok and validate_map(proj).ok
    # projections are surjective degreewise
    assert all(set(r) == set(range(q)) for r, q in zip(proj.level, Q.cells))
    assert sk.pi0(Q).count == 1


def test_curated_instances_profile():
    names = [name for name, _ in curated_instances(3)]
    assert names == [
        "curated:cyclic-double-cover",
        "curated:interval-to-point",
        "curated:fold-interval",
        "curated:circle-nerve-projection",
    ]
    for name, h in curated_instances(3):
        assert validate_map(h).ok, name


def test_evaluate_instance_fields(named_maps):
    v = evaluate_instance(named_maps["curated:cyclic-double-cover"])
    assert v.covering.verdict and v.kan.verdict and v.direct.verdict
    assert not v.trivial.verdict
    assert v.injective is False
    assert v.implication_failures() == []
    assert v.injection_failures() == []

    v = evaluate_instance(named_maps["vertex-into-interval"])
    assert v.injective is True
    assert v.injection_cartesian is not None
    assert v.injection_failures() == []


def test_gen_goldens_are_stable():
    cfg = GenConfig(seed=42, trials=0)
    X = gen_sset(cfg, 0)
    assert dumps_canonical(object_to_doc(X)) == dumps_canonical(
        load_json(GOLDEN / "gen-object-seed42-trial0.json")
    )
    family, h = gen_morphism(cfg, 3)
    assert family == "gluing"
    assert dumps_canonical(map_to_doc(h)) == dumps_canonical(
        load_json(GOLDEN / "gen-map-seed42-trial3.json")
    )


def test_campaign_deterministic_and_parallel_stable():
    cfg = GenConfig(seed=5, trials=40)
    one = run_campaign(cfg).to_doc(include_runtime=False)
    two = run_campaign(cfg).to_doc(include_runtime=False)
    par = run_campaign(cfg, jobs=2).to_doc(include_runtime=False)
    assert one == two == par


def test_campaign_counts_add_up():
    cfg = GenConfig(seed=5, trials=60)
    report = run_campaign(cfg)
    assert report.scored + report.skipped == 60 + 4
    assert report.curated == 4
    assert sum(report.families.values()) == report.scored
    assert report.ok
    assert report.kan_instances <= report.scored
    assert report.covering_agreements <= report.kan_instances


def test_campaign_without_curated():
    cfg = GenConfig(seed=5, trials=10, include_curated=False)
    report = run_campaign(cfg)
    assert report.curated == 0
    assert report.scored + report.skipped == 10


def test_campaign_adequacy_classes():
    report = run_campaign(GenConfig(seed=42, trials=120))
    for cls in (
        "separable-covering",
        "nonseparable-kan",
        "trivial-covering",
        "non-kan",
    ):
        assert report.adequacy[cls] > 0, cls
    assert report.adequacy["adequate"] is True


def test_campaign_doc_shape():
    doc = run_campaign(GenConfig(seed=3, trials=8)).to_doc()
    assert doc["ok"] is True
    assert "runtime_seconds" in doc
    assert doc["config"]["seed"] == 3
    trimmed = run_campaign(GenConfig(seed=3, trials=8)).to_doc(include_runtime=False)
    assert "runtime_seconds" not in trimmed
