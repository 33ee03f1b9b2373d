"""Morphism classifiers, their witnesses, and the verdict equivalences."""

import dataclasses

import pytest

import oracles as orc
import ssetkit as sk
from ssetkit.checks import (
    covering_agreement,
    covering_check,
    kan_check,
    revalidate_witness,
    separability_agreement,
    separable_direct,
    separable_via_lifting,
)
from ssetkit.core import validate
from ssetkit.harness import GenConfig, gen_morphism
from ssetkit.limits import diagonal
from ssetkit.maps import extend_map, identity_map, validate_map
from ssetkit.components import injection_cartesian_check
from ssetkit.report import AmbiguousLift, MissingHornFiller, MissingLift


def _valid_generated(seed, count, upto=150):
    cfg = GenConfig(seed=seed, trials=0)
    out = []
    for t in range(upto):
        family, h = gen_morphism(cfg, t)
        if validate(h.source).ok and validate(h.target).ok and validate_map(h).ok:
            out.append((f"trial{t}:{family}", h))
            if len(out) == count:
                break
    return out


def test_named_verdict_profiles(named_maps):
    # (covering, separable, kan, trivial)
    want = {
        "curated:cyclic-double-cover": (True, True, True, False),
        "curated:interval-to-point": (False, False, False, False),
        "curated:fold-interval": (True, True, True, True),
        "curated:circle-nerve-projection": (False, False, True, False),
        "vertex-into-interval": (False, True, False, False),
    }
    for name, (cov, sep, kan, triv) in want.items():
        h = named_maps[name]
        assert covering_check(h).verdict == cov, name
        assert separable_direct(h).verdict == sep, name
        assert separable_via_lifting(h).verdict == sep, name
        assert kan_check(h).verdict == kan, name
        assert sk.trivial_covering_check(h).verdict == triv, name


def test_identity_is_everything(zoo):
    for X in (zoo["interval"], zoo["circle"], zoo["nerve-z2"]):
        h = identity_map(X)
        assert covering_check(h).verdict
        assert separable_direct(h).verdict
        assert separable_via_lifting(h).verdict
        assert kan_check(h).verdict
        assert sk.trivial_covering_check(h).verdict


def test_lifting_witness_golden(named_maps):
    report = separable_via_lifting(named_maps["curated:interval-to-point"])
    assert report.witness == AmbiguousLift(1, 0, 0, 0, 0, 1)


def test_covering_witness_goldens(named_maps):
    # collapsing the interval loses unique lifts only through ambiguity
    report = covering_check(named_maps["curated:interval-to-point"])
    assert isinstance(report.witness, AmbiguousLift)
    assert report.stats["missing"] == 0
    # a vertex inclusion has a missing lift over the nondegenerate edge
    report = covering_check(named_maps["vertex-into-interval"])
    assert report.witness == MissingLift(1, 0, 1, 0)
    assert report.stats["ambiguous"] == 0


def test_kan_witness_golden(named_maps):
    report = kan_check(named_maps["curated:interval-to-point"])
    assert report.witness == MissingHornFiller(2, 0, 0, ((1, 0), (2, 1)))
    assert revalidate_witness(named_maps["curated:interval-to-point"], report)


def test_kan_bound_parameter(named_maps):
    h = named_maps["curated:interval-to-point"]
    assert kan_check(h, bound=1).verdict
    assert not kan_check(h, bound=2).verdict
    assert not kan_check(h, bound=99).verdict  # clamps to the truncation


def test_checks_match_oracles_on_generated():
    for label, h in _valid_generated(seed=31, count=60):
        report = separable_via_lifting(h)
        verdict, first = orc.naive_separable_lifting(h)
        assert report.verdict == verdict, label
        if not verdict:
            w = report.witness
            assert first == (w.degree, w.vertex, w.base, w.anchor, w.first, w.second)

        report = covering_check(h)
        verdict, first = orc.naive_covering(h)
        assert report.verdict == verdict, label
        if not verdict:
            w = report.witness
            got = (
                ("missing", w.degree, w.vertex, w.base, w.anchor)
                if isinstance(w, MissingLift)
                else ("ambiguous", w.degree, w.vertex, w.base, w.anchor, w.first, w.second)
            )
            assert first == got, label

        report = kan_check(h)
        verdict, first = orc.naive_kan(h)
        assert report.verdict == verdict, label
        if not verdict:
            w = report.witness
            assert first == (w.degree, w.horn, w.base, w.faces), label

        assert separable_direct(h).verdict == separable_via_lifting(h).verdict, label


def test_witnesses_revalidate_on_generated():
    for label, h in _valid_generated(seed=37, count=60):
        for report in (
            separable_via_lifting(h),
            separable_direct(h),
            covering_check(h),
            kan_check(h),
            sk.trivial_covering_check(h),
        ):
            if not report.verdict:
                assert revalidate_witness(h, report), (label, report.check)


def test_tampered_witnesses_fail_revalidation(named_maps):
    h = named_maps["curated:interval-to-point"]
    report = separable_via_lifting(h)
    bad = dataclasses.replace(report.witness, second=report.witness.first)
    assert not revalidate_witness(h, dataclasses.replace(report, witness=bad))
    report = kan_check(h)
    w = report.witness
    bad = dataclasses.replace(w, faces=((1, 1), (2, 1)))
    assert not revalidate_witness(h, dataclasses.replace(report, witness=bad))
    report = covering_check(named_maps["vertex-into-interval"])
    bad = dataclasses.replace(report.witness, base=0)
    assert not revalidate_witness(
        named_maps["vertex-into-interval"], dataclasses.replace(report, witness=bad)
    )


def test_separability_agreement_reports(named_maps):
    for name, h in named_maps.items():
        agreement = separability_agreement(h)
        assert agreement.agree, name
        doc = agreement.to_doc()
        assert doc["equivalence"] == "separability"
        assert doc["agree"] is True


def test_covering_agreement_reports(named_maps):
    out = covering_agreement(named_maps["curated:interval-to-point"])
    assert out.out_of_hypothesis
    assert out.agree is None and out.ambiguous_only is None
    assert "agree" not in out.to_doc()

    out = covering_agreement(named_maps["curated:circle-nerve-projection"])
    assert not out.out_of_hypothesis
    assert out.agree is True
    assert out.ambiguous_only is True
    assert out.to_doc()["ambiguous_only"] is True

    out = covering_agreement(named_maps["curated:cyclic-double-cover"])
    assert out.agree is True and out.direct.verdict and out.covering.verdict


def test_kan_failures_of_coverings_never_missing(named_maps):
    # on Kan maps a failed covering check is always an ambiguity
    for label, h in _valid_generated(seed=41, count=40):
        if not kan_check(h).verdict:
            continue
        report = covering_check(h)
        assert report.stats["missing"] == 0, label
        if not report.verdict:
            assert isinstance(report.witness, AmbiguousLift), label


def test_implication_chain(named_maps):
    cases = list(named_maps.values()) + [h for _, h in _valid_generated(43, 50)]
    for h in cases:
        trivial = sk.trivial_covering_check(h).verdict
        cov = covering_check(h).verdict
        kan = kan_check(h).verdict
        sep = separable_direct(h).verdict
        if trivial:
            assert cov
        if cov:
            assert kan and sep


def test_verdicts_invariant_under_degeneracy_closure(named_maps):
    # square-type checks are invariant over the whole extended range; the
    # kan verdict is a statement about the stored range, so it is compared
    # at the original bound
    cases = list(named_maps.items()) + _valid_generated(seed=47, count=40)
    for name, h in cases:
        old = h.source.truncation
        ext = extend_map(h, old + 1)
        assert separable_direct(ext).verdict == separable_direct(h).verdict, name
        assert (
            separable_via_lifting(ext).verdict == separable_via_lifting(h).verdict
        ), name
        assert covering_check(ext).verdict == covering_check(h).verdict, name
        assert (
            sk.trivial_covering_check(ext).verdict
            == sk.trivial_covering_check(h).verdict
        ), name
        assert kan_check(ext, bound=old).verdict == kan_check(h).verdict, name
        assert (
            injection_cartesian_check(diagonal(ext).delta).verdict
            == injection_cartesian_check(diagonal(h).delta).verdict
        ), name


def test_kan_verdict_is_about_the_stored_range(named_maps):
    # a closure extension can genuinely fail new horns at the added degree:
    # the horn below uses only old cells but its filler in the full product
    # would be a nondegenerate shuffle cell the closure does not contain
    h = dict(sk.curated_instances(2))["curated:circle-nerve-projection"]
    assert kan_check(h).verdict
    ext = extend_map(h, 3)
    report = kan_check(ext)
    assert not report.verdict
    assert report.witness.degree == 3
    assert revalidate_witness(ext, report)
    # the genuine depth-3 product does fill them
    full = dict(sk.curated_instances(3))["curated:circle-nerve-projection"]
    assert kan_check(full).verdict


def test_check_report_docs(named_maps):
    report = covering_check(named_maps["vertex-into-interval"])
    doc = report.to_doc()
    assert doc["check"] == "covering"
    assert doc["verdict"] is False
    assert doc["witness"]["kind"] == "missing_lift"
    assert doc["stats"]["missing"] >= 1
    assert bool(report) is False
    assert bool(covering_check(named_maps["curated:fold-interval"])) is True


def test_empty_source_is_separable_everywhere(zoo):
    h = sk.terminal_map(sk.empty_sset(3))
    assert separable_direct(h).verdict
    assert separable_via_lifting(h).verdict
    assert covering_check(h).verdict  # no vertices downstairs to anchor
    assert kan_check(h).verdict
