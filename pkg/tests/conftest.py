"""Shared fixtures: a small object zoo, the named maps, and the campaign."""

import pytest

import ssetkit as sk
from ssetkit.groupoids import codiscrete_groupoid, cyclic_group_groupoid, nerve
from ssetkit.standard import (
    boundary_spec,
    build_standard,
    circle_spec,
    horn_spec,
    simplex_spec,
)


@pytest.fixture(scope="session")
def zoo():
    """Name -> object, everything at truncation 3."""
    n = 3
    return {
        "empty": sk.empty_sset(n),
        "point": build_standard(simplex_spec(0), n),
        "interval": build_standard(simplex_spec(1), n),
        "triangle": build_standard(simplex_spec(2), n),
        "circle": build_standard(circle_spec(), n),
        "boundary2": build_standard(boundary_spec(2), n),
        "horn21": build_standard(horn_spec(2, 1), n),
        "nerve-z2": nerve(cyclic_group_groupoid(2), n),
        "codiscrete2": nerve(codiscrete_groupoid(2), n),
        "two-points": sk.discrete_sset(2, n),
    }


@pytest.fixture(scope="session")
def named_maps():
    """The curated fixture maps plus a vertex inclusion, at truncation 3."""
    maps = dict(sk.curated_instances(3))
    interval = build_standard(simplex_spec(1), 3)
    maps["vertex-into-interval"] = sk.point_inclusion(interval, 0)
    return maps


@pytest.fixture(scope="session")
def campaign500():
    """The acceptance campaign: 500 seeded trials plus curated fixtures."""
    return sk.run_campaign(sk.GenConfig(seed=42, trials=500))
