"""
Two characterizations of separable maps, checked against each other
===================================================================

"""

from ssetkit import GenConfig, curated_instances, gen_morphism
from ssetkit.checks import (
    covering_agreement,
    separability_agreement,
    separable_direct,
    separable_via_lifting,
)
from ssetkit.core import validate
from ssetkit.limits import diagonal
from ssetkit.maps import validate_map

# A map is separable when distinct lifts of a cell can already be told
# apart by their anchor vertices.  There are two ways to say this, and
# both are implemented.
named = dict(curated_instances(3))
cover = named["curated:cyclic-double-cover"]

# Way one, by lifting: for each base cell and anchor there is at most one
# compatible lift (uniqueness half of the covering condition).
print("lifting says:", separable_via_lifting(cover).verdict)

# Way two, by the diagonal: the relative diagonal into the fiber product
# of the map with itself lands in well separated components.
dd = diagonal(cover)
print("fiber product cells:", dd.fiber_product.object.cells)
print("diagonal says:", separable_direct(cover).verdict)

# separability_agreement runs both and compares.
rep = separability_agreement(cover)
print("agree:", rep.agree)

# The projection from circle x nerve(Z/2) to the circle fails both ways,
# and the reports carry matching refutations.
proj = named["curated:circle-nerve-projection"]
rep = separability_agreement(proj)
print("projection separable:", rep.direct.verdict, rep.lifting.verdict)
print("lifting witness:", rep.lifting.witness)

# For horn filling maps, separable and covering are the same thing.
# covering_agreement checks that hypothesis first and then compares; the
# comparison also verifies that covering failures of such maps are always
# ambiguity witnesses, never missing lifts.
rep = covering_agreement(proj)
print("kan hypothesis holds:", not rep.out_of_hypothesis)
print("covering == separable:", rep.agree, "- ambiguous only:", rep.ambiguous_only)

# The same comparison over a generated instance.  Generated corpora
# include deliberately corrupted maps, so validate before checking, just
# as the campaign does.
cfg = GenConfig(seed=7)
for t in range(20):
    family, h = gen_morphism(cfg, trial=t)
    if validate(h.source).ok and validate(h.target).ok and validate_map(h).ok:
        break
print("first valid generated instance: trial", t, "family:", family)
rep = covering_agreement(h)
if rep.out_of_hypothesis:
    print("out of hypothesis (the map does not fill horns)")
else:
    print("covering == separable:", rep.agree)
