"""
Connected components and trivial coverings
==========================================

"""

from ssetkit import build_standard, curated_instances, disjoint_union
from ssetkit.components import pi0, trivial_covering_check
from ssetkit.maps import fold_map
from ssetkit.standard import parse_spec

# pi0 partitions every degree into connected components.  Components are
# generated by the two endpoints of each edge, then pushed up to all
# degrees through the vertex of each cell.
interval = build_standard(parse_spec("simplex:1"), 2)
two_pieces = disjoint_union(interval, build_standard(parse_spec("circle"), 2))
part = pi0(two_pieces)
print("components:", part.count)
print("vertex classes:", part.vertex_class)

# A trivial covering is a projection from a disjoint union of copies of
# the base.  The check pairs each component of the source with the target
# through the map, degree by degree, and demands a bijection on each.
fold = fold_map(interval)
report = trivial_covering_check(fold)
print("fold of two intervals is a trivial covering:", report.verdict)

# The connected double cover of the circle is a covering map but not a
# trivial one: the total space is connected, so a single component cannot
# biject onto the base twice.  The witness names the first clash.
named = dict(curated_instances(3))
cover = named["curated:cyclic-double-cover"]
report = trivial_covering_check(cover)
print("double cover trivial:", report.verdict)
print("witness:", report.witness)

# Per degree statistics show how far the pairing got before clashing.
print("stats:", report.stats)
