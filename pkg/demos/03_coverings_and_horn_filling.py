"""
Covering maps and horn filling
==============================

"""

from ssetkit import curated_instances, cyclic_cover_projection
from ssetkit.checks import covering_check, kan_check
from ssetkit.maps import terminal_map

# A covering map lifts each cell uniquely once a lift of its anchor vertex
# is fixed.  covering_check scans every (degree, vertex slot, base cell,
# anchor lift) square and demands exactly one compatible lift.
triple = cyclic_cover_projection(3, 3)
report = covering_check(triple)
print("3-fold cyclic cover is a covering:", report.verdict)
print("squares checked:", report.stats["squares"])

# Collapsing an interval to a point fails: both endpoints lift the single
# base vertex, so the lift of the base edge over anchor 0 is ambiguous.
named = dict(curated_instances(3))
collapse = named["curated:interval-to-point"]
report = covering_check(collapse)
print("collapse is a covering:", report.verdict)
print("witness:", report.witness)

# kan_check asks instead for at least one filler of every horn over every
# base cell, a weaker right lifting property.  The collapse fails that as
# well, because the horn with two distinct endpoint edges has no filling
# 2-cell in the interval.
report = kan_check(collapse)
print("collapse fills horns:", report.verdict)
print("witness:", report.witness)

# Degree bounds make the search explicit: the same map fills every horn
# of degree 1, and the failure above lives at degree 2.
print("bounded to degree 1:", kan_check(collapse, bound=1).verdict)

# An object is a Kan complex when its terminal map fills horns.  The
# one-loop circle is not one: the horn made of the loop twice has no
# filling 2-cell, because the model stores no composite for the loop.
report = kan_check(terminal_map(triple.target))
print("circle is a Kan complex:", report.verdict)
print("unfillable horn:", report.witness)
