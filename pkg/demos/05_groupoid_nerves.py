"""
Nerves of finite groupoids and fundamental groupoid presentations
=================================================================

"""

from ssetkit.checks import kan_check
from ssetkit.groupoids import (
    codiscrete_groupoid,
    cyclic_group_groupoid,
    nerve,
    pi1_presentation,
)
from ssetkit.maps import terminal_map

# The nerve of a groupoid stores composable strings of arrows; identity
# arrows are stripped to a canonical form, so cells count nondegenerate
# strings plus the degeneracies the tables require.
z3 = cyclic_group_groupoid(3)
N = nerve(z3, 3)
print("nerve of Z/3, cells per degree:", N.cells)

# The inner face of a 2-cell composes the two arrows.  For a cyclic group
# the edge indices are the nonidentity residues, so composition is visible
# as addition mod 3 in the face table.
print("degree-2 inner faces:", N.face[2][1])

# Nerves of groupoids fill every horn.
print("nerve is a Kan complex:", kan_check(terminal_map(N)).verdict)

# The codiscrete groupoid on two objects has exactly one arrow in each
# direction; its nerve doubles each degree.
pair = nerve(codiscrete_groupoid(2), 3)
print("codiscrete nerve cells:", pair.cells)

# pi1_presentation reads a presentation of the fundamental groupoid off
# degrees <= 2 of any object: one generator per 1-cell, relations from
# degenerate edges and from triangles.
pres = pi1_presentation(N)
print(pres.format_text())
