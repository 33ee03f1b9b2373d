"""
Building finite truncated simplicial sets and validating them
==============================================================

"""

import json

from ssetkit import build_standard, disjoint_union
from ssetkit.core import validate
from ssetkit.io import dumps_canonical, object_from_doc, object_to_doc
from ssetkit.standard import parse_spec

# Standard shapes come from small text specs.  A spec names the shape and
# build_standard unrolls it into explicit face and degeneracy tables up to
# a chosen truncation degree.
triangle = build_standard(parse_spec("simplex:2"), 3)
circle = build_standard(parse_spec("circle"), 3)

print("triangle cells per degree:", triangle.cells)
print("circle cells per degree:  ", circle.cells)

# Degree n cells of the 2-simplex are the weakly increasing (n+1)-tuples
# in {0,1,2}; degree 1 has the three edges plus three degenerate loops.
print("triangle degree-1 faces d0, d1:", triangle.face[1])

# validate checks every simplicial identity on the stored tables and
# reports whether the top degree is a buffer (no nondegenerate cells, so
# horn and lifting checks below the truncation are not cut off by it).
report = validate(circle)
print("circle valid:", report.ok, "- has buffer degree:", report.has_buffer)

# Tampering with one degeneracy entry is caught with a pinpointed witness.
broken = build_standard(parse_spec("circle"), 3)
broken.degeneracy[0][0][0] ^= 1
report = validate(broken)
print("tampered circle valid:", report.ok)
print("violated law:", report.failure.kind, report.failure.detail)

# Objects round trip through a canonical JSON document: emit, parse, emit
# is byte identical.
both = disjoint_union(triangle, circle)
payload = dumps_canonical(object_to_doc(both))
again = object_from_doc(json.loads(payload))
print("round trip exact:", again == both)
print("document size:", len(payload), "bytes")
