"""Deciding pivot-minor containment and replaying the evidence.

A pivot-minor of G is anything reachable by pivoting edges and deleting
vertices.  The oracle answers by recursion over one vertex at a time:
either the vertex is deleted or it is contracted (pivot an incident edge,
then delete).  A positive answer comes with a step sequence that anyone
can replay without trusting the search.
"""

import json

from pivotminors import (
    Certificate,
    apply_sequence,
    build_certificate,
    cycle_graph,
    contains_pivot_minor,
    find_pivot_minor_sequence,
    is_isomorphic,
    named_graph,
    to_graph6,
    verify_certificate,
    wheel_graph,
)

w5 = wheel_graph(5)
c5 = cycle_graph(5)
k3 = named_graph("K3")

print("W5 contains C5:", bool(contains_pivot_minor(w5, c5)))
print("C5 contains K3:", bool(contains_pivot_minor(c5, k3)))
print("C5 contains C4:", bool(contains_pivot_minor(c5, named_graph("C4"))))

steps, _ = find_pivot_minor_sequence(c5, k3)
print("steps from C5 down to a triangle:")
for step in steps:
    print("  ", step)
out = apply_sequence(c5, steps)
print("replayed result:", to_graph6(out),
      "isomorphic to K3:", is_isomorphic(out, k3))

# certificates pin down where the obstruction sits (here: all of W5)
# and how it shrinks to the target, so a verifier can replay everything
w5_steps, iso = find_pivot_minor_sequence(w5, c5)
cert = build_certificate(w5, range(w5.n), w5_steps, iso, c5,
                         obstruction_name="W5")
report = verify_certificate(w5, cert, c5)
print("certificate on W5 verifies:", report.ok)

blob = json.dumps(cert.to_json(), indent=2)
print("serialized certificate:")
print(blob)

# tampering is caught at the exact failing step
data = cert.to_json()
data["steps"][0] = {"op": "pivot", "u": 0, "v": 2}
bad = Certificate.from_json(data)
report = verify_certificate(w5, bad, c5)
print("tampered certificate verdict:", report.ok, "-", report.reason)
