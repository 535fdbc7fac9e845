"""
Subspaces and the relative interior
===================================

Tracing every open set on a carrier gives a subspace.  Closures commute
with the trace; interiors only satisfy an inclusion, and this space shows
the inclusion can be strict.
"""

from gtspace import core, subspace

space = core.validate_gt(3, [0b000, 0b011, 0b110, 0b111], labels="xyz")
carrier = space.mask_from_labels("xy")
emb = subspace.induce_subspace(space, carrier)
print("subspace:", emb.child)

y = space.mask_from_labels("y")
print("I({y})            =", space.label_set(core.interior(space, y)))
print("I'({y})           =", space.label_set(subspace.relative_interior(emb, y)))
print("I(X')             =", space.label_set(core.interior(space, carrier)))

###############################################################################
# Closed sets of the subspace are exactly traces of closed sets of the
# parent; ``closed_trace_witness`` returns one such parent set.

for labels in ["", "x", "y", "xy"]:
    b = space.mask_from_labels(labels)
    f = subspace.closed_trace_witness(emb, b)
    shown = None if f is None else space.label_set(f)
    print(f"{{{','.join(labels)}}} closed in X'? witness F = {shown}")
