"""
Interior, closure and cluster points on a small space
=====================================================

A generalized topology only has to contain the empty set and be closed
under unions.  On three points the family {∅, {a,b}, {b,c}, X} qualifies,
but {a,b} ∩ {b,c} = {b} is missing, so it is not a topology.
"""

from gtspace import core

space = core.validate_gt(3, [0b000, 0b011, 0b110, 0b111], labels="abc")
print(space)
print("topology?", core.is_topology(space))

###############################################################################
# Operators take and return bit masks; ``label_set`` turns them back into
# labels.

b = space.mask_from_labels(["b"])
for name, op in [("interior", core.interior), ("closure", core.closure),
                 ("derived set", core.derived_set)]:
    print(f"{name:>12} of {{b}}:", space.label_set(op(space, b)))

###############################################################################
# Closed sets are complements of opens.  {b} is neither open nor closed,
# and its closure is the whole space because X is the only closed set
# containing b.

print("closed sets:", [space.label_set(c) for c in space.closed_sets])
print("open {b}?", core.is_open(space, b), " closed {b}?", core.is_closed(space, b))

###############################################################################
# N(x), the intersection of every open set around x.

for x, label in enumerate(space.labels):
    print(f"N({label}) =", space.label_set(core.neighborhood_core(space, x)))
