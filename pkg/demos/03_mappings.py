"""
Classifying a mapping
=====================

The four-point mapping below is g-quotient but not g-pseudo-open: the
fiber over b sits inside the open set {2,3}, whose image {b,c} has empty
interior in the indiscrete codomain.
"""

from gtspace import core
from gtspace.mapping import classify_full, make_mapping, quotient_gt

dom = core.validate_gt(4, [0, 0b0110, 0b1111])
cod = core.validate_gt(3, [0, 0b111], labels="abc")
f = make_mapping(dom, cod, [0, 1, 2, 2])

vec = classify_full(f)
for cls in ("continuous", "open", "closed", "pseudo_open", "quotient"):
    print(f"{cls:>12}: {vec.conditions(cls)}")
print("hereditary:", vec.hereditary)
print("disagreements:", vec.disagreements())

###############################################################################
# The quotient GT is the finest codomain structure making the table
# g-continuous.  Here only ∅ and Y have open preimages.

nu = quotient_gt(dom, f.table, 3, labels="abc")
print("quotient GT:", nu)
