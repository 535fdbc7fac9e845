"""
Exhaustive verification and counterexample mining
=================================================

Every registered statement is checked on every strong GT-space and every
surjection up to three points.  The miner then looks for the smallest
mapping separating two classes; quotient-but-not-pseudo-open first shows
up with four domain points.
"""

from gtspace.enumeration import EnumBounds
from gtspace.verify import PRESETS, check_witness, confirm_minimal, mine_preset, run_suite

report = run_suite(EnumBounds(3, 3))
print(report.render_text())

###############################################################################
# Mining each shipped preset.

for name in PRESETS:
    w = mine_preset(name, EnumBounds(4, 3))
    print(f"{name:<36} size={w.size} verified={check_witness(w)} minimal={confirm_minimal(w)}")
    print("   ", w.to_doc()["mapping"])
