"""
Stabilizer indices, tidiness and the scale
==========================================

With thickness q_s per panel type, the index of the stabilizer of a chamber
c in that of c and g^n(c) is the product of the q's along a minimal gallery.
"""

from flatbldg import (
    SectorRef,
    Thickness,
    build_system,
    make_gem,
    moller_tidiness_check,
    scale_with_factorization,
    sector_translation,
)

# a tree: A~1 with valencies 3 and 4
W = build_system("A~1")
q = Thickness.parse(W, "2,3")
rep = moller_tidiness_check(W.identity(), W.element("s0 s1"), 4, q)
print("tree translation:", rep.indices, rep.verdict)

# a reflection is not a translation; the check reports without a verdict
W = build_system("A~2")
q = Thickness.uniform(W, 2)
rep = moller_tidiness_check(W.identity(), W.gen("s0"), 4, q)
print("reflection:", rep.indices, rep.verdict)

# the scale of t_{R,c} factors over pairs of opposite roots
gem = make_gem(W, "s0")
c = gem.chambers[0]
t = sector_translation(SectorRef(gem, c))
rep = scale_with_factorization(t, gem, c, q)
print("scale", rep.scale)
for fr, e in rep.factors:
    print(f"  gamma {fr.gamma.vec}: s = {fr.s}, exponent {e}")

# non-simply-laced: C~2 with different thickness on the long and short walls
W = build_system("C~2")
gem = make_gem(W, "s0")
q = Thickness.parse(W, "2,3,5")
t = sector_translation(SectorRef(gem, gem.chambers[0]))
rep = scale_with_factorization(t, gem, gem.chambers[0], q)
print("C~2 scale", rep.scale, "=", " * ".join(f"{fr.s}^{e}" for fr, e in rep.factors))
