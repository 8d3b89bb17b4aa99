"""
Gems, sectors and the translations t_{R,c}
==========================================
"""

from flatbldg import (
    SectorRef,
    ball,
    build_system,
    make_gem,
    parallel_dist,
    roots_cutting_gem,
    sector_membership,
    sector_translation,
)
from flatbldg.affine import fundamental_translation
from flatbldg.chambers import act

W = build_system("A~2")
gem = make_gem(W, "s0")
print(len(gem.chambers), "chambers in the gem,", len(roots_cutting_gem(gem)), "roots cut it")

# every chamber of the ball projects to exactly one apex
chambers = ball(W, 5)
for c in gem.chambers:
    sec = SectorRef(gem, c)
    size = sum(sector_membership(sec, d) for d in chambers)
    agree = all(sector_membership(sec, d) == sector_membership(sec, d, "projection")
                for d in chambers)
    print(f"apex {' '.join(c.word()) or '1':>8}: {size:2d} chambers, modes agree {agree}")

# the fundamental translations fix one wall of the sector and push the other in
sec = SectorRef(gem, gem.chambers[2])
for alpha in sec.roots:
    t = fundamental_translation(sec, alpha)
    moves = [parallel_dist(b, act(t.elem, b)) for b in sec.roots]
    print("t_{R,c,alpha} lattice", t.lattice, "shifts", moves)

# the sector translation and the one at the opposite apex are inverse
t = sector_translation(sec)
u = sector_translation(sec.opposite())
print("t_{R,c} * t_{R,d} == 1:", (t * u).elem == W.identity())
