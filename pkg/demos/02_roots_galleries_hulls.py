"""
Roots, galleries and convex hulls
=================================

A root is a half-space of chambers.  Here it is an integer vector, and a
chamber w lies in it when w^-1 maps the vector to a positive one.
"""

from flatbldg import (
    Gallery,
    build_system,
    convex_hull,
    enumerate_roots_meeting_ball,
    is_minimal,
    root_contains,
    separating_roots,
)

W = build_system("C~2")
one = W.identity()
w = W.element("s0 s1 s2 s1")

# the walls between two chambers are exactly as many as the distance
walls = separating_roots(one, w)
print(len(walls), "walls between 1 and", " ".join(w.word()))
for beta in sorted(walls, key=lambda b: b.vec):
    print("  ", beta.vec, "contains 1:", root_contains(beta, one), "contains w:", root_contains(beta, w))

# a gallery that crosses a wall twice is not minimal; the certificate names it
g = Gallery(one, "s0 s1 s0 s1 s0")
print(is_minimal(g), is_minimal(g, "by-walls"))

# two ways to the convex hull, one by minimal galleries, one by roots
pts = [one, W.element("s0 s1 s2"), W.element("s2 s1")]
a = convex_hull(pts, "gallery-closure")
b = convex_hull(pts, "root-intersection")
print("hull sizes:", len(a), len(b), "equal:", a == b)

# finite types: a big enough ball meets every root
print("A2 roots:", len(enumerate_roots_meeting_ball(build_system("A2"), 3)))
