"""
Coxeter groups as integer matrices
==================================

Elements of W are stored as their action on simple roots, so equality is
matrix equality and no word problem has to be solved.
"""

from flatbldg import build_system, descents, extend_diagram_automorphism, length, reduced_word

# the affine group of type A~2: three generators, every pair braids with m = 3
W = build_system("A~2")
print(W.generators, W.kind, "null vector", W.affine_data.null_vector)

# words multiply left to right; the braid relation makes these equal
x = W.element("s0 s1 s0")
y = W.element("s1 s0 s1")
print("s0 s1 s0 == s1 s0 s1:", x == y)

# reduced words are the lexicographically smallest ones
w = W.element("s2 s1 s0 s0 s1 s2 s0 s1")
print("word:", reduced_word(w), "length:", length(w), "left descents:", sorted(descents(w)))

# a simple reflection acting on a simple root
print("s0(alpha_s1) =", W.gen("s0")(W.simple_root("s1")))

# rotating the affine diagram is a group automorphism
rot = extend_diagram_automorphism(W, {"s0": "s1", "s1": "s2", "s2": "s0"})
print("rotate(s0 s1) =", reduced_word(rot(W.element("s0 s1"))))

# JSON input is accepted too; "inf" marks an infinite edge
line = build_system('{"generators": ["a", "b"], "m": [[1, "inf"], ["inf", 1]]}')
print(line.kind, line.cartan)
