"""
Eigenfactors and the root system of a flat group
================================================

Each root cutting the gem gives one eigenfactor label and one integer
valued homomorphism rho on the translation lattice.
"""

from flatbldg import SectorRef, Thickness, build_system, eigenfactor_census, flat_root_system, make_gem
from flatbldg.affine import lattice_basis
from flatbldg.flat import value_on_basis

W = build_system("C~2")
gem = make_gem(W, "s0")
c = gem.chambers[0]

# sweep all sign vectors along a minimal gallery to the opposite chamber
census = eigenfactor_census(SectorRef(gem, c))
print(len(census.by_signs), "sign vectors,", len(census.labels), "distinct labels")
print("every root realized:", all(census.realized.values()))

# rho_gamma on the lattice basis, with its period m and scale base s
q = Thickness.parse(W, "2,3,2")
print("basis:", [" ".join(t.elem.word()) for t in lattice_basis(W)])
for fr in flat_root_system(gem, c, q):
    print(f"gamma {str(fr.gamma.vec):12} m={fr.m} s={fr.s} rho on basis {value_on_basis(fr)}")
