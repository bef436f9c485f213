"""Generators, relations, and dimensions of the formal spaces.

The formal double Eisenstein space of weight K is spanned by symbols
G(k;d), G(k1,k2;d1,d2) and P(k1,k2;d1,d2), subject to two expansions of
every P: a harmonic-product (stuffle) row and an integral-shuffle row.
Row-reducing these rows answers dimension and membership questions
exactly, over the rationals.
"""

from doubleeis import (
    FormalElement,
    G1,
    dimension,
    enumerate_generators,
    normal_form,
    relation_system,
)
from doubleeis.spaces import shuffle_row, stuffle_row

print("Weight 2 generators:", [str(g) for g in enumerate_generators("E", 2)])
print("stuffle row:", stuffle_row(1, 1, 0, 0).to_text(), " =  0")
print("shuffle row:", shuffle_row(1, 1, 0, 0).to_text(), " =  0")
print()

diff = stuffle_row(1, 1, 0, 0) - shuffle_row(1, 1, 0, 0)
print("their difference:", diff.to_text(), " =  0,  so G(2;0) = G(1;1)")
print("normal form of G(2;0) - G(1;1):", normal_form(diff).to_text())
print()

print("Eisenstein-space dimensions:")
for weight in range(1, 13):
    print(f"  weight {weight:2d}: dim = {dimension('E', weight)}")
print()

print("Double zeta dimensions follow floor((k+1)/2):")
print("  ", [dimension("Z", k) for k in range(1, 13)])
print()

sys5 = relation_system("E", 5)
print(f"Weight 5: {len(sys5.basis)} generators, rank {sys5.rank}, dimension {sys5.dimension}")
rep = normal_form(FormalElement.single(G1(5, 0)) - FormalElement.single(G1(1, 4)))
print("normal form of G(5;0) - G(1;4):", rep.to_text())
