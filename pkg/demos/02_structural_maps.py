"""The three structural maps and how they interact.

pi projects double Eisenstein symbols onto double zeta symbols, sigma
splits it (pi o sigma is the identity from weight 3 on), and the
derivation partial raises the weight by two, mirroring q d/dq on the
realized series.
"""

from doubleeis import (
    FormalElement,
    G1,
    G2,
    Z2,
    eisenstein_relations,
    enumerate_generators,
    is_zero_in_space,
    map_partial,
    map_pi,
    map_sigma,
    zeta_relations,
)

g = FormalElement.single(G1(3, 0))
print("pi(G(3;0)) =", map_pi(g).to_text())
print("pi(G(1;2)) =", map_pi(FormalElement.single(G1(1, 2))).to_text())
print("pi(G(1,1;1,0)) =", map_pi(FormalElement.single(G2(1, 1, 1, 0))).to_text())
print()

z = FormalElement.single(Z2(2, 1))
print("sigma(Z(2,1)) =", map_sigma(z).to_text())
print("pi(sigma(Z(2,1))) =", map_pi(map_sigma(z)).to_text())
print("  equals Z(2,1) modulo relations:", is_zero_in_space(map_pi(map_sigma(z)) - z))
print()

print("partial(G(2;0)) =", map_partial(FormalElement.single(G1(2, 0))).to_text())
print("partial(G(1,1;0,0)) =", map_partial(FormalElement.single(G2(1, 1, 0, 0))).to_text())
print()

print("Well-definedness: the maps send every relation row to zero.")
for weight in (3, 4, 5):
    rows = eisenstein_relations(weight)
    ok_pi = all(is_zero_in_space(map_pi(r)) for r in rows)
    ok_partial = all(is_zero_in_space(map_partial(r)) for r in rows)
    print(f"  weight {weight}: pi kills {len(rows)} rows: {ok_pi}; partial: {ok_partial}")
for weight in (4, 6):
    ok = all(is_zero_in_space(map_sigma(r)) for r in zeta_relations(weight))
    print(f"  weight {weight}: sigma kills the zeta rows: {ok}")
print()

print("The splitting on all weight-7 zeta generators:")
for gen in enumerate_generators("Z", 7):
    e = FormalElement.single(gen)
    assert is_zero_in_space(map_pi(map_sigma(e)) - e)
print("  pi o sigma = id on all of them.")
