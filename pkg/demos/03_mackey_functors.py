"""Mackey functors as additive functors on spans, and the round trip through permutative categories."""

from mackeypc.abgroups import AbGroup
from mackeypc.catalog import group, mixed_torsion_mackey
from mackeypc.gsets import class_orbit, point_gset
from mackeypc.machine import kg_pi0, mackey_to_pcfunctor, suspension_pcfunctor
from mackeypc.mackey import burnside_mackey, constant_mackey, mackey_iso, orbit_maps, validate_mackey

c2 = group("C2")
print("orbit maps of C2 (i, j, p):", orbit_maps(c2))

z = constant_mackey(c2, AbGroup.free(1))
print("constant Z values:", z.describe(), "valid:", validate_mackey(z).ok)
# restriction to the trivial subgroup is the identity, transfer multiplies by the index
print("R", z.R((1, 0, 1)).matrix.tolist(), "T", z.T((1, 0, 1)).matrix.tolist())

m = mixed_torsion_mackey(c2)
print("mixed torsion:", m.describe())
back = kg_pi0(mackey_to_pcfunctor(m))
print("round trip isomorphic:", mackey_iso(back, m) is not None)

# the suspension of a G-set recovers the Burnside functor it represents
for x in [point_gset(c2), class_orbit(c2, 0)]:
    ok = mackey_iso(kg_pi0(suspension_pcfunctor(x)), burnside_mackey(x)) is not None
    print(f"suspension of a {x.n}-point C2-set:", ok)
