"""Checking permutative category axioms, lax functors and a deliberately broken example."""

from mackeypc.catalog import CLOSED_TRIPLES, PERMCATS, permcat
from mackeypc.closed import check_curry, enumerate_lax_functors
from mackeypc.permcat import validate_lax, validate_permcat
from mackeypc.serialize import permcat_from_json

for name in PERMCATS:
    print(f"{name:24s}", "ok" if validate_permcat(permcat(name)).ok else "FAILS")

a, b = "discrete(N<=2)", "discrete(Z/2)"
fs = enumerate_lax_functors(permcat(a), permcat(b))
print(f"{len(fs)} lax functors {a} -> {b}, all valid:", all(validate_lax(f).ok for f in fs))

for a, b, c in CLOSED_TRIPLES[-3:]:
    print("currying", (a, b, c), check_curry(permcat(a), permcat(b), permcat(c)).ok)

# two objects, Z/2 automorphisms on object 1, but gamma(1, 0) is the nonidentity morphism 3
bad = permcat_from_json({
    "name": "bad", "sum": [[0, 1], [1, 0]], "morphisms": [[0, 0], [0, 0], [1, 1], [1, 1]], "identities": [0, 2],
    "composition": [[0, 0, 0], [0, 1, 1], [1, 0, 1], [1, 1, 0], [2, 2, 2], [2, 3, 3], [3, 2, 3], [3, 3, 2]],
    "morphism_sum": [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
    "symmetry": [[0, 2], [3, 1]]})
rep = validate_permcat(bad)
print("broken example ok:", rep.ok, "first failure:", rep.failures[0].axiom)
