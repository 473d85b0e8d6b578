"""Tables of marks and Burnside ring products for a few small groups."""

import numpy as np

from mackeypc.burnside import burnside_ring, mark_hom, ring_element, table_of_marks
from mackeypc.catalog import group
from mackeypc.groups import conjugacy_classes_of_subgroups

for name in ["C2", "C3", "S3"]:
    g = group(name)
    classes = conjugacy_classes_of_subgroups(g)
    print(f"== {name}: {len(classes)} subgroup classes, orders {[c.representative.order for c in classes]}")
    m = table_of_marks(g)
    print(m)  # row i: fixed points of G/H_i under each H_j

    ring = burnside_ring(g)
    n = ring.rank
    e = np.eye(n, dtype=np.int64)
    # the free orbit squared: |G| copies of itself
    sq = ring.multiply(e[0], e[0])
    print("[G/e]^2 =", sq.tolist())
    # marks turn products into pointwise products
    print("marks of [G/e]^2 =", mark_hom(ring_element(g, sq)).tolist(), "=", (m[0] * m[0]).tolist())
