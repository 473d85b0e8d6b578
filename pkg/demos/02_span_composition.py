"""Composing spans of G-sets: lexicographic pullbacks, units, and where strictness stops."""

from mackeypc.catalog import group
from mackeypc.gsets import GMap, class_orbit, disjoint_union, identity_map, point_gset
from mackeypc.spans import canonicalize_span, compose_spans, identity_span, make_span, transitive_span_basis

c2 = group("C2")
reg, pt = class_orbit(c2, 0), point_gset(c2)

# pt <- C2 -> pt, composed with itself: the middle is C2 x C2, two free orbits
s = make_span(GMap(reg, pt, (1, 1)), GMap(reg, pt, (1, 1)))
ss = compose_spans(s, s)
print("middle size", ss.middle.n, "orbit keys", canonicalize_span(ss).keys)

# identity spans are strict units
print("unit laws:", compose_spans(identity_span(pt), s).left == s.left,
      compose_spans(s, identity_span(pt)).right == s.right)

# transitive spans G/C2 <- G/L -> G/C2 over S3
s3 = group("S3")
o = class_orbit(s3, 1)
print("S3 transitive span classes G/C2 -> G/C2:", transitive_span_basis(o, o))

# associativity holds up to isomorphism but not always as data:
# an identity right leg on t keeps u's middle verbatim in t o u
c1 = group("C1")
one = point_gset(c1)
two = disjoint_union(one, one)
const = GMap(two, one, (1, 1))
s = make_span(const, const)
t = make_span(const, identity_map(two))
u = make_span(GMap(two, two, (2, 1)), identity_map(two))
lhs, rhs = compose_spans(compose_spans(s, t), u), compose_spans(s, compose_spans(t, u))
print("(s t) u right leg", lhs.right.images, "vs s (t u)", rhs.right.images)
print("isomorphic:", canonicalize_span(lhs) == canonicalize_span(rhs))
