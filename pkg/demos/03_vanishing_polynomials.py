"""The interpolation engine: find a polynomial vanishing to multiplicity m
on a point set, then watch the counting argument play out on a line."""

from kakeya import field_make, find_vanishing_poly, multiplicity_at
from kakeya.polymethod import (
    leading_homogeneous,
    restrict_to_line,
    root_multiplicity,
)
from kakeya.space import line_points

field = field_make(5)
m = 2

# A single full line is far from Kakeya, so the counting inequality
# leaves room for an interpolant.
a, b = (0, 1), (1, 2)
pts = sorted(line_points(field, a, b))
g = find_vanishing_poly(field, pts, m)
print(f"interpolant over F_5 with multiplicity {m} on a {len(pts)}-point line:")
for e, c in sorted(g.coeffs.items(), key=lambda ec: (sum(ec[0]), ec[0])):
    print(f"  coeff {c} on x^{e[0]} y^{e[1]}")

for p in pts:
    assert multiplicity_at(g, p) >= m

# Restricted to the covered line, the polynomial picks up m roots at each
# of the q parameters: 2*5 = 10 roots against degree < 10 forces the
# restriction to vanish identically, and with it the leading form at b.
r = restrict_to_line(g, a, b)
print("\nrestriction to the covered line:", r if r else "identically zero")
g0 = leading_homogeneous(g)
print("leading homogeneous part evaluated at the direction:", g0.evaluate(b))

# On a line it does not cover, the restriction survives.
r2 = restrict_to_line(g, (1, 0), (1, 1))
print("restriction to an uncovered line:", r2)
print("its root orders over t in F_5:",
      [root_multiplicity(r2, t, field) for t in field.elements()])
