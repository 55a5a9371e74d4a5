"""Gluing two arc families along a boundary, checked against an independent strip walk.

Run:  python3 demos/01_gluing.py
"""

from fractions import Fraction as F

from arcop import compose_projective, compose_weighted, glue_matched, oracle_glue, random_family, twist, unit
from arcop.core import total_weight
from arcop.laws import check_signature


def show(title, f):
    print("%-28s %s" % (title, f))


# A half twist glued onto itself is a full twist, which is isotopic to the identity.
half = twist(F(1, 2), F(1, 2))
show("half twist", half)
show("half twist o1 half twist", compose_weighted(half, 1, half))
show("unit", unit())

# Weights on the glued boundary must match before bands can be cut; the projective
# composition rescales first, so any two families compose.
a = random_family(0, {"genus": 0, "boundaries": 3, "arcs": 4, "min_boundaries": 3})
b = random_family(11, {"genus": 0, "boundaries": 3, "arcs": 3, "min_boundaries": 2})
show("a", a)
show("b", b)
show("a o1 b (projective)", compose_projective(a, 1, b))

# Same gluing, two routes: band refinement versus walking unit strips.
a2, b2 = a.scaled(total_weight(b, 0)), b.scaled(total_weight(a, 1))
length = total_weight(a2, 1)
for k in range(4):
    off = length * F(k, 4)
    same = glue_matched(a2, 1, b2, off) == oracle_glue(a2, 1, b2, off)
    print("offset %-6s band route == strip route: %s" % (off, same))

# Topology adds up: genus, punctures and boundary count.
t = random_family(5, {"genus": 1, "boundaries": 3, "arcs": 5, "min_boundaries": 3})
p = random_family(0, {"genus": 0, "punctures": 2, "boundaries": 3, "arcs": 4, "min_boundaries": 2})
glued = compose_projective(t, 1, p)
print("genus/punctures: %d/%d + %d/%d -> %d/%d" % (t.genus, t.punctures, p.genus, p.punctures, glued.genus, glued.punctures))
print("signature law holds:", check_signature(t, 1, p) is None)
