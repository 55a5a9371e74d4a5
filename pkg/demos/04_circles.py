"""Operads of circle angles, their homology, and which local linear rules are operads at all.

Run:  python3 demos/04_circles.py
"""

from fractions import Fraction as F

from arcop import BI, ExtClass, classify_parameters, compose_angles, homology_compose, presentation_check
from arcop.circle import algebra_relations_check, expected_survivors

x, y = (F(1, 3), F(1, 2), F(0)), (F(1, 4), F(3, 4))
fmt = lambda t: "(%s)" % ", ".join(map(str, t))
print("angles", fmt(x), "o1", fmt(y), "=", fmt(compose_angles(BI, x, 1, y)))

mu, left = ExtClass.basis((0, 0, 0)), ExtClass.basis((1, 0))
print("mu o1 L =", homology_compose(BI, mu, 1, left))
print("L o1 mu =", homology_compose(BI, left, 1, mu))

rep = presentation_check("bi")
print("presentation: %d relations, %d basis elements, passed=%s"
      % (rep["relations"], rep["basis_checked"], rep["passed"]))

for op in ("bi", "rd(2)"):
    rel = algebra_relations_check(op)
    print(op, "relations:", ", ".join("%s %s" % (k, "ok" if v[0] else "FAILS") for k, v in rel.items()))

# Sweep the (a, b, c, e) grid with denominators 2: only three families survive.
surv, counter = classify_parameters(2)
print("survivors:", sorted(tuple(str(v) for v in p) for p in surv))
print("matches classification:", surv == expected_survivors(2), "; excluded with witnesses:", len(counter))
