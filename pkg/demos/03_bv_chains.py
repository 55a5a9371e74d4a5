"""Chain level families: generators, their faces, and the BV square.

Run:  python3 demos/03_bv_chains.py
"""

from fractions import Fraction as F

from arcop.chains import boundary, eval_family, check_face_contracts, lobe_equal, make_generator, partbv_square
from arcop.core import projectively_equal, relabel
from arcop.glue import compose_projective

delta = make_generator("delta")
print("delta(t) sweeps a twist around the circle:")
for t in (0, F(1, 4), F(1, 2), 1):
    print("  t=%-4s %s" % (t, delta(t)))

# The product is a point; the faces of delta_n are the two orderings it interpolates.
d2 = make_generator("delta_n", 2)
print("faces of delta_2:")
for sign, side in boundary(d2):
    print("  %+d %s" % (sign, eval_family(side)))

# Each face identity is checked on a grid of rational parameters.
for name, rep in sorted(check_face_contracts("all").items()):
    print("identity %-3s passed=%s" % (name, rep["passed"]))

# The square interpolates four composites.  Two of its edges match on the nose; the
# other two only after rescaling each inner boundary to total weight one, because the
# two neighbouring composites already disagree at their shared corner.
Q = partbv_square()
dot = make_generator("dot")()
top = compose_projective(dot, 1, d2(1))
left = relabel(compose_projective(dot, 2, d2(0)), (0, 2, 1, 3))
print("corner (0,1): Q =", Q(0, 1))
print("  top edge target  ", top)
print("  left edge target ", left)
print("  equal projectively: %s, equal per lobe: %s" % (projectively_equal(top, left), lobe_equal(top, left)))
