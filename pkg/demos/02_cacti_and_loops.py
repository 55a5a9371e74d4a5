"""Cacti as arc families, and exhaustive families as configurations of touching circles.

Run:  python3 demos/02_cacti_and_loops.py
"""

import random

from arcop import cactus, frame, glue_cacti, in_LOOP, loop_of, perimeter, random_cactus, section_of
from arcop.cacti import check_loop_frame, is_spineless
from arcop.core import membership

# Two lobes of length 1 and 2 touching at point "p".
c = cactus([(1, 0, [(0, "p")]), (2, 0, [(0, "p")])])
print("cactus arity", c.arity, "spineless", is_spineless(c))
print("perimeter:", perimeter(c))
f = frame(c)
print("frame:", f)

# The loop map recovers the cactus as a tangency configuration; the frame of that is f again.
K = loop_of(f)
print("configuration:", K)
print("section of the configuration equals the frame:", section_of(K) == f)

# Gluing cacti and gluing their frames agree up to scaling.
rng = random.Random(1)
c1, c2 = random_cactus(rng, 3), random_cactus(rng, 2)
print("glued arity:", glue_cacti(c1, 2, c2).arity)
print("loop/frame round trip on random cacti:",
      all(check_loop_frame(random_cactus(rng, rng.randint(1, 4))) is None for _ in range(20)))

# Membership in the image of the loop map is decided combinatorially.
from arcop import random_family

hits = 0
for seed in range(60):
    g = random_family(seed, {"genus": 0, "boundaries": 3, "arcs": 3, "min_boundaries": 2})
    assert in_LOOP(g) == membership(g, "chinese_trees")
    hits += in_LOOP(g)
print("%d of 60 random planar families lie in the loop image" % hits)
