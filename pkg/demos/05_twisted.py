"""Families with a chosen angle on every boundary.

Run:  python3 demos/05_twisted.py
"""

import random
from fractions import Fraction as F

from arcop import compose_twisted, element, twist, unit
from arcop.twisted import check_twisted_laws, lambda_survey

a = element(twist(F(1, 3), F(2, 3)), (0, 0))
b = element(unit(), (F(1, 4), 0))
print("a =", a)
print("b =", b)
print("a o1 b =", compose_twisted(a, 1, b))

# With zero angles the composition is the plain one.
z = element(unit(), (0, 0))
print("a o1 (untwisted unit) =", compose_twisted(a, 1, z))

rng = random.Random(0)
bad = sum(r is not None for _ in range(30) for r in check_twisted_laws(rng))
print("law failures over 30 rounds:", bad)
print("angle conventions:", lambda_survey(trials=10))
