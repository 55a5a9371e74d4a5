"""
Arc families carrying one angle per boundary.

Three compositions are provided:

* ``compose_dArc``: product with ``d``, angles on boundaries 1..n;
* ``compose_bidArc``: product with ``bi``, angles on boundaries 0..n;
* ``compose_twisted``: the family of ``y`` is rotated by ``-theta'_0`` before
  gluing, and the angles compose in ``rd(lam)`` (``lam = 1`` by default).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .circle import BI, D, angles, compose_angles, random_angles, rd
from .core import ArcFamily, ensure_valid, is_exhaustive, long_cycle, projectivize, relabel
from .glue import compose_output_labels, compose_projective
from .laws import PLANAR, _draw, _fail, output_permutation, random_fixing_zero, same


class TwistedError(ValueError):
    pass


@dataclass(frozen=True)
class TwistedElement:
    fam: ArcFamily
    angles: tuple

    @property
    def arity(self) -> int:
        return self.fam.arity


def element(fam: ArcFamily, thetas, boundary_zero: bool = True) -> TwistedElement:
    """Validate and projectivize; ``thetas`` has ``n+1`` entries, or ``n`` without boundary 0."""
    if not is_exhaustive(fam):
        raise TwistedError("the family must be exhaustive")
    fam = projectivize(ensure_valid(fam))
    want = fam.boundaries if boundary_zero else fam.arity
    thetas = angles(thetas)
    if len(thetas) != want:
        raise TwistedError("expected %d angles, got %d" % (want, len(thetas)))
    return TwistedElement(fam, thetas)


def compose_dArc(x: TwistedElement, i: int, y: TwistedElement) -> TwistedElement:
    return TwistedElement(compose_projective(x.fam, i, y.fam), compose_angles(D, x.angles, i, y.angles))


def compose_bidArc(x: TwistedElement, i: int, y: TwistedElement) -> TwistedElement:
    return TwistedElement(compose_projective(x.fam, i, y.fam), compose_angles(BI, x.angles, i, y.angles))


def twist_offset(theta0) -> Fraction:
    """Rotation of ``y``'s boundary-0 partition, as a fraction of the glued circle."""
    return (-Fraction(theta0)) % 1


def compose_twisted(x: TwistedElement, i: int, y: TwistedElement, lam=1) -> TwistedElement:
    fam = compose_projective(x.fam, i, y.fam, twist_offset(y.angles[0]))
    return TwistedElement(fam, compose_angles(rd(lam), x.angles, i, y.angles))


def relabel_element(x: TwistedElement, sigma, boundary_zero: bool = True) -> TwistedElement:
    """Boundary ``b`` becomes ``sigma[b]`` for the family and its angle alike."""
    fam = relabel(x.fam, sigma)
    out = [None] * len(x.angles)
    if boundary_zero:
        for b, t in enumerate(x.angles):
            out[sigma[b]] = t
    else:
        for b, t in enumerate(x.angles, 1):
            out[sigma[b] - 1] = t
    return TwistedElement(fam, tuple(out))


def same_element(a: TwistedElement, b: TwistedElement) -> bool:
    return a.angles == b.angles and same(a.fam, b.fam)


def random_element(rng, bounds=None, boundary_zero=True, denominator=12) -> TwistedElement:
    fam = projectivize(_draw(rng, bounds or PLANAR))
    size = fam.boundaries if boundary_zero else fam.arity
    return TwistedElement(fam, random_angles(rng, size, denominator))


# ---------------------------------------------------------------------------
# law checks

def _check(name, lhs, rhs, **kw):
    return None if same_element(lhs, rhs) else _fail(name, lhs=lhs, rhs=rhs, **kw)


def check_associativity(compose, a, i, b, j, c):
    return _check("associativity", compose(compose(a, i, b), i + j - 1, c), compose(a, i, compose(b, j, c)), i=i, j=j)


def check_parallel(compose, a, i, b, k, c):
    n = b.arity
    return _check("parallel associativity", compose(compose(a, i, b), k + n - 1, c),
                  compose(compose(a, k, c), i, b), i=i, k=k)


def check_equivariance(compose, a, i, b, sigma, tau, boundary_zero=True):
    m, n = a.arity, b.arity
    lhs = compose(relabel_element(a, sigma, boundary_zero), sigma[i], relabel_element(b, tau, boundary_zero))
    pi = output_permutation(m, n, i, sigma[i], sigma, tau)
    rhs = relabel_element(compose(a, i, b), pi, boundary_zero)
    return _check("equivariance", lhs, rhs, i=i, sigma=sigma, tau=tau)


def check_cyclic(a, b):
    """``[a o_m b]* = b* o_1 a*`` in the product with ``bi``."""
    m, n = a.arity, b.arity
    lhs = relabel_element(compose_bidArc(a, m, b), long_cycle(m + n))
    rhs = compose_bidArc(relabel_element(b, long_cycle(n + 1)), 1, relabel_element(a, long_cycle(m + 1)))
    return _check("cyclicity", lhs, rhs)


def check_untwisted(a, i, b):
    """With ``theta'_0 = 0`` the family part is the plain projective composition."""
    b0 = TwistedElement(b.fam, (Fraction(0),) + b.angles[1:])
    got = compose_twisted(a, i, b0).fam
    want = compose_projective(a.fam, i, b.fam)
    return None if same(got, want) else _fail("untwisted reduction", lhs=got, rhs=want)


def check_twisted_laws(rng, bounds=None, lam=1) -> list:
    """One random trial of every twisted law; ``None`` entries mean the law held."""
    bounds = bounds or PLANAR
    compose = lambda a, i, b: compose_twisted(a, i, b, lam)
    a, b, c = (random_element(rng, bounds) for _ in range(3))
    m, n = a.arity, b.arity
    out = [check_associativity(compose, a, rng.randint(1, m), b, rng.randint(1, n), c)]
    if m >= 2:
        i, k = sorted(rng.sample(range(1, m + 1), 2))
        out.append(check_parallel(compose, a, i, b, k, c))
    out.append(check_equivariance(compose, a, rng.randint(1, m), b,
                                  random_fixing_zero(rng, m + 1), random_fixing_zero(rng, n + 1)))
    out.append(check_untwisted(a, rng.randint(1, m), b))
    out.append(check_cyclic(a, b))
    da, db, dc = (random_element(rng, bounds, boundary_zero=False) for _ in range(3))
    out.append(check_associativity(compose_dArc, da, rng.randint(1, da.arity), db, rng.randint(1, db.arity), dc))
    out.append(check_equivariance(compose_dArc, da, rng.randint(1, da.arity), db,
                                  random_fixing_zero(rng, da.arity + 1), random_fixing_zero(rng, db.arity + 1),
                                  boundary_zero=False))
    return out


def lambda_survey(trials=30, seed=0, lams=(0, 1)) -> dict:
    """Which angle conventions keep the twisted composition an operad."""
    out = {}
    for lam in lams:
        rng = random.Random(seed)
        fails = 0
        for _ in range(trials):
            fails += sum(r is not None for r in check_twisted_laws(rng, None, lam))
        out[lam] = fails == 0
    return out


__all__ = [
    "TwistedElement", "TwistedError", "element", "compose_dArc", "compose_bidArc", "compose_twisted",
    "twist_offset", "relabel_element", "same_element", "random_element", "check_twisted_laws",
    "check_cyclic", "lambda_survey", "compose_output_labels",
]
