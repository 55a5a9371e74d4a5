"""Seeded random arc families, cacti and twisted elements for property trials."""

from __future__ import annotations

import random
from fractions import Fraction

from .core import ArcFamily, Region, canonical, derive_regions, validate_family

DEFAULT_BOUNDS = {"genus": 0, "punctures": 0, "boundaries": 4, "arcs": 6, "denominator": 4}


class BoundsError(ValueError):
    pass


def _bounds(bounds):
    out = dict(DEFAULT_BOUNDS)
    if bounds:
        unknown = set(bounds) - set(DEFAULT_BOUNDS) - {"exhaustive", "min_boundaries", "strict"}
        if unknown:
            raise BoundsError("unknown bound keys %s" % sorted(unknown))
        out.update(bounds)
    if out["boundaries"] < 1 or out["arcs"] < 0 or out["genus"] < 0 or out["punctures"] < 0:
        raise BoundsError("bounds must be non-negative with at least one boundary")
    return out


def random_weight(rng: random.Random, denominator: int = 4) -> Fraction:
    q = rng.randint(1, denominator)
    return Fraction(rng.randint(1, 2 * q), q)


def _candidate(rng, b):
    lo = b.get("min_boundaries", 1)
    r = rng.randint(lo, b["boundaries"])
    exhaustive = b.get("exhaustive", True)
    kmin = (r + 1) // 2 if exhaustive else 1
    if kmin > b["arcs"]:
        return None
    k = rng.randint(max(kmin, 1), b["arcs"])
    counts = [1 if exhaustive else 0] * r
    for _ in range(2 * k - sum(counts)):
        counts[rng.randrange(r)] += 1
    ends = [(bd, s) for bd in range(r) for s in range(1, counts[bd] + 1)]
    rng.shuffle(ends)
    arcs = [(ends[2 * j], ends[2 * j + 1]) for j in range(k)]
    cycles = derive_regions(counts, arcs)
    groups = [[c] for c in cycles]
    if b["genus"] > 0 or len(groups) > 1:
        while len(groups) > 1 and rng.random() < 0.25:
            x, y = rng.sample(range(len(groups)), 2)
            groups[x] += groups[y]
            del groups[y]
    budget = rng.randint(0, b["punctures"])
    regions = []
    for grp in groups:
        s = rng.randint(0, budget)
        budget -= s
        g = rng.randint(0, 1) if b["genus"] and rng.random() < 0.3 else 0
        regions.append(Region(g, s, tuple(grp)))
    if budget:
        r0 = regions[0]
        regions[0] = Region(r0.genus, r0.punctures + budget, r0.cycles)
    punctures = sum(reg.punctures for reg in regions)
    twice = 2 - r - punctures + k - sum(reg.euler for reg in regions)
    if twice < 0 or twice % 2 or twice // 2 > b["genus"]:
        return None
    weights = [random_weight(rng, b["denominator"]) for _ in arcs]
    return ArcFamily(twice // 2, punctures, tuple(counts),
                     tuple((tuple(e0), tuple(e1)) for e0, e1 in arcs), tuple(weights), tuple(regions))


def random_family(seed, bounds=None, max_tries: int = 20000) -> ArcFamily:
    """A valid exhaustive family drawn deterministically from ``seed``.

    Random endpoint counts and matching, derived cycles, a random grouping of
    cycles into regions carrying punctures and genus; invalid candidates are
    rejected.  Unless ``bounds["strict"]`` is false, arcs hugging a window
    complement are rejected too.
    """
    b = _bounds(bounds)
    if b.get("exhaustive", True) and b["arcs"] == 0:
        raise BoundsError("an exhaustive family needs at least one arc")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(max_tries):
        f = _candidate(rng, b)
        if f is not None and not validate_family(f, b.get("strict", True)):
            return canonical(f)
    raise BoundsError("no valid family found within %d tries for bounds %r" % (max_tries, bounds))


def random_tree(seed, max_boundaries=4, max_arcs=6, linear=None, denominator=4) -> ArcFamily:
    """A random member of the trees suboperad (optionally linear)."""
    from .core import is_linear_tree, is_tree

    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    bounds = {"boundaries": max_boundaries, "arcs": max_arcs, "denominator": denominator,
              "min_boundaries": 2}
    for _ in range(20000):
        f = random_family(rng, bounds)
        if is_tree(f) and (linear is None or is_linear_tree(f) == linear):
            return f
    raise BoundsError("no tree found")
