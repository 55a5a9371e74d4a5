"""
Circle configurations obtained from exhaustive weighted arc families.

Each boundary becomes a circle whose circumference is the total weight there,
with its basepoint at the start of the window.  Every arc identifies two
intervals of equal length, either keeping or reversing direction.  Going
back, a planar configuration determines a genus zero family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .core import (
    ArcFamily,
    _UnionFind,
    end_interval,
    ensure_valid,
    family,
    is_exhaustive,
    is_linear,
    is_tree,
    boundary_blocks,
    total_weight,
    twist,
    unit,
    zero_order,
)
from .glue import compose_weighted


class ConfigurationError(ValueError):
    pass


class NotPlanar(ConfigurationError):
    pass


class Identification(NamedTuple):
    a: int
    start_a: Fraction
    b: int
    start_b: Fraction
    length: Fraction
    reversed: bool

    def oriented(self) -> "Identification":
        if (self.b, self.start_b) < (self.a, self.start_a):
            return Identification(self.b, self.start_b, self.a, self.start_a, self.length, self.reversed)
        return self


@dataclass(frozen=True)
class CircleConfiguration:
    circumferences: tuple
    identifications: tuple
    multiple_points: tuple = field(default=(), compare=False)

    @property
    def circles(self) -> int:
        return len(self.circumferences)


def configuration_violations(K: CircleConfiguration) -> list:
    """Intervals must lie inside their circles and tile every circle exactly once."""
    out = []
    sides = {c: [] for c in range(K.circles)}
    for k, I in enumerate(K.identifications):
        if I.length <= 0:
            out.append("identification %d has non-positive length" % k)
        for c, s in ((I.a, I.start_a), (I.b, I.start_b)):
            if not 0 <= c < K.circles:
                out.append("identification %d uses unknown circle %r" % (k, c))
                continue
            if s < 0 or s + I.length > K.circumferences[c]:
                out.append("identification %d leaves circle %d or crosses its basepoint" % (k, c))
            sides[c].append((s, s + I.length))
    for c, ivs in sides.items():
        ivs.sort()
        x = Fraction(0)
        for lo, hi in ivs:
            if lo != x:
                out.append("circle %d is not tiled by its intervals near %s" % (c, x))
                break
            x = hi
        else:
            if x != K.circumferences[c]:
                out.append("circle %d is not covered up to its circumference" % c)
    return out


def _multiple_points(circs, idents):
    uf = _UnionFind()

    def pt(c, x):
        key = (c, x % circs[c])
        uf.add(key)
        return key

    for I in idents:
        lo_b, hi_b = (I.start_b + I.length, I.start_b) if I.reversed else (I.start_b, I.start_b + I.length)
        uf.union(pt(I.a, I.start_a), pt(I.b, lo_b))
        uf.union(pt(I.a, I.start_a + I.length), pt(I.b, hi_b))
    classes = {}
    for key in list(uf.parent):
        classes.setdefault(uf.find(key), []).append(key)
    return tuple(sorted(tuple(sorted(v)) for v in classes.values() if len(v) > 2))


def normalized(K: CircleConfiguration) -> CircleConfiguration:
    """Merge identifications that continue each other and sort them."""
    items = sorted(I.oriented() for I in K.identifications)
    merged = []
    changed = True
    while changed:
        changed = False
        items.sort()
        merged = []
        for I in items:
            if merged:
                P = merged[-1]
                if (P.a, P.b, P.reversed) == (I.a, I.b, I.reversed) and P.start_a + P.length == I.start_a:
                    if not P.reversed and P.start_b + P.length == I.start_b:
                        merged[-1] = P._replace(length=P.length + I.length)
                        changed = True
                        continue
                    if P.reversed and I.start_b + I.length == P.start_b:
                        merged[-1] = P._replace(start_b=I.start_b, length=P.length + I.length)
                        changed = True
                        continue
            merged.append(I)
        items = merged
    circs = tuple(Fraction(c) for c in K.circumferences)
    return CircleConfiguration(circs, tuple(merged), _multiple_points(circs, merged))


def configuration(circumferences, identifications) -> CircleConfiguration:
    """Build, validate and normalize a configuration from plain tuples."""
    idents = tuple(Identification(int(a), Fraction(sa), int(b), Fraction(sb), Fraction(l), bool(rev))
                   for a, sa, b, sb, l, rev in identifications)
    K = CircleConfiguration(tuple(Fraction(c) for c in circumferences), idents)
    problems = configuration_violations(K)
    if problems:
        raise ConfigurationError("; ".join(problems))
    return normalized(K)


def _flipped(ends):
    return (ends[0][0] == 0) == (ends[1][0] == 0)


def loop_of(f: ArcFamily) -> CircleConfiguration:
    """The circles of an exhaustive family with the identifications made by its arcs."""
    if not is_exhaustive(f):
        raise ConfigurationError("loop_of needs an exhaustive family")
    start = {}
    for b in range(f.boundaries):
        x = Fraction(0)
        for be in end_interval(f, b):
            start[(be.arc, be.end)] = x
            x += be.width
    idents = []
    for k, ((b0, _), (b1, _)) in enumerate(f.arcs):
        idents.append(Identification(b0, start[(k, 0)], b1, start[(k, 1)], f.weights[k], _flipped(f.arcs[k])))
    circs = tuple(total_weight(f, b) for b in range(f.boundaries))
    return normalized(CircleConfiguration(circs, tuple(idents)))


def section_of(K: CircleConfiguration) -> ArcFamily:
    """A genus zero family whose loop is ``K``.

    Intervals are read in the order of their positions on each circle.  An
    arc cutting off an empty disk against its boundary gets a puncture in
    that disk.
    """
    problems = configuration_violations(K)
    if problems:
        raise ConfigurationError("; ".join(problems))
    K = normalized(K)
    ends = {c: [] for c in range(K.circles)}
    for k, I in enumerate(K.identifications):
        ends[I.a].append((I.start_a, k, 0))
        ends[I.b].append((I.start_b, k, 1))
    slot = {}
    counts = []
    for c in range(K.circles):
        items = sorted(ends[c])
        counts.append(len(items))
        for s, (_, k, e) in enumerate(items, 1):
            slot[(k, e)] = (c, s)
    arcs = [(slot[(k, 0)], slot[(k, 1)]) for k in range(len(K.identifications))]
    for k, I in enumerate(K.identifications):
        if I.reversed != _flipped(arcs[k]):
            raise NotPlanar("identification %d has the wrong orientation for a planar embedding" % k)
    weights = [I.length for I in K.identifications]
    from .core import derive_regions

    regions = []
    for cyc in derive_regions(counts, arcs):
        segs = [s for s in cyc if s[0] == 0]
        if len(cyc) == 2 and segs and segs[0][2] != 0:
            regions.append((0, 1, [cyc[0]]))
    try:
        f = family(counts, arcs, weights, regions)
    except ValueError as exc:
        raise NotPlanar(str(exc)) from None
    if f.genus != 0:
        raise NotPlanar("the identifications force genus %d" % f.genus)
    try:
        return ensure_valid(f)
    except ValueError as exc:
        raise NotPlanar(str(exc)) from None


def in_LOOP(f: ArcFamily) -> bool:
    """Whether the outside circle maps onto the whole loop, and injectively.

    Every identification must pair circle 0 with an inner circle.
    """
    K = loop_of(f)
    met = {0}
    for I in K.identifications:
        if (I.a == 0) == (I.b == 0):
            return False
        met.add(I.b if I.a == 0 else I.a)
    return len(met) == K.circles


# ---------------------------------------------------------------------------
# making trees linear

def _rotation(fraction) -> ArcFamily:
    """Element of ARC(1) with total weight one moving the window by ``fraction``."""
    fraction = Fraction(fraction) % 1
    return twist(1 - fraction, fraction) if fraction else unit(1)


def linear_normalize(f: ArcFamily):
    """Split a tree into boundary twists and a linear tree.

    Returns ``(twists, linear)`` where ``twists`` maps each inner boundary to
    an element of ARC(1) with total weight one, and composing ``linear`` with
    ``twists[i]`` at every ``i`` gives back ``f``.
    """
    if not is_tree(f):
        raise ValueError("linear_normalize needs a member of the trees suboperad")
    g = f
    twists = {}
    for i in range(1, f.arity + 1):
        # the window at i should open on the arc met first from boundary 0
        first_arc = zero_order(g)[min(boundary_blocks(g)[i])]
        before = Fraction(0)
        for be in end_interval(g, i):
            if be.arc == first_arc:
                break
            before += be.width
        frac = before / total_weight(g, i)
        if frac:
            g = compose_weighted(g, i, _rotation(-frac))
        twists[i] = _rotation(frac)
    if not is_linear(g):
        raise AssertionError("normalization did not produce a linear tree")
    return twists, g


def recompose(twists: dict, linear: ArcFamily) -> ArcFamily:
    """Inverse of :func:`linear_normalize`."""
    g = linear
    for i in range(1, linear.arity + 1):
        g = compose_weighted(g, i, twists[i])
    return g
