r"""
Weighted arc families on bounded surfaces.

A family lives on the surface `F_{g,r}^s` with boundaries labelled ``0..r-1``.
Every boundary carries a window; the endpoints sitting in it are numbered
``1..c`` in window order.  Boundary 0 is read along its induced orientation,
the other boundaries against it.  With this convention a band running from
boundary 0 to an inner boundary keeps positions, and gluing an inner boundary
of one family to boundary 0 of another identifies equal positions.

Cutting the surface along the arcs leaves complementary regions.  A region is
recorded by its genus, its puncture count and its boundary cycles.  A cycle is
a cyclic word in *sides*:

- ``(0, b, k)`` is the boundary segment of boundary ``b`` in gap ``k``; gap
  ``k`` sits between slots ``k`` and ``k+1`` and gap 0 holds the part of the
  boundary outside the window,
- ``(1, a, s)`` is a side of arc ``a``; ``s = 0`` (left) is the side walked
  from the first end of the arc, ``s = 1`` (right) the one walked from the
  second end.

EXAMPLES::

    >>> from arcop.core import unit, derive_regions
    >>> u = unit()
    >>> u.arcs
    (((0, 1), (1, 1)),)
    >>> derive_regions(u.counts, u.arcs)
    [((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 0, 1))]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

End = tuple  # (boundary, slot)
Side = tuple  # (0, boundary, gap) or (1, arc, side)

LEFT, RIGHT = 0, 1


def seg(boundary: int, gap: int) -> Side:
    return (0, boundary, gap)


def arc_side(arc: int, side: int) -> Side:
    return (1, arc, side)


def is_segment(side: Side) -> bool:
    return side[0] == 0


def side_name(side: Side) -> str:
    """Short text token for a side: ``b2.1`` or ``a0L``."""
    if side[0] == 0:
        return "b%d.%d" % (side[1], side[2])
    return "a%d%s" % (side[1], "LR"[side[2]])


def parse_side(token: str) -> Side:
    if token.startswith("b"):
        b, k = token[1:].split(".")
        return seg(int(b), int(k))
    if token.startswith("a") and token[-1] in "LR":
        return arc_side(int(token[1:-1]), "LR".index(token[-1]))
    raise ValueError("bad side token %r" % (token,))


class SignatureError(ValueError):
    pass


class MatchingError(ValueError):
    pass


class InvalidFamily(ValueError):
    """Raised when a family fails validation; carries the violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class SurfaceSig:
    genus: int
    punctures: int
    boundaries: int

    def __post_init__(self):
        if self.genus < 0 or self.punctures < 0 or self.boundaries < 1:
            raise SignatureError("negative genus/punctures or no boundary: %r" % (self,))
        if not self.stable:
            raise SignatureError("6g-7+4r+2s < 0 for %r" % (self,))

    @property
    def stable(self) -> bool:
        return 6 * self.genus - 7 + 4 * self.boundaries + 2 * self.punctures >= 0

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus - self.boundaries - self.punctures


def sig_is_valid(genus: int, punctures: int, boundaries: int) -> bool:
    return (genus >= 0 and punctures >= 0 and boundaries >= 1
            and 6 * genus - 7 + 4 * boundaries + 2 * punctures >= 0)


@dataclass(frozen=True)
class Region:
    genus: int
    punctures: int
    cycles: tuple

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus - len(self.cycles) - self.punctures

    @property
    def is_disk(self) -> bool:
        return self.genus == 0 and self.punctures == 0 and len(self.cycles) == 1

    def least_side(self):
        return min(min(c) for c in self.cycles)


class BandEnd(NamedTuple):
    arc: int
    end: int
    width: Fraction


class Violation(NamedTuple):
    name: str
    detail: str

    def __str__(self):
        return "%s: %s" % (self.name, self.detail)


@dataclass(frozen=True)
class ArcFamily:
    """A weighted arc family with explicit complementary-region data.

    ``counts[b]`` is the number of endpoints in the window of boundary ``b``,
    ``arcs[a]`` is a pair of ends ``(boundary, slot)`` and ``weights[a]`` a
    positive rational.  Instances are plain data; use :func:`validate_family`
    to check them and :func:`canonical` to bring them to normal form.
    """

    genus: int
    punctures: int
    counts: tuple
    arcs: tuple
    weights: tuple
    regions: tuple = field(default=())

    @property
    def boundaries(self) -> int:
        return len(self.counts)

    @property
    def arity(self) -> int:
        return len(self.counts) - 1

    @property
    def sig(self) -> SurfaceSig:
        return SurfaceSig(self.genus, self.punctures, len(self.counts))

    def __len__(self):
        return len(self.arcs)

    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def with_weights(self, weights) -> "ArcFamily":
        return ArcFamily(self.genus, self.punctures, self.counts, self.arcs,
                         tuple(Fraction(w) for w in weights), self.regions)

    def scaled(self, factor) -> "ArcFamily":
        factor = Fraction(factor)
        return self.with_weights(w * factor for w in self.weights)

    def side_regions(self) -> dict:
        out = {}
        for idx, reg in enumerate(self.regions):
            for cyc in reg.cycles:
                for s in cyc:
                    out[s] = idx
        return out

    def __repr__(self):
        arcs = ", ".join("%s-%s:%s" % (e0, e1, w) for (e0, e1), w in zip(self.arcs, self.weights))
        return "ArcFamily(g=%d, s=%d, counts=%s, [%s])" % (
            self.genus, self.punctures, list(self.counts), arcs)


# ---------------------------------------------------------------------------
# traversal

def _partners(counts, arcs):
    partner = {}
    owner = {}
    for a, (e0, e1) in enumerate(arcs):
        e0, e1 = tuple(e0), tuple(e1)
        for e in (e0, e1):
            b, k = e
            if not (0 <= b < len(counts)) or not (1 <= k <= counts[b]):
                raise MatchingError("end %r out of range" % (e,))
            if e in partner:
                raise MatchingError("end %r used twice" % (e,))
        if e0 == e1:
            raise MatchingError("arc %d has equal ends" % a)
        partner[e0] = e1
        partner[e1] = e0
        owner[e0] = (a, LEFT)
        owner[e1] = (a, RIGHT)
    total = sum(counts)
    if len(partner) != total:
        raise MatchingError("%d ends declared but %d matched" % (total, len(partner)))
    return partner, owner


def step(counts, end):
    """Walk along the boundary (induced orientation) from ``end``.

    Returns the next end reached and the gap of the segment walked over.
    """
    b, k = end
    c = counts[b]
    if b == 0:
        return ((b, k + 1), k) if k < c else ((b, 1), 0)
    return ((b, k - 1), k - 1) if k > 1 else ((b, c), 0)


def normalize_cycle(cycle) -> tuple:
    i = cycle.index(min(cycle))
    return tuple(cycle[i:]) + tuple(cycle[:i])


def derive_regions(counts, arcs) -> list:
    """Boundary cycles of the complement of the arcs, normalized and sorted.

    From an end we walk the boundary to the next end, cross to the far end of
    its arc along the side walked from that end, and repeat.
    """
    partner, owner = _partners(counts, arcs)
    seen = set()
    cycles = []
    for b, c in enumerate(counts):
        if c == 0:
            cycles.append((seg(b, 0),))
    for start in sorted(partner):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            y, gap = step(counts, x)
            cyc.append(seg(x[0], gap))
            a, s = owner[y]
            cyc.append(arc_side(a, s))
            x = partner[y]
        cycles.append(normalize_cycle(cyc))
    return sorted(cycles)


# ---------------------------------------------------------------------------
# construction

def family(counts, arcs, weights=None, regions=None, genus=None, punctures=None) -> ArcFamily:
    """Build a family from its endpoints, deriving the region cycles.

    ``regions`` lists ``(genus, punctures, sides)`` triples; each region
    takes the cycles containing the listed sides.  Cycles not mentioned become
    disk regions.  The surface genus and punctures are inferred from the
    region data unless given.
    """
    counts = tuple(int(c) for c in counts)
    arcs = tuple((tuple(e0), tuple(e1)) for e0, e1 in arcs)
    if weights is None:
        weights = [1] * len(arcs)
    weights = tuple(Fraction(w) for w in weights)
    cycles = derive_regions(counts, arcs)
    where = {s: idx for idx, cyc in enumerate(cycles) for s in cyc}
    used = set()
    regs = []
    for g, s, sides in regions or ():
        idx = sorted({where[tuple(x)] for x in sides})
        if used & set(idx):
            raise ValueError("cycle claimed by two regions")
        used |= set(idx)
        regs.append(Region(g, s, tuple(cycles[i] for i in idx)))
    for idx, cyc in enumerate(cycles):
        if idx not in used:
            regs.append(Region(0, 0, (cyc,)))
    total_s = sum(r.punctures for r in regs)
    if punctures is None:
        punctures = total_s
    if genus is None:
        twice = 2 - len(counts) - punctures + len(arcs) - sum(r.euler for r in regs)
        if twice % 2 or twice < 0:
            raise ValueError("region data do not fit any surface genus")
        genus = twice // 2
    return canonical(ArcFamily(genus, punctures, counts, arcs, weights, tuple(regs)))


def unit(weight=1) -> ArcFamily:
    """The single arc on the cylinder joining the two boundaries."""
    return family((1, 1), [((0, 1), (1, 1))], [weight])


def twist(x, y) -> ArcFamily:
    """Two crossing arcs on the cylinder with weights ``x`` (first at 0) and ``y``.

    Zero weights drop the corresponding arc.
    """
    x, y = Fraction(x), Fraction(y)
    if x and y:
        return family((2, 2), [((0, 1), (1, 2)), ((0, 2), (1, 1))], [x, y])
    return unit(x + y)


def dot(w1=1, w2=1) -> ArcFamily:
    """Arcs from boundary 0 to boundaries 1 and 2, in that window order."""
    return family((2, 1, 1), [((0, 1), (1, 1)), ((0, 2), (2, 1))], [w1, w2])


# ---------------------------------------------------------------------------
# canonical form and equality

def canonical(f: ArcFamily) -> ArcFamily:
    """Sort ends within arcs, arcs by their least end, and regions by least side."""
    order = []
    for a, (e0, e1) in enumerate(f.arcs):
        e0, e1 = tuple(e0), tuple(e1)
        swapped = e1 < e0
        order.append(((e1, e0) if swapped else (e0, e1), a, swapped))
    order.sort()
    new_id = {}
    flip = {}
    for idx, (_, a, swapped) in enumerate(order):
        new_id[a] = idx
        flip[a] = swapped

    def side_map(s):
        if s[0] == 0:
            return s
        return arc_side(new_id[s[1]], s[2] ^ flip[s[1]])

    regions = []
    for reg in f.regions:
        cycles = tuple(sorted(normalize_cycle([side_map(s) for s in cyc]) for cyc in reg.cycles))
        regions.append(Region(reg.genus, reg.punctures, cycles))
    regions.sort(key=lambda r: (r.least_side(), r.genus, r.punctures))
    arcs = tuple(ends for ends, _, _ in order)
    weights = tuple(Fraction(f.weights[a]) for _, a, _ in order)
    return ArcFamily(f.genus, f.punctures, tuple(f.counts), arcs, weights, tuple(regions))


def canonical_form(f: ArcFamily) -> tuple:
    c = canonical(f)
    regs = tuple((r.genus, r.punctures, r.cycles) for r in c.regions)
    return (c.genus, c.punctures, c.counts, c.arcs, c.weights, regs)


def equals(f: ArcFamily, g: ArcFamily) -> bool:
    return canonical_form(f) == canonical_form(g)


def projectivize(f: ArcFamily) -> ArcFamily:
    """Canonical representative with total weight one."""
    t = f.total()
    if t <= 0:
        raise ValueError("family without positive weight")
    return canonical(f.scaled(1 / t))


def projectively_equal(f: ArcFamily, g: ArcFamily) -> bool:
    return canonical_form(projectivize(f)) == canonical_form(projectivize(g))


def combinatorial_type(f: ArcFamily) -> tuple:
    """Canonical form with weights forgotten."""
    g, s, counts, arcs, _, regs = canonical_form(f)
    return (g, s, counts, arcs, regs)


# ---------------------------------------------------------------------------
# measures on the boundaries

def _check_boundary(f, i):
    if not 0 <= i < f.boundaries:
        raise IndexError("boundary %d out of range 0..%d" % (i, f.boundaries - 1))


def end_interval(f: ArcFamily, i: int) -> list:
    """Arc ends on boundary ``i`` in window order, each with its arc's weight."""
    _check_boundary(f, i)
    ends = []
    for a, ends_a in enumerate(f.arcs):
        for e, (b, k) in enumerate(ends_a):
            if b == i:
                ends.append((k, BandEnd(a, e, Fraction(f.weights[a]))))
    ends.sort()
    return [be for _, be in ends]


def total_weight(f: ArcFamily, i: int) -> Fraction:
    """Weight meeting boundary ``i``; an arc with both ends there counts twice."""
    return sum((be.width for be in end_interval(f, i)), Fraction(0))


def is_exhaustive(f: ArcFamily) -> bool:
    return all(c > 0 for c in f.counts)


# ---------------------------------------------------------------------------
# relabelling

def check_permutation(sigma, n):
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(n)):
        raise ValueError("%r is not a permutation of 0..%d" % (sigma, n - 1))
    return sigma


def relabel(f: ArcFamily, sigma) -> ArcFamily:
    """Boundary ``b`` becomes boundary ``sigma[b]``.

    A boundary moving into or out of position 0 has its window order
    reversed, since boundary 0 is read along the induced orientation.
    """
    r = f.boundaries
    sigma = check_permutation(sigma, r)
    counts = [0] * r
    for b, c in enumerate(f.counts):
        counts[sigma[b]] = c
    flips = [(b == 0) != (sigma[b] == 0) for b in range(r)]

    def end_map(e):
        b, k = e
        return (sigma[b], f.counts[b] + 1 - k if flips[b] else k)

    def side_map(s):
        if s[0] == 1:
            return s
        _, b, k = s
        if flips[b] and k:
            k = f.counts[b] - k
        return seg(sigma[b], k)

    arcs = tuple((end_map(e0), end_map(e1)) for e0, e1 in f.arcs)
    regions = tuple(Region(reg.genus, reg.punctures,
                           tuple(tuple(side_map(s) for s in cyc) for cyc in reg.cycles))
                    for reg in f.regions)
    return canonical(ArcFamily(f.genus, f.punctures, tuple(counts), arcs, f.weights, regions))


def invert_permutation(sigma):
    inv = [0] * len(sigma)
    for a, b in enumerate(sigma):
        inv[b] = a
    return tuple(inv)


def long_cycle(r):
    """Permutation sending label ``b`` to ``b+1`` and the last label to 0."""
    return tuple((b + 1) % r for b in range(r))


# ---------------------------------------------------------------------------
# validation

def validate_family(f: ArcFamily, strict: bool = False) -> list:
    """Every violated invariant with a witness; empty when ``f`` is valid.

    With ``strict`` an arc cutting off an unpunctured disk around the window
    complement also counts as inessential (it is isotopic into the boundary
    rel endpoints).
    """
    out = []
    r = len(f.counts)
    if not sig_is_valid(f.genus, f.punctures, r):
        out.append(Violation("signature", "(g, s, r) = (%d, %d, %d) is not admissible"
                             % (f.genus, f.punctures, r)))
    if any(c < 0 for c in f.counts):
        out.append(Violation("endpoint", "negative endpoint count"))
        return out
    if len(f.weights) != len(f.arcs):
        out.append(Violation("weight", "%d weights for %d arcs" % (len(f.weights), len(f.arcs))))
        return out
    for a, w in enumerate(f.weights):
        if Fraction(w) <= 0:
            out.append(Violation("weight", "arc %d has weight %s" % (a, w)))
    try:
        cycles = derive_regions(f.counts, f.arcs)
    except MatchingError as exc:
        out.append(Violation("matching", str(exc)))
        return out
    listed = [normalize_cycle(list(cyc)) for reg in f.regions for cyc in reg.cycles]
    if sorted(listed) != cycles:
        missing = set(cycles) - set(listed)
        extra = set(listed) - set(cycles)
        out.append(Violation("regions", "cycles differ from traversal (missing %d, unexpected %d)"
                             % (len(missing), len(extra) + len(listed) - len(set(listed)))))
        return out
    for idx, reg in enumerate(f.regions):
        if reg.genus < 0 or reg.punctures < 0 or not reg.cycles:
            out.append(Violation("region data", "region %d: %r" % (idx, reg)))
    lhs = sum(reg.euler for reg in f.regions)
    rhs = 2 - 2 * f.genus - r - f.punctures + len(f.arcs)
    if lhs != rhs:
        out.append(Violation("euler", "sum over regions %d != %d" % (lhs, rhs)))
    if sum(reg.punctures for reg in f.regions) != f.punctures:
        out.append(Violation("puncture count", "regions carry %d, surface has %d"
                             % (sum(reg.punctures for reg in f.regions), f.punctures)))
    where = f.side_regions()
    parent = list(range(len(f.regions)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(len(f.arcs)):
        parent[find(where[arc_side(a, LEFT)])] = find(where[arc_side(a, RIGHT)])
    if len({find(x) for x in range(len(f.regions))}) > 1:
        out.append(Violation("connectivity", "region adjacency graph is disconnected"))
    for a in inessential_arcs(f):
        out.append(Violation("essentiality", "arc %d cuts off a disk with one window segment" % a))
    for a, b in parallel_pairs(f):
        out.append(Violation("parallel arcs", "arcs %d and %d bound a rectangle" % (a, b)))
    if strict:
        for a in inessential_arcs(f, window_gap=True):
            out.append(Violation("boundary parallel", "arc %d cuts off a disk around a window complement" % a))
    return out


def is_valid(f: ArcFamily, strict: bool = False) -> bool:
    return not validate_family(f, strict)


def ensure_valid(f: ArcFamily) -> ArcFamily:
    problems = validate_family(f)
    if problems:
        raise InvalidFamily(problems)
    return f


def inessential_arcs(f: ArcFamily, window_gap: bool = False) -> list:
    """Arcs cutting off an unpunctured disk together with one boundary segment.

    By default only segments inside a window count; ``window_gap`` selects the
    segments holding a window complement instead.
    """
    out = []
    for reg in f.regions:
        if not reg.is_disk or len(reg.cycles[0]) != 2:
            continue
        cyc = reg.cycles[0]
        segs = [s for s in cyc if s[0] == 0]
        sides = [s for s in cyc if s[0] == 1]
        if len(segs) == 1 and len(sides) == 1 and (segs[0][2] == 0) == window_gap:
            out.append(sides[0][1])
    return out


def parallel_pairs(f: ArcFamily) -> list:
    out = []
    for reg in f.regions:
        if not reg.is_disk or len(reg.cycles[0]) != 4:
            continue
        cyc = reg.cycles[0]
        segs = [s for s in cyc if s[0] == 0]
        sides = [s for s in cyc if s[0] == 1]
        if len(segs) == 2 and all(s[2] != 0 for s in segs) and sides[0][1] != sides[1][1]:
            out.append(tuple(sorted((sides[0][1], sides[1][1]))))
    return out


# ---------------------------------------------------------------------------
# removing arcs

class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry
        return ry


def assemble_regions(cycles, piece_of_cycle, euler, punctures) -> tuple:
    """Group cycles by piece and compute each region's genus from its Euler number.

    ``piece_of_cycle[i]`` names the component containing ``cycles[i]``;
    ``euler`` and ``punctures`` map components to their totals.
    """
    groups = {}
    for cyc, piece in zip(cycles, piece_of_cycle):
        groups.setdefault(piece, []).append(cyc)
    missing = set(euler) - set(groups)
    if missing:
        raise ArithmeticError("components without boundary cycles: %r" % (sorted(missing, key=str),))
    regions = []
    for piece, cycs in groups.items():
        twice = 2 - len(cycs) - punctures[piece] - euler[piece]
        if twice < 0 or twice % 2:
            raise ArithmeticError("inconsistent Euler data for %r: chi=%d b=%d s=%d"
                                  % (piece, euler[piece], len(cycs), punctures[piece]))
        regions.append(Region(twice // 2, punctures[piece], tuple(sorted(cycs))))
    return tuple(regions)


def remove_arcs(f: ArcFamily, removed: Iterable[int]) -> ArcFamily:
    """Delete arcs and merge the regions they separated."""
    removed = set(removed)
    keep = [a for a in range(len(f.arcs)) if a not in removed]
    gone = {e for a in removed for e in f.arcs[a]}
    new_slot = {}
    old_slot = {}
    counts = []
    for b, c in enumerate(f.counts):
        k = 0
        for slot in range(1, c + 1):
            if (b, slot) not in gone:
                k += 1
                new_slot[(b, slot)] = (b, k)
                old_slot[(b, k)] = slot
        counts.append(k)
    arcs = tuple((new_slot[tuple(e0)], new_slot[tuple(e1)]) for e0, e1 in (f.arcs[a] for a in keep))
    weights = tuple(f.weights[a] for a in keep)
    where = f.side_regions()
    uf = _UnionFind()
    for idx in range(len(f.regions)):
        uf.add(idx)
    for a in removed:
        uf.union(where[arc_side(a, LEFT)], where[arc_side(a, RIGHT)])
    euler, punct = {}, {}
    for idx, reg in enumerate(f.regions):
        root = uf.find(idx)
        euler[root] = euler.get(root, 0) + reg.euler
        punct[root] = punct.get(root, 0) + reg.punctures
    for a in removed:
        euler[uf.find(where[arc_side(a, LEFT)])] -= 1
    cycles = derive_regions(counts, arcs)
    pieces = []
    for cyc in cycles:
        _, b, k = next(s for s in cyc if s[0] == 0)
        old = seg(b, old_slot[(b, k)] if k else 0)
        pieces.append(uf.find(where[old]))
    regions = assemble_regions(cycles, pieces, euler, punct)
    return canonical(ArcFamily(f.genus, f.punctures, tuple(counts), arcs, weights, regions))


def drop_zero_weights(f: ArcFamily) -> ArcFamily:
    return remove_arcs(f, [a for a, w in enumerate(f.weights) if w == 0])


def merge_parallel(f: ArcFamily):
    """Merge parallel arcs, summing weights.  Returns ``(family, merges)``."""
    merges = 0
    while True:
        pairs = parallel_pairs(f)
        if not pairs:
            return f, merges
        a, b = pairs[0]
        weights = list(f.weights)
        weights[a] += weights[b]
        f = remove_arcs(f.with_weights(weights), [b])
        merges += 1


# ---------------------------------------------------------------------------
# membership predicates

def incidence(f: ArcFamily, allowed, required) -> bool:
    """Arcs only between boundaries with ``allowed[i][j] != 0``; boundary ``k`` met iff ``required[k]``."""
    met = [c > 0 for c in f.counts]
    if any(bool(m) != bool(req) for m, req in zip(met, required)):
        return False
    for (b0, _), (b1, _) in f.arcs:
        if not allowed[b0][b1]:
            return False
    return True


def tree_incidence(n):
    allowed = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        allowed[0][i] = allowed[i][0] = 1
    return allowed, [1] * (n + 1)


def zero_order(f: ArcFamily) -> list:
    """Arcs in the window order of boundary 0."""
    return [be.arc for be in end_interval(f, 0)]


def boundary_blocks(f: ArcFamily) -> dict:
    """For each inner boundary, the positions of its arcs in the boundary-0 order."""
    pos = {a: p for p, a in enumerate(zero_order(f))}
    out = {}
    for i in range(1, f.boundaries):
        out[i] = [pos[be.arc] for be in end_interval(f, i)]
    return out


def _cyclic_block(positions, total):
    if not positions:
        return False
    s = set(positions)
    starts = [p for p in s if (p - 1) % total not in s]
    return len(starts) == 1 or len(s) == total


def is_chinese_tree(f: ArcFamily) -> bool:
    return incidence(f, *tree_incidence(f.arity))


def is_tree(f: ArcFamily) -> bool:
    return f.genus == 0 and f.punctures == 0 and is_chinese_tree(f)


def is_cyclic_chinese_tree(f: ArcFamily) -> bool:
    if not is_chinese_tree(f):
        return False
    total = f.counts[0]
    return all(_cyclic_block(p, total) for p in boundary_blocks(f).values())


def is_linear(f: ArcFamily) -> bool:
    """Ends at each inner boundary, in window order, appear in the same order at boundary 0."""
    return all(p == sorted(p) for p in boundary_blocks(f).values())


def is_linear_tree(f: ArcFamily) -> bool:
    return is_tree(f) and is_linear(f)


PREDICATES = {
    "exhaustive": is_exhaustive,
    "trees": is_tree,
    "linear_trees": is_linear_tree,
    "chinese_trees": is_chinese_tree,
    "cyclic_chinese_trees": is_cyclic_chinese_tree,
}


def membership(f: ArcFamily, predicate: str, allowed=None, required=None) -> bool:
    if predicate == "incidence":
        return incidence(f, allowed, required)
    try:
        return PREDICATES[predicate](f)
    except KeyError:
        raise ValueError("unknown predicate %r" % (predicate,)) from None
