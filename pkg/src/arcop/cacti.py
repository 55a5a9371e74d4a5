"""
Cacti: tree-like configurations of parametrized loops with a global zero.

A lobe is a circle of rational circumference carrying a local zero and the
intersection points it shares with other lobes.  Every intersection point
stores the cyclic order of the lobes meeting there; that order decides where
the perimeter jumps when it reaches the point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .core import ArcFamily, family, is_linear_tree, is_tree, validate_family
from .glue import compose_weighted


class CactusError(ValueError):
    pass


@dataclass(frozen=True)
class Lobe:
    circumference: Fraction
    zero: Fraction
    points: tuple  # ((position, point id), ...) sorted by position


@dataclass(frozen=True)
class Cactus:
    lobes: tuple  # Lobe for labels 1..n, stored at index label-1
    orders: dict  # point id -> tuple of lobe labels in cyclic order
    global_zero: tuple  # (lobe label, position)

    @property
    def arity(self) -> int:
        return len(self.lobes)

    def lobe(self, label: int) -> Lobe:
        return self.lobes[label - 1]

    def position(self, label: int, point) -> Fraction:
        for pos, pid in self.lobe(label).points:
            if pid == point:
                return pos
        raise KeyError((label, point))

    def scaled(self, factor) -> "Cactus":
        factor = Fraction(factor)
        lobes = tuple(Lobe(l.circumference * factor, l.zero * factor,
                           tuple((p * factor, pid) for p, pid in l.points)) for l in self.lobes)
        lab, pos = self.global_zero
        return Cactus(lobes, self.orders, (lab, pos * factor))

    def __hash__(self):
        return hash(canonical_cactus(self))

    def __eq__(self, other):
        return isinstance(other, Cactus) and canonical_cactus(self) == canonical_cactus(other)


class SubArc(NamedTuple):
    lobe: int
    start: Fraction
    length: Fraction


def cactus(lobes, orders=None, global_zero=(1, 0)) -> Cactus:
    """Build and validate a cactus.

    ``lobes`` is a list of ``(circumference, local_zero, [(position, point), ...])``.
    ``orders`` maps point ids to the cyclic order of lobes there; a point shared
    by two lobes needs no entry.
    """
    built = []
    for circ, zero, pts in lobes:
        pts = tuple(sorted((Fraction(p), pid) for p, pid in pts))
        built.append(Lobe(Fraction(circ), Fraction(zero), pts))
    on = {}
    for label, lobe in enumerate(built, 1):
        for _, pid in lobe.points:
            on.setdefault(pid, []).append(label)
    full = {pid: tuple(labels) for pid, labels in on.items()}
    for pid, order in (orders or {}).items():
        full[pid] = tuple(order)
    lab, pos = global_zero
    c = Cactus(tuple(built), full, (lab, Fraction(pos)))
    problems = cactus_violations(c)
    if problems:
        raise CactusError("; ".join(problems))
    return c


def cactus_violations(c: Cactus) -> list:
    out = []
    n = c.arity
    if n == 0:
        return ["a cactus needs at least one lobe"]
    on = {}
    for label, lobe in enumerate(c.lobes, 1):
        r = lobe.circumference
        if r <= 0:
            out.append("lobe %d has non-positive circumference" % label)
            continue
        if not 0 <= lobe.zero < r:
            out.append("lobe %d local zero outside [0, %s)" % (label, r))
        positions = [p for p, _ in lobe.points]
        if any(not 0 <= p < r for p in positions):
            out.append("lobe %d has a position outside [0, %s)" % (label, r))
        if len(set(positions)) != len(positions):
            out.append("lobe %d has two events at one position" % label)
        for _, pid in lobe.points:
            if label in on.get(pid, []):
                out.append("point %r meets lobe %d twice" % (pid, label))
            on.setdefault(pid, []).append(label)
    for pid, labels in on.items():
        if len(labels) < 2:
            out.append("point %r lies on a single lobe" % (pid,))
        order = c.orders.get(pid)
        if order is None or sorted(order) != sorted(labels):
            out.append("cyclic order at point %r does not list its lobes" % (pid,))
    if set(c.orders) - set(on):
        out.append("cyclic orders given for unknown points")
    # lobes and points form a tree
    edges = sum(len(v) for v in on.values())
    if edges != n + len(on) - 1:
        out.append("lobes and intersection points do not form a tree")
    else:
        seen, stack = {1}, [1]
        while stack:
            lab = stack.pop()
            for _, pid in c.lobes[lab - 1].points:
                for other in on[pid]:
                    if other not in seen:
                        seen.add(other)
                        stack.append(other)
        if len(seen) != n:
            out.append("cactus is not connected")
    lab, pos = c.global_zero
    if not 1 <= lab <= n:
        out.append("global zero on unknown lobe %r" % (lab,))
    elif not 0 <= pos < c.lobes[lab - 1].circumference:
        out.append("global zero outside its lobe")
    return out


def perimeter(c: Cactus, breaks: str = "all") -> list:
    """The outer traversal as a list of :class:`SubArc`.

    Starting at the global zero, run counterclockwise along the current lobe
    and jump to the next lobe of the cyclic order at each intersection point.
    Sub-arcs break at intersection points, the global zero and local zeros
    (``breaks="points"`` skips the local zeros).
    """
    total = sum(l.circumference for l in c.lobes)
    pid_at = [{p: pid for p, pid in l.points} for l in c.lobes]
    lab0, g = c.global_zero
    out = []
    lab, x = lab0, g
    covered = Fraction(0)
    while covered < total:
        lobe = c.lobes[lab - 1]
        r = lobe.circumference
        marks = set(pid_at[lab - 1])
        if breaks == "all":
            marks.add(lobe.zero)
        if lab == lab0:
            marks.add(g)
        ahead = [(m - x) % r or r for m in marks]
        step = min(ahead) if ahead else r
        out.append(SubArc(lab, x, step))
        covered += step
        y = (x + step) % r
        pid = pid_at[lab - 1].get(y)
        if pid is not None:
            order = c.orders[pid]
            lab = order[(order.index(lab) + 1) % len(order)]
            x = c.position(lab, pid)
        else:
            x = y
    return out


def first_entries(c: Cactus) -> dict:
    """Position on each lobe where the perimeter first enters it."""
    out = {}
    for sub in perimeter(c, breaks="points"):
        out.setdefault(sub.lobe, sub.start)
    return out


def is_spineless(c: Cactus) -> bool:
    entries = first_entries(c)
    return all(c.lobe(lab).zero == entries[lab] for lab in range(1, c.arity + 1))


def make_spineless(c: Cactus) -> Cactus:
    """Move every local zero to the first entry point of its lobe."""
    entries = first_entries(c)
    lobes = tuple(Lobe(l.circumference, entries[lab], l.points) for lab, l in enumerate(c.lobes, 1))
    return Cactus(lobes, c.orders, c.global_zero)


def canonical_cactus(c: Cactus) -> tuple:
    """Hashable normal form: point ids renamed in perimeter order, orders rooted at the lowest lobe."""
    rename = {}
    for sub in perimeter(c, breaks="points"):
        for pos, pid in c.lobe(sub.lobe).points:
            if pos == sub.start and pid not in rename:
                rename[pid] = len(rename)
    for lobe in c.lobes:
        for _, pid in lobe.points:
            rename.setdefault(pid, len(rename))
    lobes = tuple((l.circumference, l.zero, tuple((p, rename[pid]) for p, pid in l.points)) for l in c.lobes)
    orders = []
    for pid, order in c.orders.items():
        k = order.index(min(order))
        orders.append((rename[pid], order[k:] + order[:k]))
    return lobes, tuple(sorted(orders)), c.global_zero


# ---------------------------------------------------------------------------
# gluing

def glue_cacti(c1: Cactus, i: int, c2: Cactus, mode: str = "symmetric") -> Cactus:
    """Insert ``c2`` into lobe ``i`` of ``c1`` along the perimeter of ``c2``.

    ``mode`` picks the scaling: ``right`` shrinks ``c2``, ``left`` grows
    ``c1``, ``symmetric`` scales ``c1`` by the perimeter of ``c2`` and ``c2``
    by the length of lobe ``i``.
    """
    if not 1 <= i <= c1.arity:
        raise CactusError("index %d outside 1..%d" % (i, c1.arity))
    ri = c1.lobe(i).circumference
    p2 = sum(l.circumference for l in c2.lobes)
    if mode == "right":
        c2 = c2.scaled(ri / p2)
    elif mode == "left":
        c1 = c1.scaled(p2 / ri)
    elif mode == "symmetric":
        c1, c2 = c1.scaled(p2), c2.scaled(ri)
    else:
        raise CactusError("unknown gluing mode %r" % (mode,))
    m, n = c1.arity, c2.arity

    def new1(lab):
        return lab if lab < i else lab + n - 1

    def new2(lab):
        return lab + i - 1

    subs = perimeter(c2, breaks="points")
    host = c1.lobe(i)

    def landing(x):
        """Sub-arc of c2's perimeter starting at or containing arclength ``x``."""
        acc = Fraction(0)
        for k, sub in enumerate(subs):
            if acc <= x < acc + sub.length:
                return k, sub, x - acc
            acc += sub.length
        raise AssertionError("position beyond the perimeter")

    # points of c2, renamed, with their lobes relabelled
    orders = {}
    points2 = {lab: [] for lab in range(1, n + 1)}
    for lab, lobe in enumerate(c2.lobes, 1):
        for pos, pid in lobe.points:
            points2[lab].append((pos, ("b", pid)))
    for pid, order in c2.orders.items():
        orders[("b", pid)] = [new2(l) for l in order]
    points1 = {lab: [((p), ("a", pid)) for p, pid in c1.lobe(lab).points]
               for lab in range(1, m + 1) if lab != i}
    for pid, order in c1.orders.items():
        if i not in order:
            orders[("a", pid)] = [new1(l) for l in order]

    # move the events of lobe i onto c2
    for pos, pid in host.points:
        x = (pos - host.zero) % host.circumference
        k, sub, t = landing(x)
        order = list(c1.orders[pid])
        j = order.index(i)
        rest = [new1(l) for l in order[j + 1:] + order[:j]]
        if t:
            lab2, y = sub.lobe, (sub.start + t) % c2.lobe(sub.lobe).circumference
            points2[lab2].append((y, ("a", pid)))
            orders[("a", pid)] = [new2(lab2)] + rest
            continue
        # lands where the perimeter switches lobes: join the corner after the previous lobe
        prev = subs[k - 1]
        prev_lobe = c2.lobe(prev.lobe)
        y = (prev.start + prev.length) % prev_lobe.circumference
        existing = dict((p, q) for p, q in points2[prev.lobe]).get(y)
        if existing is None:
            points2[sub.lobe].append((sub.start, ("a", pid)))
            orders[("a", pid)] = [new2(sub.lobe)] + rest
        else:
            order2 = orders[existing]
            at = order2.index(new2(prev.lobe)) + 1
            orders[existing] = order2[:at] + rest + order2[at:]
            for lab in rest:
                old = lab if lab < i else lab - n + 1
                points1[old] = [(p, existing if q == ("a", pid) else q) for p, q in points1[old]]

    lab0, g = c1.global_zero
    if lab0 == i:
        x = (g - host.zero) % host.circumference
        k, sub, t = landing(x)
        gz = (new2(sub.lobe), (sub.start + t) % c2.lobe(sub.lobe).circumference)
    else:
        gz = (new1(lab0), g)

    lobes = [None] * (m + n - 1)
    for lab in range(1, m + 1):
        if lab != i:
            l = c1.lobe(lab)
            lobes[new1(lab) - 1] = (l.circumference, l.zero, points1[lab])
    for lab in range(1, n + 1):
        l = c2.lobe(lab)
        lobes[new2(lab) - 1] = (l.circumference, l.zero, points2[lab])
    ids = {}
    for lobe in lobes:
        for _, pid in lobe[2]:
            ids.setdefault(pid, len(ids))
    lobes = [(r, z, [(p, ids[pid]) for p, pid in pts]) for r, z, pts in lobes]
    return cactus(lobes, {ids[pid]: tuple(o) for pid, o in orders.items()}, gz)


# ---------------------------------------------------------------------------
# framing

def frame(c: Cactus) -> ArcFamily:
    """The weighted arc family attached to a cactus.

    One arc per perimeter sub-arc, running from boundary 0 (perimeter order
    from the global zero) to the lobe's boundary (lobe order from its local
    zero), weighted by the sub-arc length.
    """
    subs = perimeter(c)
    on_lobe = {lab: [] for lab in range(1, c.arity + 1)}
    for k, sub in enumerate(subs):
        lobe = c.lobe(sub.lobe)
        on_lobe[sub.lobe].append(((sub.start - lobe.zero) % lobe.circumference, k))
    slot_of = {}
    for lab, items in on_lobe.items():
        for slot, (_, k) in enumerate(sorted(items), 1):
            slot_of[k] = (lab, slot)
    counts = [len(subs)] + [len(on_lobe[lab]) for lab in range(1, c.arity + 1)]
    arcs = [((0, k + 1), slot_of[k]) for k in range(len(subs))]
    return family(counts, arcs, [sub.length for sub in subs])


def cactus_configuration(c: Cactus):
    """The circle configuration of a cactus: its perimeter and its lobes."""
    from .loop import CircleConfiguration, Identification, normalized

    subs = perimeter(c)
    total = sum(s.length for s in subs)
    idents = []
    acc = Fraction(0)
    for sub in subs:
        lobe = c.lobe(sub.lobe)
        idents.append(Identification(0, acc, sub.lobe, (sub.start - lobe.zero) % lobe.circumference,
                                     sub.length, False))
        acc += sub.length
    circs = (total,) + tuple(l.circumference for l in c.lobes)
    return normalized(CircleConfiguration(circs, tuple(idents)))


# ---------------------------------------------------------------------------
# random cacti and checks

def random_cactus(seed, n: int = 3, spineless: bool = True, denominator: int = 4) -> Cactus:
    """A random cactus with ``n`` lobes; lengths and positions are multiples of ``1/denominator``."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    circ = [Fraction(rng.randint(1, 2 * denominator), denominator) for _ in range(n)]
    grid = 4

    def spot(lab):
        return circ[lab - 1] * rng.randrange(grid) / grid

    points = {lab: {} for lab in range(1, n + 1)}
    orders = {}
    for lab in range(2, n + 1):
        host = rng.randint(1, lab - 1)
        x = spot(host)
        pid = points[host].get(x)
        if pid is None:
            pid = len(orders)
            points[host][x] = pid
            orders[pid] = [host, lab]
        else:
            orders[pid].insert(rng.randint(1, len(orders[pid])), lab)
        points[lab][spot(lab)] = pid
    lobes = [(circ[lab - 1], spot(lab), [(p, pid) for p, pid in points[lab].items()])
             for lab in range(1, n + 1)]
    lab0 = rng.randint(1, n)
    c = cactus(lobes, orders, (lab0, spot(lab0)))
    return make_spineless(c) if spineless else c


def check_loop_frame(c: Cactus):
    """Loop of the framing equals the cactus configuration, and the framing is a valid tree."""
    from .loop import loop_of

    f = frame(c)
    problems = validate_family(f)
    if problems:
        return {"law": "frame validity", "cactus": c, "violations": problems}
    if not is_tree(f) or (is_spineless(c) and not is_linear_tree(f)):
        return {"law": "frame lands in trees", "cactus": c}
    if loop_of(f) != cactus_configuration(c):
        return {"law": "loop of frame", "cactus": c}
    return None


def check_frame_operadic(c1: Cactus, i: int, c2: Cactus):
    """frame(c1 o_i c2) == frame(c1) o_i frame(c2) with symmetric gluing."""
    from .laws import same

    lhs = frame(glue_cacti(c1, i, c2, "symmetric"))
    rhs = compose_weighted(frame(c1), i, frame(c2))
    return None if same(lhs, rhs) else {"law": "frame is operadic", "i": i, "lhs": lhs, "rhs": rhs}
