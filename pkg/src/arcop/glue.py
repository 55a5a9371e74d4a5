"""
Operadic composition of weighted arc families.

``glue_matched`` identifies boundary ``i`` of one family with boundary 0 of
another.  The two end measures become partitions of a common circle; their
common refinement, closed up under the bands that return to the circle, cuts
the circle into elementary cells.  Following each cell through the bands on
both sides gives strips running between surviving boundaries (the output
arcs) or closed loops (discarded).  Regions of the result are assembled from
the old regions and the slivers of old bands between surviving strips, glued
across the circle; their genus follows from the Euler characteristic.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .core import (
    ArcFamily,
    InvalidFamily,
    Region,
    _UnionFind,
    arc_side,
    assemble_regions,
    canonical,
    derive_regions,
    end_interval,
    ensure_valid,
    inessential_arcs,
    is_exhaustive,
    merge_parallel,
    projectivize,
    seg,
    total_weight,
    LEFT,
    RIGHT,
)


class GlueError(ValueError):
    pass


class InessentialOutput(GlueError):
    """The glued foliation produced an arc cutting off a disk."""


class CirclePartition(NamedTuple):
    circumference: Fraction
    cells: tuple  # ((id, width), ...)

    @classmethod
    def of(cls, cells):
        cells = tuple((cid, Fraction(w)) for cid, w in cells)
        return cls(sum((w for _, w in cells), Fraction(0)), cells)

    def starts(self):
        out, x = [], Fraction(0)
        for _, w in self.cells:
            out.append(x)
            x += w
        return out


def band_refinement(P: CirclePartition, Q: CirclePartition, offset=0) -> list:
    """Common refinement of ``P`` and ``Q`` rotated forward by ``offset``.

    Returns ``(p_id, q_id, width)`` triples in circle order from the start of ``P``.
    """
    if P.circumference != Q.circumference:
        raise GlueError("circumference mismatch: %s vs %s" % (P.circumference, Q.circumference))
    L = P.circumference
    offset = Fraction(offset)
    if not 0 <= offset < L:
        raise GlueError("offset %s outside [0, %s)" % (offset, L))
    ps, qs = P.starts(), Q.starts()
    cuts = sorted(set(ps) | {(q + offset) % L for q in qs})
    out = []
    for k, x in enumerate(cuts):
        nxt = cuts[k + 1] if k + 1 < len(cuts) else L
        p = P.cells[bisect_right(ps, x) - 1][0]
        q = Q.cells[bisect_right(qs, (x - offset) % L) - 1][0]
        out.append((p, q, nxt - x))
    return out


@dataclass
class GlueReport:
    closed_leaves: int = 0
    merges: int = 0
    traced_bands: int = 0
    cells: int = 0

    def as_dict(self):
        return {"closed_leaves": self.closed_leaves, "merges": self.merges,
                "traced_bands": self.traced_bands, "cells": self.cells}


@dataclass
class TracedBand:
    kind: str  # "arc" or "closed"
    width: Fraction
    ends: tuple = ()
    itinerary: tuple = ()


# ---------------------------------------------------------------------------
# one side of the gluing circle

def _flips(ends):
    """Does a band reverse window coordinates between its two ends?"""
    (b0, _), (b1, _) = ends
    return (b0 == 0) == (b1 == 0)


class _Side:
    """One family's view of the gluing circle (its boundary ``bd``)."""

    def __init__(self, tag, fam, bd, shift):
        self.tag = tag
        self.fam = fam
        self.bd = bd
        self.shift = shift  # circle position of this side's window start
        self.entries = end_interval(fam, bd)
        self.starts = []
        x = Fraction(0)
        for be in self.entries:
            self.starts.append(x)
            x += be.width
        self.length = x
        self.entry_of = {(be.arc, be.end): idx for idx, be in enumerate(self.entries)}
        self.start_set = set(self.starts)
        self.where = fam.side_regions()

    def local(self, x):
        return (x - self.shift) % self.length

    def locate(self, x):
        """Entry index and offset of circle position ``x`` (``None`` offset at a gap)."""
        y = self.local(x)
        idx = bisect_right(self.starts, y) - 1
        return idx, y - self.starts[idx]

    def image(self, x):
        """Where a band returning to the circle sends the point ``x``, if anywhere."""
        idx, t = self.locate(x)
        if t == 0:
            return None
        be = self.entries[idx]
        far = self.fam.arcs[be.arc][1 - be.end]
        if far[0] != self.bd:
            return None
        j = self.entry_of[(be.arc, 1 - be.end)]
        return (self.starts[j] + be.width - t + self.shift) % self.length

    def to_first(self, arc, end, coord, width=0):
        """Convert a window coordinate at ``end`` of ``arc`` to the first end's coordinate."""
        if end == 0:
            return coord
        ends = self.fam.arcs[arc]
        if _flips(ends):
            return self.fam.weights[arc] - coord - width
        return coord

    def side_region(self, arc, at_zero):
        """Region along the side of ``arc`` at first-end coordinate 0 (or at full width)."""
        ends = self.fam.arcs[arc]
        left_at_zero = ends[0][0] == 0
        side = LEFT if left_at_zero == at_zero else RIGHT
        return self.where[arc_side(arc, side)]


def _trace(A: _Side, B: _Side, cuts):
    """Follow every elementary cell through both sides.

    Returns (paths, closed) where a path is ``(start_term, end_term, width, cells)``
    and a terminal is ``(tag, arc, far_end, coord)`` with ``coord`` in the far
    end's window coordinate.
    """
    L = A.length
    index = {x: k for k, x in enumerate(cuts)}
    N = len(cuts)
    widths = [(cuts[k + 1] if k + 1 < N else L) - cuts[k] for k in range(N)]
    links = []
    for k, x in enumerate(cuts):
        w = widths[k]
        link = {}
        for S in (A, B):
            idx, t = S.locate(x)
            be = S.entries[idx]
            far_end = 1 - be.end
            far = S.fam.arcs[be.arc][far_end]
            if far[0] == S.bd:
                j = S.entry_of[(be.arc, far_end)]
                y = (S.starts[j] + be.width - t - w + S.shift) % L
                link[S.tag] = ("cell", index[y])
            else:
                flip = _flips(S.fam.arcs[be.arc])
                coord = be.width - t - w if flip else t
                link[S.tag] = ("term", S.tag, be.arc, far_end, coord)
        links.append(link)
    seen = [False] * N
    paths = []
    for k in range(N):
        for first in ("A", "B"):
            if seen[k] or links[k][first][0] != "term":
                continue
            cells = [k]
            seen[k] = True
            cur, out = k, ("B" if first == "A" else "A")
            while links[cur][out][0] == "cell":
                cur = links[cur][out][1]
                seen[cur] = True
                cells.append((cur))
                out = "B" if out == "A" else "A"
            paths.append((links[k][first][1:], links[cur][out][1:], widths[k], cells))
    closed = [k for k in range(N) if not seen[k]]
    return paths, closed, widths, links


def _closure(A: _Side, B: _Side):
    L = A.length
    pts = set(A.starts) | {(y + B.shift) % L for y in B.starts}
    todo = list(pts)
    while todo:
        x = todo.pop()
        for S in (A, B):
            y = S.image(x)
            if y is not None and y not in pts:
                pts.add(y)
                todo.append(y)
    return sorted(pts)


def _closed_bands(closed, links):
    """Group closed cells into cyclic chains."""
    seen = set()
    count = 0
    for k in closed:
        if k in seen:
            continue
        count += 1
        stack = [k]
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            for tag in ("A", "B"):
                if links[c][tag][0] == "cell":
                    stack.append(links[c][tag][1])
    return count


def glue_matched(alpha: ArcFamily, i: int, beta: ArcFamily, offset=0, report: GlueReport = None) -> ArcFamily:
    """Glue boundary ``i`` of ``alpha`` to boundary 0 of ``beta``; measures must agree.

    ``offset`` rotates ``beta``'s boundary-0 partition forward along the circle.
    """
    m, n = alpha.arity, beta.arity
    if not 1 <= i <= m:
        raise GlueError("index %d outside 1..%d" % (i, m))
    rho = total_weight(alpha, i)
    if rho != total_weight(beta, 0):
        raise GlueError("totals mismatch: %s at boundary %d vs %s at boundary 0"
                        % (rho, i, total_weight(beta, 0)))
    if rho == 0:
        raise GlueError("glued boundaries carry no weight")
    offset = Fraction(offset)
    if not 0 <= offset < rho:
        raise GlueError("offset %s outside [0, %s)" % (offset, rho))
    A = _Side("A", alpha, i, Fraction(0))
    B = _Side("B", beta, 0, offset)
    cuts = _closure(A, B)
    paths, closed, widths, links = _trace(A, B, cuts)

    def out_bd(tag, b):
        if tag == "A":
            return b if b < i else b + n - 1
        return i + b - 1

    # strips that never meet the circle
    straight = []
    for tag, fam, bd in (("A", alpha, i), ("B", beta, 0)):
        for a, (e0, e1) in enumerate(fam.arcs):
            if e0[0] != bd and e1[0] != bd:
                straight.append(((tag, a, 0, Fraction(0)), (tag, a, 1, Fraction(0)), fam.weights[a]))
    strips = [(s, e, w) for s, e, w, _ in paths] + straight

    # sub-endpoints on each surviving old end
    sub = {}
    for sid, (s, e, w) in enumerate(strips):
        for which, (tag, a, end, coord) in enumerate((s, e)):
            fam = alpha if tag == "A" else beta
            b, slot = fam.arcs[a][end]
            sub.setdefault((tag, b, slot), []).append((coord, w, sid, which, a, end))
    sides = {"A": A, "B": B}

    # surviving strips inside each band touching the circle, by first-end coordinate
    nonclosed_cells = [False] * len(cuts)
    for _, _, _, cells in paths:
        for c in cells:
            nonclosed_cells[c] = True
    rects = {}
    for k, x in enumerate(cuts):
        for S in (A, B):
            idx, t = S.locate(x)
            be = S.entries[idx]
            ends = S.fam.arcs[be.arc]
            if ends[0][0] == S.bd and be.end == 1:
                continue  # both ends on the circle: count each strip once
            lo = S.to_first(be.arc, be.end, t, widths[k])
            rects.setdefault((S.tag, be.arc), []).append((lo + widths[k], nonclosed_cells[k]))
    his = {key: sorted(hi for hi, nc in v if nc) for key, v in rects.items()}

    def piece(tag, arc, end, coord):
        S = sides[tag]
        x = S.to_first(arc, end, coord)
        return (tag.lower() + "band", arc, bisect_right(his[(tag, arc)], x))

    uf = _UnionFind()
    euler, punct = {}, {}

    def node(key, chi, s=0):
        uf.add(key)
        euler[key] = chi
        punct[key] = s

    for S in (A, B):
        for idx, reg in enumerate(S.fam.regions):
            node((S.tag, idx), reg.euler, reg.punctures)
    glue_loss = []
    for (tag, arc), hi in his.items():
        S = sides[tag]
        q = len(hi)
        for k in range(q + 1):
            node((tag.lower() + "band", arc, k), 1)
        uf.union((tag.lower() + "band", arc, 0), (tag, S.side_region(arc, True)))
        uf.union((tag.lower() + "band", arc, q), (tag, S.side_region(arc, False)))
        glue_loss += [(tag.lower() + "band", arc, 0), (tag.lower() + "band", arc, q)]

    def circle_piece(S, x):
        idx, t = S.locate(x)
        if t == 0:
            return (S.tag, S.where[seg(S.bd, idx)])
        be = S.entries[idx]
        return piece(S.tag, be.arc, be.end, t)

    crossings = [k for k in range(len(cuts)) if nonclosed_cells[k]]
    if crossings:
        for k in crossings:
            x = cuts[k + 1] if k + 1 < len(cuts) else Fraction(0)
            a_piece, b_piece = circle_piece(A, x), circle_piece(B, x)
            uf.union(a_piece, b_piece)
            glue_loss.append(a_piece)
    else:
        uf.union(circle_piece(A, Fraction(0)), circle_piece(B, Fraction(0)))

    # output boundaries, endpoints and the piece behind every boundary segment
    r_out = m + n
    origin = [None] * r_out
    for b in range(m + 1):
        if b != i:
            origin[out_bd("A", b)] = ("A", b)
    for b in range(1, n + 1):
        origin[out_bd("B", b)] = ("B", b)
    counts = [0] * r_out
    strip_ends = [[None, None] for _ in strips]
    seg_piece = {}
    for nb, (tag, b) in enumerate(origin):
        fam = alpha if tag == "A" else beta
        S = sides[tag]
        slot = 0
        seg_piece[(nb, 0)] = (tag, S.where[seg(b, 0)])
        for old in range(1, fam.counts[b] + 1):
            items = sorted(sub.get((tag, b, old), []))
            for pos, (coord, w, sid, which, a, end) in enumerate(items):
                slot += 1
                strip_ends[sid][which] = (nb, slot)
                if pos + 1 < len(items):
                    seg_piece[(nb, slot)] = piece(tag, a, end, items[pos + 1][0])
                elif old < fam.counts[b]:
                    seg_piece[(nb, slot)] = (tag, S.where[seg(b, old)])
        counts[nb] = slot
    arcs = tuple((tuple(e0), tuple(e1)) for e0, e1 in strip_ends)
    weights = tuple(w for _, _, w in strips)

    cycles = derive_regions(counts, arcs)
    for key in glue_loss:
        root = key
        euler[root] = euler.get(root, 0) - 1
    comp_euler, comp_punct = {}, {}
    for key, chi in euler.items():
        root = uf.find(key)
        comp_euler[root] = comp_euler.get(root, 0) + chi
        comp_punct[root] = comp_punct.get(root, 0) + punct.get(key, 0)
    owner = [uf.find(seg_piece[next((s[1], s[2]) for s in cyc if s[0] == 0)]) for cyc in cycles]
    regions = assemble_regions(cycles, owner, comp_euler, comp_punct)
    k = len(arcs)
    twice = 2 - r_out - (alpha.punctures + beta.punctures) + k - sum(r.euler for r in regions)
    genus = twice // 2
    if twice % 2 or genus != alpha.genus + beta.genus:
        raise ArithmeticError("glued genus %s != %d" % (twice / 2, alpha.genus + beta.genus))
    out = canonical(ArcFamily(genus, alpha.punctures + beta.punctures, tuple(counts), arcs,
                              weights, regions))
    out, merges = merge_parallel(out)
    bad = inessential_arcs(out)
    if bad:
        raise InessentialOutput("gluing produced inessential arcs %r in %r" % (bad, out))
    if report is not None:
        report.closed_leaves += _closed_bands(closed, links)
        report.merges += merges
        report.traced_bands += len(paths)
        report.cells += len(cuts)
    return ensure_valid(out)


def traced_bands(alpha, i, beta, offset=0) -> list:
    """The maximal bands of the glued foliation, before parallel merging."""
    A = _Side("A", alpha, i, Fraction(0))
    B = _Side("B", beta, 0, Fraction(offset))
    cuts = _closure(A, B)
    paths, closed, widths, links = _trace(A, B, cuts)
    out = []
    for s, e, w, cells in paths:
        itin = []
        for c in cells:
            for S in (A, B):
                itin.append((S.tag, S.entries[S.locate(cuts[c])[0]].arc))
        out.append(TracedBand("arc", w, (s, e), tuple(itin)))
    seen = set()
    for k in closed:
        if k in seen:
            continue
        chain, stack = [], [k]
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            chain.append(c)
            for tag in ("A", "B"):
                if links[c][tag][0] == "cell":
                    stack.append(links[c][tag][1])
        out.append(TracedBand("closed", widths[k], (), tuple(sorted(chain))))
    return out


# ---------------------------------------------------------------------------
# operad compositions

def _require_exhaustive(f, name):
    if not is_exhaustive(f):
        raise GlueError("%s is not exhaustive" % name)


def compose_weighted(alpha: ArcFamily, i: int, beta: ArcFamily, offset_fraction=0,
                     report: GlueReport = None) -> ArcFamily:
    """Rescale ``alpha`` by the weight at boundary 0 of ``beta`` and vice versa, then glue.

    ``offset_fraction`` is the rotation as a fraction of the common circle.
    """
    _require_exhaustive(alpha, "alpha")
    _require_exhaustive(beta, "beta")
    return _compose(alpha, i, beta, offset_fraction, report)


def _compose(alpha, i, beta, offset_fraction, report):
    if not 1 <= i <= alpha.arity:
        raise GlueError("index %d outside 1..%d" % (i, alpha.arity))
    rho0 = total_weight(beta, 0)
    rhoi = total_weight(alpha, i)
    if not rho0 or not rhoi:
        raise GlueError("glued boundaries must be met by arcs")
    a2, b2 = alpha.scaled(rho0), beta.scaled(rhoi)
    frac = Fraction(offset_fraction) % 1
    return glue_matched(a2, i, b2, frac * rho0 * rhoi, report)


def compose_projective(alpha: ArcFamily, i: int, beta: ArcFamily, offset_fraction=0,
                       report: GlueReport = None) -> ArcFamily:
    """Composition of projective classes; the result has total weight one."""
    _require_exhaustive(alpha, "alpha")
    _require_exhaustive(beta, "beta")
    return projectivize(_compose(projectivize(alpha), i, projectivize(beta), offset_fraction, report))


def insert_surface(alpha: ArcFamily, i: int, beta: ArcFamily) -> ArcFamily:
    """``alpha`` seen in the surface obtained by gluing ``beta`` at an unmet boundary ``i``."""
    if alpha.counts[i]:
        raise GlueError("boundary %d is met" % i)
    n = beta.arity

    def out_bd(b):
        return b if b < i else b + n - 1

    counts = []
    for b in range(alpha.boundaries):
        if b == i:
            counts += [0] * n
        else:
            counts.append(alpha.counts[b])
    arcs = tuple(tuple((out_bd(b), k) for b, k in ends) for ends in alpha.arcs)
    regions = []
    for reg in alpha.regions:
        cycles = []
        absorbs = False
        for cyc in reg.cycles:
            if cyc == (seg(i, 0),):
                absorbs = True
                continue
            cycles.append(tuple(seg(out_bd(s[1]), s[2]) if s[0] == 0 else s for s in cyc))
        if absorbs:
            cycles += [(seg(i + j - 1, 0),) for j in range(1, n + 1)]
            regions.append(Region(reg.genus + beta.genus, reg.punctures + beta.punctures, tuple(cycles)))
        else:
            regions.append(Region(reg.genus, reg.punctures, tuple(cycles)))
    out = ArcFamily(alpha.genus + beta.genus, alpha.punctures + beta.punctures, tuple(counts),
                    arcs, alpha.weights, tuple(regions))
    return ensure_valid(canonical(out))


def relaxed_compose(alpha: ArcFamily, i: int, beta: ArcFamily, offset_fraction=0) -> ArcFamily:
    """Composition that tolerates ``alpha`` missing boundary ``i``; ``beta`` must meet 0."""
    if not beta.counts[0]:
        raise GlueError("beta must meet boundary 0")
    if not 1 <= i <= alpha.arity:
        raise GlueError("index %d outside 1..%d" % (i, alpha.arity))
    if not alpha.counts[i]:
        return projectivize(insert_surface(alpha, i, beta))
    return projectivize(_compose(projectivize(alpha), i, projectivize(beta), offset_fraction, None))


def compose_output_labels(m: int, n: int, i: int) -> list:
    """Where each boundary of the inputs lands: list of ``(source, label)`` in output order."""
    return ([("a", b) for b in range(i)] + [("b", b) for b in range(1, n + 1)]
            + [("a", b) for b in range(i + 1, m + 1)])
