"""
Brute-force gluing used to cross-check :func:`arcop.glue.glue_matched`.

All widths are scaled by the common denominator ``D`` so every band splits
into strips of width ``1/D``.  Each strip is walked on its own through the two
matchings.  Strips that are adjacent and cross the same bands are regrouped
into one arc.  Regions come from a cell decomposition of the glued surface
minus the open regrouped strips.  The leftover complement is made of:

* the old regions (open surfaces, Euler number known),
* leaves separating adjacent strips that are not in the same group,
* closed strips and the pieces of the gluing circle they cover,
* grid points and boundary points,
* the window gaps on surviving boundaries.

Connected components and compactly supported Euler numbers are read off this
decomposition cell by cell.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .core import (
    ArcFamily,
    _UnionFind,
    arc_side,
    assemble_regions,
    canonical,
    derive_regions,
    end_interval,
    ensure_valid,
    inessential_arcs,
    merge_parallel,
    seg,
    total_weight,
    LEFT,
    RIGHT,
)
from .glue import GlueError, InessentialOutput


def _flip(ends):
    return (ends[0][0] == 0) == (ends[1][0] == 0)


class _Strips:
    """Unit-strip bookkeeping for one family glued along boundary ``bd``."""

    def __init__(self, tag, fam, bd, D, shift, L):
        self.tag, self.fam, self.bd, self.shift, self.L = tag, fam, bd, shift, L
        self.W = [int(w * D) for w in fam.weights]
        self.start = {}
        x = 0
        for be in end_interval(fam, bd):
            self.start[(be.arc, be.end)] = x
            x += self.W[be.arc]
        self.gap_pos = sorted(self.start.values())
        self.at = [None] * L
        for (arc, end), s in self.start.items():
            for t in range(self.W[arc]):
                self.at[(s + t + shift) % L] = (arc, end, t)

    def first_coord(self, arc, end, t):
        """Unit strip index (first-end coordinate) of strip ``t`` counted at ``end``."""
        if end == 0 or not _flip(self.fam.arcs[arc]):
            return t
        return self.W[arc] - 1 - t

    def far(self, x):
        """Follow the strip in cell ``x`` through this side: next cell or terminal."""
        arc, end, t = self.at[x]
        u = self.first_coord(arc, end, t)
        fe = 1 - end
        tf = u if fe == 0 or not _flip(self.fam.arcs[arc]) else self.W[arc] - 1 - u
        b, slot = self.fam.arcs[arc][fe]
        if b == self.bd:
            return ("cell", (self.start[(arc, fe)] + tf + self.shift) % self.L)
        return ("term", (self.tag, arc, fe, tf))

    def leaf_point(self, arc, end, v):
        """Cell-complex vertex where leaf at first-end coordinate ``v`` meets ``end``."""
        c = v if end == 0 or not _flip(self.fam.arcs[arc]) else self.W[arc] - v
        b, slot = self.fam.arcs[arc][end]
        if b == self.bd:
            return ("C", (self.start[(arc, end)] + c + self.shift) % self.L)
        return ("V", self.tag, b, slot, c)


def oracle_glue(alpha: ArcFamily, i: int, beta: ArcFamily, offset=0, report=None) -> ArcFamily:
    """Glue by walking unit strips one at a time; must agree with ``glue_matched``."""
    if not 1 <= i <= alpha.arity:
        raise GlueError("index %d outside 1..%d" % (i, alpha.arity))
    rho = total_weight(alpha, i)
    if rho != total_weight(beta, 0) or rho == 0:
        raise GlueError("totals mismatch")
    offset = Fraction(offset)
    if not 0 <= offset < rho:
        raise GlueError("offset out of range")
    D = lcm(*(Fraction(w).denominator for w in alpha.weights + beta.weights), offset.denominator)
    if rho * D < 3:
        # with one or two cells, neighbouring cells touch at both ends
        D *= 3
    L = int(rho * D)
    A = _Strips("A", alpha, i, D, 0, L)
    B = _Strips("B", beta, 0, D, int(offset * D), L)
    sides = {"A": A, "B": B}

    nxt = {"A": [A.far(x) for x in range(L)], "B": [B.far(x) for x in range(L)]}
    seen = [False] * L
    walks = []
    for x in range(L):
        for first in "AB":
            if seen[x] or nxt[first][x][0] != "term":
                continue
            cells, cur, out = [x], x, "B" if first == "A" else "A"
            seen[x] = True
            while nxt[out][cur][0] == "cell":
                cur = nxt[out][cur][1]
                seen[cur] = True
                cells.append(cur)
                out = "B" if out == "A" else "A"
            walks.append((nxt[first][x][1], nxt[out][cur][1], cells))
    for S in (A, B):
        for arc, (e0, e1) in enumerate(S.fam.arcs):
            if e0[0] != S.bd and e1[0] != S.bd:
                for u in range(S.W[arc]):
                    uf_ = S.W[arc] - 1 - u if _flip(S.fam.arcs[arc]) else u
                    walks.append(((S.tag, arc, 0, u), (S.tag, arc, 1, uf_), []))

    # orient, key by itinerary and regroup adjacent strips
    def signature(s, e, cells):
        return ((s[:3], e[:3], tuple((A.at[c][:2], B.at[c][:2]) for c in cells)), s[3], e[3])

    keyed = []
    for s, e, cells in walks:
        fwd = signature(s, e, cells)
        bwd = signature(e, s, cells[::-1])
        if bwd < fwd:
            keyed.append((bwd, (e, s, cells[::-1])))
        else:
            keyed.append((fwd, (s, e, cells)))
    keyed.sort(key=lambda kv: kv[0])
    groups = []  # [start term, end term coords, count, walks]
    for (key, sc, ec), walk in keyed:
        if groups:
            g = groups[-1]
            if g["key"] == key and sc == g["s_last"] + 1 and abs(ec - g["e_last"]) == 1:
                g["s_last"], g["e_last"] = sc, ec
                g["walks"].append(walk)
                continue
        groups.append({"key": key, "s_last": sc, "e_last": ec, "walks": [walk]})

    strip_group = {}
    cell_group = [None] * L
    for gid, g in enumerate(groups):
        for k, (s, e, cells) in enumerate(g["walks"]):
            for tag, arc, end, t in (s, e):
                S = sides[tag]
                strip_group[(tag, arc, S.first_coord(arc, end, t))] = (gid, k)
            for c in cells:
                cell_group[c] = (gid, k)
                for S in (A, B):
                    arc, end, t = S.at[c]
                    strip_group[(S.tag, arc, S.first_coord(arc, end, t))] = (gid, k)

    def interior(p, q):
        # consecutive strips of one group; a group folding back onto itself
        # keeps the seam between the two halves of a single strip
        return p is not None and q is not None and p[0] == q[0] and abs(p[1] - q[1]) == 1

    # cell decomposition of the complement
    uf = _UnionFind()
    chi = {}
    punct = {}

    def cell(key, value, s=0):
        uf.add(key)
        chi[key] = value
        punct[key] = s

    for S in (A, B):
        where = S.fam.side_regions()
        for idx, reg in enumerate(S.fam.regions):
            cell(("R", S.tag, idx), reg.euler, reg.punctures)
        for arc, ends in enumerate(S.fam.arcs):
            W = S.W[arc]
            left_at_zero = ends[0][0] == 0
            for v in range(W + 1):
                lo = strip_group.get((S.tag, arc, v - 1), "edge")
                hi = strip_group.get((S.tag, arc, v), "edge")
                if 0 < v < W and interior(lo, hi):
                    continue
                leaf = ("L", S.tag, arc, v)
                cell(leaf, -1)
                for end in (0, 1):
                    uf.add(S.leaf_point(arc, end, v))
                    uf.union(leaf, S.leaf_point(arc, end, v))
                if v == 0 or v == W:
                    side = LEFT if left_at_zero == (v == 0) else RIGHT
                    uf.union(leaf, ("R", S.tag, where[arc_side(arc, side)]))
                if 0 < v and lo is None:
                    uf.union(leaf, ("Q", S.tag, arc, v - 1))
                if v < W and hi is None:
                    uf.union(leaf, ("Q", S.tag, arc, v))
            for u in range(W):
                if strip_group.get((S.tag, arc, u)) is None:
                    cell(("Q", S.tag, arc, u), 1)
                    uf.union(("Q", S.tag, arc, u), ("L", S.tag, arc, u))
                    uf.union(("Q", S.tag, arc, u), ("L", S.tag, arc, u + 1))
        for k, pos in enumerate(S.gap_pos):
            uf.add(("C", (pos + S.shift) % L))
            uf.union(("R", S.tag, where[seg(S.bd, k)]), ("C", (pos + S.shift) % L))
        for b, c in enumerate(S.fam.counts):
            if b == S.bd or c == 0:
                continue
            ends = {}
            for be in end_interval(S.fam, b):
                ends[S.fam.arcs[be.arc][be.end][1]] = (be.arc, be.end)
            for slot in range(1, c + 1):
                arc, end = ends[slot]
                W = S.W[arc]
                for v in range(W + 1):
                    if 0 < v < W:
                        g0 = strip_group[(S.tag, arc, S.first_coord(arc, end, v - 1))]
                        g1 = strip_group[(S.tag, arc, S.first_coord(arc, end, v))]
                        if interior(g0, g1):
                            continue
                    cell(("V", S.tag, b, slot, v), 1)
            for k in range(c):
                lo_slot, hi_slot = (k, k + 1) if k else (c, 1)
                edge = ("G", S.tag, b, k)
                cell(edge, -1)
                uf.union(edge, ("R", S.tag, where[seg(b, k)]))
                arc_lo, _ = ends[lo_slot]
                uf.union(edge, ("V", S.tag, b, lo_slot, S.W[arc_lo]))
                uf.union(edge, ("V", S.tag, b, hi_slot, 0))
    corners = {(pos + S.shift) % L for S in (A, B) for pos in S.gap_pos}
    for x in range(L):
        if x in corners or not interior(cell_group[x], cell_group[x - 1]):
            cell(("C", x), 1)
        if cell_group[x] is None:
            cell(("E", x), -1)
            uf.union(("E", x), ("C", x))
            uf.union(("E", x), ("C", (x + 1) % L))
            for S in (A, B):
                arc, end, t = S.at[x]
                uf.union(("E", x), ("Q", S.tag, arc, S.first_coord(arc, end, t)))

    # output boundaries and endpoints
    m, n = alpha.arity, beta.arity
    origin = [("A", b) for b in range(i)] + [("B", b) for b in range(1, n + 1)] + \
             [("A", b) for b in range(i + 1, m + 1)]
    at_end = {}
    for gid, g in enumerate(groups):
        s0, e0, _ = g["walks"][0]
        s1, e1, _ = g["walks"][-1]
        for which, (a, b) in enumerate(((s0, s1), (e0, e1))):
            tag, arc, end, _ = a
            lo = min(a[3], b[3])
            bd, slot = sides[tag].fam.arcs[arc][end]
            at_end.setdefault((tag, bd, slot), []).append((lo, gid, which))
    counts = []
    ends_of = [[None, None] for _ in groups]
    seg_cell = {}
    for nb, (tag, b) in enumerate(origin):
        fam = sides[tag].fam
        where = fam.side_regions()
        seg_cell[(nb, 0)] = ("R", tag, where[seg(b, 0)])
        slot = 0
        for old in range(1, fam.counts[b] + 1):
            items = sorted(at_end[(tag, b, old)])
            for pos, (lo, gid, which) in enumerate(items):
                slot += 1
                ends_of[gid][which] = (nb, slot)
                if pos + 1 < len(items):
                    seg_cell[(nb, slot)] = ("V", tag, b, old, items[pos + 1][0])
                elif old < fam.counts[b]:
                    seg_cell[(nb, slot)] = ("R", tag, where[seg(b, old)])
        counts.append(slot)
    arcs = tuple((tuple(e0), tuple(e1)) for e0, e1 in ends_of)
    weights = tuple(Fraction(len(g["walks"]), D) for g in groups)
    cycles = derive_regions(counts, arcs)
    comp_chi, comp_s = {}, {}
    for key, value in chi.items():
        root = uf.find(key)
        comp_chi[root] = comp_chi.get(root, 0) + value
        comp_s[root] = comp_s.get(root, 0) + punct[key]
    owner = [uf.find(seg_cell[next((s[1], s[2]) for s in cyc if s[0] == 0)]) for cyc in cycles]
    regions = assemble_regions(cycles, owner, comp_chi, comp_s)
    s_total = alpha.punctures + beta.punctures
    twice = 2 - len(counts) - s_total + len(arcs) - sum(r.euler for r in regions)
    out = canonical(ArcFamily(twice // 2, s_total, tuple(counts), arcs, weights, regions))
    out, merges = merge_parallel(out)
    if inessential_arcs(out):
        raise InessentialOutput("oracle produced inessential arcs")
    if report is not None:
        report["strips"] = len(walks)
        report["groups"] = len(groups)
        report["closed_cells"] = sum(1 for g in cell_group if g is None)
        report["merges"] = merges
    return ensure_valid(out)
