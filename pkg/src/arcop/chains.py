"""
Parametrized families of arc families with piecewise affine weights.

A family lives on a product of intervals and triangles.  Its domain is cut
into closed polyhedral cells; on each cell the arc combinatorics is fixed and
every weight is an affine function of the parameters.  Evaluating at a point
drops zero weights, merges arcs that became parallel and projectivizes.

The generators are built from one lobe model: boundary 1 is a loop of
length one whose local zero sits at arclength ``w0`` from the outer
basepoint, and the other boundaries are lobes of length one attached at
given arclengths.  Reading the perimeter from the basepoint gives the arcs
at boundary 0, reading the loop from its local zero gives those at
boundary 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import NamedTuple

from .core import (
    ArcFamily,
    combinatorial_type,
    drop_zero_weights,
    ensure_valid,
    family,
    merge_parallel,
    projectivize,
    relabel,
    total_weight,
)
from .glue import compose_projective

F0 = Fraction(0)
F1 = Fraction(1)


class FamilyError(ValueError):
    pass


# ---------------------------------------------------------------------------
# affine functions and domains

class Affine(NamedTuple):
    const: Fraction
    coeffs: tuple

    @classmethod
    def constant(cls, c, dim):
        return cls(Fraction(c), (F0,) * dim)

    @classmethod
    def var(cls, k, dim):
        return cls(F0, tuple(F1 if j == k else F0 for j in range(dim)))

    def __call__(self, point):
        return self.const + sum((c * x for c, x in zip(self.coeffs, point)), F0)

    def __add__(self, other):
        if not isinstance(other, Affine):
            return Affine(self.const + Fraction(other), self.coeffs)
        return Affine(self.const + other.const, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Affine(-self.const, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other if isinstance(other, Affine) else -Fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        k = Fraction(k)
        return Affine(self.const * k, tuple(c * k for c in self.coeffs))

    __rmul__ = __mul__

    def substitute(self, const, matrix):
        """Compose with the affine map ``x = const + matrix @ y``."""
        dim = len(matrix[0]) if matrix else 0
        out = Affine(self.const, (F0,) * dim)
        for c, row_const, row in zip(self.coeffs, const, matrix):
            out = out + Affine(row_const, tuple(row)) * c
        return out

    def embed(self, offset, dim):
        """Regard as a function on a larger parameter space starting at ``offset``."""
        coeffs = [F0] * dim
        coeffs[offset:offset + len(self.coeffs)] = self.coeffs
        return Affine(self.const, tuple(coeffs))


@dataclass(frozen=True)
class Interval:
    dim: int = 1

    def constraints(self, offset, dim):
        s = Affine.var(offset, dim)
        return (s, 1 - s)

    def grid(self, n):
        return [(Fraction(k, n),) for k in range(n + 1)]


@dataclass(frozen=True)
class Triangle:
    dim: int = 2

    def constraints(self, offset, dim):
        s, t = Affine.var(offset, dim), Affine.var(offset + 1, dim)
        return (s, t, 1 - s - t)

    def grid(self, n):
        return [(Fraction(i, n), Fraction(j, n)) for i in range(n + 1) for j in range(n + 1 - i)]


FACETS = {
    Interval: {0: ((F0,), ((),)), 1: ((F1,), ((),))},
    Triangle: {"s=0": ((F0, F0), ((F0,), (F1,))), "t=0": ((F0, F0), ((F1,), (F0,))),
               "s+t=1": ((F0, F1), ((F1,), (-F1,)))},
}


@dataclass(frozen=True)
class ParamDomain:
    factors: tuple = ()

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    def offsets(self):
        out, k = [], 0
        for f in self.factors:
            out.append(k)
            k += f.dim
        return out

    def constraints(self):
        d = self.dim
        return tuple(c for f, off in zip(self.factors, self.offsets()) for c in f.constraints(off, d))

    def contains(self, point) -> bool:
        return len(point) == self.dim and all(c(point) >= 0 for c in self.constraints())

    def grid(self, n):
        parts = [f.grid(n) for f in self.factors]
        return [tuple(x for piece in combo for x in piece) for combo in product(*parts)]

    def __mul__(self, other):
        return ParamDomain(self.factors + other.factors)


POINT = ParamDomain(())
I1 = ParamDomain((Interval(),))
I2 = ParamDomain((Interval(), Interval()))


# ---------------------------------------------------------------------------
# cellwise families

@dataclass(frozen=True)
class Cell:
    constraints: tuple  # Affine functions, >= 0 on the closed cell
    template: ArcFamily
    weights: tuple  # Affine weight per arc of the template

    def contains(self, point) -> bool:
        return all(c(point) >= 0 for c in self.constraints)


@dataclass(frozen=True)
class CellwiseFamily:
    name: str
    domain: ParamDomain
    cells: tuple
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def degree(self) -> int:
        return self.domain.dim

    @property
    def arity(self) -> int:
        return self.cells[0].template.arity

    def cells_at(self, point):
        return [c for c in self.cells if c.contains(point)]

    def __call__(self, *point):
        return eval_family(self, point)


def evaluate_cell(cell: Cell, point) -> ArcFamily:
    ws = [w(point) for w in cell.weights]
    if any(w < 0 for w in ws):
        raise FamilyError("negative weight %s at %r" % (min(ws), point))
    f = cell.template.with_weights(ws)
    f, _ = merge_parallel(drop_zero_weights(f))
    return projectivize(ensure_valid(f))


def eval_family(F: CellwiseFamily, point=()) -> ArcFamily:
    """Projective arc family at ``point``: locate a cell, evaluate, drop zeros, validate."""
    point = tuple(Fraction(x) for x in point)
    if not F.domain.contains(point):
        raise FamilyError("point %r outside the domain of %s" % (point, F.name))
    cells = F.cells_at(point)
    if not cells:
        raise FamilyError("no cell of %s contains %r" % (F.name, point))
    return evaluate_cell(cells[0], point)


def continuity_violations(F: CellwiseFamily, n: int = 6) -> list:
    """Grid points lying in several cells where the cells disagree."""
    from .laws import same

    out = []
    for p in F.domain.grid(n):
        values = [evaluate_cell(c, p) for c in F.cells_at(p)]
        if any(not same(values[0], v) for v in values[1:]):
            out.append(p)
    return out


def point_family(name: str, f: ArcFamily) -> CellwiseFamily:
    weights = tuple(Affine.constant(w, 0) for w in f.weights)
    return CellwiseFamily(name, POINT, (Cell((), f, weights),))


def _template(counts, arcs, weights, numeric):
    """Family with canonical arc order plus the matching reordering of ``weights``."""
    marked = family(counts, arcs, list(range(1, len(arcs) + 1)))
    order = [int(w) - 1 for w in marked.weights]
    tmpl = marked.with_weights([numeric[k] for k in order])
    return tmpl, tuple(weights[k] for k in order)


def lobe_cell(constraints, w0, inserts, sample, n_lobes=None) -> Cell:
    """One cell of the lobe model.

    ``w0`` and the insert positions are affine in the parameters; ``inserts``
    lists ``(label, position, weight)`` with ties kept in list order.  The
    combinatorics is read at the interior point ``sample``.
    """
    dim = len(sample)
    zero, one = Affine.constant(0, dim), Affine.constant(1, dim)
    events = sorted([(w0(sample), 1, -1, w0)] +
                    [(pos(sample), 0, k, pos) for k, (_, pos, _) in enumerate(inserts)],
                    key=lambda e: (e[0], e[2]))
    seq = []  # items at boundary 0: ("a", start, length) or ("lobe", label, weight)
    prev, prev_val = zero, F0
    for val, kind, k, expr in events + [(F1, 1, -1, one)]:
        if val > prev_val:
            seq.append(("a", prev, expr - prev, prev_val))
            prev, prev_val = expr, val
        if kind == 0:
            label, _, weight = inserts[k]
            seq.append(("lobe", label, weight, val))
    w0v = w0(sample)
    pieces = sorted((k for k, item in enumerate(seq) if item[0] == "a"),
                    key=lambda k: (seq[k][3] - w0v) % 1)
    a_slot = {k: s for s, k in enumerate(pieces, 1)}
    labels = sorted({lab for lab, _, _ in inserts})
    n = n_lobes or (max(labels) if labels else 1)
    counts = [len(seq), len(pieces)] + [0] * (n - 1)
    arcs, weights, numeric = [], [], []
    for k, item in enumerate(seq):
        if item[0] == "a":
            arcs.append(((0, k + 1), (1, a_slot[k])))
            weights.append(item[2])
        else:
            lab = item[1]
            counts[lab] += 1
            arcs.append(((0, k + 1), (lab, counts[lab])))
            weights.append(Affine.constant(item[2], dim))
        numeric.append(weights[-1](sample))
    tmpl, ws = _template(counts, arcs, weights, numeric)
    return Cell(tuple(constraints), tmpl, ws)


def _interval_cells(pieces, build):
    """Split [0, 1] at ``pieces`` (sorted interior breakpoints) and build one cell per piece."""
    s = Affine.var(0, 1)
    cuts = [F0] + [Fraction(x) for x in pieces] + [F1]
    cells = []
    for lo, hi in zip(cuts, cuts[1:]):
        cells.append(build((s - lo, hi - s), ((lo + hi) / 2,)))
    return tuple(cells)


# ---------------------------------------------------------------------------
# generators

def _delta_n(n):
    s = Affine.var(0, 1)

    def build(cons, sample):
        return lobe_cell(cons, 1 - s, [(lab, 1 - s, 1) for lab in range(2, n + 1)], sample, n)

    return CellwiseFamily("delta_%d" % n if n > 1 else "delta", I1, _interval_cells([], build),
                          {"generator": "delta_n", "n": n})


def _star():
    s = Affine.var(0, 1)

    def build(cons, sample):
        return lobe_cell(cons, Affine.constant(0, 1), [(2, 1 - s, 1)], sample, 2)

    return CellwiseFamily("star", I1, _interval_cells([], build), {"generator": "star"})


def _product(n):
    cell = lobe_cell((), Affine.constant(0, 0), [(lab, Affine.constant(1, 0), 1) for lab in range(2, n + 1)],
                     (), n)
    return CellwiseFamily("mu_%d" % n if n != 2 else "dot", POINT, (cell,), {"generator": "product", "n": n})


def make_generator(name: str, k: int = None) -> CellwiseFamily:
    """``one``, ``delta``, ``dot``, ``star``, ``delta_n`` (needs ``k``) or ``product`` (needs ``k``)."""
    if name == "one":
        return CellwiseFamily("one", POINT, _product(1).cells, {"generator": "one"})
    if name == "delta":
        return _delta_n(1)
    if name == "dot":
        return _product(2)
    if name == "star":
        return _star()
    if name == "delta_n":
        if not k or k < 1:
            raise FamilyError("delta_n needs an arity k >= 1")
        return _delta_n(k)
    if name == "product":
        if not k or k < 1:
            raise FamilyError("product needs an arity k >= 1")
        return _product(k)
    raise FamilyError("unknown generator %r" % (name,))


def bracket_family() -> CellwiseFamily:
    """The bracket loop: ``star`` on [0, 1/2] followed by the relabelled ``star`` on [1/2, 1]."""
    s = Affine.var(0, 1)
    half = Fraction(1, 2)
    first = lobe_cell((s, half - s), Affine.constant(0, 1), [(2, 1 - 2 * s, 1)], (Fraction(1, 4),), 2)
    # second half: lobe 1 travels around lobe 2; build with labels swapped, then relabel
    swapped = lobe_cell((s - half, 1 - s), Affine.constant(0, 1), [(2, 2 - 2 * s, 1)], (Fraction(3, 4),), 2)
    tau = (0, 2, 1)
    tmpl = relabel(swapped.template, tau)
    second = Cell(swapped.constraints, tmpl, _relabel_weights(swapped, tmpl, tau))
    return CellwiseFamily("bracket", I1, (first, second), {"generator": "bracket"})


def _relabel_weights(cell, new_template, sigma):
    # relabel keeps arcs in canonical order of the new labels; match arcs through their ends
    old = cell.template
    key_old = {}
    for k, (e0, e1) in enumerate(old.arcs):
        ends = tuple(sorted(((sigma[e0[0]], e0[1]), (sigma[e1[0]], e1[1]))))
        key_old[ends] = k
    return tuple(cell.weights[key_old[tuple(sorted(arc))]] for arc in new_template.arcs)


def relabel_family(F: CellwiseFamily, sigma) -> CellwiseFamily:
    cells = []
    for c in F.cells:
        tmpl = relabel(c.template, sigma)
        cells.append(Cell(c.constraints, tmpl, _relabel_weights(c, tmpl, sigma)))
    return CellwiseFamily("%s%s" % (F.name, tuple(sigma)), F.domain, tuple(cells), dict(F.meta))


def scaling_homotopy(n: int) -> CellwiseFamily:
    """Two-parameter family from delta_n (t = 0) to delta_2 with a product in its second slot (t = 1).

    The bands at boundary 1 carry ``1-s`` and ``s``; the other bands shrink
    from one to ``1/(n-1)``, which is the projective class of the composite.
    """
    if n < 2:
        raise FamilyError("the scaling homotopy needs n >= 2")
    s, t = Affine.var(0, 2), Affine.var(1, 2)
    other = 1 - t * Fraction(n - 2, n - 1)
    counts = [n + 1, 2] + [1] * (n - 1)
    arcs = [((0, 1), (1, 2))] + [((0, k), (k, 1)) for k in range(2, n + 1)] + [((0, n + 1), (1, 1))]
    weights = [1 - s] + [other] * (n - 1) + [s]
    sample = (Fraction(1, 3), Fraction(1, 3))
    tmpl, ws = _template(counts, arcs, weights, [w(sample) for w in weights])
    return CellwiseFamily("scale_%d" % n, I2, (Cell(I2.constraints(), tmpl, ws),), {"n": n})


def partbv_square() -> CellwiseFamily:
    """Two-parameter family on [0, 1]^2 filling the relation between delta on three inputs and its pieces.

    Lobes 2 and 3 sit on the loop of boundary 1 at arclengths ``wb <= wc``
    while the local zero moves once around.  The four sides are, with
    ``s`` the parameter of the corresponding one-parameter family,

    * ``v = 0``: delta_3 at ``s = 1 - u``
    * ``u = 0``: lobe 2 times delta_2 on lobes 1 and 3, at ``s = 1 - v``
    * ``v = 1``: delta_2 on lobes 1 and 2 times lobe 3, at ``s = 1 - u``
    * ``u = 1``: delta on lobe 1 times lobes 2 and 3, at ``s = 1 - v``
    """
    u, v = Affine.var(0, 2), Affine.var(1, 2)
    pieces = [
        # (constraints, w0, wb, wc, interior sample)
        ((u - v, 1 - u - v), u + v, u, u, (Fraction(1, 2), Fraction(1, 6))),
        ((u - v, u + v - 1), u + v - 1, u, u, (Fraction(5, 6), Fraction(1, 2))),
        ((v - u, 1 - u - v), u + v, u, v, (Fraction(1, 6), Fraction(1, 2))),
        ((v - u, u + v - 1), u + v - 1, u, v, (Fraction(1, 2), Fraction(5, 6))),
    ]
    cells = []
    for cons, w0, wb, wc, sample in pieces:
        cons = I2.constraints() + cons
        cells.append(lobe_cell(cons, w0, [(2, wb, 1), (3, wc, 1)], sample, 3))
    return CellwiseFamily("partbv_square", I2, tuple(cells), {"generator": "partbv_square"})


# ---------------------------------------------------------------------------
# faces and boundaries

def _facet_map(domain: ParamDomain, factor: int, key):
    """Affine map from the facet's parameters into the domain's, and the facet domain."""
    fac = domain.factors[factor]
    table = FACETS[type(fac)]
    if key not in table:
        raise FamilyError("unknown facet %r of factor %d; choose from %s" % (key, factor, sorted(map(str, table))))
    fconst, frows = table[key]
    new_factors = list(domain.factors)
    if isinstance(fac, Interval):
        del new_factors[factor]
    else:
        new_factors[factor] = Interval()
    new = ParamDomain(tuple(new_factors))
    off = domain.offsets()[factor]
    fdim = len(frows[0]) if frows and frows[0] != () else 0
    const, rows = [], []
    y = 0
    for k in range(domain.dim):
        row = [F0] * new.dim
        if off <= k < off + fac.dim:
            j = k - off
            const.append(fconst[j])
            for q in range(fdim):
                row[off + q] = frows[j][q]
        else:
            const.append(F0)
            row[y if k < off else k - fac.dim + fdim] = F1
        if not off <= k < off + fac.dim and k < off:
            y += 1
        rows.append(row)
    return new, tuple(const), rows


def face(F: CellwiseFamily, factor: int, key) -> CellwiseFamily:
    """Restriction of ``F`` to a facet: ``key`` is 0 or 1 for an interval, or
    ``"s=0"``, ``"t=0"``, ``"s+t=1"`` for a triangle."""
    new, const, rows = _facet_map(F.domain, factor, key)
    probe = new.grid(8)
    cells = []
    for c in F.cells:
        cons = tuple(a.substitute(const, rows) for a in c.constraints)
        ws = tuple(w.substitute(const, rows) for w in c.weights)
        if any(all(a(p) >= 0 for a in cons) for p in probe):
            cells.append(Cell(cons, c.template, ws))
    if not cells:
        raise FamilyError("facet %r of %s meets no cell" % (key, F.name))
    return CellwiseFamily("%s|%d:%s" % (F.name, factor, key), new, tuple(cells), dict(F.meta))


def boundary(F: CellwiseFamily) -> list:
    """Signed facets ``[(sign, family), ...]`` of a family on a product of intervals and triangles."""
    out = []
    for factor, fac in enumerate(F.domain.factors):
        before = sum(f.dim for f in F.domain.factors[:factor])
        sign = (-1) ** before
        if isinstance(fac, Interval):
            out += [(sign, face(F, factor, 1)), (-sign, face(F, factor, 0))]
        else:
            out += [(sign, face(F, factor, "t=0")), (-sign, face(F, factor, "s+t=1")),
                    (-sign, face(F, factor, "s=0"))]
    return out


@dataclass(frozen=True)
class Chain:
    """Formal integer combination of families, e.g. the BV operator ``-delta``."""

    terms: tuple  # ((coefficient, CellwiseFamily), ...)

    @property
    def degree(self):
        degs = {F.degree for _, F in self.terms}
        if len(degs) > 1:
            raise FamilyError("mixed degrees in a chain")
        return degs.pop() if degs else 0

    def __neg__(self):
        return Chain(tuple((-c, F) for c, F in self.terms))

    def symbol(self) -> str:
        return " ".join("%s%s" % ("+" if c > 0 else "-", F.name if abs(c) == 1 else "%d*%s" % (abs(c), F.name))
                        for c, F in self.terms)


def bv_operator() -> Chain:
    return Chain(((-1, make_generator("delta")),))


# ---------------------------------------------------------------------------
# composition

def _rank_select(points):
    """Indices of a maximal affinely independent subset of ``points``."""
    chosen, basis = [], []
    for k, p in enumerate(points):
        vec = [F1] + list(p)
        for piv, row in basis:
            if vec[piv]:
                f = vec[piv] / row[piv]
                vec = [a - f * b for a, b in zip(vec, row)]
        piv = next((j for j, a in enumerate(vec) if a), None)
        if piv is not None:
            basis.append((piv, vec))
            chosen.append(k)
    return chosen


def _solve(matrix, rhs):
    n = len(matrix)
    m = [list(row) + [b] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col] / m[col][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] / m[r][r] for r in range(n)]


def _fit(points, values):
    idx = _rank_select(points)
    d = len(points[0])
    if len(idx) < d + 1:
        return None
    sol = _solve([[F1] + list(points[k]) for k in idx], [values[k] for k in idx])
    return Affine(sol[0], tuple(sol[1:]))


def _cuts(cell: Cell, b: int, dim: int):
    """Affine cut positions at boundary ``b`` as fractions of its total, window order."""
    from .core import end_interval

    ends = end_interval(cell.template, b)
    total = sum((cell.weights[e.arc] for e in ends), Affine.constant(0, dim))
    if any(total.coeffs):
        raise FamilyError("boundary %d total is not constant on a cell; cannot compose cellwise" % b)
    out, x = [], Affine.constant(0, dim)
    for e in ends[:-1]:
        x = x + cell.weights[e.arc]
        out.append(x * (1 / total.const))
    return out


def compose_families(F: CellwiseFamily, i: int, G: CellwiseFamily, grid: int = 8) -> CellwiseFamily:
    """Pointwise projective composition ``F(p) o_i G(q)`` on the product domain.

    Cells are the product cells cut by the hyperplanes where a cut of ``F`` at
    boundary ``i`` meets a cut of ``G`` at boundary 0.  The combinatorics and
    affine weights of each cell are read off grid samples and certified
    against every other sample in that cell.
    """
    dom = F.domain * G.domain
    d, dF = dom.dim, F.domain.dim
    cells = []
    for cF in F.cells:
        for cG in G.cells:
            cons = tuple(a.embed(0, d) for a in cF.constraints) + \
                tuple(Affine(a.const, (F0,) * dF + a.coeffs) for a in cG.constraints)
            walls = [x.embed(0, d) - Affine(y.const, (F0,) * dF + y.coeffs)
                     for x in _cuts(cF, i, dF) for y in _cuts(cG, 0, G.domain.dim)]
            cells += _certified_cells(cF, i, cG, dF, cons, walls, dom, grid)
    if not cells:
        raise FamilyError("composition produced no full-dimensional cell")
    return CellwiseFamily("(%s o%d %s)" % (F.name, i, G.name), dom, tuple(cells),
                          {"composed": (F.name, i, G.name)})


def _certified_cells(cF, i, cG, dF, cons, walls, dom, grid):
    d = dom.dim
    n = grid
    for _ in range(3):
        groups = {}
        for p in dom.grid(n):
            if not all(c(p) > 0 for c in cons):
                continue
            signs = tuple((w(p) > 0) - (w(p) < 0) for w in walls)
            if 0 in signs:
                continue
            val = compose_projective(evaluate_cell(cF, p[:dF]), i, evaluate_cell(cG, p[dF:]))
            groups.setdefault(signs, []).append((p, val))
        ready = all(len(_rank_select([p for p, _ in g])) == d + 1 for g in groups.values())
        if ready and groups:
            break
        n *= 2
    out = []
    for signs, samples in groups.items():
        types = {combinatorial_type(v) for _, v in samples}
        if len(types) != 1:
            raise FamilyError("combinatorics varies inside a sign cell; cells not certified")
        pts = [p for p, _ in samples]
        tmpl = samples[0][1]
        weights = []
        for a in range(len(tmpl.arcs)):
            fit = _fit(pts, [v.weights[a] for _, v in samples])
            if fit is None:
                raise FamilyError("too few samples to certify a cell; raise the grid")
            if any(fit(p) != v.weights[a] for p, v in samples):
                raise FamilyError("weights are not affine on a sign cell; cells not certified")
            weights.append(fit)
        extra = tuple(w * s for w, s in zip(walls, signs))
        out.append(Cell(cons + extra, tmpl, tuple(weights)))
    return out


# ---------------------------------------------------------------------------
# identities checked face by face

def _samples(n=12):
    return [Fraction(k, n) for k in range(n + 1)]


def _cyclic(n, r):
    return (0,) + tuple(((j - 1 + r) % n) + 1 for j in range(1, n + 1))


def lobe_normalized(f: ArcFamily) -> ArcFamily:
    """Rescale so that every inner boundary has total weight one.

    Needs every arc to join boundary 0 to an inner boundary.  Families with
    the same combinatorics and the same normalization are joined by the
    straight-line homotopy of weights, which stays inside one cell.
    """
    if any((e0[0] == 0) == (e1[0] == 0) for e0, e1 in f.arcs):
        raise FamilyError("lobe normalization needs every arc to run from boundary 0 to an inner boundary")
    totals = {b: total_weight(f, b) for b in range(1, f.boundaries)}
    inner = [max(e0[0], e1[0]) for e0, e1 in f.arcs]
    return f.with_weights([w / totals[b] for w, b in zip(f.weights, inner)])


def lobe_equal(f: ArcFamily, g: ArcFamily) -> bool:
    from .laws import same

    return same(lobe_normalized(f), lobe_normalized(g))


def check_face_contracts(which="all", samples=None) -> dict:
    """Check the identities between generators at rational parameter values.

    ``which`` is one of ``"i"`` .. ``"v"`` or ``"all"``.  Returns
    ``{identity: {"passed": bool, "failures": [...], "checked": int}}``.
    """
    from .core import projectively_equal as peq

    pts = [Fraction(x) for x in samples] if samples is not None else _samples()
    dot_ = make_generator("dot")()
    tau = (0, 2, 1)
    report = {}

    def run(name, checks, eq=peq):
        failures, count = [], 0
        for label, lhs, rhs in checks:
            count += 1
            try:
                ok = eq(lhs(), rhs())
            except ValueError as exc:
                ok, label = False, "%s (%s)" % (label, exc)
            if not ok:
                failures.append(label)
        report[name] = {"passed": not failures, "failures": failures, "checked": count}

    star = make_generator("star")
    delta = make_generator("delta")
    d2 = make_generator("delta_n", 2)

    if which in ("all", "i"):
        (sp, f1), (sm, f0) = boundary(star)
        run("i", [
            ("star(0) is the product", lambda: f0(), lambda: dot_),
            ("star(1) is the swapped product", lambda: f1(), lambda: relabel(dot_, tau)),
            ("boundary signs", lambda: dot_ if (sp, sm) == (1, -1) else relabel(dot_, tau), lambda: dot_),
        ])

    if which in ("all", "ii"):
        br = bracket_family()
        tstar = relabel_family(star, tau)
        checks = [("bracket closes up", lambda: br(0), lambda: br(1))]
        for s in pts:
            if s <= Fraction(1, 2):
                checks.append(("bracket(%s) = star(%s)" % (s, 2 * s), lambda s=s: br(s), lambda s=s: star(2 * s)))
            if s >= Fraction(1, 2):
                checks.append(("bracket(%s) = tau star(%s)" % (s, 2 * s - 1),
                               lambda s=s: br(s), lambda s=s: tstar(2 * s - 1)))
        run("ii", checks)

    if which in ("all", "iii"):
        checks = []
        for n in (2, 3):
            mu = make_generator("product", n)()
            dn = make_generator("delta_n", n)
            for s in sorted(set(pts) | {F0, Fraction(1, 4), Fraction(1, 2), F1}):
                r = min(int(s * n), n - 1)
                u = n * s - r
                checks.append(("n=%d s=%s piece %d at %s" % (n, s, r, u),
                               lambda s=s, mu=mu: compose_projective(delta(s), 1, mu),
                               lambda r=r, u=u, dn=dn, n=n: relabel(dn(u), _cyclic(n, r))))
        run("iii", checks)

    if which in ("all", "iv"):
        checks = []
        for n in (2, 3, 4):
            H = scaling_homotopy(n)
            dn = make_generator("delta_n", n)
            rest = make_generator("product", n - 1)()
            for s in pts:
                checks.append(("n=%d t=0 s=%s" % (n, s), lambda s=s, H=H: H(s, 0), lambda s=s, dn=dn: dn(s)))
                checks.append(("n=%d t=1 s=%s" % (n, s), lambda s=s, H=H: H(s, 1),
                               lambda s=s, rest=rest: compose_projective(d2(s), 2, rest)))
        run("iv", checks)
        # along s = 0 and s = 1 the homotopy stays among products
        sides = []
        for n in (2, 3, 4):
            H, dn = scaling_homotopy(n), make_generator("delta_n", n)
            for t in pts:
                sides.append(("n=%d s=0 t=%s" % (n, t), lambda t=t, H=H: H(0, t), lambda dn=dn: dn(0)))
                sides.append(("n=%d s=1 t=%s" % (n, t), lambda t=t, H=H: H(1, t), lambda dn=dn: dn(1)))
        prev = report.pop("iv")
        run("iv", sides, lambda f, g: combinatorial_type(f) == combinatorial_type(g))
        side = report["iv"]
        report["iv"] = {"passed": prev["passed"] and side["passed"],
                        "failures": prev["failures"] + side["failures"],
                        "checked": prev["checked"] + side["checked"]}

    if which in ("all", "v"):
        Q = partbv_square()
        d3 = make_generator("delta_n", 3)
        mu3 = make_generator("product", 3)()
        checks = []
        for x in pts:
            checks += [
                ("v=0 u=%s" % x, lambda x=x: Q(x, 0), lambda x=x: d3(1 - x)),
                ("u=1 v=%s" % x, lambda x=x: Q(1, x), lambda x=x: compose_projective(mu3, 1, delta(1 - x))),
                ("v=1 u=%s" % x, lambda x=x: Q(x, 1), lambda x=x: compose_projective(dot_, 1, d2(1 - x))),
                ("u=0 v=%s" % x, lambda x=x: Q(0, x),
                 lambda x=x: relabel(compose_projective(dot_, 2, d2(1 - x)), (0, 2, 1, 3))),
            ]
        run("v", checks, lobe_equal)
    return report
