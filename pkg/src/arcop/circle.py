"""
Operads on tuples of circle angles and their homology.

Angles live in R/Z and are stored as rationals in [0, 1).  The operads are

* ``d``: n-tuples, the block inserted at ``i`` is shifted by ``theta_i``;
* ``Q``, ``bi``, ``rd(lam)``: (n+1)-tuples, special cases of the local linear
  composition with parameters ``(a, b, c, e)``::

      outside the block: theta_j  + c*theta_i + e*theta'_0
      inside the block:  theta'_p + a*theta_i + b*theta'_0

  ``Q = (0, 0, 0, 0)``, ``bi = (1, 0, 0, 1)``, ``rd(lam) = (1, lam, 0, 0)``.

Every composition is affine with linear part an integer matrix when the
parameters are integers, so the induced map on the homology of tori is the
exterior power of that matrix, computed from its minors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

# ---------------------------------------------------------------------------
# operad specifications


@dataclass(frozen=True)
class CircleOperad:
    name: str
    params: tuple = None  # (a, b, c, e) for operads on (n+1)-tuples, None for d

    @property
    def has_zero(self) -> bool:
        return self.params is not None

    def size(self, n: int) -> int:
        """Number of circles in arity ``n``."""
        return n + 1 if self.has_zero else n


D = CircleOperad("d")
Q = CircleOperad("Q", (0, 0, 0, 0))
BI = CircleOperad("bi", (1, 0, 0, 1))


def rd(lam) -> CircleOperad:
    return CircleOperad("rd(%s)" % lam, (1, Fraction(lam), 0, 0))


def general(a, b, c, e) -> CircleOperad:
    return CircleOperad("general(%s,%s,%s,%s)" % (a, b, c, e), tuple(Fraction(x) for x in (a, b, c, e)))


def operad(spec) -> CircleOperad:
    """Accept a :class:`CircleOperad`, ``"d"``, ``"Q"``, ``"bi"``, ``("rd", lam)`` or ``("general", a, b, c, e)``."""
    if isinstance(spec, CircleOperad):
        return spec
    if isinstance(spec, str):
        table = {"d": D, "Q": Q, "bi": BI}
        if spec in table:
            return table[spec]
        if spec.startswith("rd(") and spec.endswith(")"):
            return rd(Fraction(spec[3:-1]))
    if isinstance(spec, (tuple, list)) and spec:
        if spec[0] == "rd" and len(spec) == 2:
            return rd(spec[1])
        if spec[0] == "general" and len(spec) == 5:
            return general(*spec[1:])
    raise ValueError("unknown circle operad %r" % (spec,))


class ArityError(ValueError):
    pass


# ---------------------------------------------------------------------------
# set level

def angles(values) -> tuple:
    return tuple(Fraction(v) % 1 for v in values)


def _arity(op, x):
    n = len(x) - 1 if op.has_zero else len(x)
    if n < 1:
        raise ArityError("%s needs at least %d entries" % (op.name, op.size(1)))
    return n


def compose_angles(op, x, i: int, y) -> tuple:
    """``x o_i y`` in the circle operad ``op``; entries reduced mod 1."""
    op = operad(op)
    x, y = angles(x), angles(y)
    n, m = _arity(op, x), _arity(op, y)
    if not 1 <= i <= n:
        raise ArityError("index %d out of range for arity %d" % (i, n))
    if not op.has_zero:
        t = x[i - 1]
        return angles(x[:i - 1] + tuple(yp + t for yp in y) + x[i:])
    a, b, c, e = op.params
    ti, t0 = x[i], y[0]
    outer = lambda th: th + c * ti + e * t0
    inner = lambda th: th + a * ti + b * t0
    return angles(tuple(outer(th) for th in x[:i]) + tuple(inner(th) for th in y[1:]) +
                  tuple(outer(th) for th in x[i + 1:]))


def act(op, x, sigma) -> tuple:
    """Right action of a permutation of ``1..n``: entry ``j`` of the result is entry ``sigma[j]``.

    ``sigma`` is a tuple of length ``n + 1`` with ``sigma[0] == 0``.
    """
    op = operad(op)
    if op.has_zero:
        return tuple(x[sigma[j]] for j in range(len(x)))
    return tuple(x[sigma[j] - 1] for j in range(1, len(x) + 1))


def _block_perm(sigma, i, m):
    """Permutation of the composite induced by ``sigma`` on the outer inputs (see :func:`act`)."""
    n = len(sigma) - 1
    si = sigma[i]

    def pos(j):  # where outer input j sits in x o_si y
        return j if j < si else j + m - 1

    out = [0]
    for j in range(1, n + 1):
        if j == i:
            out += [si + p for p in range(m)]
        else:
            out.append(pos(sigma[j]))
    return tuple(out)


def _inner_perm(n, i, tau):
    m = len(tau) - 1
    return tuple(range(i)) + tuple(i - 1 + tau[p] for p in range(1, m + 1)) + tuple(range(i + m, n + m))


def check_laws(op, x, y, z, i, j, sigma=None, tau=None):
    """Return a list of ``(law, lhs, rhs)`` failures for one triple of tuples."""
    op = operad(op)
    n, m, p = _arity(op, x), _arity(op, y), _arity(op, z)
    fails = []
    xy = compose_angles(op, x, i, y)
    # sequential: j inside the block of y
    if 1 <= j <= m:
        lhs = compose_angles(op, xy, i + j - 1, z)
        rhs = compose_angles(op, x, i, compose_angles(op, y, j, z))
        if lhs != rhs:
            fails.append(("sequential", lhs, rhs))
    # parallel: another slot of x
    for k in range(1, n + 1):
        if k == i:
            continue
        if k < i:
            lhs = compose_angles(op, compose_angles(op, x, i, y), k, z)
            rhs = compose_angles(op, compose_angles(op, x, k, z), i + p - 1, y)
        else:
            lhs = compose_angles(op, compose_angles(op, x, i, y), k + m - 1, z)
            rhs = compose_angles(op, compose_angles(op, x, k, z), i, y)
        if lhs != rhs:
            fails.append(("parallel", lhs, rhs))
            break
    if sigma is not None:
        lhs = compose_angles(op, act(op, x, sigma), i, y)
        rhs = act(op, compose_angles(op, x, sigma[i], y), _block_perm(sigma, i, m))
        if lhs != rhs:
            fails.append(("equivariance", lhs, rhs))
    if tau is not None:
        lhs = compose_angles(op, x, i, act(op, y, tau))
        rhs = act(op, xy, _inner_perm(n, i, tau))
        if lhs != rhs:
            fails.append(("equivariance", lhs, rhs))
    return fails


def random_angles(rng, size, denominator=12) -> tuple:
    return tuple(Fraction(rng.randrange(denominator), denominator) for _ in range(size))


def _random_perm(rng, n):
    p = list(range(1, n + 1))
    rng.shuffle(p)
    return (0,) + tuple(p)


def random_trial(op, rng, max_arity=3, denominator=12):
    op = operad(op)
    n, m, p = (rng.randint(1, max_arity) for _ in range(3))
    x, y, z = (random_angles(rng, op.size(k), denominator) for k in (n, m, p))
    return dict(x=x, y=y, z=z, i=rng.randint(1, n), j=rng.randint(1, m),
                sigma=_random_perm(rng, n), tau=_random_perm(rng, m))


def check_operad(op, trials=200, seed=0, max_arity=3):
    """First counterexample found, or ``None``."""
    rng = random.Random(seed)
    for _ in range(trials):
        t = random_trial(op, rng, max_arity)
        fails = check_laws(op, **t)
        if fails:
            return dict(t, law=fails[0][0], lhs=fails[0][1], rhs=fails[0][2])
    return None


def long_cycle_angles(x) -> tuple:
    """``x*``: the long cycle ``(0 1 ... n)`` moves the last entry to the front."""
    return (x[-1],) + tuple(x[:-1])


def check_cyclic_angles(x, y) -> bool:
    """``[x o_n y]* = y* o_1 x*`` in ``bi``."""
    n = len(x) - 1
    return long_cycle_angles(compose_angles(BI, x, n, y)) == \
        compose_angles(BI, long_cycle_angles(y), 1, long_cycle_angles(x))


def classify_parameters(D: int = 2, trials: int = 60, seed: int = 0):
    """Grid search over local linear compositions.

    The grid is ``{0, 1/D, ..., (D-1)/D, 1}`` for each of ``(a, b, c, e)``.
    Returns ``(survivors, counterexamples)``: a set of parameter tuples that
    passed every trial, and for every other grid point a stored triple
    breaking associativity or equivariance.
    """
    if D < 2:
        raise ValueError("grid denominator must be at least 2")
    grid = sorted({Fraction(k, D) for k in range(D)} | {Fraction(1)})
    survivors, counter = set(), {}
    for params in ((a, b, c, e) for a in grid for b in grid for c in grid for e in grid):
        bad = check_operad(general(*params), trials, seed)
        if bad is None:
            survivors.add(params)
        else:
            counter[params] = bad
    return survivors, counter


def expected_survivors(D: int = 2) -> set:
    """The three families allowed by the classification, on the same grid."""
    grid = sorted({Fraction(k, D) for k in range(D)} | {Fraction(1)})
    z, o = Fraction(0), Fraction(1)
    out = {(z, z, z, z), (o, z, z, o)}
    out |= {(o, b, z, z) for b in grid}
    return out


# ---------------------------------------------------------------------------
# exterior algebra classes

@dataclass(frozen=True)
class ExtClass:
    """Integer combination of wedge monomials in circles ``0..size-1``.

    ``terms`` is a sorted tuple of ``(monomial, coefficient)`` where each
    monomial is a strictly increasing tuple of circle indices.
    """

    size: int
    terms: tuple = ()

    @classmethod
    def make(cls, size, mapping):
        clean = {}
        for mono, c in mapping.items():
            if c:
                clean[tuple(mono)] = clean.get(tuple(mono), 0) + c
        return cls(size, tuple(sorted((k, v) for k, v in clean.items() if v)))

    @classmethod
    def basis(cls, bits, coeff=1):
        bits = tuple(bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError("basis vectors have entries 0 or 1")
        return cls.make(len(bits), {tuple(k for k, b in enumerate(bits) if b): coeff})

    @property
    def degree(self):
        degs = {len(m) for m, _ in self.terms}
        if len(degs) > 1:
            raise ValueError("class is not homogeneous")
        return degs.pop() if degs else 0

    def __add__(self, other):
        self._same(other)
        d = dict(self.terms)
        for k, v in other.terms:
            d[k] = d.get(k, 0) + v
        return ExtClass.make(self.size, d)

    def __neg__(self):
        return ExtClass(self.size, tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        return ExtClass.make(self.size, {m: v * k for m, v in self.terms})

    __rmul__ = __mul__

    def _same(self, other):
        if self.size != other.size:
            raise ValueError("classes on %d and %d circles" % (self.size, other.size))

    def __bool__(self):
        return bool(self.terms)

    def vectors(self):
        """``[(coefficient, bit vector), ...]``."""
        return [(v, tuple(1 if k in m else 0 for k in range(self.size))) for m, v in self.terms]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for v, bits in self.vectors():
            vec = "(%s)" % ",".join(map(str, bits))
            parts.append(("+ " if v > 0 else "- ") + (vec if abs(v) == 1 else "%d%s" % (abs(v), vec)))
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def zero_class(size):
    return ExtClass(size)


def sort_sign(word):
    """Sign of the permutation sorting ``word``; 0 if an entry repeats."""
    if len(set(word)) != len(word):
        return 0
    inv = sum(1 for a in range(len(word)) for b in range(a + 1, len(word)) if word[a] > word[b])
    return -1 if inv % 2 else 1


def _det(m):
    """Integer determinant by cofactor expansion along the first row (small matrices)."""
    if not m:
        return 1
    if len(m) == 1:
        return m[0][0]
    total = 0
    for c, v in enumerate(m[0]):
        if v:
            minor = [row[:c] + row[c + 1:] for row in m[1:]]
            total += (-1) ** c * v * _det(minor)
    return total


def exterior_map(matrix, cls: ExtClass, out_size: int) -> ExtClass:
    """Apply the exterior power of an integer matrix (rows = outputs, columns = inputs)."""
    out = {}
    for mono, v in cls.terms:
        for rows in combinations(range(out_size), len(mono)):
            det = _det([[matrix[r][c] for c in mono] for r in rows])
            if det:
                out[rows] = out.get(rows, 0) + v * det
    return ExtClass.make(out_size, out)


def cross(x: ExtClass, y: ExtClass) -> ExtClass:
    """Cross product: ``x``'s circles first, then ``y``'s."""
    out = {}
    for mx, vx in x.terms:
        for my, vy in y.terms:
            mono = mx + tuple(k + x.size for k in my)
            out[mono] = out.get(mono, 0) + vx * vy
    return ExtClass.make(x.size + y.size, out)


def composition_matrix(op, n: int, i: int, m: int):
    """Integer linear part of ``o_i``: rows are output circles, columns are ``x``'s circles then ``y``'s."""
    op = operad(op)
    sx, sy = op.size(n), op.size(m)
    rows = []
    if not op.has_zero:
        for j in range(1, n + m):
            row = [0] * (sx + sy)
            if j < i:
                row[j - 1] = 1
            elif j < i + m:
                row[sx + (j - i)] = 1
                row[i - 1] = 1
            else:
                row[j - m] = 1
            rows.append(row)
        return rows
    a, b, c, e = op.params
    for coef in (a, b, c, e):
        if Fraction(coef).denominator != 1:
            raise ValueError("homology needs integer parameters, got %s" % (op.params,))
    a, b, c, e = (int(v) for v in (a, b, c, e))
    for j in range(0, n + m):
        row = [0] * (sx + sy)
        if i <= j < i + m:
            row[sx + (j - i + 1)] += 1
            row[i] += a
            row[sx] += b
        else:
            src = j if j < i else j - m + 1
            row[src] += 1
            row[i] += c
            row[sx] += e
        rows.append(row)
    return rows


def homology_compose(op, x: ExtClass, i: int, y: ExtClass) -> ExtClass:
    """``x o_i y`` on homology: exterior power of the composition matrix applied to ``x x y``."""
    op = operad(op)
    n = x.size - 1 if op.has_zero else x.size
    m = y.size - 1 if op.has_zero else y.size
    if n < 1 or m < 1 or not 1 <= i <= n:
        raise ArityError("bad arities or index for %s: %d o_%d %d" % (op.name, n, i, m))
    mat = composition_matrix(op, n, i, m)
    return exterior_map(mat, cross(x, y), op.size(n + m - 1))


def act_class(op, x: ExtClass, sigma) -> ExtClass:
    """Circle ``j`` of ``x`` becomes circle ``sigma[j]``, with the sorting sign."""
    op = operad(op)
    shift = 0 if op.has_zero else 1
    out = {}
    for mono, v in x.terms:
        word = [sigma[k + shift] - shift for k in mono]
        out[tuple(sorted(word))] = out.get(tuple(sorted(word)), 0) + v * sort_sign(word)
    return ExtClass.make(x.size, out)


def bi_formula(x: ExtClass, k: int, y: ExtClass) -> ExtClass:
    """Closed formula for composition in the homology of ``bi``, built term by term.

    The degree one circle ``0`` of ``y`` spreads over every outer position
    not in the block, the circle ``k`` of ``x`` over every block position;
    signs come from sorting the wedge word written ``x`` first, ``y`` second.
    """
    n, m = x.size - 1, y.size - 1
    out = {}
    for mx, vx in x.terms:
        for my, vy in y.terms:
            ax = [1 if t in mx else 0 for t in range(n + 1)]
            by = [1 if t in my else 0 for t in range(m + 1)]
            k_targets = [k + p - 1 for p in range(1, m + 1)] if ax[k] else [None]
            zero_targets = [l if l < k else l + m - 1 for l in range(n + 1) if l != k] if by[0] else [None]
            for tk in k_targets:
                for t0 in zero_targets:
                    word = []
                    for t in mx:
                        word.append(tk if t == k else (t if t < k else t + m - 1))
                    for t in my:
                        word.append(t0 if t == 0 else k + t - 1)
                    sgn = sort_sign(word)
                    if sgn:
                        key = tuple(sorted(word))
                        out[key] = out.get(key, 0) + sgn * vx * vy
    return ExtClass.make(n + m, out)


def basis_classes(size: int):
    for bits in range(2 ** size):
        yield ExtClass.basis([(bits >> t) & 1 for t in range(size)])


# ---------------------------------------------------------------------------
# free terms and the presentation
#
# A term is a nested tuple: ("x", j) a leaf, ("L", t), ("R", t), ("D", t)
# unary operators of degree one, ("mu", a, b) the product.  Linear
# combinations are dicts term -> integer.

LEAF, LEFT, RIGHT, DIFF, MU = "x", "L", "R", "D", "mu"


def leaf(j):
    return (LEAF, j)


def L(t):
    return (LEFT, t)


def R(t):
    return (RIGHT, t)


def Dop(t):
    return (DIFF, t)


def mu(a, b):
    return (MU, a, b)


def term_degree(t) -> int:
    if t[0] == LEAF:
        return 0
    if t[0] == MU:
        return term_degree(t[1]) + term_degree(t[2])
    return 1 + term_degree(t[1])


def leaves(t):
    if t[0] == LEAF:
        return [t[1]]
    return [j for s in t[1:] for j in leaves(s)]


def term_str(t) -> str:
    if t[0] == LEAF:
        return "x%d" % t[1]
    if t[0] == MU:
        return "mu(%s, %s)" % (term_str(t[1]), term_str(t[2]))
    return "%s(%s)" % (t[0], term_str(t[1]))


def combo_str(c: dict) -> str:
    if not c:
        return "0"
    parts = []
    for t, v in sorted(c.items(), key=lambda kv: term_str(kv[0])):
        parts.append("%s%s%s" % ("+" if v > 0 else "-", "" if abs(v) == 1 else "%d*" % abs(v), term_str(t)))
    return " ".join(parts)


def _add(acc, t, v):
    if v:
        acc[t] = acc.get(t, 0) + v
        if not acc[t]:
            del acc[t]


def _key(t):
    return min(leaves(t))


def _rewrites_at_root(t):
    """All one-step rewrites of ``t`` at its root, as linear combinations."""
    out = []
    op = t[0]
    if op in (LEFT, RIGHT, DIFF):
        s = t[1]
        if s[0] == op:
            out.append({})
        if op == RIGHT and s[0] == LEFT:
            out.append({L(R(s[1])): -1})
        if op in (RIGHT, DIFF) and s[0] == MU:
            a, b = s[1], s[2]
            out.append({mu((op, a), b): 1, mu(a, (op, b)): (-1) ** term_degree(a)})
    if op == MU:
        a, b = t[1], t[2]
        if a[0] == LEFT:
            c = {}
            _add(c, L(mu(a[1], b)), 1)
            _add(c, mu(a[1], R(b)), (-1) ** term_degree(a[1]))
            out.append(c)
        if b[0] == LEFT:
            sgn = (-1) ** term_degree(a)
            c = {}
            _add(c, L(mu(a, b[1])), sgn)
            _add(c, mu(R(a), b[1]), sgn)
            out.append(c)
        if a[0] == MU:
            out.append({mu(a[1], mu(a[2], b)): 1})
        if b[0] == MU and _key(b[1]) < _key(a):
            out.append({mu(b[1], mu(a, b[2])): (-1) ** (term_degree(a) * term_degree(b[1]))})
        if b[0] != MU and _key(b) < _key(a):
            out.append({mu(b, a): (-1) ** (term_degree(a) * term_degree(b))})
    return out


def _positions(t, path=()):
    yield path
    if t[0] != LEAF:
        for k, s in enumerate(t[1:], 1):
            yield from _positions(s, path + (k,))


def _at(t, path):
    for k in path:
        t = t[k]
    return t


def _replace(t, path, new):
    if not path:
        return new
    k = path[0]
    return t[:k] + (_replace(t[k], path[1:], new),) + t[k + 1:]


def one_step_rewrites(t):
    """Every way to rewrite ``t`` once, anywhere inside it."""
    out = []
    for path in _positions(t):
        for c in _rewrites_at_root(_at(t, path)):
            out.append({_replace(t, path, s): v for s, v in c.items()})
    return out


def normal_form(t, limit: int = 100000) -> dict:
    """Rewrite ``t`` (a term or a combination) to the span of gamma images."""
    todo = dict(t) if isinstance(t, dict) else {t: 1}
    done = {}
    steps = 0
    while todo:
        s, v = todo.popitem()
        steps += 1
        if steps > limit:
            raise RuntimeError("rewriting did not terminate within %d steps" % limit)
        for path in _positions(s):
            rw = _rewrites_at_root(_at(s, path))
            if rw:
                for new, w in rw[0].items():
                    _add(todo, _replace(s, path, new), v * w)
                break
        else:
            _add(done, s, v)
    return done


def local_confluence_failures(terms) -> list:
    """Terms for which two one-step rewrites reach different normal forms."""
    bad = []
    for t in terms:
        forms = [normal_form(c) for c in one_step_rewrites(t)]
        if any(f != forms[0] for f in forms[1:]):
            bad.append(t)
    return bad


def generators(presentation="bi"):
    if presentation == "bi":
        return {"L": ExtClass.basis((1, 0)), "R": ExtClass.basis((0, 1)), "mu": ExtClass.basis((0, 0, 0)),
                "unit": ExtClass.basis((0, 0))}
    if presentation == "d":
        return {"D": ExtClass.basis((1,)), "mu": ExtClass.basis((0, 0)), "unit": ExtClass.basis((0,))}
    raise ValueError("unknown presentation %r" % (presentation,))


def _psi_ordered(t, presentation):
    op = BI if presentation == "bi" else D
    g = generators(presentation)
    if t[0] == LEAF:
        return g["unit"], [t[1]]
    if t[0] == MU:
        ca, oa = _psi_ordered(t[1], presentation)
        cb, ob = _psi_ordered(t[2], presentation)
        c = homology_compose(op, homology_compose(op, g["mu"], 1, ca), 1 + len(oa), cb)
        return c, oa + ob
    c, order = _psi_ordered(t[1], presentation)
    return homology_compose(op, g[t[0]], 1, c), order


def psi(t, presentation="bi") -> ExtClass:
    """Evaluate a term or combination in homology; leaves are put in increasing order."""
    if isinstance(t, dict):
        total = None
        for s, v in t.items():
            c = psi(s, presentation) * v
            total = c if total is None else total + c
        return total
    op = BI if presentation == "bi" else D
    c, order = _psi_ordered(t, presentation)
    ranks = {j: r for r, j in enumerate(sorted(order), 1)}
    sigma = (0,) + tuple(ranks[j] for j in order)
    return act_class(op, c, sigma)


def gamma(x, presentation="bi") -> dict:
    """The combination of normal terms representing ``x``."""
    out = {}
    for v, bits in x.vectors():
        if presentation == "bi":
            first, rest = bits[0], bits[1:]
        else:
            first, rest = 0, bits
        args = [R(leaf(j)) if b and presentation == "bi" else Dop(leaf(j)) if b else leaf(j)
                for j, b in enumerate(rest, 1)]
        body = args[-1]
        for a in reversed(args[:-1]):
            body = mu(a, body)
        if first:
            body = L(body)
        _add(out, body, v)
    return out


def relations(presentation="bi") -> dict:
    """The defining relations as named combinations."""
    x1, x2, x3 = leaf(1), leaf(2), leaf(3)
    if presentation == "d":
        return {
            "DD": {Dop(Dop(x1)): 1},
            "leibniz": {Dop(mu(x1, x2)): 1, mu(Dop(x1), x2): -1, mu(x1, Dop(x2)): -1},
            "assoc": {mu(mu(x1, x2), x3): 1, mu(x1, mu(x2, x3)): -1},
            "comm": {mu(x1, x2): 1, mu(x2, x1): -1},
        }
    return {
        "LL": {L(L(x1)): 1},
        "RR": {R(R(x1)): 1},
        "LR+RL": {L(R(x1)): 1, R(L(x1)): 1},
        "R-derivation": {R(mu(x1, x2)): 1, mu(R(x1), x2): -1, mu(x1, R(x2)): -1},
        "L-rule": {mu(L(x1), x2): 1, L(mu(x1, x2)): -1, mu(x1, R(x2)): -1},
        "assoc": {mu(mu(x1, x2), x3): 1, mu(x1, mu(x2, x3)): -1},
        "comm": {mu(x1, x2): 1, mu(x2, x1): -1},
    }


def small_terms(max_leaves=3, max_unary=2, presentation="bi"):
    """All terms with leaves ``1..k`` (each once, any order) for ``k <= max_leaves``."""
    unary = (LEFT, RIGHT) if presentation == "bi" else (DIFF,)

    def build(labels, budget):
        out = []
        if len(labels) == 1:
            base = [leaf(labels[0])]
        else:
            base = []
            for split in range(1, len(labels)):
                for b1 in range(budget + 1):
                    for a in build(labels[:split], b1):
                        for b in build(labels[split:], budget - b1):
                            base.append(mu(a, b))
        out += base
        frontier = base
        for _ in range(budget):
            frontier = [(u, t) for t in frontier for u in unary]
            out += frontier
        return out

    seen = set()
    for k in range(1, max_leaves + 1):
        for perm in permutations(range(1, k + 1)):
            for t in build(list(perm), max_unary):
                if term_degree(t) <= max_unary and t not in seen:
                    seen.add(t)
                    yield t



def presentation_check(presentation="bi", max_arity=3) -> dict:
    """``psi`` kills the relations, ``psi o gamma`` fixes the basis, ``gamma o psi`` fixes generators."""
    offset = 1 if presentation == "bi" else 0
    rels = {name: psi(r, presentation) for name, r in relations(presentation).items()}
    bad_rel = sorted(name for name, c in rels.items() if c.terms)
    bad_basis = []
    checked = 0
    for n in range(1, max_arity + 1):
        for x in basis_classes(n + offset):
            checked += 1
            if psi(gamma(x, presentation), presentation) != x:
                bad_basis.append(str(x))
    one = leaf(1)
    gens = [mu(leaf(1), leaf(2))] + ([L(one), R(one)] if presentation == "bi" else [Dop(one)])
    bad_gen = [term_str(t) for t in gens if gamma(psi(t, presentation), presentation) != {t: 1}]
    return {"presentation": presentation, "relations": len(rels), "basis_checked": checked,
            "relation_failures": bad_rel, "basis_failures": bad_basis, "generator_failures": bad_gen,
            "passed": not (bad_rel or bad_basis or bad_gen)}

# ---------------------------------------------------------------------------
# algebra relations

def named_classes(op):
    """The operations Delta, L, R, mu (or D, mu for ``d``) as homology classes."""
    op = operad(op)
    if not op.has_zero:
        return {"D": ExtClass.basis((1,)), "mu": ExtClass.basis((0, 0)), "unit": ExtClass.basis((0,))}
    return {"Delta": ExtClass.basis((0, 0)), "L": ExtClass.basis((1, 0)), "R": ExtClass.basis((0, 1)),
            "mu": ExtClass.basis((0, 0, 0))}


def algebra_relations_check(op) -> dict:
    """Verify the algebra relations listed for ``op``.  Returns ``{relation: (ok, lhs, rhs)}``."""
    op = operad(op)
    c = named_classes(op)
    h = lambda x, i, y: homology_compose(op, x, i, y)
    out = {}

    def rel(name, lhs, rhs):
        out[name] = (lhs == rhs, str(lhs), str(rhs))

    if not op.has_zero:
        Dd, m = c["D"], c["mu"]
        rel("D o D = 0", h(Dd, 1, Dd), zero_class(1))
        rel("D mu = mu o1 D + mu o2 D", h(Dd, 1, m), h(m, 1, Dd) + h(m, 2, Dd))
        rel("mu o1 mu = mu o2 mu", h(m, 1, m), h(m, 2, m))
        rel("mu commutative", act_class(op, m, (0, 2, 1)), m)
        return out
    Dl, Lc, Rc, m = c["Delta"], c["L"], c["R"], c["mu"]
    z1 = zero_class(2)
    rel("mu o1 mu = mu o2 mu", h(m, 1, m), h(m, 2, m))
    rel("mu commutative", act_class(op, m, (0, 2, 1)), m)
    rel("R o R = 0", h(Rc, 1, Rc), z1)
    if op.name in ("bi", "Q"):
        rel("L o L = 0", h(Lc, 1, Lc), z1)
    if op.name == "bi":
        rel("L R + R L = 0", h(Lc, 1, Rc) + h(Rc, 1, Lc), z1)
        rel("R derivation", h(Rc, 1, m), h(m, 1, Rc) + h(m, 2, Rc))
        rel("L(a)b = L(ab) + (-1)^|a| a R(b)", h(m, 1, Lc), h(Lc, 1, m) + h(m, 2, Rc))
        rel("unit", h(Dl, 1, m), m)
        return out
    rel("Delta^2 = Delta", h(Dl, 1, Dl), Dl)
    rel("Delta R = R", h(Dl, 1, Rc), Rc)
    rel("L Delta = L", h(Lc, 1, Dl), Lc)
    rel("Delta(ab) = ab", h(Dl, 1, m), m)
    rel("Delta(a)b = ab", h(m, 1, Dl), m)
    rel("a Delta(b) = ab", h(m, 2, Dl), m)
    if op.name == "Q":
        rel("Delta L = 0", h(Dl, 1, Lc), z1)
        rel("R Delta = 0", h(Rc, 1, Dl), z1)
        rel("R L = 0", h(Rc, 1, Lc), z1)
    else:
        lam = op.params[1]
        rel("R Delta = R", h(Rc, 1, Dl), Rc)
        rel("Delta L = lambda R", h(Dl, 1, Lc), Rc * int(lam))
        rel("R derivation", h(Rc, 1, m), h(m, 1, Rc) + h(m, 2, Rc))
    return out


def embed_d(x) -> tuple:
    """``(t1, ..., tn) -> (0, t1, ..., tn)``."""
    return (Fraction(0),) + tuple(x)


def embed_d_class(x: ExtClass) -> ExtClass:
    return ExtClass.make(x.size + 1, {tuple(k + 1 for k in m): v for m, v in x.terms})


def homology_associativity_failures(op, x: ExtClass, i: int, y: ExtClass, z: ExtClass) -> list:
    """Both nesting patterns on homology; the parallel one carries the sign ``(-1)^{|y||z|}``."""
    op = operad(op)
    h = lambda a, k, b: homology_compose(op, a, k, b)
    n = x.size - 1 if op.has_zero else x.size
    m = y.size - 1 if op.has_zero else y.size
    p = z.size - 1 if op.has_zero else z.size
    fails = []
    for j in range(1, m + 1):
        if h(h(x, i, y), i + j - 1, z) != h(x, i, h(y, j, z)):
            fails.append(("sequential", j))
    for yt, yv in y.terms:
        for zt, zv in z.terms:
            yy, zz = ExtClass.make(y.size, {yt: yv}), ExtClass.make(z.size, {zt: zv})
            sign = (-1) ** (len(yt) * len(zt))
            for k in range(1, n + 1):
                if k < i:
                    ok = h(h(x, i, yy), k, zz) == h(h(x, k, zz), i + p - 1, yy) * sign
                elif k > i:
                    ok = h(h(x, i, yy), k + m - 1, zz) == h(h(x, k, zz), i, yy) * sign
                else:
                    continue
                if not ok:
                    fails.append(("parallel", k))
    return fails
