"""
Operad law checks on arc families.

Each check returns ``None`` when the law holds and a small dict describing the
failure otherwise.  ``run_suite`` draws seeded random inputs and collects
failures; it backs both the test suite and the ``laws`` command.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import (
    ArcFamily,
    canonical_form,
    invert_permutation,
    is_exhaustive,
    long_cycle,
    projectivize,
    relabel,
    unit,
)
from .generate import random_family
from .glue import compose_output_labels, compose_projective, compose_weighted

PLANAR = {"genus": 0, "punctures": 0, "boundaries": 4, "arcs": 6, "denominator": 3}


def same(f: ArcFamily, g: ArcFamily) -> bool:
    return canonical_form(f) == canonical_form(g)


def _fail(law, **kw):
    kw["law"] = law
    return kw


def check_sequential(compose, a, i, b, j, c):
    """(a o_i b) o_{i+j-1} c == a o_i (b o_j c)."""
    lhs = compose(compose(a, i, b), i + j - 1, c)
    rhs = compose(a, i, compose(b, j, c))
    return None if same(lhs, rhs) else _fail("associativity", i=i, j=j, lhs=lhs, rhs=rhs)


def check_parallel(compose, a, i, b, k, c):
    """(a o_i b) o_{k+n-1} c == (a o_k c) o_i b for i < k."""
    n = b.arity
    lhs = compose(compose(a, i, b), k + n - 1, c)
    rhs = compose(compose(a, k, c), i, b)
    return None if same(lhs, rhs) else _fail("parallel associativity", i=i, k=k, lhs=lhs, rhs=rhs)


def check_unit(a):
    u = unit()
    p = projectivize(a)
    for i in range(1, a.arity + 1):
        if not same(compose_projective(a, i, u), p):
            return _fail("right unit", i=i, a=a)
    if not same(compose_projective(u, 1, a), p):
        return _fail("left unit", a=a)
    return None


def output_permutation(m, n, i, i2, relabel_a=None, relabel_b=None):
    """Permutation matching outputs of ``a o_i b`` with those of the relabelled composition.

    ``relabel_a`` (fixing 0) maps labels of ``a`` to labels of the relabelled
    ``a``; the relabelled composition uses index ``i2``.
    """
    ra = relabel_a or tuple(range(m + 1))
    rb = relabel_b or tuple(range(n + 1))
    inv_a, inv_b = invert_permutation(ra), invert_permutation(rb)
    before = compose_output_labels(m, n, i)
    after = [(src, inv_a[l] if src == "a" else inv_b[l]) for src, l in compose_output_labels(m, n, i2)]
    pos = {lab: k for k, lab in enumerate(after)}
    return tuple(pos[lab] for lab in before)


def check_equivariance(compose, a, i, b, sigma, tau):
    """Relabelling inputs (fixing 0) commutes with composition."""
    m, n = a.arity, b.arity
    lhs = compose(relabel(a, sigma), sigma[i], relabel(b, tau))
    pi = output_permutation(m, n, i, sigma[i], sigma, tau)
    rhs = relabel(compose(a, i, b), pi)
    return None if same(lhs, rhs) else _fail("equivariance", i=i, sigma=sigma, tau=tau, lhs=lhs, rhs=rhs)


def check_cyclic(compose, a, b):
    """relabel(a o_m b, long cycle) == relabel(b, long cycle) o_1 relabel(a, long cycle)."""
    m, n = a.arity, b.arity
    lhs = relabel(compose(a, m, b), long_cycle(m + n))
    rhs = compose(relabel(b, long_cycle(n + 1)), 1, relabel(a, long_cycle(m + 1)))
    return None if same(lhs, rhs) else _fail("cyclicity", lhs=lhs, rhs=rhs)


def check_projectivization(a, i, b):
    lhs = projectivize(compose_weighted(a, i, b))
    rhs = compose_projective(projectivize(a), i, projectivize(b))
    return None if same(lhs, rhs) else _fail("projectivization", lhs=lhs, rhs=rhs)


def check_signature(a, i, b):
    out = compose_weighted(a, i, b)
    want = (a.genus + b.genus, a.punctures + b.punctures, a.boundaries + b.boundaries - 2)
    got = (out.genus, out.punctures, out.boundaries)
    ok = got == want and is_exhaustive(out)
    return None if ok else _fail("signature", want=want, got=got)


def random_fixing_zero(rng, r):
    rest = list(range(1, r))
    rng.shuffle(rest)
    return tuple([0] + rest)


def _draw(rng, bounds, min_arity=1):
    while True:
        f = random_family(rng, bounds)
        if f.arity >= min_arity:
            return f


def run_suite(name: str, trials: int, seed: int, bounds=None) -> dict:
    """Run a named law suite; returns ``{"suite", "trials", "failures"}``."""
    rng = random.Random(seed)
    bounds = dict(bounds or PLANAR)
    failures = []
    runner = SUITES[name]
    for t in range(trials):
        res = runner(rng, bounds)
        for r in res:
            if r is not None:
                r["trial"] = t
                failures.append(r)
    return {"suite": name, "trials": trials, "seed": seed, "failures": failures}


def _arc_trial(rng, bounds, compose=compose_projective):
    a = _draw(rng, bounds)
    b = _draw(rng, bounds)
    c = _draw(rng, bounds)
    m, n = a.arity, b.arity
    i = rng.randint(1, m)
    out = [check_sequential(compose, a, i, b, rng.randint(1, n), c) if n else None]
    if m >= 2:
        i, k = sorted(rng.sample(range(1, m + 1), 2))
        out.append(check_parallel(compose, a, i, b, k, c))
    out.append(check_unit(a))
    out.append(check_equivariance(compose, a, rng.randint(1, m), b,
                                  random_fixing_zero(rng, m + 1), random_fixing_zero(rng, n + 1)))
    return out


def _darc_trial(rng, bounds):
    out = _arc_trial(rng, bounds, compose_weighted)
    a, b = _draw(rng, bounds), _draw(rng, bounds)
    i = rng.randint(1, a.arity)
    out.append(check_projectivization(a, i, b))
    out.append(check_signature(a, i, b))
    return out


def _cyclic_trial(rng, bounds):
    a, b = _draw(rng, bounds), _draw(rng, bounds)
    return [check_cyclic(compose_projective, a, b)]


def _cacti_trial(rng, bounds):
    from .cacti import check_frame_operadic, check_loop_frame, random_cactus

    c1 = random_cactus(rng, 3)
    c2 = random_cactus(rng, 2)
    return [check_loop_frame(c1), check_frame_operadic(c1, rng.randint(1, c1.arity), c2)]


def _twisted_trial(rng, bounds):
    from .twisted import check_twisted_laws

    return check_twisted_laws(rng, bounds)


SUITES = {
    "arc": _arc_trial,
    "darc": _darc_trial,
    "cyclic": _cyclic_trial,
    "cacti": _cacti_trial,
    "twisted": _twisted_trial,
}
