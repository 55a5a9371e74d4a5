import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcop.circle import (
    BI, D, Q, ArityError, ExtClass, L, R, act_class, algebra_relations_check, basis_classes, bi_formula,
    check_cyclic_angles, check_laws, check_operad, classify_parameters, compose_angles, embed_d, embed_d_class,
    expected_survivors, gamma, general, homology_associativity_failures, homology_compose, leaf,
    local_confluence_failures, mu, normal_form, operad, presentation_check, psi, random_trial, rd, relations,
    small_terms,
)

F = Fraction
angle = st.fractions(min_value=0, max_value=F(11, 12), max_denominator=12)


def test_compose_examples():
    assert compose_angles(D, (F(1, 2),), 1, (F(1, 3),)) == (F(5, 6),)
    x = (F(1, 4), F(1, 3), F(1, 2))
    for i in (1, 2):
        assert compose_angles(BI, x, i, (0, 0)) == x
    assert compose_angles(BI, (0, 0), 1, x) == x
    with pytest.raises(ArityError):
        compose_angles(BI, x, 3, x)


def test_operad_spec_parsing():
    assert operad("rd(2)").params == rd(2).params
    assert operad(("rd", F(1, 2))).params[1] == F(1, 2)
    assert operad("Q") is Q or operad("Q").params == Q.params
    with pytest.raises(ValueError):
        operad("nonsense")


@pytest.mark.parametrize("op", [D, Q, BI, rd(0), rd(1), rd(2), rd(F(1, 2))])
def test_set_level_laws(op):
    assert check_operad(op, trials=150, seed=3) is None


@given(st.lists(angle, min_size=2, max_size=4), st.lists(angle, min_size=2, max_size=4))
def test_bi_is_cyclic(x, y):
    assert check_cyclic_angles(tuple(x), tuple(y))


@given(st.lists(angle, min_size=1, max_size=3), st.lists(angle, min_size=1, max_size=3), st.data())
def test_d_embeds_at_set_level(x, y, data):
    i = data.draw(st.integers(1, len(x)))
    want = embed_d(compose_angles(D, x, i, y))
    for op in (BI, rd(0), rd(1), rd(2)):
        assert compose_angles(op, embed_d(x), i, embed_d(y)) == want


def test_classification_examples():
    assert check_operad(general(1, 0, 0, 1)) is None
    assert check_operad(general(0, 0, 0, 0)) is None
    bad = check_operad(general(1, 0, 1, 0))
    assert bad is not None and {"x", "y", "z", "law"} <= set(bad)
    fails = check_laws(general(1, 0, 1, 0), **{k: bad[k] for k in ("x", "y", "z", "i", "j", "sigma", "tau")})
    assert fails


def test_classification_grid_two():
    surv, counter = classify_parameters(2, trials=60, seed=0)
    assert surv == expected_survivors(2)
    assert len(surv) + len(counter) == 3 ** 4
    for params, ce in counter.items():
        t = {k: ce[k] for k in ("x", "y", "z", "i", "j", "sigma", "tau")}
        assert check_laws(general(*params), **t)


def test_classification_grid_three_sample():
    surv, _ = classify_parameters(3, trials=25, seed=1)
    assert surv == expected_survivors(3)


def test_homology_vectors():
    m, l = ExtClass.basis((0, 0, 0)), ExtClass.basis((1, 0))
    assert homology_compose(BI, m, 1, l) == ExtClass.basis((1, 0, 0)) + ExtClass.basis((0, 0, 1))
    assert homology_compose(BI, l, 1, m) == ExtClass.basis((1, 0, 0))
    dm = ExtClass.basis((0, 0))
    assert homology_compose(D, dm, 1, dm) == ExtClass.basis((0, 0, 0))


def test_closed_formula_on_all_small_basis_pairs():
    count = 0
    for n in (1, 2, 3):
        for m in (1, 2, 3):
            for x in basis_classes(n + 1):
                for y in basis_classes(m + 1):
                    for k in range(1, n + 1):
                        assert homology_compose(BI, x, k, y) == bi_formula(x, k, y)
                        count += 1
    assert count > 1000


@pytest.mark.parametrize("op", ["d", "Q", "bi", "rd(0)", "rd(1)", "rd(2)"])
def test_homology_associativity_with_koszul_signs(op):
    o = operad(op)
    extra = 1 if o.has_zero else 0
    rng = random.Random(5)
    for _ in range(40):
        n, m, p = (rng.randint(1, 2) for _ in range(3))
        x, y, z = (ExtClass.basis([rng.randint(0, 1) for _ in range(k + extra)]) for k in (n, m, p))
        assert homology_associativity_failures(o, x, rng.randint(1, n), y, z) == []


def test_d_embeds_at_homology_level():
    for x in basis_classes(2):
        for y in basis_classes(2):
            for i in (1, 2):
                want = embed_d_class(homology_compose(D, x, i, y))
                for op in (BI, rd(1)):
                    assert homology_compose(op, embed_d_class(x), i, embed_d_class(y)) == want


def test_non_integer_lambda_has_no_homology():
    with pytest.raises(ValueError):
        homology_compose(rd(F(1, 2)), ExtClass.basis((0, 0)), 1, ExtClass.basis((1, 0)))


def test_equivariance_of_classes():
    m = ExtClass.basis((0, 0, 0))
    assert act_class(BI, m, (0, 2, 1)) == m
    x = ExtClass.basis((0, 1, 1))
    assert act_class(BI, x, (0, 2, 1)) == x * -1


def test_presentation():
    x1, x2 = leaf(1), leaf(2)
    assert gamma(ExtClass.basis((1, 0, 1))) == {L(mu(x1, R(x2))): 1}
    for pres in ("bi", "d"):
        for name, rel in relations(pres).items():
            assert not psi(rel, pres).terms, name
        rep = presentation_check(pres)
        assert rep["passed"], rep


@pytest.mark.parametrize("pres", ["bi", "d"])
def test_rewriting_reaches_gamma_of_psi(pres):
    terms = list(small_terms(3, 2, pres))
    assert local_confluence_failures(terms) == []
    for t in terms:
        c = psi(t, pres)
        want = {}
        for v, bits in c.vectors():
            for s, w in gamma(ExtClass.basis(bits), pres).items():
                want[s] = want.get(s, 0) + v * w
        want = {s: v for s, v in want.items() if v}
        assert normal_form(t) == want, t


@pytest.mark.parametrize("op", ["d", "Q", "bi", "rd(0)", "rd(1)", "rd(2)"])
def test_algebra_relations(op):
    rep = algebra_relations_check(op)
    assert rep and all(ok for ok, _, _ in rep.values()), rep
    if op.startswith("rd"):
        assert "Delta L = lambda R" in rep


@given(st.integers(0, 10**6))
def test_random_trials_never_break_bi(seed):
    t = random_trial(BI, random.Random(seed))
    assert check_laws(BI, **t) == []


def test_ext_class_arithmetic():
    a, b = ExtClass.basis((1, 0, 1)), ExtClass.basis((0, 1, 1))
    assert (a + b) - b == a
    assert (a * 0).terms == ()
    assert str(a - b) == "(1,0,1) - (0,1,1)"
    assert str(b * 2) == "2(0,1,1)"
    assert a.degree == 2
