import random
from fractions import Fraction

import pytest
from hypothesis import given

from arcop.circle import BI, D, compose_angles, rd
from arcop.core import is_exhaustive, projectivize, total_weight, twist, unit
from arcop.glue import compose_projective, glue_matched
from arcop.laws import same
from arcop.oracle import oracle_glue
from arcop.twisted import (
    TwistedError, TwistedElement, check_cyclic, check_twisted_laws, compose_bidArc, compose_dArc,
    compose_twisted, element, lambda_survey, random_element, twist_offset,
)
from conftest import seeds

F = Fraction


def test_elements_are_validated():
    with pytest.raises(TwistedError):
        element(unit(), (0,))
    assert element(unit(2), (0, F(1, 3))).fam.weights == (1,)
    assert element(unit(), (F(1, 3),), boundary_zero=False).angles == (F(1, 3),)


def test_products_split_into_factors():
    r = random.Random(1)
    x, y = random_element(r, boundary_zero=False), random_element(r, boundary_zero=False)
    out = compose_dArc(x, 1, y)
    assert same(out.fam, compose_projective(x.fam, 1, y.fam))
    assert out.angles == compose_angles(D, x.angles, 1, y.angles)
    x, y = random_element(r), random_element(r)
    out = compose_bidArc(x, 1, y)
    assert out.angles == compose_angles(BI, x.angles, 1, y.angles)


def test_bidarc_unit():
    u = element(unit(), (0, 0))
    x = random_element(random.Random(4))
    for i in range(1, x.arity + 1):
        assert same(compose_bidArc(x, i, u).fam, x.fam) and compose_bidArc(x, i, u).angles == x.angles
    assert compose_bidArc(u, 1, x).angles == x.angles


def test_zero_twist_is_the_plain_composition():
    r = random.Random(9)
    x, y = random_element(r), random_element(r)
    y0 = TwistedElement(y.fam, (F(0),) + y.angles[1:])
    assert same(compose_twisted(x, 1, y0).fam, compose_projective(x.fam, 1, y.fam))


def test_quarter_twist_regression():
    d = element(twist(F(1, 3), F(2, 3)), (0, 0))
    u = element(unit(), (F(1, 4), 0))
    out = compose_twisted(d, 1, u)
    assert twist_offset(F(1, 4)) == F(3, 4)
    L = total_weight(d.fam, 1)
    want = projectivize(glue_matched(d.fam, 1, unit(L), F(3, 4) * L))
    assert same(out.fam, want)
    assert same(out.fam, projectivize(oracle_glue(d.fam, 1, unit(L), F(3, 4) * L)))
    # regression vector pinning the direction of the offset
    assert same(out.fam, twist(F(1, 12), F(11, 12)))
    assert out.angles == compose_angles(rd(1), d.angles, 1, u.angles)


def test_both_angle_conventions_give_operads():
    assert lambda_survey(trials=15, seed=2) == {0: True, 1: True}


@given(seeds)
def test_twisted_laws(seed):
    assert [r for r in check_twisted_laws(random.Random(seed)) if r is not None] == []


@given(seeds)
def test_bidarc_is_cyclic(seed):
    r = random.Random(seed)
    assert check_cyclic(random_element(r), random_element(r)) is None


@given(seeds)
def test_forgetting_angles_is_a_morphism(seed):
    r = random.Random(seed)
    x, y = random_element(r), random_element(r)
    out = compose_twisted(x, 1, y)
    assert is_exhaustive(out.fam)
    assert out.angles == compose_angles(rd(1), x.angles, 1, y.angles)
