from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcop.chains import (
    FamilyError, I1, bracket_family, boundary, bv_operator, check_face_contracts, compose_families,
    continuity_violations, eval_family, face, make_generator, partbv_square, relabel_family, scaling_homotopy,
)
from arcop.core import dot, projectively_equal, relabel, twist, unit, validate_family
from arcop.glue import compose_projective

F = Fraction
half = F(1, 2)
unit_interval = st.fractions(min_value=0, max_value=1, max_denominator=16)


def test_delta_is_a_loop_at_the_unit():
    delta = make_generator("delta")
    assert projectively_equal(eval_family(delta, (0,)), unit())
    assert projectively_equal(eval_family(delta, (1,)), unit())
    assert projectively_equal(eval_family(delta, (half,)), twist(half, half))


def test_point_generators():
    assert projectively_equal(eval_family(make_generator("one")), unit())
    assert projectively_equal(eval_family(make_generator("dot")), dot())


def test_star_faces():
    star = make_generator("star")
    assert projectively_equal(star(0), dot())
    assert projectively_equal(star(1), relabel(dot(), (0, 2, 1)))
    assert projectively_equal(face(star, 0, 1)(), relabel(dot(), (0, 2, 1)))


def test_bv_operator_symbol():
    op = bv_operator()
    assert op.symbol() == "-" + make_generator("delta").name
    assert op.degree == 1


def test_faces_and_boundary():
    delta = make_generator("delta")
    assert projectively_equal(face(delta, 0, 0)(), unit())
    signs = [s for s, _ in boundary(delta)]
    assert signs == [1, -1]
    sq = partbv_square()
    top = face(sq, 1, 1)
    assert top.domain.dim == 1
    with pytest.raises(FamilyError):
        face(delta, 0, "s=0")


def test_evaluation_outside_the_domain_fails():
    with pytest.raises(FamilyError):
        eval_family(make_generator("delta"), (F(3, 2),))


def test_composition_with_one_is_identity():
    one, star = make_generator("one"), make_generator("star")
    comp = compose_families(one, 1, star)
    for s in (0, F(1, 5), half, 1):
        assert projectively_equal(comp(s), star(s))


@pytest.mark.parametrize("i", [1, 2])
def test_star_composites_are_pointwise(i):
    star = make_generator("star")
    comp = compose_families(star, i, star)
    assert continuity_violations(comp, 6) == []
    for s in (0, F(1, 4), F(2, 3), 1):
        for t in (0, F(1, 3), half, 1):
            assert projectively_equal(comp(s, t), compose_projective(star(s), i, star(t)))


def test_bracket_concatenates_star_and_its_relabelling():
    br = bracket_family()
    star = make_generator("star")
    swapped = relabel_family(star, (0, 2, 1))
    for s in (0, F(1, 8), F(1, 4), F(3, 8), half):
        assert projectively_equal(br(s), star(2 * s))
    for s in (half, F(5, 8), F(3, 4), 1):
        assert projectively_equal(br(s), swapped(2 * s - 1))
    assert projectively_equal(br(0), br(1))


def test_scaling_homotopy_endpoints():
    for n in (2, 3, 4):
        h = scaling_homotopy(n)
        dn = make_generator("delta_n", n)
        for s in (F(1, 3), F(3, 4)):
            assert projectively_equal(h(s, 0), dn(s))


@pytest.mark.parametrize("name", ["i", "ii", "iii", "iv", "v"])
def test_face_contracts(name):
    rep = check_face_contracts(name)[name]
    assert rep["passed"], rep["failures"]
    assert rep["checked"] > 0


def test_threedel_reparameterization_at_quarter_points():
    rep = check_face_contracts("iii", samples=[0, F(1, 4), half, 1])["iii"]
    assert rep["passed"] and rep["checked"] > 0


@given(unit_interval)
def test_generator_values_are_valid(s):
    for name, k in (("delta", None), ("star", None), ("delta_n", 3)):
        f = make_generator(name, k)(s)
        assert validate_family(f) == []
        assert sum(f.weights) == 1


@given(unit_interval, unit_interval)
def test_square_is_continuous_and_valid(u, v):
    f = partbv_square()(u, v)
    assert validate_family(f) == []


def test_declared_walls_are_continuous():
    for F_ in (make_generator("star"), make_generator("delta_n", 3), bracket_family(), partbv_square(),
               scaling_homotopy(3)):
        assert continuity_violations(F_, 8) == []
    assert make_generator("delta").domain == I1
