from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcop.core import dot, equals, family, is_exhaustive, projectivize, relabel, total_weight, twist, unit
from arcop.generate import random_family
from arcop.glue import (
    CirclePartition, GlueError, GlueReport, band_refinement, compose_projective, compose_weighted,
    glue_matched, relaxed_compose,
)
from arcop.laws import same
from arcop.oracle import oracle_glue
from arcop.serialize import encode
from conftest import BOUNDS, family_from, seeds

F = Fraction
P = CirclePartition.of([("a", F(1, 2)), ("b", F(1, 2))])
Q = CirclePartition.of([("c", F(1, 2)), ("d", F(1, 2))])


def test_band_refinement_examples():
    assert band_refinement(P, Q) == [("a", "c", F(1, 2)), ("b", "d", F(1, 2))]
    assert band_refinement(P, Q, F(1, 4)) == [("a", "d", F(1, 4)), ("a", "c", F(1, 4)),
                                               ("b", "c", F(1, 4)), ("b", "d", F(1, 4))]
    one = CirclePartition.of([("a", 1)])
    assert band_refinement(one, CirclePartition.of([("c", 1)])) == [("a", "c", 1)]
    with pytest.raises(GlueError):
        band_refinement(one, P.__class__.of([("c", 2)]))


def test_gluing_the_unit_returns_alpha():
    a = random_family(3)
    for i in range(1, a.arity + 1):
        assert same(glue_matched(a, i, unit(total_weight(a, i))), a)


def test_two_half_twists_give_the_unit():
    half = twist(F(1, 2), F(1, 2))
    report = GlueReport()
    out = glue_matched(half, 1, half, 0, report)
    assert equals(out, unit(1))
    assert report.merges >= 1
    assert equals(compose_projective(half, 1, half), unit())


def test_signature_arithmetic_example():
    torus = random_family(5, {"genus": 1, "punctures": 0, "boundaries": 3, "arcs": 5, "min_boundaries": 3})
    punct = random_family(0, {"genus": 0, "punctures": 1, "boundaries": 2, "arcs": 3, "min_boundaries": 2})
    assert (torus.genus, torus.arity, punct.punctures, punct.arity) == (1, 2, 1, 1)
    out = compose_weighted(torus, 2, punct)
    assert (out.genus, out.punctures, out.boundaries) == (1, 1, 3)


def test_regression_vector_delta_third_into_half():
    out = compose_weighted(twist(F(1, 3), F(2, 3)), 1, twist(F(1, 2), F(1, 2)))
    assert encode(out) == (
        b'{"arcs":[{"ends":[[0,1],[1,2]],"weight":"5/6"},{"ends":[[0,2],[1,1]],"weight":"1/6"}],'
        b'"endpoints":[2,2],"regions":[{"cycles":[["b0.0","a0L","b1.1","a1R"]],"genus":0,"punctures":0},'
        b'{"cycles":[["b0.1","a1L","b1.0","a0R"]],"genus":0,"punctures":0}],'
        b'"surface":{"boundaries":2,"genus":0,"punctures":0},"type":"family","version":1}')
    assert equals(out, oracle_glue(twist(F(1, 3), F(2, 3)), 1, twist(F(1, 2), F(1, 2))))


def test_unit_law_up_to_scale():
    a = random_family(11)
    assert same(compose_weighted(a, 1, unit(2)), a.scaled(2))
    assert same(compose_weighted(unit(3), 1, a), a.scaled(3))


def test_relaxed_composition():
    lonely = family((1, 1, 0), [((0, 1), (1, 1))], regions=[(0, 0, [(0, 0, 0), (0, 2, 0)])])
    out = relaxed_compose(lonely, 2, dot())
    assert out.boundaries == 4 and out.counts == (1, 1, 0, 0)
    assert same(relaxed_compose(dot(), 1, dot()), compose_projective(dot(), 1, dot()))
    with pytest.raises(GlueError):
        relaxed_compose(dot(), 1, lonely_at_zero())
    with pytest.raises(GlueError):
        compose_projective(lonely, 2, dot())


def lonely_at_zero():
    return family((0, 1, 1), [((1, 1), (2, 1))], regions=[(0, 0, [(0, 0, 0), (0, 1, 0)])])


@given(seeds, seeds, st.fractions(min_value=0, max_value=F(11, 12), max_denominator=12), st.integers(0, 2))
def test_glue_matches_oracle(s1, s2, frac, k):
    a, b = family_from(s1, BOUNDS[k]), family_from(s2)
    i = 1 + s1 % a.arity
    a2, b2 = a.scaled(total_weight(b, 0)), b.scaled(total_weight(a, i))
    off = frac * total_weight(a2, i)
    assert equals(glue_matched(a2, i, b2, off), oracle_glue(a2, i, b2, off))


@given(seeds, seeds, st.integers(0, 2))
def test_outputs_are_exhaustive_with_additive_signature(s1, s2, k):
    a, b = family_from(s1, BOUNDS[k]), family_from(s2, BOUNDS[(k + 1) % 3])
    i = 1 + s2 % a.arity
    out = compose_weighted(a, i, b)
    assert is_exhaustive(out)
    assert (out.genus, out.punctures, out.boundaries) == (a.genus + b.genus, a.punctures + b.punctures,
                                                          a.boundaries + b.boundaries - 2)


@given(seeds, seeds, seeds)
def test_weighted_associativity(s1, s2, s3):
    a, b, c = family_from(s1), family_from(s2), family_from(s3)
    i, j = 1 + s1 % a.arity, 1 + s2 % b.arity
    lhs = compose_weighted(compose_weighted(a, i, b), i + j - 1, c)
    rhs = compose_weighted(a, i, compose_weighted(b, j, c))
    assert same(lhs, rhs)


@given(seeds, seeds)
def test_tree_classes_are_closed(s1, s2):
    from arcop.core import membership
    from arcop.generate import random_tree

    a, b = random_tree(s1), random_tree(s2)
    out = compose_projective(a, 1 + s1 % a.arity, b)
    assert membership(out, "trees")
    la, lb = random_tree(s1, linear=True), random_tree(s2, linear=True)
    assert membership(compose_projective(la, 1 + s2 % la.arity, lb), "linear_trees")
