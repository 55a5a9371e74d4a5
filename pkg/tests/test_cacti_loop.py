from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcop.cacti import (
    cactus, cactus_configuration, check_frame_operadic, check_loop_frame, frame, glue_cacti, is_spineless,
    perimeter, random_cactus,
)
from arcop.core import dot, equals, family, membership, projectively_equal, twist, unit
from arcop.generate import random_family, random_tree
from arcop.glue import compose_weighted
from arcop.laws import same
from arcop.loop import (
    ConfigurationError, NotPlanar, configuration, in_LOOP, linear_normalize, loop_of, recompose, section_of,
)
from conftest import seeds

F = Fraction


def two_lobes(zero2=0, global_zero=(1, 0)):
    return cactus([(2, 0, [(0, "p")]), (3, zero2, [(0, "p")])], None, global_zero)


def test_perimeter_examples():
    one = cactus([(F(5, 2), 0, [])])
    assert [p.length for p in perimeter(one)] == [F(5, 2)]
    spineless = two_lobes()
    assert [(p.lobe, p.length) for p in perimeter(spineless)] == [(1, 2), (2, 3)]
    # the global zero opposite the intersection and lobe 2's zero away from it
    spined = two_lobes(zero2=1, global_zero=(1, 1))
    subs = perimeter(spined)
    assert len(subs) == 4 and sum(p.length for p in subs) == 5


def test_gluing_modes():
    c1, c2 = random_cactus(1, 3), random_cactus(2, 2)
    one = cactus([(1, 0, [])])
    assert glue_cacti(one, 1, one) == one
    sym = glue_cacti(c1, 2, c2, "symmetric")
    right = glue_cacti(c1, 2, c2, "right")
    left = glue_cacti(c1, 2, c2, "left")
    k = sym.lobes[0].circumference / right.lobes[0].circumference
    assert sym == right.scaled(k)
    k = sym.lobes[0].circumference / left.lobes[0].circumference
    assert sym == left.scaled(k)


def test_frame_examples():
    assert equals(frame(cactus([(F(3, 2), 0, [])])), unit(F(3, 2)))
    assert equals(frame(two_lobes()), dot(2, 3))


def test_loop_examples():
    K = loop_of(unit())
    assert K.circumferences == (1, 1) and len(K.identifications) == 1
    c = two_lobes()
    assert loop_of(frame(c)) == cactus_configuration(c)
    with pytest.raises(ConfigurationError):
        loop_of(family((1, 1, 0), [((0, 1), (1, 1))], regions=[(0, 0, [(0, 0, 0), (0, 2, 0)])]))


def test_section_examples():
    K = configuration((1, 1), [(0, 0, 1, 0, 1, False)])
    assert equals(section_of(K), unit())
    c = random_cactus(7, 3)
    assert equals(section_of(cactus_configuration(c)), frame(c))


def test_section_inserts_a_puncture():
    # an arc from boundary 0 to itself around an empty disk
    K = configuration((3, 1), [(0, 0, 1, 0, 1, False), (0, 1, 0, 2, 1, True)])
    f = section_of(K)
    assert f.punctures == 1 and f.genus == 0
    assert loop_of(f) == K


def test_section_rejects_wrong_orientation():
    with pytest.raises(NotPlanar):
        section_of(configuration((3, 1), [(0, 0, 1, 0, 1, False), (0, 1, 0, 2, 1, False)]))


def test_in_loop_examples():
    assert in_LOOP(dot())
    assert not in_LOOP(family((1, 2, 1), [((0, 1), (1, 1)), ((1, 2), (2, 1))]))


def test_linear_normalize_examples():
    f = dot(1, 2)
    twists, lin = linear_normalize(f)
    assert all(equals(t, unit()) for t in twists.values()) and equals(lin, f)
    # boundary 1 block starting mid-order: two ends at 1 read in the opposite order at 0
    g = family((3, 2, 1), [((0, 1), (1, 2)), ((0, 2), (1, 1)), ((0, 3), (2, 1))], [1, 2, 1])
    assert membership(g, "trees") and not membership(g, "linear_trees")
    twists, lin = linear_normalize(g)
    assert not equals(twists[1], unit()) and equals(twists[2], unit())
    assert membership(lin, "linear_trees")
    assert same(recompose(twists, lin), g)
    with pytest.raises(ValueError):
        linear_normalize(family((1, 2, 1), [((0, 1), (1, 1)), ((1, 2), (2, 1))]))


@given(seeds, st.integers(1, 4), st.booleans())
def test_loop_of_frame_is_the_cactus(seed, n, spineless):
    assert check_loop_frame(random_cactus(seed, n, spineless)) is None


@given(seeds, st.integers(1, 3), st.integers(1, 3))
def test_frame_is_operadic(seed, n, m):
    c1, c2 = random_cactus(seed, n), random_cactus(seed + 1, m)
    assert check_frame_operadic(c1, 1 + seed % n, c2) is None


@given(seeds)
def test_frame_is_injective_on_cacti(seed):
    c1, c2 = random_cactus(seed, 3), random_cactus(seed + 7, 3)
    assert (frame(c1) == frame(c2)) == (c1 == c2)


@given(seeds)
def test_section_inverts_loop_on_loop_members(seed):
    f = random_family(seed, {"genus": 0, "punctures": 0, "boundaries": 4, "arcs": 6})
    if in_LOOP(f):
        assert equals(section_of(loop_of(f)), f)
    K = loop_of(f)
    try:
        g = section_of(K)
    except NotPlanar:
        return
    assert loop_of(g) == K


@given(seeds)
def test_in_loop_agrees_with_chinese_trees(seed):
    f = random_family(seed, {"genus": 1, "punctures": 1, "boundaries": 4, "arcs": 5})
    assert in_LOOP(f) == membership(f, "chinese_trees")


@given(seeds)
def test_linear_normalize_round_trip(seed):
    f = random_tree(seed)
    twists, lin = linear_normalize(f)
    assert membership(lin, "linear_trees")
    assert projectively_equal(recompose(twists, lin), f)
    for t in twists.values():
        assert t.boundaries == 2 and sum(t.weights) == 1
