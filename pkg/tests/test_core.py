from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcop.core import (
    ArcFamily, Region, canonical, canonical_form, derive_regions, dot, end_interval, equals, family,
    invert_permutation, is_exhaustive, membership, projectively_equal, relabel, tree_incidence, total_weight,
    twist, unit, validate_family,
)
from conftest import BOUNDS, family_from, seeds

F = Fraction


def _bare(counts, arcs, weights):
    cycles = derive_regions(counts, arcs)
    return ArcFamily(0, 0, counts, arcs, tuple(map(F, weights)), tuple(Region(0, 0, (c,)) for c in cycles))


def _renumber(f, perm):
    """The same family with arc ``perm[k]`` listed at position ``k``."""
    new = {old: k for k, old in enumerate(perm)}
    side = lambda s: (1, new[s[1]], s[2]) if s[0] == 1 else s
    regions = tuple(Region(r.genus, r.punctures, tuple(tuple(side(s) for s in c) for c in r.cycles))
                    for r in f.regions[::-1])
    return ArcFamily(f.genus, f.punctures, f.counts, tuple(f.arcs[p] for p in perm),
                     tuple(f.weights[p] for p in perm), regions)


def test_unit_cylinder_is_valid():
    assert validate_family(unit()) == []


def test_parallel_arcs_are_reported():
    bad = _bare((2, 2), (((0, 1), (1, 1)), ((0, 2), (1, 2))), (1, 1))
    assert [v.name for v in validate_family(bad)] == ["parallel arcs"]


def test_puncture_bookkeeping_is_checked():
    f = unit()
    wrong = ArcFamily(f.genus, 1, f.counts, f.arcs, f.weights, f.regions)
    assert "puncture count" in {v.name for v in validate_family(wrong)}


def test_region_cycles_of_the_cylinder():
    assert len(derive_regions((1, 1), (((0, 1), (1, 1)),))) == 1
    assert len(derive_regions((1, 1), (((0, 1), (1, 1)),))[0]) == 4
    crossed = derive_regions((2, 2), (((0, 1), (1, 2)), ((0, 2), (1, 1))))
    assert [len(c) for c in crossed] == [4, 4]
    for cyc in crossed:
        assert sum(1 for s in cyc if s[0] == 0 and s[2] == 0) == 1
    assert derive_regions((0, 0), ()) == [((0, 0, 0),), ((0, 1, 0),)]


def test_total_weight_counts_both_ends():
    assert total_weight(unit(), 0) == 1
    loop = family((3, 1), [((0, 1), (1, 1)), ((0, 2), (0, 3))], [1, F(3, 2)], [(0, 1, [(0, 0, 2)])])
    assert total_weight(loop, 0) == 1 + 3
    assert total_weight(twist(F(1, 3), F(2, 3)), 1) == 1


def test_end_interval_in_window_order():
    ends = end_interval(twist(F(1, 4), F(3, 4)), 0)
    assert [(e.arc, e.width) for e in ends] == [(0, F(1, 4)), (1, F(3, 4))]
    assert end_interval(unit(), 1)[0].width == 1
    lonely = family((1, 1, 0), [((0, 1), (1, 1))], regions=[(0, 0, [(0, 0, 0), (0, 2, 0)])])
    assert end_interval(lonely, 2) == []


def test_relabel_dot_swaps_arcs():
    f = relabel(dot(1, 2), (0, 2, 1))
    assert f.arcs == (((0, 1), (2, 1)), ((0, 2), (1, 1)))
    assert f.weights == (1, 2)


def test_equality_conventions():
    f = dot(1, 2)
    assert equals(f, canonical(_renumber(f, [1, 0])))
    assert projectively_equal(dot(2, 4), dot(1, 2))
    assert not equals(twist(F(1, 3), F(2, 3)), twist(F(2, 3), F(1, 3)))


def test_membership_examples():
    assert membership(dot(), "trees") and membership(dot(), "linear_trees")
    d = twist(F(1, 2), F(1, 2))
    assert membership(d, "exhaustive") and membership(d, "trees")
    bridge = family((2, 1, 1), [((0, 1), (1, 1)), ((0, 2), (2, 1))])
    assert membership(bridge, "trees")
    with_12 = family((1, 2, 1), [((0, 1), (1, 1)), ((1, 2), (2, 1))])
    assert not membership(with_12, "trees") and not membership(with_12, "chinese_trees")
    allowed, required = tree_incidence(2)
    assert membership(dot(), "incidence", allowed, required)
    with pytest.raises(ValueError):
        membership(dot(), "forests")


@given(seeds, st.sampled_from(range(len(BOUNDS))))
def test_random_families_satisfy_invariants(seed, k):
    f = family_from(seed, BOUNDS[k])
    assert validate_family(f) == []
    assert is_exhaustive(f)
    lhs = sum(r.euler for r in f.regions)
    assert lhs == 2 - 2 * f.genus - f.boundaries - f.punctures + len(f.arcs)
    sides = [s for r in f.regions for c in r.cycles for s in c]
    assert len(sides) == len(set(sides))


@given(seeds, st.randoms(use_true_random=False))
def test_relabel_is_a_group_action(seed, r):
    f = family_from(seed)
    n = f.boundaries
    sigma, tau = list(range(n)), list(range(n))
    r.shuffle(sigma)
    r.shuffle(tau)
    g = relabel(f, sigma)
    assert validate_family(g) == []
    assert equals(relabel(g, invert_permutation(sigma)), f)
    comp = tuple(tau[sigma[b]] for b in range(n))
    assert equals(relabel(relabel(f, sigma), tau), relabel(f, comp))
    assert equals(relabel(f, tuple(range(n))), f)


@given(seeds, st.randoms(use_true_random=False))
def test_canonical_form_ignores_arc_order(seed, r):
    f = family_from(seed)
    perm = list(range(len(f.arcs)))
    r.shuffle(perm)
    g = _renumber(f, perm)
    assert canonical_form(g) == canonical_form(f)
    assert canonical(canonical(g)) == canonical(g)


@given(seeds)
def test_predicate_hierarchy(seed):
    f = family_from(seed, {"boundaries": 4, "arcs": 5, "genus": 1, "punctures": 1})
    if membership(f, "linear_trees"):
        assert membership(f, "trees")
    if membership(f, "trees"):
        assert membership(f, "chinese_trees")
    if membership(f, "cyclic_chinese_trees"):
        assert membership(f, "chinese_trees")
