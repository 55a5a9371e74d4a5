import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arcop.cacti import cactus, frame, random_cactus
from arcop.chains import make_generator, partbv_square
from arcop.circle import ExtClass
from arcop.core import dot, unit, validate_family
from arcop.generate import BoundsError, random_family
from arcop.loop import loop_of
from arcop.render import RenderError, RenderSpec, render
from arcop.serialize import DocumentError, decode, encode, parse_q, qstr
from arcop.twisted import element
from conftest import BOUNDS, family_from, seeds

F = Fraction


def _doc(x):
    return json.loads(encode(x))


def test_unit_round_trips_byte_identically():
    data = encode(unit())
    assert decode(data) == unit()
    assert encode(decode(data)) == data


def test_unreduced_fraction_is_rejected():
    doc = _doc(unit())
    doc["arcs"][0]["weight"] = "2/4"
    with pytest.raises(DocumentError) as exc:
        decode(json.dumps(doc))
    assert exc.value.path == "$.arcs[0].weight"


def test_missing_regions_names_the_path():
    doc = _doc(unit())
    del doc["regions"]
    with pytest.raises(DocumentError) as exc:
        decode(json.dumps(doc))
    assert exc.value.path == "$.regions"


def test_invalid_family_is_rejected():
    doc = _doc(dot())
    doc["arcs"][1]["ends"] = [[0, 2], [1, 1]]
    doc["arcs"][0]["ends"] = [[0, 1], [2, 1]]
    doc["arcs"].append({"ends": [[0, 3], [1, 2]], "weight": "1"})
    with pytest.raises(DocumentError):
        decode(json.dumps(doc))


def test_rationals():
    assert qstr(F(6, 4)) == "3/2" and qstr(3) == "3"
    assert parse_q("-1/3", "$") == F(-1, 3)
    for bad in ("3/1", "1/0", "x", "2/-3"):
        with pytest.raises(DocumentError):
            parse_q(bad, "$")


def test_every_kind_round_trips():
    values = [dot(1, 2), random_cactus(3, 3), loop_of(dot(1, 3)), make_generator("star"), partbv_square(),
              ExtClass.basis((1, 0, 1)) - ExtClass.basis((0, 1, 1)), element(dot(), (0, F(1, 3), F(1, 2)))]
    for x in values:
        data = encode(x)
        assert encode(decode(data)) == data


@given(seeds, st.integers(0, 2))
def test_family_round_trip(seed, k):
    f = family_from(seed, BOUNDS[k])
    assert decode(encode(f)) == f


@given(seeds, seeds)
def test_encoding_is_injective(s1, s2):
    f, g = family_from(s1), family_from(s2)
    assert (encode(f) == encode(g)) == (f == g)


def test_random_family_contract():
    assert random_family(1) == random_family(1)
    assert validate_family(random_family(1)) == []
    with pytest.raises(BoundsError):
        random_family(1, {"arcs": 0})


def test_random_family_ten_thousand_seeds():
    for seed in range(10000):
        f = random_family(seed)
        assert validate_family(f) == [] and all(f.counts), seed


def test_render_examples():
    svg = render(unit()).decode()
    assert svg.count("<line") == 2 and svg.count("<path") == 1
    svg = render(dot(), model="circle").decode()
    assert svg.count('stroke-width="6"') == 4
    two = cactus([(1, 0, [(0, "p")]), (1, 0, [(0, "p")])])
    svg = render(loop_of(frame(two)), model="planar-loop").decode()
    assert svg.count('fill="none"') == 2


@given(seeds)
def test_render_is_deterministic(seed):
    f = family_from(seed, BOUNDS[1])
    for model in ("interval", "circle", "planar-loop"):
        assert render(f, RenderSpec(model)) == render(f, RenderSpec(model))


def test_render_errors():
    with pytest.raises(RenderError):
        render(loop_of(unit()), model="interval")
    with pytest.raises(RenderError):
        render(unit(), model="sketch")
