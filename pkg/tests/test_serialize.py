from __future__ import annotations

import json
import random

from conftest import elements
from hypothesis import given

from cuntzcar.algebra import equals
from cuntzcar.crossed import from_cuntz
from cuntzcar.parser import parse_expression
from cuntzcar.sampling import random_element
from cuntzcar.serialize import crossed_to_json, dumps, element_from_json, element_to_json, loads


def test_schema():
    x = parse_expression("(1/2) s1 s2*")
    obj = element_to_json(x)
    assert obj == {"d": 2, "terms": [{"coeff": {"a": "1/2", "b": "0", "c": "0", "d": "0"},
                                      "creators": [1], "annihilators": [2]}]}


def test_roundtrip_seeded():
    rng = random.Random(0)
    for _ in range(200):
        x = random_element(rng)
        y = loads(dumps(x))
        assert y == x and equals(y, x)


@given(elements(d=3))
def test_roundtrip_property(x):
    assert element_from_json(json.loads(json.dumps(element_to_json(x)))) == x


def test_duplicate_terms_are_summed():
    obj = {"d": 2, "terms": [{"coeff": {"a": "1"}, "creators": [1], "annihilators": []},
                             {"coeff": {"a": "-1"}, "creators": [1], "annihilators": []}]}
    assert element_from_json(obj).is_structurally_zero()


def test_crossed_text():
    assert crossed_to_json(from_cuntz(parse_expression("s1"))) == {"1": "s1 s1*"}
