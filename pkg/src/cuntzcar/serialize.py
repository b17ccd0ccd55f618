"""JSON encoding of elements.

An element is ``{"d": 2, "terms": [{"coeff": {"a": "1/2", "b": "0", "c": "0",
"d": "0"}, "creators": [1], "annihilators": [2]}, ...]}``.  Rationals are
strings so no precision is lost; both words are in creator order, i.e. the
term above is ``(1/2) psi_1 psi_2^*``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import Element, Monomial
from .crossed import CrossedElement
from .scalar import Scalar


def scalar_to_json(c: Scalar) -> dict[str, str]:
    return {"a": str(c.a), "b": str(c.b), "c": str(c.c), "d": str(c.d)}


def scalar_from_json(obj: dict[str, Any]) -> Scalar:
    return Scalar(*(Fraction(str(obj.get(k, "0"))) for k in "abcd"))


def element_to_json(x: Element) -> dict[str, Any]:
    return {"d": x.d,
            "terms": [{"coeff": scalar_to_json(c), "creators": list(m.creators),
                       "annihilators": list(m.annihilators)} for m, c in x.items()]}


def element_from_json(obj: dict[str, Any]) -> Element:
    terms: dict[Monomial, Scalar] = {}
    for t in obj["terms"]:
        m = Monomial(tuple(int(v) for v in t["creators"]),
                     tuple(int(v) for v in t["annihilators"]))
        c = scalar_from_json(t["coeff"])
        terms[m] = terms[m] + c if m in terms else c
    return Element(terms, d=int(obj.get("d", 2)))


def dumps(x: Element, **kwargs) -> str:
    return json.dumps(element_to_json(x), **kwargs)


def loads(text: str) -> Element:
    return element_from_json(json.loads(text))


def crossed_to_json(ce: CrossedElement) -> dict[str, str]:
    """Map from index to the coefficient in expression syntax."""
    return ce.to_text()
