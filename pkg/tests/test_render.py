import json

import pytest

from lfac.catalog import (free, principal_series, sc_irred4, sc_pair,
                          steinberg, supercuspidal, theta_lift, type_IIIa,
                          type_VIa, type_X)
from lfac.chars import Character
from lfac.dsl import evaluate_text
from lfac.poles import ideals_JK, subregular_poles
from lfac.render import SCHEMA, text, to_json, unicodize
from lfac.scalar import Scalar
from lfac.splitrat import SplitRational, ideal_generator
from lfac.wdrep import char_rep

a = Scalar.symbol("a")
b = Scalar.symbol("b")
unr = Character.unramified


def test_text_forms():
    assert text(a ** 2 / 2) == "1/2*a^2"
    assert text(unr(a * b)) == "unr(a*b)"
    assert text(char_rep(unr(a))) == "unr(a) x sp(0)"
    assert text(type_VIa(unr(a))) == "gsp4.VIa(unr(a))"
    assert text(type_X("l", unr(b), unr(a))) == "gsp4.X(l, unr(b), unr(a))"
    assert text(sc_pair("l", "m", unr(a))) == "gsp4.scpair(l, m, unr(a))"
    assert text(sc_irred4("l", unr(a))) == "gsp4.sc4(l, unr(a))"
    assert text(steinberg(unr(a))) == "gl2.st(unr(a))"
    assert text(supercuspidal("l")) == "gl2.sc(l)"


def test_text_theta_and_free():
    lift = theta_lift(steinberg(unr(a)), steinberg(unr(-a)))
    assert text(lift) == "theta(gl2.st(unr(a)), gl2.st(unr(-a)))"
    p = type_VIa(unr(a))
    assert text(free(p.rep, p.similitude)) \
        == "gsp4.free(unr(a) x sp(1) + unr(a) x sp(1), unr(a^2))"


def test_text_reducible_orientation():
    sub = principal_series(unr(a), unr(a) * Character.absval(1),
                           reducible=True)
    assert text(sub) == "gl2.ps(unr(a), unr(a*v^-2), red)"
    quot = principal_series(unr(a) * Character.absval(1), unr(a),
                            reducible=True)
    assert evaluate_text(text(quot)).reducible == "quot"


def test_text_polereport():
    report = subregular_poles(type_VIa(unr(a)))
    assert text(report) == ("polereport(entry(a*v^-1, sub2, "
                            "unr(a) x sp(1) + unr(a) x sp(1), "
                            "bessel(unr(a), unr(a))))")


def test_roundtrip_samples():
    values = [a ** 2 - b, SplitRational(factors=((a, -2), (b, 1))),
              unr(a) * Character.ramified("eta"),
              char_rep(unr(a), 2) + char_rep(unr(b)),
              type_IIIa(unr(a), unr(b)), steinberg(unr(b)),
              subregular_poles(type_VIa(unr(a)))]
    for value in values:
        assert evaluate_text(text(value)) == value


def test_unicodize_is_display_only():
    assert unicodize("1/((1 - a*v^-2*X)(1 - a^3*X)) x sp(2)") \
        == "1/((1 - a·v⁻²·X)(1 - a³·X)) ⊗ sp(2)"


def test_json_shapes():
    blob = to_json(type_VIa(unr(a)))
    assert blob["kind"] == "gsp4" and blob["type"] == "VIa"
    assert blob["similitude"] == "unr(a^2)"
    assert blob["rep"]["dim"] == 4
    assert [b["sp"] for b in blob["rep"]["blocks"]] == [1, 1]
    assert json.dumps(blob)  # serializable as is


def test_json_polereport():
    blob = to_json(subregular_poles(type_VIa(unr(a))))
    assert blob["kind"] == "polereport"
    entry = blob["entries"][0]
    assert entry["classification"] == "subregular-case2"
    assert entry["root"] == "a*v^-1"
    assert entry["bessel"] == ["unr(a)", "unr(a)"]


def test_json_ideal():
    _, k = ideals_JK(type_VIa(unr(a)))
    gen = ideal_generator([k])
    blob = to_json(gen)
    assert blob == {"kind": "ideal", "generator": "(1 - a*v^-1*X)",
                    "lfactor": False, "units": False}
    assert text(gen) == "(1 - a*v^-1*X)"


def test_schema_tag():
    assert SCHEMA == "lfac-1"


def test_unrenderable():
    with pytest.raises(TypeError):
        text(object())
