from fractions import Fraction

import pytest

from orbicat.complexes import OrbifoldComplex, SimplicialGComplex
from orbicat.constructions import pair_groupoid, point_groupoid
from orbicat.groups import cyclic_group, dihedral_group
from orbicat.io import (ParseError, parse_function, parse_gpath, parse_group,
                        parse_groupoid, parse_model, serialize_function,
                        serialize_gpath, serialize_group, serialize_groupoid,
                        serialize_model)
from orbicat.zoo import (dihedral_sphere, klein_model, teardrop_groupoid,
                         teardrop_model)

Z3_TEXT = """
group Z3
elements e r r2
table:
e r r2
r r2 e
r2 e r
"""


def test_parse_group_z3():
    g = parse_group(Z3_TEXT)
    assert len(g) == 3
    assert g.mul_named("r", "r2") == "e"


def test_parse_group_d8_classes():
    text = serialize_group(dihedral_group(8))
    g = parse_group(text)
    from orbicat.groups import conjugacy_classes
    assert conjugacy_classes(g)[1] == 5


def test_parse_group_errors():
    with pytest.raises(ParseError, match="ragged"):
        parse_group("group X\nelements a b\ntable:\na b\nb\n")
    # a latin square with no identity row
    with pytest.raises(ParseError, match="identity"):
        parse_group("group X\nelements a b c\ntable:\nb c a\na b c\nc a b\n")


def test_group_roundtrip():
    for g in (cyclic_group(6), dihedral_group(8)):
        text = serialize_group(g)
        again = parse_group(text)
        assert again.elements == g.elements
        assert again.table == g.table
        assert serialize_group(again) == text


def test_parse_groupoid_pair():
    text = serialize_groupoid(pair_groupoid(["x", "y"]))
    g = parse_groupoid(text)
    assert len(g.arrows) == 4


def test_parse_groupoid_z2_point():
    g = parse_groupoid(serialize_groupoid(point_groupoid(cyclic_group(2))))
    assert len(g.arrows) == 2


def test_parse_groupoid_missing_composition_has_line_info():
    text = """groupoid bad
objects x y
arrow f : x -> y
arrow g : y -> x
inverse f = g
inverse g = f
compose g f = id_x
"""
    with pytest.raises(ParseError, match="missing composition"):
        parse_groupoid(text)


def test_groupoid_roundtrip_identity():
    for g in (pair_groupoid(["x", "y"]), teardrop_groupoid()):
        text = serialize_groupoid(g)
        again = parse_groupoid(text, name=g.name)
        assert again == g
        assert serialize_groupoid(again) == text


def test_parse_model_labeled():
    text = serialize_model(teardrop_model())
    m = parse_model(text)
    assert isinstance(m, OrbifoldComplex)
    assert m.label_order(("N",)) == 3


def test_parse_model_action():
    text = serialize_model(dihedral_sphere())
    m = parse_model(text)
    assert isinstance(m, SimplicialGComplex)
    assert len(m.complex.vertices) == 10


def test_parse_model_action_from_generators():
    # only generator permutations given; the rest closes via the table
    text = """model disk
group Z3
elements e r r2
table:
e r r2
r r2 e
r2 e r
complex:
simplex c
simplex m0
simplex m1
simplex m2
simplex c m0
simplex c m1
simplex c m2
simplex m0 m1
simplex m1 m2
simplex m0 m2
simplex c m0 m1
simplex c m1 m2
simplex c m0 m2
action:
group Z3
perm r : c>c m0>m1 m1>m2 m2>m0
"""
    m = parse_model(text)
    assert isinstance(m, SimplicialGComplex)
    assert m.vertex_perm["r2"]["m0"] == "m2"


def test_parse_model_errors():
    with pytest.raises(ParseError, match="downward closed"):
        parse_model("complex:\nsimplex a b\n")
    bad_label = """group Z2
elements e r
table:
e r
r e
complex:
simplex a
simplex b
simplex a b
labels:
ambient Z2
label a b -> e r
"""
    with pytest.raises(ParseError, match="monotonicity"):
        parse_model(bad_label)
    bad_subgroup = """group Z4
elements e r r2 r3
table:
e r r2 r3
r r2 r3 e
r2 r3 e r
r3 e r r2
complex:
simplex a
labels:
ambient Z4
label a -> e r
"""
    with pytest.raises(ParseError, match="subgroup"):
        parse_model(bad_subgroup)


def test_model_roundtrip():
    for m in (teardrop_model(), klein_model()):
        text = serialize_model(m)
        again = parse_model(text, name=m.name)
        assert again.complex.simplices == m.complex.simplices
        assert again.label == m.label
        assert serialize_model(again) == text
    ds = dihedral_sphere()
    text = serialize_model(ds)
    again = parse_model(text, name=ds.name)
    assert again.vertex_perm == ds.vertex_perm
    assert serialize_model(again) == text


def test_parse_function():
    values = parse_function("N 1\nS -1\ne0 1/3\n")
    assert values["e0"] == Fraction(1, 3)
    assert values["S"] == -1
    with pytest.raises(ParseError):
        parse_function("N 1 2\n")


def test_function_roundtrip():
    values = {"a": Fraction(1, 3), "b": Fraction(-2)}
    text = serialize_function(values)
    assert parse_function(text) == values


def test_gpath_roundtrip():
    text = """gpath
marks r0 half r1
segment:
branch e : c m0
branch r : c m1
branch r2 : c m2
connect e
segment:
branch e : m0 m1
"""
    p = parse_gpath(text)
    assert len(p.segments) == 2
    assert p.segments[0].branch_arrows == ("e", "r", "r2")
    assert serialize_gpath(p) == text


def test_parse_errors_report_lines():
    try:
        parse_groupoid("objects x\narrow f x -> y\n")
    except ParseError as exc:
        assert exc.line == 2
    else:
        raise AssertionError("expected ParseError")
