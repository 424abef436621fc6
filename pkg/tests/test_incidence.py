"""Core incidence structure: labels, verification, joins, serialization."""

import json

import pytest
from hypothesis import given, strategies as st

from perspectra.incidence import (Configuration, ConfigurationSignature,
                                  IncidenceError, ViolationReport, a_point,
                                  b_point, c_point, center, export, free_point,
                                  from_json, join, parse_label, third_point,
                                  to_dot, to_json, verify)
from perspectra.families import desargues, grassmannian


def test_label_constructors_and_str():
    assert str(center()) == "p"
    assert str(a_point(3)) == "a3"
    assert str(b_point(12)) == "b12"
    assert str(c_point(2, 1)) == "c{1,2}"
    assert str(free_point("abc")) == "abc"


def test_c_point_normalizes_pair_order():
    assert c_point(3, 1) == c_point(1, 3)
    with pytest.raises(ValueError):
        c_point(2, 2)


@pytest.mark.parametrize("text", ["p", "a1", "b7", "c{2,5}", "aab"])
def test_parse_label_roundtrip(text):
    assert str(parse_label(text)) == text


def test_label_sort_order_groups_kinds():
    labs = sorted([c_point(1, 2), b_point(1), a_point(2), center(),
                   free_point("x")])
    assert [lab.kind for lab in labs] == ["p", "a", "b", "c", "free"]


def test_build_rejects_repeated_point_in_line():
    with pytest.raises(IncidenceError):
        Configuration.build([a_point(1), a_point(2)],
                            [(a_point(1), a_point(1), a_point(2))])


def test_verify_desargues_signature():
    # the classical 10_3 configuration
    sig = verify(desargues())
    assert isinstance(sig, ConfigurationSignature)
    assert sig.as_tuple() == (10, 3, 10, 3)


def test_verify_grassmannian_signatures():
    # oracle: G(n,2) is a (C(n,2), n-2, C(n,3), 3) configuration
    from math import comb
    for n in range(3, 8):
        sig = verify(grassmannian(n))
        assert sig.as_tuple() == (comb(n, 2), n - 2, comb(n, 3), 3)


def test_verify_flags_partial_linearity_violation():
    pts = [free_point(s) for s in "wxyz"]
    bad = Configuration.build(pts, [tuple(pts[:3]), (pts[0], pts[1], pts[3])])
    report = verify(bad)
    assert isinstance(report, ViolationReport)
    assert report.axiom == "not partially linear"


def test_verify_flags_mixed_line_sizes():
    pts = [free_point(s) for s in "vwxyz"]
    bad = Configuration.build(pts, [tuple(pts[:3]), tuple(pts[1:])])
    report = verify(bad)
    assert report.axiom == "not a k-configuration"


def test_verify_flags_irregular_ranks():
    pts = [free_point(s) for s in "wxyz"]
    bad = Configuration.build(pts, [tuple(pts[:3])])
    report = verify(bad)
    assert report.axiom == "not regular"


def test_join_and_third_point():
    g = grassmannian(4)
    line = join(g, c_point(1, 2), c_point(1, 3))
    assert set(line) == {c_point(1, 2), c_point(1, 3), c_point(2, 3)}
    assert third_point(g, c_point(1, 2), c_point(1, 3)) == c_point(2, 3)
    # disjoint pairs are not collinear in G(4,2)
    assert join(g, c_point(1, 2), c_point(3, 4)) is None
    assert join(g, c_point(1, 2), c_point(1, 2)) == (c_point(1, 2),)


def test_json_roundtrip_preserves_structure():
    g = desargues()
    back = from_json(to_json(g))
    assert back.points == g.points
    assert back.lines == g.lines


def test_json_rejects_duplicate_labels():
    data = {"points": ["p", "p"], "lines": []}
    with pytest.raises(IncidenceError):
        from_json(json.dumps(data))


def test_dot_export_has_levi_structure():
    g = desargues()
    dot = to_dot(g)
    assert dot.startswith("graph levi {")
    # one edge per incidence
    assert dot.count(" -- ") == sum(len(l) for l in g.lines)
    assert export(g, "dot") == dot.encode()
    with pytest.raises(IncidenceError):
        export(g, "svg")


@given(st.integers(min_value=3, max_value=6), st.randoms())
def test_verify_invariant_under_line_order(n, rng):
    g = grassmannian(n)
    lines = [g.line_labels(l) for l in g.lines]
    rng.shuffle(lines)
    shuffled = Configuration.build(g.points, lines)
    assert verify(shuffled) == verify(g)
