import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from garside.systems import xyz_presentation
from garside.words import (
    CongruenceIndex, Presentation, PresentationError, UnknownGenerator, congruence_class,
    equivalence_classes, load_presentation, parse_positive, parse_word, render, render_signed,
    reverse_presentation, words_equal,
)

XYZ = xyz_presentation()


def test_parse_positive_word():
    assert parse_word("x.x.z", XYZ) == (("x", 1), ("x", 1), ("z", 1))


def test_parse_inverse_marker():
    assert parse_word("~z.x.z", XYZ) == (("z", -1), ("x", 1), ("z", 1))


def test_parse_unknown_generator():
    with pytest.raises(UnknownGenerator, match="q"):
        parse_word("x.q", XYZ)


@pytest.mark.parametrize("text", ["", "1", "  "])
def test_parse_empty(text):
    assert parse_word(text, XYZ) == ()


@pytest.mark.parametrize("text", ["x..z", "~", "x.~~z"])
def test_parse_malformed(text):
    with pytest.raises(PresentationError):
        parse_word(text, XYZ)


def test_parse_positive_rejects_inverse():
    with pytest.raises(PresentationError):
        parse_positive("x.~z", XYZ)


def test_render_round_trip():
    word = (("z", -1), ("x", 1), ("z", 1))
    assert parse_word(render_signed(word), XYZ) == word
    assert render(()) == "1"
    assert render(("x", "y")) == "x.y"


def test_presentation_validation():
    with pytest.raises(PresentationError):
        Presentation(("a", "a"), ())
    with pytest.raises(PresentationError):
        Presentation(("a",), ((("a",), ("b",)),))


def test_inhomogeneous_detected():
    p = Presentation(("a", "b"), ((("a", "a"), ("b",)),))
    assert not p.is_homogeneous
    with pytest.raises(PresentationError):
        p.require_homogeneous()


def test_presentation_json_round_trip(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps(XYZ.to_dict()))
    assert load_presentation(path) == XYZ


def test_load_presentation_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(PresentationError):
        load_presentation(bad)
    with pytest.raises(PresentationError):
        load_presentation(tmp_path / "missing.json")


def test_classes_of_defining_relations():
    index = equivalence_classes(XYZ, 2)
    assert index.class_of(("x", "x")) == {("x", "x"), ("y", "y")}
    assert index.class_of(("x", "z")) == {("x", "z"), ("z", "x")}


def test_length_one_classes_are_singletons():
    index = equivalence_classes(XYZ, 1)
    for g in XYZ.generators:
        assert index.class_of((g,)) == {(g,)}
    assert index.class_of(()) == {()}


def test_words_equal_examples():
    assert words_equal(XYZ, ("x", "x"), ("y", "y"))
    assert not words_equal(XYZ, ("x", "z"), ("z", "y"))
    assert words_equal(XYZ, ("x", "y", "z"), ("x", "y", "z"))


def test_index_length_bound_enforced():
    index = equivalence_classes(XYZ, 2)
    with pytest.raises(PresentationError):
        index.equal(("x", "x", "x"), ("y", "y", "x"))


def test_reverse_presentation():
    rev = reverse_presentation(XYZ)
    assert (("z", "x"), ("x", "z")) in rev.relations
    assert rev.delta == ("z", "x", "x")
    assert reverse_presentation(rev) == XYZ


def test_class_members_have_equal_length():
    index = equivalence_classes(XYZ, 4)
    for cls in index.classes():
        assert len({len(w) for w in cls}) == 1


words4 = st.lists(st.sampled_from(XYZ.generators), min_size=0, max_size=4).map(tuple)
INDEX8 = equivalence_classes(XYZ, 8)


@settings(max_examples=60, deadline=None)
@given(words4, words4, words4)
def test_congruence_property(u, v, w):
    if INDEX8.equal(u, v):
        assert INDEX8.equal(u + w, v + w)
        assert INDEX8.equal(w + u, w + v)


def test_congruence_class_is_closed():
    cls = congruence_class(XYZ, ("x", "x", "z"))
    assert cls == {("x", "x", "z"), ("y", "y", "z"), ("x", "z", "x"), ("z", "x", "x"),
                   ("y", "z", "y"), ("z", "y", "y")}


def test_cancellation_witness_found():
    # a.b = a.c without b = c
    p = Presentation(("a", "b", "c"), ((("a", "b"), ("a", "c")),))
    index = equivalence_classes(p, 2)
    assert isinstance(index, CongruenceIndex)
    assert index.cancellation_witness() is not None
    assert equivalence_classes(XYZ, 4).cancellation_witness() is None
