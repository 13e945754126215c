import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import seeds
from posetdim.crown import crown_poset, crown_realizer
from posetdim.errors import ParseError
from posetdim.fileio import (
    format_poset,
    format_realizer,
    format_realizer_json,
    parse_poset,
    parse_realizer,
    to_dot,
)
from posetdim.oracle import RandomModel, sample
from posetdim.poset import build_poset


def test_parse_basic():
    p = parse_poset("# square\nelements x a\nelements b z\nrel x a\nrel x b\nrel a z\nrel b z\n")
    assert p.labels == ("x", "a", "b", "z")
    assert p.lt("x", "z")


def test_parse_accepts_crlf_and_blank_lines():
    p = parse_poset(b"elements a b\r\n\r\n   \nrel a b\r\n")
    assert p.lt("a", "b")


@pytest.mark.parametrize(
    "text, line",
    [
        ("elements a b\nfoo a\n", 2),
        ("elements a b\nrel a\n", 2),
        ("elements a b\nrel a b c\n", 2),
        ("elements a\n# fine\nrel a q\n", 3),
        ("elements a b\nelements a\n", 2),
        ("elements a\nrel a a\n", 2),
        ("elements a b c\nrel a b\nrel b c\nrel c a\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_poset(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_parse_rejects_bad_utf8_with_line():
    with pytest.raises(ParseError) as info:
        parse_poset(b"elements a\nelements \xff\n")
    assert info.value.line == 2


@settings(max_examples=200, deadline=None)
@given(st.binary(max_size=200))
def test_parsing_is_total(data):
    try:
        parse_poset(data)
    except ParseError:
        pass


@settings(max_examples=40, deadline=None)
@given(seeds, st.sampled_from(["gnp", "tree", "unicycle"]))
def test_format_round_trip(seed, kind):
    p = sample(RandomModel(kind, 30, 1.5, seed=seed))
    text = format_poset(p)
    assert parse_poset(text) == p
    assert parse_poset(text).labels == p.labels
    assert text.endswith("\n") and "\r" not in text and "  " not in text


def test_format_uses_covers_only():
    p = build_poset("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert format_poset(p) == "elements a b c\nrel a b\nrel b c\n"


def test_realizer_text_round_trip():
    words = crown_realizer(3)
    assert parse_realizer(format_realizer(words)) == words


def test_realizer_json():
    p = crown_poset(1)
    text = format_realizer_json(p, crown_realizer(1), True)
    doc = json.loads(text)
    assert list(doc) == ["elements", "words", "verified"]
    assert doc["verified"] is True
    assert parse_realizer(text) == crown_realizer(1)


@pytest.mark.parametrize(
    "text",
    ["", "a b\na c\n", "a a\n", '{"words": "x"}', '{"words": [["a"], ["b"]]}', "{not json"],
)
def test_realizer_parse_errors(text):
    with pytest.raises(ParseError):
        parse_realizer(text)


def test_dot_square():
    dot = to_dot(crown_poset(1))
    assert dot.count("->") == 4
    assert "rankdir=BT" in dot
    assert '{ rank=same; "a"; "b"; }' in dot


def test_dot_chain_has_no_transitive_edge():
    dot = to_dot(build_poset("abc", [("a", "b"), ("b", "c"), ("a", "c")]))
    assert dot.count("->") == 2
    assert '"a" -> "c"' not in dot


def test_dot_quotes_labels():
    dot = to_dot(build_poset(['say "hi"'], []))
    assert '"say \\"hi\\""' in dot
