import pytest

from posetdim.crown import cover_endpoints, crown_labels, crown_poset, crown_realizer, crown_words
from posetdim.errors import InvalidSize, OutOfRange
from posetdim.poset import is_linear_extension, realizes


def test_crown_three_words():
    assert crown_realizer(3) == (
        ("x1", "x2", "z1", "x3", "z2", "z3"),
        ("x2", "x3", "z2", "x1", "z3", "z1"),
        ("x1", "x3", "z3", "x2", "z2", "z1"),
    )


def test_square_repeats_first_word():
    assert crown_realizer(1) == (tuple("xabz"), tuple("xbaz"), tuple("xabz"))


def test_crown_two_words():
    assert crown_realizer(2) == (
        ("x1", "x2", "z1", "z2"),
        ("x2", "x1", "z2", "z1"),
        ("x1", "x2", "z2", "z1"),
    )


@pytest.mark.parametrize("n", range(1, 13))
def test_crown_realizer_verifies(n):
    p = crown_poset(n)
    r = crown_realizer(n)
    assert all(is_linear_extension(p, w) for w in r)
    assert realizes(p, r)


@pytest.mark.parametrize("n", range(2, 8))
def test_crown_covers(n):
    p = crown_poset(n)
    assert len(p.covers) == 2 * n
    for i in range(1, n + 1):
        assert p.upper_covers(f"x{i}") == sorted(p.upper_covers(f"x{i}"))
        below = set(p.lower_covers(f"z{i}"))
        assert below == {f"x{i}", f"x{i % n + 1}"}


def test_cover_endpoints():
    assert cover_endpoints(3, 1) == (1, 1)
    assert cover_endpoints(3, 2) == (2, 1)
    assert cover_endpoints(3, 6) == (1, 3)
    with pytest.raises(OutOfRange):
        cover_endpoints(3, 7)
    with pytest.raises(OutOfRange):
        cover_endpoints(1, 1)


def test_invalid_sizes():
    with pytest.raises(InvalidSize):
        crown_poset(0)
    with pytest.raises(InvalidSize):
        crown_realizer(-1)


def test_crown_words_over_other_labels():
    xs, zs = ["p", "q", "r"], ["P", "Q", "R"]
    assert crown_words(xs, zs)[0] == ("p", "q", "P", "r", "Q", "R")
    assert crown_labels(1) == (["x"], ["z"])
