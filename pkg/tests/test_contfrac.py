"""Continued-fraction arithmetic against an independent Fraction-fold oracle."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from genmarkov import contfrac as cf


def fraction_fold(entries):
    """Independent oracle: evaluate right-to-left with exact rationals."""
    val = Fraction(entries[-1])
    for a in reversed(entries[:-1]):
        val = a + 1 / val
    return val


entries_st = st.lists(st.integers(1, 9), min_size=1, max_size=30).map(tuple)


def test_evaluate_examples():
    assert cf.evaluate((3, 3)) == (10, 3)
    assert cf.evaluate(()) == (1, 1)
    # frozen from the fraction fold: [3,4,5,3] = 217/67
    assert fraction_fold((3, 4, 5, 3)) == Fraction(217, 67)
    assert cf.evaluate((3, 4, 5, 3)) == (217, 67)


def test_evaluate_rejects_nonpositive():
    with pytest.raises(ValueError):
        cf.evaluate((3, 0, 2))
    with pytest.raises(ValueError):
        cf.evaluate((-1,))


@given(entries_st)
def test_evaluate_matches_fraction_fold(entries):
    num, den = cf.evaluate(entries)
    assert Fraction(num, den) == fraction_fold(entries)
    assert gcd(num, den) == 1


@given(entries_st)
def test_reversal_preserves_numerator(entries):
    assert cf.continuant(entries) == cf.continuant(cf.reverse_entries(entries))


def test_reverse_examples():
    assert cf.reverse_entries((3, 4)) == (4, 3)
    assert cf.continuant((3, 4)) == cf.continuant((4, 3)) == 13
    assert cf.reverse_entries((5,)) == (5,)
    assert cf.reverse_entries((3, 4, 5, 3)) == (3, 5, 4, 3)
    assert cf.continuant((3, 5, 4, 3)) == 217


@given(entries_st)
def test_forward_backward_recurrence_agree(entries):
    h_prev, h = 0, 1
    for a in reversed(entries):
        h_prev, h = h, a * h + h_prev
    assert cf.continuant(entries) == h


@given(entries_st)
def test_leading_one_fold(entries):
    assert cf.continuant((1,) + entries) == cf.continuant((entries[0] + 1,) + entries[1:])


@given(st.lists(st.integers(1, 9), min_size=2, max_size=12))
def test_hill_swap_difference(a):
    k = len(a)
    hill_x = tuple(a[1:k - 1]) + (a[k - 1] + 1, a[k - 1]) + tuple(reversed(a[1:k - 1])) + (a[0],)
    hill_y = tuple(a[:k - 1]) + (a[k - 1] + 1, a[k - 1]) + tuple(reversed(a[1:k - 1]))
    expected = 1 if k % 2 == 0 else -1
    assert cf.continuant(hill_x) - cf.continuant(hill_y) == expected


def test_hill_swap_concrete_instance():
    # a = (1, 2): K(3,2,1) = 10, K(1,3,2) = 9
    assert cf.continuant((3, 2, 1)) == 10
    assert cf.continuant((1, 3, 2)) == 9


def test_canonicalize_examples():
    assert cf.canonicalize((2, 1)) == (3,)
    assert cf.canonicalize((1, 2, 5, 1, 0, 2)) == (1, 2, 5, 3)
    assert cf.continuant((1, 2, 5, 3)) == 51
    assert cf.canonicalize((1, 2), preserve="numerator") == (3,)
    assert cf.continuant((1, 2)) == cf.continuant((3,)) == 3


def test_canonicalize_preserves_numerator_in_both_modes():
    before = (1, 2, 5, 1, 0, 2)
    value_mode = cf.canonicalize(before)
    assert value_mode == (1, 2, 5, 3)
    assert Fraction(*cf.evaluate(value_mode)) == fraction_fold((1, 2, 5, 3))
    numerator_mode = cf.canonicalize(before, preserve="numerator")
    assert numerator_mode == (3, 5, 3)
    assert cf.continuant(numerator_mode) == cf.continuant(value_mode) == 51


def test_canonicalize_rejects_all_zero_and_boundary_zero():
    with pytest.raises(ValueError):
        cf.canonicalize((0, 0))
    with pytest.raises(ValueError):
        cf.canonicalize((0, 3))
    with pytest.raises(ValueError):
        cf.canonicalize((3, 0))


def test_signs_to_runs_examples():
    assert cf.signs_to_runs("--+++--") == (2, 3, 2)
    assert cf.signs_to_runs("-") == (1,)
    assert cf.runs_to_signs((3, 4), "-") == "---++++"
    with pytest.raises(ValueError):
        cf.signs_to_runs("")


@given(entries_st, st.sampled_from("+-"))
def test_codec_roundtrip(entries, first):
    assert cf.signs_to_runs(cf.runs_to_signs(entries, first)) == entries


def test_parse_and_format():
    assert cf.parse_entries("[3,4,5,3]") == (3, 4, 5, 3)
    assert cf.parse_entries("3,4") == (3, 4)
    assert cf.format_entries((3, 4)) == "[3,4]"
    with pytest.raises(ValueError):
        cf.parse_entries("[]")
