"""Lattice crossing profiles, sign words, and the rewrite words."""

from math import gcd

import pytest

from genmarkov import contfrac as cf
from genmarkov import signseq


def test_crossing_profile_examples():
    prof = signseq.crossing_profile(1, 1)
    assert len(prof.crossings) == 1
    assert prof.crossings[0].kind == signseq.DIAGONAL
    assert prof.crossings[0].side == "tie"

    prof = signseq.crossing_profile(1, 2)
    assert [c.kind for c in prof.crossings] == [
        signseq.DIAGONAL,
        signseq.VERTICAL,
        signseq.DIAGONAL,
    ]
    assert len(prof.crossings) == 2 * (1 + 2) - 3

    prof = signseq.crossing_profile(2, 3)
    assert len(prof.crossings) == 7
    assert sum(1 for c in prof.crossings if c.side == "tie") == 1
    assert len(prof.shared) == 6

    with pytest.raises(ValueError):
        signseq.crossing_profile(2, 4)


def test_profile_json_uses_exact_rationals():
    payload = signseq.crossing_profile(1, 2).to_json_dict()
    assert payload["crossings"][0]["point"] == ["2/3", "1/3"]


def test_sign_sequence_examples():
    assert signseq.sign_sequence(1, 2).signs == "---++++"
    assert signseq.sign_sequence(1, 2).runs() == (3, 4)
    assert signseq.sign_sequence(2, 3).runs() == (3, 4, 5, 3)
    s11 = signseq.sign_sequence(1, 1, signseq.MIDPOINT_PLUS)
    assert s11.signs == "-++"
    assert s11.runs() == (1, 2)
    assert cf.continuant(s11.runs()) == 3


def test_sign_sequence_length_and_conventions():
    for p, q in [(1, 2), (2, 3), (3, 5), (2, 7), (5, 8)]:
        seq = signseq.sign_sequence(p, q)
        c = 2 * (p + q) - 3
        assert len(seq.signs) == 2 * c + 1 == 4 * (p + q) - 5
        assert seq.signs[0] == "-"
        assert seq.signs[-1] == "+"
        assert seq.signs[2] == "-"
        assert seq.midpoint_index == c


def test_midpoint_choices_swap_center_pair():
    plus = signseq.sign_sequence(2, 3, signseq.MIDPOINT_PLUS).runs()
    minus = signseq.sign_sequence(2, 3, signseq.MIDPOINT_MINUS).runs()
    assert plus == (3, 5, 4, 3)
    assert minus == (3, 4, 5, 3)
    assert cf.continuant(plus) == cf.continuant(minus) == 217


def test_closed_form_matches_geometry_examples():
    for p, q in [(1, 2), (2, 3)]:
        assert (
            signseq.sign_sequence_closed_form(p, q).signs
            == signseq.sign_sequence(p, q).signs
        )
    assert signseq.sign_sequence_closed_form(1, 5).runs() == (4, 1, 3, 1, 2, 3, 1, 4)


def test_closed_form_matches_geometry_sweep():
    for q in range(2, 35):
        for p in range(1, q):
            if gcd(p, q) != 1:
                continue
            for midpoint in (signseq.MIDPOINT_AUTO, signseq.MIDPOINT_PLUS):
                geo = signseq.sign_sequence(p, q, midpoint)
                closed = signseq.sign_sequence_closed_form(p, q, midpoint)
                assert geo.signs == closed.signs, (p, q, midpoint)


def test_closed_form_requires_p_less_than_q():
    with pytest.raises(ValueError):
        signseq.sign_sequence_closed_form(3, 2)


def test_even_subsequence_examples():
    e12 = signseq.even_subsequence(signseq.sign_sequence(1, 2))
    assert e12.runs() == (2, 2)
    assert cf.continuant(e12.runs()) == 5
    e23 = signseq.even_subsequence(signseq.sign_sequence(2, 3))
    assert e23.runs() == (2, 2, 2, 2)
    assert cf.continuant(e23.runs()) == 29
    e11 = signseq.even_subsequence(signseq.sign_sequence(1, 1))
    assert e11.runs() == (1, 1)
    assert cf.continuant(e11.runs()) == 2


def test_antisymmetry_within_and_across_orientations():
    for p, q in [(1, 2), (2, 3), (3, 5), (4, 7), (5, 9)]:
        seq = signseq.sign_sequence(p, q)
        assert signseq.antisymmetric_within(seq)
        flipped = signseq.sign_sequence(q, p)
        assert flipped.signs[0] == "+"
        assert signseq.opposite_orientations(seq, flipped)


def test_deformed_runs_examples():
    left = signseq.deformed_runs(1, 2, 2, signseq.LEFT)
    assert left == (3, 4, 5, 1, 2, 4)
    assert cf.continuant(left) == 1001

    left = signseq.deformed_runs(1, 1, 2, signseq.LEFT)
    assert left == (1, 2, 5, 3)
    assert cf.continuant(left) == 51

    left = signseq.deformed_runs(2, 3, 2, signseq.LEFT)
    assert left == (3, 5, 4, 3, 5, 1, 2, 5, 4, 3)
    assert cf.continuant(left) == 282317
    # equals (6*217 - 1) * 217; the printed table shows 282,534 instead
    assert cf.continuant(left) == (6 * 217 - 1) * 217

    right = signseq.deformed_runs(2, 3, 2, signseq.RIGHT)
    assert right == tuple(reversed(left))
    assert cf.continuant(right) == 282317

    with pytest.raises(ValueError):
        signseq.deformed_runs(1, 2, 1)


def test_deformed_left_right_numerators_equal():
    for q in range(1, 11):
        for p in range(1, q + 1):
            if gcd(p, q) != 1 or p + q > 12:
                continue
            for k in (2, 3, 4):
                left = signseq.deformed_runs(p, q, k, signseq.LEFT)
                right = signseq.deformed_runs(p, q, k, signseq.RIGHT)
                assert cf.continuant(left) == cf.continuant(right)


def test_band_runs_examples():
    assert signseq.band_runs(1, 1, signseq.LEFT) == ((3, 6), signseq.NONDOMINANT)
    assert signseq.band_runs(1, 1, signseq.RIGHT) == ((3, 6), signseq.NONDOMINANT)
    assert signseq.band_runs(1, 2, signseq.LEFT) == ((3, 4, 6), signseq.DOMINANT)
    assert signseq.band_runs(2, 3, signseq.RIGHT) == (
        (3, 4, 5, 2, 1, 6),
        signseq.NONDOMINANT,
    )
