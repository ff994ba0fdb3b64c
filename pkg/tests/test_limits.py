"""Periodic limits, family convergence, Laurent-value truncations."""

import math

import pytest

from genmarkov import limits as lm


SQRT21 = math.sqrt(21)
SQRT285 = math.sqrt(285)


def test_periodic_limit_examples():
    pl = lm.periodic_limit(1, 3, 1)
    assert pl.converged
    assert abs(float(pl.selected) - (3 + SQRT21) / 6) < 1e-12
    lo, hi = pl.roots
    assert float(lo) < float(hi)

    pl = lm.periodic_limit(5, 3, 1)
    assert abs(float(pl.selected) - (15 + SQRT285) / 6) < 1e-12

    pl = lm.periodic_limit(1, 1, 1)
    assert abs(float(pl.selected) - (1 + math.sqrt(5)) / 2) < 1e-12

    with pytest.raises(ValueError):
        lm.periodic_limit(0, 3, 1)


def test_periodic_limit_root_is_exact():
    pl = lm.periodic_limit(1, 3, 1)
    root = pl.selected
    # r*z2*L^2 + (1 - r(1+z1*z2))L - z1 with (1,3,1): 3L^2 - 3L - 1 = 0
    val = float(root)
    assert abs(3 * val * val - 3 * val - 1) < 1e-12
    assert root.d == 21


def test_periodic_limit_nonconvergent_is_reported():
    pl = lm.periodic_limit(-1, 1, 1)
    assert not pl.converged
    assert pl.selected is None


def test_family_limit_examples():
    rep = lm.family_limit("one_over_q", 60)
    assert abs(float(rep.surd) - (5 + SQRT21) / 2) < 1e-12
    err40 = next(err for q, _, err in rep.rows if q == 40)
    assert err40 < 1e-9

    rep = lm.family_limit("q_minus_1_over_q", 60)
    assert abs(float(rep.surd) - (17 + SQRT285) / 2) < 1e-12
    err40 = next(err for q, _, err in rep.rows if q == 40)
    assert err40 < 1e-9
    assert rep.identity_ok is True

    assert abs(float(lm.ORDINARY_SURDS["one_over_q"]) - (3 + math.sqrt(5)) / 2) < 1e-12

    with pytest.raises(ValueError):
        lm.family_limit("half_above")


def test_family_errors_decay_geometrically():
    for family in ("one_over_q", "q_minus_1_over_q"):
        rep = lm.family_limit(family, 40)
        errs = [err for _, _, err in rep.rows]
        for prev, cur in zip(errs, errs[1:]):
            if prev > 1e-12 and cur > 1e-12:
                assert cur / prev < 0.9


def test_family_csv_and_summary():
    rep = lm.family_limit("one_over_q", 20)
    csv_text = rep.to_csv()
    assert csv_text.splitlines()[0] == "q,ratio,error"
    assert len(csv_text.splitlines()) == len(rep.rows) + 1
    assert "limit" in rep.summary()


def test_chi_limit_examples():
    pt = lm.LaurentPoint(1, 1, 1)
    assert abs(lm.chi_limit(pt, lm.RATIO_HAT) - (3 + SQRT21) / 6) < 1e-12
    assert abs(lm.chi_limit(pt, lm.RATIO_SHIFT) - (5 + SQRT21) / 2) < 1e-12
    pt = lm.LaurentPoint(2, 1, 1)
    assert lm.chi_limit(pt, lm.RATIO_HAT) > 0
    assert lm.chi_limit(pt, lm.RATIO_SHIFT) > 0
    with pytest.raises(ValueError):
        lm.LaurentPoint(0, 1, 1)


def test_cross_family_consistency():
    rep = lm.family_limit("one_over_q", 10)
    shift = lm.chi_limit(lm.LaurentPoint(1, 1, 1), lm.RATIO_SHIFT)
    assert abs(float(rep.surd) - shift) < 1e-12


def test_L_truncation_examples():
    pt = lm.LaurentPoint(1, 1, 1)
    assert abs(lm.L_truncation(pt, 40, lm.UNPRIMED) - (3 + SQRT21) / 6) < 1e-9
    assert abs(lm.L_truncation(pt, 40, lm.PRIMED) - (5 + SQRT21) / 2) < 1e-9
    pt = lm.LaurentPoint(1, 2, 3)
    assert abs(lm.L_truncation(pt, 60, lm.PRIMED) - lm.chi_limit(pt, lm.RATIO_SHIFT)) < 1e-8
    with pytest.raises(ValueError):
        lm.L_truncation(pt, 1, lm.UNPRIMED)


def test_truncations_bracket_limit():
    pt = lm.LaurentPoint(1.5, 0.8, 2.2)
    target = lm.chi_limit(pt, lm.RATIO_HAT)
    truncs = [lm.L_truncation(pt, n, lm.UNPRIMED) for n in range(2, 20)]
    signs = [t - target for t in truncs]
    for a, b in zip(signs, signs[1:]):
        if abs(a) > 1e-12 and abs(b) > 1e-12:
            assert a * b < 0  # alternating sides
    errors = [abs(s) for s in signs]
    assert errors[-1] < errors[0]


def test_laurent_values_at_unit_point():
    pt = lm.LaurentPoint(1, 1, 1)
    assert lm.laurent_values(pt, 6, lm.UNPRIMED) == [1, 3, 1, 3, 1, 3]
    assert lm.laurent_values(pt, 6, lm.PRIMED) == [4, 1, 3, 1, 3, 1]
