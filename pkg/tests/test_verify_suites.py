"""The CLI-facing invariant suites must all pass with the default seed."""

import pytest

from genmarkov import verify

LIGHT_SUITES = ["contfrac", "farey", "signseq", "snake", "band", "limits"]


@pytest.mark.parametrize("suite", LIGHT_SUITES)
def test_suite_passes(suite):
    results = verify.SUITES[suite]()
    failures = [r for r in results if not r.ok]
    assert not failures, failures


def test_markov_suite_passes():
    results = verify.verify_markov()
    failures = [r for r in results if not r.ok]
    assert not failures, failures


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        verify.run_suites(["bogus"])
