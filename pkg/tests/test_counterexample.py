import json

import pytest

from adherence import MINUS
from greens import CounterexampleError, verify_counterexample
from renner import RennerError


def test_calibrated_rook3_reproduces_every_claim(rook3):
    report = verify_counterexample(rook3)
    assert report.passed
    assert report.first_failure is None
    assert len(report.claims) == 4
    assert '4/4 claims hold' in report.summary().splitlines()[0]
    assert [claim.actual for claim in report.claims] == [True, '2,3,0', '1,2,3', True]


def test_default_system_is_calibrated():
    report = verify_counterexample()
    assert report.system == 'rook:3'
    assert report.passed


def test_report_serializes():
    payload = json.loads(verify_counterexample().to_json())
    assert payload['system'] == 'rook:3'
    assert payload['epsilon'] == '+'
    assert all(claim['pass'] for claim in payload['claims'])


def test_trailing_orientation_fails(rook3_trailing):
    report = verify_counterexample(rook3_trailing)
    assert not report.passed
    assert report.first_failure is not None
    assert 'FAIL' in report.summary()
    with pytest.raises(CounterexampleError):
        verify_counterexample(rook3_trailing, strict=True)


def test_strict_is_silent_when_claims_hold(rook3):
    assert verify_counterexample(rook3, strict=True).passed


def test_minus_order_is_reported(rook3):
    report = verify_counterexample(rook3, MINUS)
    assert report.epsilon == MINUS
    assert len(report.claims) == 4
    assert report.claims[0].name == 'r <=- s'


def test_only_the_3x3_rook_monoid(rook2, a1xa1_system):
    with pytest.raises(RennerError):
        verify_counterexample(rook2)
    with pytest.raises(RennerError):
        verify_counterexample(a1xa1_system)


def test_bad_epsilon(rook3):
    with pytest.raises(ValueError):
        verify_counterexample(rook3, epsilon='x')
