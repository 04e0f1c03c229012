import json

import pytest

from verification import SUITES, PropertyViolation, VerificationReport, Verifier


def names(report: VerificationReport):
    return [result.name for result in report.results]


def test_rook2_passes(rook2):
    report = Verifier(rook2).run()
    assert report.passed, report.summary()
    assert {result.suite for result in report.results} == set(SUITES)
    report.raise_for_failure()


def test_rook3_passes(rook3):
    report = Verifier(rook3).run()
    assert report.passed, report.summary()
    assert '3x3 rook counterexample' in names(report)
    assert report.summary().splitlines()[-1].startswith('rook:3: ')


def test_generic_system_passes(a1xa1_system):
    report = Verifier(a1xa1_system).run()
    assert report.passed, report.summary()


def test_trailing_orientation_skips_the_counterexample(rook3_trailing):
    assert '3x3 rook counterexample' not in [name for name, _ in Verifier(rook3_trailing).properties('greens')]


def test_opposite_skips_the_counterexample(rook3):
    verifier = Verifier(rook3.opposite())
    assert '3x3 rook counterexample' not in [name for name, _ in verifier.properties('greens')]


@pytest.mark.slow
def test_rook4_passes(rook4):
    report = Verifier(rook4, workers=4).run()
    assert report.passed, report.summary()


def test_single_suite(rook3):
    report = Verifier(rook3).run(['coxeter'])
    assert {result.suite for result in report.results} == {'coxeter'}
    assert all(result.checked > 0 for result in report.results)


def test_workers_keep_declaration_order(rook2):
    serial = Verifier(rook2, workers=1).run(['renner', 'adherence'])
    threaded = Verifier(rook2, workers=4).run(['renner', 'adherence'])
    assert names(serial) == names(threaded)
    assert [r.checked for r in serial.results] == [r.checked for r in threaded.results]


def test_reference_groups(rook2, rook4):
    assert [group.name for group in Verifier(rook2).groups] == ['S2', 'A3', 'B2']
    assert len(Verifier(rook2, reference_groups=()).groups) == 1
    assert [group.name for group in Verifier(rook4).groups] == ['S4', 'B2']


def test_group_suites_name_every_property(rook2):
    verifier = Verifier(rook2)
    coxeter = [name for name, _ in verifier.properties('coxeter')]
    parabolic = [name for name, _ in verifier.properties('parabolic')]
    assert 'bruhat order is a partial order' in coxeter
    assert 'lifting property' in coxeter
    assert 'double coset minima are monotone' in parabolic
    assert 'commuting parabolics factor their span' in parabolic
    assert 'extrema follow class inclusion' in [name for name, _ in verifier.properties('greens')]


class BrokenVerifier(Verifier):
    def _coxeter_properties(self):
        def explode():
            raise ValueError('no such element')
        return [('always fails', explode)] + super()._coxeter_properties()


def test_failures_are_reported(rook2):
    report = BrokenVerifier(rook2).run(['coxeter'])
    assert not report.passed
    failure = report.first_failure
    assert failure.name == 'always fails'
    assert failure.detail == 'ValueError: no such element'
    assert 'FAIL' in report.summary()
    assert json.loads(report.to_json())['passed'] is False
    with pytest.raises(PropertyViolation) as excinfo:
        report.raise_for_failure()
    assert excinfo.value.name == 'coxeter: always fails'


def test_bad_arguments(rook2):
    with pytest.raises(ValueError):
        Verifier(rook2).properties('lattice')
    with pytest.raises(ValueError):
        Verifier(rook2, workers=-1)
    assert Verifier(rook2, workers=0).workers == 1
