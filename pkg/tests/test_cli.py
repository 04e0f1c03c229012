import json

import pytest

from main import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, build_parser, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_order(capsys):
    code, out, _ = run_cli(capsys, 'order', 'rook:3', '3,2,0', '3,2,1')
    assert code == EXIT_OK
    assert out.strip() == 'true'

    code, out, _ = run_cli(capsys, 'order', 'rook:3', '3,2,1', '3,2,0', '--minus')
    assert code == EXIT_OK
    assert out.strip() == 'false'


def test_order_witness(capsys):
    code, out, _ = run_cli(capsys, 'order', 'rook:3', '3,2,0', '3,2,1', '--witness')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == 'true'
    assert lines[1].startswith('witness: [')


def test_bad_literal_is_a_usage_error(capsys):
    code, _, err = run_cli(capsys, 'order', 'rook:3', '3,3,0', '3,2,1')
    assert code == EXIT_USAGE
    assert err.startswith('error: ')


def test_forms(capsys):
    code, out, _ = run_cli(capsys, 'forms', 'rook:3', '3,2,0')
    assert code == EXIT_OK
    assert 'check:   ok' in out
    assert out.startswith('element: 3,2,0 in rook:3')


def test_forms_over_the_opposite(capsys):
    code, out, _ = run_cli(capsys, 'forms', 'rook:3', '3,2,0', '--opposite')
    assert code == EXIT_OK
    assert 'check:   ok' in out


def test_counterexample(capsys):
    code, out, _ = run_cli(capsys, 'counterexample')
    assert code == EXIT_OK
    assert '4/4 claims hold' in out

    code, out, _ = run_cli(capsys, 'counterexample', 'rook:3:trailing')
    assert code == EXIT_FAILURE
    assert 'FAIL' in out


def test_strict_counterexample(capsys):
    code, _, err = run_cli(capsys, 'counterexample', 'rook:3:trailing', '--strict')
    assert code == EXIT_FAILURE
    assert err.startswith('error: ')


def test_verify(capsys):
    code, out, _ = run_cli(capsys, 'verify', 'rook:2')
    assert code == EXIT_OK
    assert out.splitlines()[-1].startswith('rook:2: ')


def test_verify_json(capsys):
    code, out, _ = run_cli(capsys, 'verify', 'rook:2', '--suite', 'coxeter', '--format', 'json')
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['passed'] is True
    assert {result['suite'] for result in payload['results']} == {'coxeter'}


def test_hasse(capsys):
    code, out, _ = run_cli(capsys, 'hasse', 'rook:2')
    assert code == EXIT_OK
    assert out.startswith('digraph')

    code, out, _ = run_cli(capsys, 'hasse', 'rook:2', '--format', 'json', '--submonoid', 'O')
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['name'] == 'rook:2 O+ <=+'


def test_extrema(capsys):
    code, out, _ = run_cli(capsys, 'extrema', 'rook:3', '1,2,0', '--relation', 'J')
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == 'J-class of 1,2,0 (+): 18 elements'
    assert lines[1].strip() == 'min: 0,1,2'
    assert lines[2].strip() == 'max: 3,2,0'


def test_group(capsys):
    code, out, _ = run_cli(capsys, 'group', 'B2')
    assert code == EXIT_OK
    assert 'order:   8' in out

    code, _, err = run_cli(capsys, 'group', 'D4')
    assert code == EXIT_USAGE
    assert 'D4' in err


def test_rook_json(capsys):
    code, out, _ = run_cli(capsys, 'rook', '3', '--format', 'json')
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['elements'] == payload['formula'] == 34
    assert payload['by_rank'] == {'0': 1, '1': 9, '2': 18, '3': 6}


def test_classes(capsys):
    code, out, _ = run_cli(capsys, 'classes', 'rook:3', '--relation', 'H')
    assert code == EXIT_OK
    assert out.startswith('20 H-classes')


@pytest.mark.parametrize('argv', [
    [],
    ['order', 'rook:3', '3,2,0'],
    ['order', 'rook:3', '3,2,0', '3,2,1', '--plus', '--minus'],
    ['classes', 'rook:3', '--relation', 'D'],
])
def test_argument_errors(argv, capsys):
    with pytest.raises(SystemExit) as excinfo:
        build_parser().parse_args(argv)
    assert excinfo.value.code == 2
