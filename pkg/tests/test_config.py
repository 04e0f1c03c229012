import logging

import pytest

import config


def test_explicit_budget_wins(monkeypatch):
    monkeypatch.setenv(config.BUDGET_ENV_VAR, '42')
    assert config.element_budget(7) == 7


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv(config.BUDGET_ENV_VAR, '42')
    assert config.element_budget() == 42


def test_default_budget(monkeypatch):
    monkeypatch.delenv(config.BUDGET_ENV_VAR, raising=False)
    assert config.element_budget() == config.DEFAULT_ELEMENT_BUDGET == 1_000_000


@pytest.mark.parametrize('raw', ['lots', '-3', '0'])
def test_bad_environment_value_is_ignored(monkeypatch, caplog, raw):
    monkeypatch.setenv(config.BUDGET_ENV_VAR, raw)
    with caplog.at_level(logging.WARNING, logger='config'):
        assert config.element_budget() == config.DEFAULT_ELEMENT_BUDGET
    assert config.BUDGET_ENV_VAR in caplog.text


@pytest.mark.parametrize('bad', [0, -1])
def test_non_positive_explicit_budget_is_rejected(bad):
    with pytest.raises(ValueError):
        config.element_budget(bad)


def test_rook_calibration():
    assert config.ROOK_IDEMPOTENT_ORIENTATION == 'leading'
    assert config.ROOK_IDEMPOTENT_ORIENTATION in config.ROOK_ORIENTATIONS
    assert config.DEFAULT_WORKERS == 1
    assert config.REFERENCE_GROUPS == ('A3', 'B2')
