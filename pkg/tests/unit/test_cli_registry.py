import pytest

import src.cli.suites  # registers checks
from src.cli import registry
from src.cli.registry import SUITES, all_checks, checks_for_suite, register_check, run_check, run_checks
from src.exact.errors import NotQComputable
from src.models.checks import CheckResult, CheckSpec
from src.models.config import RunConfig


def _spec(check_id="hopf.zz_stub", run=None, **kwargs):
    return CheckSpec(
        check_id=check_id,
        suite=check_id.split(".")[0],
        run=run or (lambda config: CheckResult.from_bool(check_id, True)),
        **kwargs,
    )


def test_every_suite_has_checks():
    checks = all_checks()
    for suite in SUITES:
        assert any(spec.suite == suite for spec in checks.values()), suite
    for check_id, spec in checks.items():
        assert check_id.startswith(spec.suite + ".")
        assert spec.anchor


def test_checks_for_suite_sorted():
    ids = [s.check_id for s in checks_for_suite("all")]
    assert ids == sorted(ids)
    assert len(ids) == len(all_checks())
    with pytest.raises(ValueError):
        checks_for_suite("bogus")


def test_register_rejects_duplicates_and_unknown_suites(monkeypatch):
    monkeypatch.setattr(registry, "_REGISTRY", dict(registry._REGISTRY))
    register_check(_spec())
    with pytest.raises(ValueError):
        register_check(_spec())
    with pytest.raises(ValueError):
        register_check(_spec("nosuch.check"))


def test_slow_checks_skip_unless_requested():
    calls = []
    spec = _spec(run=lambda config: calls.append(1) or CheckResult.from_bool("hopf.zz_stub", True), slow=True)
    assert run_check(spec, RunConfig()).status == "skipped"
    assert not calls
    assert run_check(spec, RunConfig(include_slow=True)).status == "pass"
    assert calls == [1]


def test_library_errors_become_failures():
    def boom(config):
        raise NotQComputable("no q-expansion")

    result = run_check(_spec(run=boom, anchor="stub anchor"), RunConfig())
    assert result.status == "fail"
    assert "NotQComputable" in result.detail
    assert result.anchor == "stub anchor"


def test_anchor_filled_from_spec():
    result = run_check(_spec(anchor="b(delta_1) = 0"), RunConfig())
    assert result.anchor == "b(delta_1) = 0"


def test_run_checks_report_sorted():
    specs = [_spec("hopf.zz_b"), _spec("hopf.zz_a")]
    report = run_checks("adhoc", specs, RunConfig(), progress=False)
    assert report.suite == "adhoc"
    assert [c.check_id for c in report.checks] == ["hopf.zz_a", "hopf.zz_b"]
    assert report.exit_code == 0


@pytest.mark.parametrize("check_id", ["hecke.leibniz", "hecke.delta_commutators"])
def test_fragment_checks_run_their_own_pair_count(check_id):
    result = run_check(all_checks()[check_id], RunConfig(fragment_pairs=3, samples=0, order=20))
    assert result.status == "pass"
    assert result.detail == "3 pairs"
    assert result.verified_order == "20"
