from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.exact import Cyclotomic, Mat
from src.hecke import FormValue, HeckeElem, hecke_T
from src.models.checks import CheckResult, Report
from src.models.config import RunConfig
from src.models.values import CyclotomicModel, FormValueModel, HeckeElemModel, QSeriesModel
from src.qseries import e4


def test_cyclotomic_model_keeps_exact_coefficients():
    model = CyclotomicModel.from_value(Cyclotomic.zeta(6) + Cyclotomic.rational(Fraction(1, 3)))
    assert model.order == 6
    assert all("." not in c for c in model.coeffs)
    assert model.to_value() == Cyclotomic.zeta(6) + Cyclotomic.rational(Fraction(1, 3))


def test_rational_fields_reject_floats():
    with pytest.raises(ValidationError):
        CyclotomicModel(order=1, coeffs=[0.5])
    assert CyclotomicModel(order=1, coeffs=[Fraction(2, 4)]).coeffs == ["1/2"]


def test_qseries_model_payload():
    payload = QSeriesModel.from_value(e4(4)).model_dump(mode="json")
    assert payload["exp_den"] == 1
    assert payload["trunc"] == "4"
    assert payload["terms"][2] == [2, {"order": 1, "coeffs": ["2160"]}]


def test_hecke_model_rejects_non_integer_matrices():
    with pytest.raises(ValidationError):
        HeckeElemModel.model_validate({"support": [{"hnf": [[1, 0.5], [0, 1]], "value": {"terms": []}}]})
    with pytest.raises(ValidationError):
        HeckeElemModel.model_validate({"support": [{"hnf": [[1, 0, 0], [0, 1]], "value": {"terms": []}}]})


def test_hecke_model_reads_back_t2():
    text = HeckeElemModel.from_value(hecke_T(2)).model_dump_json()
    assert HeckeElemModel.model_validate_json(text).to_value() == hecke_T(2)


def test_form_value_model_with_mu_and_slashed_forms():
    value = FormValue.mu(Mat(3, 1, 0, 1)).scale(Fraction(-2, 5)) + FormValue.form("E6", Mat(2, 0, 0, 1))
    back = FormValueModel.model_validate_json(FormValueModel.from_value(value).model_dump_json()).to_value()
    assert back == value
    assert HeckeElem.from_form(back) == HeckeElem.from_form(value)


def test_run_config_defaults_and_bounds():
    config = RunConfig()
    assert config.order >= 5
    assert config.point == 2j
    assert config.fragment_pairs == 50
    assert config.samples == 10
    with pytest.raises(ValidationError):
        RunConfig(order=4)
    with pytest.raises(ValidationError):
        RunConfig(z0="1-1i")
    with pytest.raises(ValidationError):
        RunConfig(max_entry=0)
    with pytest.raises(ValidationError):
        RunConfig(fragment_pairs=-1)
    assert RunConfig(z0="0.5+1.5i").point == complex(0.5, 1.5)


def test_report_exit_code_ignores_skipped():
    report = Report(
        suite="x",
        checks=[
            CheckResult.from_bool("x.b", True),
            CheckResult(check_id="x.a", status="skipped"),
        ],
    ).sorted()
    assert [c.check_id for c in report.checks] == ["x.a", "x.b"]
    assert report.exit_code == 0
    assert report.counts() == {"pass": 1, "fail": 0, "skipped": 1}
    assert CheckResult.numeric("x.c", 1e-3, 1e-6).status == "fail"
