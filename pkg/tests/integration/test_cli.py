import json
from fractions import Fraction

import pytest

from src.cli import registry
from src.cli.main import _config, build_parser, main
from src.exact import Mat
from src.hecke import FormValue, HeckeElem
from src.models.checks import CheckResult, CheckSpec
from src.models.values import FormValueModel, HeckeElemModel

pytestmark = pytest.mark.integration

E4, E6 = FormValue.form("E4"), FormValue.form("E6")


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_compute_rho(capsys):
    code, out = _run(capsys, "compute", "rho", "--g1", "1,0,0,2", "--g2", "1,1,0,1")
    assert code == 0
    assert json.loads(out) == "-1/12"


def test_compute_rho_text(capsys):
    code, out = _run(capsys, "compute", "rho", "--g1", "1,0,0,2", "--g2", "1,1,0,1", "--text")
    assert code == 0
    assert out.strip() == "-1/12"


def test_euler_rho_alias(capsys):
    code, out = _run(capsys, "euler", "rho", "--g1", "1,0,0,2", "--g2", "1,1,0,1")
    assert code == 0
    assert json.loads(out) == "-1/12"


def test_compute_dedekind(capsys):
    code, out = _run(capsys, "compute", "dedekind", "--x", "0,0", "--frac", "1/3")
    assert code == 0
    assert json.loads(out) == "1/18"


def test_compute_qexp_text(capsys):
    code, out = _run(capsys, "compute", "qexp", "--series", "e4", "--order", "5", "--text")
    assert code == 0
    assert out.strip() == "1 + 240q + 2160q^2 + 6720q^3 + 17520q^4 + O(q^5)"


def test_compute_qexp_json(capsys):
    code, out = _run(capsys, "compute", "qexp", "--series", "e4", "--order", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["exp_den"] == 1
    assert payload["trunc"] == "5"
    assert payload["weight"] == "4"
    assert payload["terms"][1] == [1, {"order": 1, "coeffs": ["240"]}]


def test_compute_mu_constant_term(capsys):
    code, out = _run(capsys, "compute", "mu", "--g", "2,0,0,1", "--order", "6")
    assert code == 0
    assert json.loads(out)["terms"][0] == [0, {"order": 1, "coeffs": ["1/6"]}]


def test_compute_hecke_operator(capsys):
    code, out = _run(capsys, "compute", "T", "--n", "2")
    assert code == 0
    assert len(HeckeElemModel.model_validate_json(out).to_value()) == 3


def test_compute_perturbation_values(capsys):
    code, out = _run(capsys, "compute", "perturb-u", "--lam", "2/3", "--m", "2,0,0,1", "--h", "Y")
    assert code == 0
    assert FormValueModel.model_validate_json(out).to_value() == FormValue.constant(Fraction(2, 3))
    code, out = _run(capsys, "compute", "perturb-u", "--m", "2,0,0,1", "--h", "d1")
    assert code == 0
    assert FormValueModel.model_validate_json(out).to_value() == FormValue.mu(Mat(2, 0, 0, 1))


def test_hecke_mul(capsys):
    code, out = _run(capsys, "hecke", "mul", "--a", "E4", "--b", "E6")
    assert code == 0
    assert HeckeElemModel.model_validate_json(out).to_value() == HeckeElem.from_form(E4 * E6)


def test_hecke_act_accepts_json_elements(capsys):
    t2 = HeckeElemModel.from_value(HeckeElem.single(Mat(2, 0, 0, 1), 1)).model_dump_json()
    code, out = _run(capsys, "hecke", "act", "--a", t2, "--form", "E4")
    assert code == 0
    assert FormValueModel.model_validate_json(out).to_value() == E4.slash(Mat(2, 0, 0, 1))


def test_hecke_hopf_act(capsys):
    code, out = _run(capsys, "hecke", "hopf-act", "--op", "Y", "--a", "E4")
    assert code == 0
    assert HeckeElemModel.model_validate_json(out).to_value() == HeckeElem.from_form(E4.scale(2))


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "rho", "--g1", "1,0,0", "--g2", "1,1,0,1"],
        ["compute", "rho", "--g1", "0,1,1,0", "--g2", "1,1,0,1"],
        ["compute", "dedekind", "--x", "0,0", "--frac", "1/x"],
        ["compute", "qexp", "--series", "nope"],
        ["compute", "rc1", "--a", "E5"],
        ["verify", "nope"],
        ["verify", "hopf", "--order", "3"],
        ["verify", "analytic", "--z0", "1-2i"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    assert main(argv) == 2


def test_verify_hopf(capsys):
    code, out = _run(capsys, "verify", "hopf", "--no-progress", "--samples", "4")
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "hopf"
    ids = [c["check_id"] for c in report["checks"]]
    assert ids == sorted(ids)
    assert "hopf.transverse_fundamental" in ids
    assert all(c["status"] == "pass" for c in report["checks"])


def test_verify_euler(capsys):
    code, out = _run(capsys, "verify", "euler", "--triples", "5", "--pairs", "3", "--max-entry", "4", "--no-progress")
    assert code == 0
    checks = {c["check_id"]: c for c in json.loads(out)["checks"]}
    assert checks["euler.cocycle"]["detail"] == "5/5 triples pass"


def test_verify_euler_module_identities(capsys):
    code, out = _run(capsys, "verify", "euler", "--triples", "8", "--pairs", "4", "--samples", "4", "--no-progress")
    assert code == 0
    checks = {c["check_id"]: c for c in json.loads(out)["checks"]}
    assert checks["euler.action_compatibility"]["detail"] == "8/8 samples pass"
    assert checks["euler.mu_cocycle"]["detail"] == "4/4 samples pass"
    for check_id in ("euler.scalar_trivial", "euler.refine_slash_commute"):
        assert checks[check_id]["status"] == "pass"


def test_euler_check_text(capsys):
    code, out = _run(capsys, "euler", "check", "--triples", "4", "--max-entry", "3", "--text", "--no-progress")
    assert code == 0
    assert "4/4 triples pass" in out
    assert out.strip().endswith("1 passed, 0 failed, 0 skipped")


def test_curve_verify_text(capsys):
    code, out = _run(capsys, "curve", "verify", "--order", "8", "--text", "--no-progress")
    assert code == 0
    assert "PASS    curve.weierstrass" in out
    assert "curve.second_structure" in out


def test_analytic_periods(capsys):
    code, out = _run(capsys, "analytic", "periods", "--no-progress")
    assert code == 0
    ids = {c["check_id"] for c in json.loads(out)["checks"]}
    assert ids == {"analytic.half_period", "analytic.lattice", "analytic.character_T"}


def test_failing_check_exits_one(capsys, monkeypatch):
    spec = CheckSpec(
        check_id="hopf.zz_broken",
        suite="hopf",
        anchor="always fails",
        run=lambda config: CheckResult.from_bool("hopf.zz_broken", False),
    )
    monkeypatch.setitem(registry._REGISTRY, spec.check_id, spec)
    code, out = _run(capsys, "verify", "hopf", "--no-progress", "--samples", "1")
    assert code == 1
    assert json.loads(out)["checks"][-1]["status"] == "fail"


def test_fragment_pairs_flag_reaches_the_config():
    args = build_parser().parse_args(["verify", "hecke", "--fragment-pairs", "7", "--samples", "2"])
    config = _config(args)
    assert config.fragment_pairs == 7
    assert config.samples == 2
    assert _config(build_parser().parse_args(["verify", "hecke"])).fragment_pairs == 50
