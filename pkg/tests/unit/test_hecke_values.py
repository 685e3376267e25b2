from fractions import Fraction

import pytest

from src.exact import IDENTITY, Mat, NotQComputable
from src.hecke import Atom, FormValue, value_equal
from src.qseries import e4, eta4, mu_series, serre_x

ORDER = 8
BETA2 = Mat(2, 0, 0, 1)
S = Mat(0, -1, 1, 0)


def test_level_one_atom_expands_to_classical_series():
    assert FormValue.form("E4").qexpand(ORDER) == e4(ORDER)


def test_mu_atom_constant_term():
    series = FormValue.mu(BETA2).qexpand(ORDER)
    assert series.constant_term() == Fraction(1, 6)
    assert series == mu_series(BETA2, ORDER)


def test_eta4_translation_involution():
    slashed = FormValue.form("eta4").slash(Mat(1, 3, 0, 1))
    assert slashed == FormValue.form("eta4").scale(-1)
    assert slashed.qexpand(ORDER) == -eta4(ORDER).truncate(ORDER)


def test_mu_of_modular_matrix_vanishes():
    assert FormValue.mu(S).is_zero()
    assert FormValue.mu(IDENTITY).is_zero()


def test_mu_slash_is_a_cocycle():
    assert FormValue.mu(BETA2).slash(S) == FormValue.mu(BETA2 @ S)
    g = Mat(1, 1, 0, 2)
    assert FormValue.mu(BETA2).slash(g) == FormValue.mu(BETA2 @ g) - FormValue.mu(g)


@pytest.mark.parametrize("depth", [0, 1, 2])
def test_slash_is_a_right_action(depth):
    g, h = Mat(1, 1, 0, 2), Mat(2, 1, 1, 1)
    value = FormValue.mu(BETA2, depth) * FormValue.form("E4", Mat(1, 0, 0, 3)) + FormValue.form("eta4", g)
    assert value.slash(g).slash(h) == value.slash(g @ h)


def test_serre_derivative_of_level_one_forms():
    assert FormValue.form("E4").serre_x() == FormValue.form("E6").scale(Fraction(-1, 3))
    assert FormValue.form("Delta").serre_x().is_zero()
    assert FormValue.form("eta4").serre_x().is_zero()


def test_serre_derivative_of_slashed_form_matches_series():
    value = FormValue.form("E4", Mat(1, 1, 0, 2))
    expected = serre_x(value.qexpand(ORDER + 2), 4).truncate(ORDER)
    assert value.serre_x().qexpand(ORDER) == expected


def test_serre_derivative_of_mu_increments_depth():
    assert FormValue.mu(BETA2).serre_x() == FormValue.mu(BETA2, 1)
    expected = serre_x(mu_series(BETA2, ORDER + 2), 2).truncate(ORDER)
    assert FormValue.mu(BETA2, 1).qexpand(ORDER) == expected


def test_grade_y_uses_half_weight():
    assert FormValue.form("E4").grade_y() == FormValue.form("E4").scale(2)
    assert FormValue.constant(5).grade_y().is_zero()


def test_weight_and_components():
    mixed = FormValue.form("E4") + FormValue.form("E6")
    with pytest.raises(ValueError, match="not homogeneous"):
        mixed.weight
    assert mixed.weights() == {4, 6}
    assert mixed.component(6) == FormValue.form("E6")
    assert FormValue.zero().weight is None
    assert (FormValue.form("E4") * FormValue.mu(BETA2)).weight == 6


def test_value_equal_falls_back_to_series():
    e4v, e6v = FormValue.form("E4"), FormValue.form("E6")
    lhs = e4v**3 - e6v**2
    rhs = FormValue.form("Delta").scale(1728)
    assert lhs != rhs
    assert value_equal(lhs, rhs, ORDER)
    assert not value_equal(lhs, rhs.scale(2), ORDER)


def test_unknown_form_tag_rejected():
    with pytest.raises(ValueError):
        FormValue.form("E8")


def test_atom_outside_fragment_is_not_q_computable():
    stray = FormValue.of_atom(Atom("newform", "f", 0, IDENTITY))
    with pytest.raises(NotQComputable):
        stray.qexpand(ORDER)


def test_render():
    assert FormValue.form("E4").render() == "E4"
    assert FormValue.zero().render() == "0"
    assert "mu[[2,0],[0,1]]" in FormValue.mu(BETA2).render()
