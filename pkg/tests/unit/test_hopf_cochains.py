from fractions import Fraction

import numpy as np
import pytest

from src.exact.errors import CochainDegreeError
from src.hopf import (
    A,
    B,
    B0,
    Cochain,
    H1Elem,
    b,
    degeneracy,
    distinguished,
    face,
    is_normalized,
    monomials_up_to,
    normalize,
    tau,
)

X, Y = H1Elem.X(), H1Elem.Y()
D1, D2 = H1Elem.delta(1), H1Elem.delta(2)
ONE = H1Elem.one()


def _random_normalized(degree, rng, n_terms=2):
    pool = [m for m in monomials_up_to(2, 1) if not m.is_unit()]
    acc = Cochain.zero(degree)
    for _ in range(n_terms):
        key = tuple(pool[int(rng.integers(len(pool)))] for _ in range(degree))
        acc = acc + Cochain(degree, {key: Fraction(int(rng.integers(1, 4)), int(rng.integers(1, 3)))})
    return acc


def test_b_of_delta1_vanishes():
    assert b(D1).is_zero()


def test_tau_of_delta1():
    assert tau(D1).to_elem() == -D1


def test_B_of_Y_is_one():
    assert B(Y).scalar_value() == 1


def test_B_of_godbillon_vey_chain():
    cocycles = distinguished()
    assert B(cocycles["c"]).to_elem() == D2 - D1 * D1 * Fraction(1, 2)
    assert B(cocycles["c"]) == cocycles["delta2p"]


def test_distinguished_cocycles_are_closed():
    cocycles = distinguished()
    for name in ("delta1", "delta2p", "c", "F"):
        assert b(cocycles[name]).is_zero(), name


def test_transverse_fundamental_is_cyclic():
    F = distinguished()["F"]
    assert tau(F) == F
    assert B(F).is_zero()


def test_faces_of_scalar():
    one = Cochain.scalar(3)
    assert face(0, one) == Cochain.tensor(ONE) * 3
    assert b(one).is_zero()


def test_degeneracy_applies_counit():
    c = Cochain.tensor(ONE, X) + Cochain.tensor(Y, ONE)
    assert degeneracy(0, c).to_elem() == X
    assert degeneracy(1, c).to_elem() == Y


def test_cosimplicial_identity_face_degeneracy():
    rng = np.random.default_rng(1)
    c = _random_normalized(2, rng)
    for i in range(3):
        assert degeneracy(i, face(i, c)) == c


def test_normalize_drops_unit_factors():
    c = Cochain.tensor(ONE, X) + Cochain.tensor(D1, Y)
    assert normalize(c) == Cochain.tensor(D1, Y)
    assert is_normalized(normalize(c))
    assert not is_normalized(c)


def test_b_squared_vanishes():
    rng = np.random.default_rng(2)
    assert b(b(Cochain.scalar(1))).is_zero()
    for degree in (1, 2):
        for _ in range(5):
            c = _random_normalized(degree, rng)
            assert b(b(c)).is_zero()


def test_B_squared_vanishes():
    rng = np.random.default_rng(3)
    for degree in (2, 3):
        for _ in range(4):
            c = _random_normalized(degree, rng)
            assert normalize(B(B(c))).is_zero()


def test_b_and_B_anticommute():
    rng = np.random.default_rng(4)
    for _ in range(4):
        c = _random_normalized(2, rng)
        assert normalize(b(B(c)) + B(b(c))).is_zero()


def test_A_in_degree_zero_is_identity():
    assert A(Cochain.scalar(5)).scalar_value() == 5


def test_B0_needs_positive_degree():
    with pytest.raises(CochainDegreeError):
        B0(Cochain.scalar(1))


def test_degree_limit():
    c = Cochain.tensor(X, X, X, X)
    with pytest.raises(CochainDegreeError):
        b(c)
    with pytest.raises(CochainDegreeError):
        face(0, c)
    assert tau(c).degree == 4
