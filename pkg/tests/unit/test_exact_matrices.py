from fractions import Fraction

import numpy as np
import pytest
from sympy import divisor_sigma

from src.exact import (
    GroupElem,
    Mat,
    TorsionPoint,
    hnf_cosets,
    hnf_reduce,
    kernel_points,
    particular_preimage,
    smith_normal_form,
)


def test_hnf_cosets_small():
    assert hnf_cosets(1) == (Mat.identity(),)
    assert set(hnf_cosets(2)) == {Mat(2, 0, 0, 1), Mat(1, 0, 0, 2), Mat(1, 1, 0, 2)}
    assert len(hnf_cosets(6)) == 12


def test_hnf_cosets_count_and_form():
    for n in range(1, 40):
        cosets = hnf_cosets(n)
        assert len(cosets) == int(divisor_sigma(n, 1))
        assert len(set(cosets)) == len(cosets)
        assert all(m.is_hnf() and m.det() == n for m in cosets)


def test_hnf_cosets_rejects_zero():
    with pytest.raises(ValueError):
        hnf_cosets(0)


def test_group_elem_extracts_content():
    g = GroupElem.of([[2, 4], [0, 6]])
    assert g.scalar == 2
    assert g.mat == Mat(1, 2, 0, 3)
    assert g.det() == 12


def test_group_elem_inverse():
    g = GroupElem.of([[2, 1], [3, 5]], scalar=Fraction(1, 3))
    assert g * g.inverse() == GroupElem.identity()
    assert g.inverse() * g == GroupElem.identity()


def test_group_elem_rejects_negative_determinant():
    with pytest.raises(ValueError):
        GroupElem.of([[0, 1], [1, 0]])


def test_hnf_reduce_example():
    g = GroupElem.of([[0, -1], [2, 0]])
    gamma0, beta = hnf_reduce(g)
    assert gamma0.det() == 1
    assert beta.mat == Mat(2, 0, 0, 1)
    assert GroupElem.of(gamma0) * beta == g


def test_hnf_reduce_identity_and_upper():
    gamma0, beta = hnf_reduce(GroupElem.identity())
    assert gamma0 == Mat.identity() and beta == GroupElem.identity()
    upper = GroupElem.of([[3, 2], [0, 5]])
    gamma0, beta = hnf_reduce(upper)
    assert gamma0 == Mat.identity() and beta == upper


def test_hnf_reduce_reassembles_random():
    rng = np.random.default_rng(3)
    done = 0
    while done < 200:
        a, b, c, d = (int(v) for v in rng.integers(-9, 10, size=4))
        m = Mat(a, b, c, d)
        if m.det() <= 0:
            continue
        g = GroupElem.of(m, scalar=Fraction(int(rng.integers(1, 5)), int(rng.integers(1, 5))))
        gamma0, beta = hnf_reduce(g)
        assert gamma0.det() == 1
        assert beta.mat.is_hnf()
        assert GroupElem.of(gamma0) * beta == g
        done += 1


def test_smith_normal_form_divisibility():
    for m in [Mat(2, 0, 0, 1), Mat(4, 6, 2, 8), Mat(0, -1, 6, 3), Mat(12, 0, 0, 18)]:
        u, dmat, v = smith_normal_form(m)
        assert u @ m @ v == dmat
        assert abs(u.det()) == 1 and abs(v.det()) == 1
        assert dmat.b == dmat.c == 0
        assert dmat.a > 0 and dmat.d % dmat.a == 0


@pytest.mark.parametrize(
    "rows,expected",
    [
        ([[1, 0], [0, 1]], {TorsionPoint(0, 0)}),
        ([[1, 0], [0, 2]], {TorsionPoint(0, 0), TorsionPoint(0, Fraction(1, 2))}),
        ([[2, 0], [0, 1]], {TorsionPoint(0, 0), TorsionPoint(Fraction(1, 2), 0)}),
    ],
)
def test_kernel_points_examples(rows, expected):
    assert set(kernel_points(Mat.from_rows(rows))) == expected


def test_kernel_points_count_and_membership():
    for n in range(1, 61):
        for m in hnf_cosets(n)[:4]:
            pts = kernel_points(m)
            assert len(pts) == n
            assert all(p.act(m) == TorsionPoint(0, 0) for p in pts)
    skew = Mat(2, 1, 1, 3)
    assert len(kernel_points(skew)) == 5


def test_kernel_points_rejects_singular():
    with pytest.raises(ValueError):
        kernel_points(Mat(1, 2, 2, 4))


def test_particular_preimage():
    m = Mat(2, 1, 1, 3)
    x = TorsionPoint(Fraction(1, 3), Fraction(2, 7))
    y = particular_preimage(x, m)
    assert y.act(m.adj()) == x
