import numpy as np
import pytest

from src.exact import Mat
from src.utils.sampling import random_gl2_plus, random_sl2, random_upper


def _entries(m: Mat):
    return (m.a, m.b, m.c, m.d)


@pytest.mark.parametrize("max_entry", [1, 3, 10])
def test_random_sl2_bounded_and_nontrivial(max_entry):
    rng = np.random.default_rng(7)
    for _ in range(50):
        m = random_sl2(rng, max_entry)
        assert m.det() == 1
        assert m != Mat.identity()
        assert max(map(abs, _entries(m))) <= max_entry


def test_random_gl2_plus_positive_determinant():
    rng = np.random.default_rng(7)
    dets = set()
    for _ in range(100):
        m = random_gl2_plus(rng, 10)
        assert 1 <= m.det() <= 6
        assert max(map(abs, _entries(m))) <= 10
        dets.add(m.det())
    assert len(dets) > 1


def test_random_upper_is_hermite():
    rng = np.random.default_rng(3)
    for _ in range(50):
        m = random_upper(rng, 12)
        assert m.is_hnf()
        assert 1 <= m.det() <= 12


def test_sampling_reproducible_from_seed():
    a = [random_gl2_plus(np.random.default_rng(11), 8) for _ in range(5)]
    b = [random_gl2_plus(np.random.default_rng(11), 8) for _ in range(5)]
    assert a == b
