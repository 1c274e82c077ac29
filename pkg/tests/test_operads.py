from math import factorial

import pytest

from charband.operads import free_lie_char, lie_char, lie_operad, mobius, sign_twist, suspend
from charband.series import GradedSym
from charband.symfunc import dim_gl, dim_sn, s


def test_mobius():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


@pytest.mark.parametrize("k", range(1, 9))
def test_lie_dimension_is_factorial(k):
    assert dim_sn(lie_char(k)) == factorial(k - 1)


def test_small_lie_characters():
    assert lie_char(3) == s(2, 1)
    assert lie_char(4) == s(3, 1) + s(2, 1, 1)


def necklace(m: int, n: int) -> int:
    return sum(mobius(d) * m ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


@pytest.mark.parametrize("n", range(1, 7))
def test_free_lie_algebra_dimensions_follow_witt(n):
    g = GradedSym({2: s(1)}, trunc=2 * n, wmax=n, unit_parity=1)
    F = free_lie_char(g)
    assert dim_gl(F.coefficient(2 * n), 3) == necklace(3, n)


def test_sign_twist_transposes():
    assert sign_twist(s(3, 1)) == s(2, 1, 1)


def test_suspension_shifts_and_twists():
    op = suspend(lie_operad(4), 1)
    assert op[3] == (s(2, 1), -2)
    assert op[4] == (s(3, 1) + s(2, 1, 1), -3)
    assert op[1] == (s(1), 0)
