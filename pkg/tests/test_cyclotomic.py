from fractions import Fraction

import pytest

from dl2.cyclotomic import Cyclo, cyclotomic_poly, phi


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert phi(60) == 16
    assert phi(72) == 24


@pytest.mark.parametrize("e", [2, 3, 4, 5, 6, 8, 12, 60, 72])
def test_root_of_unity_identities(e):
    z = Cyclo.root_of_unity(e, 1)
    acc = Cyclo.from_rational(1, e)
    for _ in range(e):
        acc = acc * z
    assert acc == 1
    s = Cyclo.zero(e)
    for j in range(e):
        s = s + Cyclo.root_of_unity(e, j)
    assert s.is_zero()
    m = next(m for m in range(2, e + 2) if __import__("math").gcd(m, e) == 1)
    for j in range(e):
        zj = Cyclo.root_of_unity(e, j)
        assert zj.conj() == Cyclo.root_of_unity(e, (e - j) % e)
        assert zj * zj.conj() == 1
        assert zj.galois_power(m) == Cyclo.root_of_unity(e, (m * j) % e)


def test_cross_exponent_equality():
    assert Cyclo.root_of_unity(6, 2) == Cyclo.root_of_unity(3, 1)
    assert Cyclo.root_of_unity(4, 2) == Cyclo.from_rational(-1)
    assert Cyclo.root_of_unity(2, 1) == -1
    a = Cyclo.root_of_unity(12, 4) + Cyclo.root_of_unity(3, 2)
    assert a.is_rational() and a.rational_value() == -1  # z3 + z3^2 = -1


def test_rational_arithmetic():
    half = Cyclo.from_rational(Fraction(1, 2), 12)
    assert half + half == 1
    assert (half * 4).rational_value() == 2
    v = Cyclo.root_of_unity(5, 1) * Cyclo.root_of_unity(5, 4)
    assert v == 1


def test_norm_of_one_plus_root():
    a = Cyclo.from_rational(1, 5) + Cyclo.root_of_unity(5, 1)
    n = a * a.conj()
    expected = (
        Cyclo.from_rational(2, 5)
        + Cyclo.root_of_unity(5, 1)
        + Cyclo.root_of_unity(5, 4)
    )
    assert n == expected
    assert not n.is_rational()


def test_promote_and_scale():
    x = Cyclo.root_of_unity(3, 1)
    y = x.promote(12)
    assert y.e == 12 and y == x
    assert x.scale(Fraction(1, 3)) * 3 == x
