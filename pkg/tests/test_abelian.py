import random

from dl2.abelian import FiniteAbelianGroup
from dl2.rings import make_ext, make_ring


def unit_group(R):
    return FiniteAbelianGroup(R.units(), lambda a, b: R.mul[a, b], R.one)


def test_unit_group_structures():
    # (Z/9)^x = Z/2 x Z/3 (primary form of Z/6)
    assert sorted(unit_group(make_ring(3, 1, 2, "mixed")).orders) == [2, 3]
    # (Z/8)^x = Z/2 x Z/2
    assert sorted(unit_group(make_ring(2, 1, 3, "mixed")).orders) == [2, 2]
    # (F_2[t]/t^3)^x is cyclic of order 4: (1+t)^2 = 1+t^2
    assert sorted(unit_group(make_ring(2, 1, 3, "equal")).orders) == [4]
    # (Z/125)^x = Z/4 x Z/25
    assert sorted(unit_group(make_ring(5, 1, 3, "mixed")).orders) == [4, 25]
    # (F_5[t]/t^3)^x = Z/4 x Z/5 x Z/5
    assert sorted(unit_group(make_ring(5, 1, 3, "equal")).orders) == [4, 5, 5]
    # GR(9,2)^x = Z/8 x Z/3 x Z/3
    X = make_ext(make_ring(3, 1, 2, "mixed"))
    B = FiniteAbelianGroup(X.units(), X.mul, X.one)
    assert sorted(B.orders) == [3, 3, 8]


def test_dual_is_complete_and_faithful():
    X = make_ext(make_ring(3, 1, 2, "mixed"))
    B = FiniteAbelianGroup(X.units(), X.mul, X.one)
    chars = B.dual()
    assert len(chars) == B.order == 72
    codes = [int(c) for c in B.codes]
    seen = set()
    for ch in chars:
        v = tuple(ch.root_exp(x) for x in codes)
        assert v not in seen
        seen.add(v)
    rng = random.Random(0)
    for _ in range(80):
        ch = rng.choice(chars)
        x, y = rng.choice(codes), rng.choice(codes)
        assert (ch.root_exp(x) + ch.root_exp(y)) % B.exponent == ch.root_exp(
            X.mul(x, y)
        )


def test_char_group_operations():
    R = make_ring(3, 1, 2, "mixed")
    U = unit_group(R)
    chars = U.dual()
    triv = U.trivial_char()
    assert triv.is_trivial()
    for ch in chars:
        assert (ch * ch.inverse()) == triv
        assert ch.order() == 1 or not ch.is_trivial()
    orders = sorted(ch.order() for ch in chars)
    assert orders == [1, 2, 3, 3, 6, 6]  # dual of Z/6


def test_element_orders():
    R = make_ring(2, 1, 3, "equal")
    U = unit_group(R)
    orders = sorted(U.element_order(int(c)) for c in U.codes)
    assert orders == [1, 2, 4, 4]
