"""Exact arithmetic in cyclotomic integers (and their rational spans).

A value is stored against a fixed root-of-unity order e as the canonical
remainder modulo the e-th cyclotomic polynomial: a coefficient tuple
(c_0, ..., c_{phi(e)-1}) meaning sum(c_i * zeta_e^i).  Coefficients are
Python ints or Fractions, so equality is structural and no floating point
enters anywhere.  Values of different orders are combined by promoting both
to the lcm order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _poly_divmod_int(num: list, den: list):
    """Division with remainder by a monic integer polynomial."""
    num = list(num)
    d = len(den) - 1
    q = [0] * max(1, len(num) - d)
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i]
        if c:
            q[i - d] = c
            for j in range(d + 1):
                num[i - d + j] -= c * den[j]
    return q, num[:d]


@lru_cache(maxsize=None)
def cyclotomic_poly(e: int) -> tuple:
    """Integer coefficients (ascending) of the e-th cyclotomic polynomial."""
    if e == 1:
        return (-1, 1)
    # (x^e - 1) / prod_{d | e, d < e} Phi_d
    num = [0] * (e + 1)
    num[0], num[e] = -1, 1
    for d in range(1, e):
        if e % d == 0:
            q, r = _poly_divmod_int(num, list(cyclotomic_poly(d)))
            assert not any(r), "cyclotomic division must be exact"
            num = q
    return tuple(num)


@lru_cache(maxsize=None)
def phi(e: int) -> int:
    return len(cyclotomic_poly(e)) - 1


@lru_cache(maxsize=None)
def _power_reductions(e: int) -> tuple:
    """x^s mod Phi_e for s = 0 .. 2*phi(e) - 2, as coefficient tuples."""
    f = cyclotomic_poly(e)
    d = phi(e)
    out = []
    cur = [1] + [0] * (d - 1)
    for s in range(2 * d - 1):
        out.append(tuple(cur))
        # multiply by x, reduce
        cur = [0] + cur
        lead = cur[d] if len(cur) > d else 0
        cur = cur[:d] + [0] * (d - len(cur[:d]))
        if lead:
            cur = [a - lead * b for a, b in zip(cur, f[:d])]
    return tuple(out)


@lru_cache(maxsize=None)
def zeta_power_coeffs(e: int, j: int) -> tuple:
    """Canonical coefficients of zeta_e^j."""
    j %= e
    d = phi(e)
    if j < d:
        c = [0] * d
        c[j] = 1
        return tuple(c)
    f = cyclotomic_poly(e)
    cur = [0] * j + [1]
    while len(cur) > d:
        lead = cur.pop()
        if lead:
            off = len(cur) - d
            for i in range(d):
                cur[off + i] -= lead * f[i]
    cur += [0] * (d - len(cur))
    return tuple(cur)


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Cyclo:
    """An element of Q(zeta_e) in the canonical power basis mod Phi_e."""

    __slots__ = ("e", "c")

    def __init__(self, e: int, coeffs):
        self.e = e
        d = phi(e)
        c = list(coeffs)
        c += [0] * (d - len(c))
        assert len(c) == d
        self.c = tuple(_norm_coeff(x) for x in c[:d])

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(e: int = 1) -> "Cyclo":
        return Cyclo(e, [0] * phi(e))

    @staticmethod
    def from_rational(v, e: int = 1) -> "Cyclo":
        d = phi(e)
        c = [0] * d
        if d:
            c[0] = v
        return Cyclo(e, c)

    @staticmethod
    def root_of_unity(e: int, j: int) -> "Cyclo":
        if e == 1:
            return Cyclo(1, [1])
        return Cyclo(e, zeta_power_coeffs(e, j))

    # -- representation changes -------------------------------------------------

    def promote(self, E: int) -> "Cyclo":
        """Rewrite in Q(zeta_E); requires e | E."""
        if E == self.e:
            return self
        assert E % self.e == 0
        step = E // self.e
        out = [Fraction(0)] * phi(E)
        for i, ci in enumerate(self.c):
            if ci:
                zc = zeta_power_coeffs(E, i * step)
                for j, zj in enumerate(zc):
                    if zj:
                        out[j] += ci * zj
        return Cyclo(E, out)

    @staticmethod
    def _common(a: "Cyclo", b: "Cyclo"):
        if a.e == b.e:
            return a, b
        E = a.e // gcd(a.e, b.e) * b.e
        return a.promote(E), b.promote(E)

    # -- arithmetic ---------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Cyclo):
            other = Cyclo.from_rational(other, 1)
        a, b = Cyclo._common(self, other)
        return Cyclo(a.e, [x + y for x, y in zip(a.c, b.c)])

    def __sub__(self, other):
        if not isinstance(other, Cyclo):
            other = Cyclo.from_rational(other, 1)
        a, b = Cyclo._common(self, other)
        return Cyclo(a.e, [x - y for x, y in zip(a.c, b.c)])

    def __neg__(self):
        return Cyclo(self.e, [-x for x in self.c])

    def __mul__(self, other):
        if not isinstance(other, Cyclo):
            return Cyclo(self.e, [x * other for x in self.c])
        a, b = Cyclo._common(self, other)
        d = phi(a.e)
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a.c):
            if ai:
                for j, bj in enumerate(b.c):
                    if bj:
                        conv[i + j] += ai * bj
        red = _power_reductions(a.e)
        out = [0] * d
        for s, cs in enumerate(conv):
            if cs:
                rs = red[s]
                for j in range(d):
                    if rs[j]:
                        out[j] += cs * rs[j]
        return Cyclo(a.e, out)

    __rmul__ = __mul__

    def scale(self, v) -> "Cyclo":
        return Cyclo(self.e, [x * v for x in self.c])

    def conj(self) -> "Cyclo":
        """Complex conjugation zeta -> zeta^-1."""
        d = phi(self.e)
        out = [Fraction(0)] * d
        for i, ci in enumerate(self.c):
            if ci:
                zc = zeta_power_coeffs(self.e, (-i) % self.e)
                for j, zj in enumerate(zc):
                    if zj:
                        out[j] += ci * zj
        return Cyclo(self.e, out)

    def galois_power(self, m: int) -> "Cyclo":
        """The Galois substitution zeta -> zeta^m; requires gcd(m, e) = 1."""
        assert gcd(m, self.e) == 1, "substitution exponent must be coprime to e"
        d = phi(self.e)
        out = [Fraction(0)] * d
        for i, ci in enumerate(self.c):
            if ci:
                zc = zeta_power_coeffs(self.e, (i * m) % self.e)
                for j, zj in enumerate(zc):
                    if zj:
                        out[j] += ci * zj
        return Cyclo(self.e, out)

    # -- predicates ----------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.c[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.c[0]) if self.c else Fraction(0)

    def is_integer(self) -> bool:
        return self.is_rational() and Fraction(self.c[0]).denominator == 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.c[0] if self.c else 0) == other
        if not isinstance(other, Cyclo):
            return NotImplemented
        a, b = Cyclo._common(self, other)
        return a.c == b.c

    def __hash__(self):
        # The same value can be written against different exponents, so the
        # hash may only depend on the value itself.  Rational values hash by
        # value; hashing all irrational values alike is valid (equality does
        # the real work) and they are rare as dict keys.
        if self.is_rational():
            return hash(Fraction(self.c[0] if self.c else 0))
        return hash("cyclo-irrational")

    def sort_key(self):
        return tuple(Fraction(x) for x in self.c)

    def __repr__(self):
        if self.is_rational():
            return str(self.c[0] if self.c else 0)
        terms = []
        for i, ci in enumerate(self.c):
            if ci == 0:
                continue
            if i == 0:
                terms.append(str(ci))
            elif ci == 1:
                terms.append(f"z{self.e}^{i}")
            else:
                terms.append(f"{ci}*z{self.e}^{i}")
        return " + ".join(terms) if terms else "0"
