import random

import numpy as np
import pytest

from dl2.rings import ResidueQuadratic, make_ext, make_ring

CASES = [
    (2, 1, 1, "equal"),
    (2, 1, 2, "mixed"),
    (2, 1, 3, "mixed"),
    (2, 1, 3, "equal"),
    (2, 2, 2, "mixed"),
    (2, 2, 2, "equal"),
    (3, 1, 2, "mixed"),
    (3, 1, 2, "equal"),
    (5, 1, 2, "mixed"),
]


def test_make_ring_examples():
    R = make_ring(3, 1, 2, "mixed")  # Z/9
    assert R.size == 9
    assert len(R.units()) == 6
    assert make_ring(2, 1, 1, "equal").size == 2
    G = make_ring(2, 2, 2, "mixed")  # GR(4,2)
    assert G.size == 16
    assert len(G.units()) == 12


def test_make_ring_rejects_bad_input():
    with pytest.raises(ValueError):
        make_ring(4, 1, 2, "mixed")
    with pytest.raises(ValueError):
        make_ring(3, 1, 2, "adic")
    with pytest.raises(ValueError):
        make_ring(3, 0, 2, "mixed")


def test_invert():
    R = make_ring(3, 1, 2, "mixed")
    assert R.invert(2) == 5  # 2 * 5 = 10 = 1 mod 9
    assert R.invert(R.one) == R.one
    G = make_ring(2, 2, 2, "mixed")
    for u in G.units():
        assert G.mul[u, G.invert(u)] == G.one
    with pytest.raises(ZeroDivisionError):
        G.invert(0)


@pytest.mark.parametrize("p,k,r,mode", CASES)
def test_unit_counts(p, k, r, mode):
    R = make_ring(p, k, r, mode)
    q = R.q
    assert len(R.units()) == q ** (r - 1) * (q - 1)
    X = make_ext(R)
    assert len(X.units()) == q ** (2 * (r - 1)) * (q * q - 1)


@pytest.mark.parametrize("p,k,r,mode", CASES)
def test_ring_axioms(p, k, r, mode):
    R = make_ring(p, k, r, mode)
    S = R.size
    # commutativity exhaustive
    assert (R.mul == R.mul.T).all()
    assert (R.add == R.add.T).all()
    # associativity and distributivity sampled
    rng = random.Random(0)
    for _ in range(300):
        a, b, c = (rng.randrange(S) for _ in range(3))
        assert R.mul[R.mul[a, b], c] == R.mul[a, R.mul[b, c]]
        assert R.add[R.add[a, b], c] == R.add[a, R.add[b, c]]
        assert R.mul[a, R.add[b, c]] == R.add[R.mul[a, b], R.mul[a, c]]
    assert (R.mul[R.one] == np.arange(S)).all()
    assert (R.add[R.zero] == np.arange(S)).all()


@pytest.mark.parametrize("p,k,r,mode", CASES)
def test_reduction_maps(p, k, r, mode):
    R = make_ring(p, k, r, mode)
    rng = random.Random(1)
    for r2 in range(1, r + 1):
        tgt, m = R.reduction(r2)
        assert len(set(m.tolist())) == tgt.size  # surjective
        assert (m == 0).sum() == R.q ** (r - r2)  # additive kernel size
        for _ in range(100):
            a, b = rng.randrange(R.size), rng.randrange(R.size)
            assert m[R.mul[a, b]] == tgt.mul[m[a], m[b]]
            assert m[R.add[a, b]] == tgt.add[m[a], m[b]]


@pytest.mark.parametrize("p,k,r,mode", [c for c in CASES if c[2] >= 2])
def test_top_kernel_isomorphism(p, k, r, mode):
    """x -> (x - 1)/pi^(r-1) maps the last unit-kernel onto (F_q, +),
    turning multiplication into addition."""
    R = make_ring(p, k, r, mode)
    F = R.field
    _, m = R.reduction(r - 1)
    ker = [int(u) for u in R.units() if m[u] == 1]
    assert len(ker) == R.q
    img = {}
    for u in ker:
        img[u] = R.div_pi_top(int(R.add[u, R.neg[R.one]]))
    assert sorted(img.values()) == list(range(R.q))  # bijective onto F_q
    for u in ker:
        for v in ker:
            w = int(R.mul[u, v])
            assert img[w] == int(F.add[img[u], img[v]])


def test_frobenius_properties():
    for p, k, r, mode in CASES:
        R = make_ring(p, k, r, mode)
        X = make_ext(R)
        codes = np.arange(X.size, dtype=np.int64)
        fr = X.frobenius(codes)
        assert (X.frobenius(fr) == codes).all()  # involution
        fixed = codes[fr == codes]
        assert set(fixed.tolist()) == set(range(R.size))  # fixed ring = base
        # ring automorphism, sampled
        rng = random.Random(2)
        for _ in range(100):
            x, y = rng.randrange(X.size), rng.randrange(X.size)
            assert X.frobenius(X.mul(x, y)) == X.mul(fr[x], fr[y])
            assert X.frobenius(X.add(x, y)) == X.add(fr[x], fr[y])
        # congruent to the q-power map modulo pi
        rq = ResidueQuadratic(X)

        def rq_pow(v, n):
            out, cur = 1, int(v)
            while n:
                if n & 1:
                    out = int(rq.mul(out, cur))
                cur = int(rq.mul(cur, cur))
                n >>= 1
            return out

        for x in codes[:: max(1, X.size // 60)]:
            assert X.residue_pair(X.frobenius(x)) == rq_pow(X.residue_pair(x), R.q)


def test_frobenius_unique_nontrivial_automorphism():
    """In the quadratic extension of Z/4 the defining polynomial has exactly
    two roots; the root swap is the Frobenius and the only other choice is
    the identity."""
    R = make_ring(2, 1, 2, "mixed")
    X = make_ext(R)
    roots = []
    for z in range(X.size):
        val = X.add(X.add(X.mul(z, z), X.mul(X.embed_base(X.B), z)), X.embed_base(X.C))
        if val == 0:
            roots.append(z)
    assert len(roots) == 2
    assert X.xi in roots
    other = [z for z in roots if z != X.xi][0]
    assert X.frobenius(X.xi) == other


def test_frobenius_is_squaring_on_teichmueller_root():
    """xi with xi^2 + xi + 1 = 0 over Z/4 satisfies sigma(xi) = xi^2."""
    R = make_ring(2, 1, 2, "mixed")
    X = make_ext(R)
    assert (X.B_res, X.C_res) == (1, 1)
    assert X.frobenius(X.xi) == X.mul(X.xi, X.xi)


def test_norm_trace():
    R = make_ring(2, 1, 2, "mixed")
    X = make_ext(R)
    assert X.norm(X.one) == R.one
    two = R.add[R.one, R.one]
    assert X.trace(X.one) == two
    # xi root of y^2 + y + 1: norm = C = 1, trace = -B = -1
    assert X.norm(X.xi) == R.one
    assert X.trace(X.xi) == R.neg[R.one]
    # norm multiplicative on all unit pairs
    for a in X.units():
        for b in X.units():
            assert X.norm(X.mul(a, b)) == R.mul[X.norm(a), X.norm(b)]
    # norm and trace via the Frobenius, all elements
    for x in range(X.size):
        s = X.frobenius(x)
        assert X.mul(x, s) == X.embed_base(X.norm(x))
        assert X.add(x, s) == X.embed_base(X.trace(x))


def test_ext_inverse():
    X = make_ext(make_ring(3, 1, 2, "mixed"))
    for u in X.units():
        assert X.mul(u, X.inv(int(u))) == X.one


def test_ext_reduction_consistency():
    X = make_ext(make_ring(3, 1, 2, "equal"))
    tgt, m = X.reduction(1)
    assert tgt.base.r == 1
    rng = random.Random(3)
    for _ in range(100):
        x, y = rng.randrange(X.size), rng.randrange(X.size)
        assert m[X.mul(x, y)] == tgt.mul(int(m[x]), int(m[y]))
