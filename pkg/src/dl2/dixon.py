"""Exact irreducible character tables via class-sum eigenvector splitting.

The classical modular method: work modulo a prime l with l = 1 (mod e),
e the group exponent, and l > 2*sqrt(|G|), so that F_l contains the needed
roots of unity and integer character data is determined by its residue.

Stages:
  1. class matrices M_i with (M_i)[j, k] = #{x in C_i : x^-1 z_k in C_j},
     built lazily, cheapest classes first (cost |C_i| per column);
  2. common eigenvector splitting of the commuting family {M_i} over F_l,
     blocks refined via Krylov minimal polynomials and nullspaces;
  3. normalisation of eigenvectors to central characters, degree recovery
     by square roots mod l;
  4. lifting to exact root-of-unity multiplicities with the inverse Fourier
     sum over power maps, then canonical reduction into Z[zeta_e];
  5. exact integer verification of both orthogonality relations.

No floating point and no tolerance anywhere; every verification is an
integer identity.
"""

from __future__ import annotations

import numpy as np

from .cyclotomic import phi, zeta_power_coeffs
from .groups import ConjugacyData, MatrixGroup
from .modlinalg import (
    inv_mod,
    krylov_relation,
    nullspace,
    poly_apply_matvec,
    poly_lcm,
    poly_roots,
    primitive_root,
    rref,
    sqrt_mod,
)

MODULUS_SEARCH_BOUND = 30_000_000


class ModulusSearchError(RuntimeError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def dixon_prime(order: int, exponent: int) -> int:
    """Smallest prime l = 1 (mod exponent) with l > 2*sqrt(order)."""
    import math

    lo = int(2 * math.isqrt(order)) + 1
    # l = 1 + m*exponent
    m = max(1, (lo - 1) // exponent)
    while True:
        l = 1 + m * exponent
        if l > MODULUS_SEARCH_BOUND:
            raise ModulusSearchError(
                f"no prime = 1 mod {exponent} above 2*sqrt({order}) "
                f"found below {MODULUS_SEARCH_BOUND}"
            )
        if l >= lo and l > exponent and _is_prime(l):
            return l
        m += 1


def class_matrix(group: MatrixGroup, cd: ConjugacyData, i: int) -> np.ndarray:
    """M_i over the integers; column k counts x in C_i with x^-1 z_k in C_j."""
    sp = group.space
    n = cd.n_classes
    X = cd.class_lists[i]
    Xinv = sp.inv(X)
    M = np.zeros((n, n), dtype=np.int64)
    for k in range(n):
        y = sp.mul(Xinv, np.int64(cd.reps[k]))
        M[:, k] = np.bincount(cd.class_of[y], minlength=n)
    return M


def _split_blocks(blocks, M, l):
    """Refine invariant blocks (row-basis matrices in RREF) under M."""
    out = []
    for B, piv in blocks:
        d = B.shape[0]
        if d == 1:
            out.append((B, piv))
            continue
        Y = (B @ M.T) % l
        R = Y[:, piv]
        assert ((R @ B) % l == Y).all(), "block not invariant"
        op = R.T % l
        # minimal polynomial of op, extending start vectors if deficient
        mp = [1]
        lams: list[int] = []
        spaces = []
        for start in range(d):
            v = np.zeros(d, dtype=np.int64)
            v[start] = 1
            if mp != [1] and not poly_apply_matvec(mp, op, v, l).any():
                continue
            rel = krylov_relation(op, v, l)
            mp = poly_lcm(mp, rel, l)
            lams = poly_roots(mp, l)
            spaces = [
                nullspace((op - lam * np.eye(d, dtype=np.int64)) % l, l)
                for lam in lams
            ]
            if sum(s.shape[0] for s in spaces) == d:
                break
        assert sum(s.shape[0] for s in spaces) == d, "operator not split"
        for N in spaces:
            nb = (N @ B) % l
            nb, npiv = rref(nb, l)
            out.append((nb, npiv))
    return out


def character_table_mod_l(group: MatrixGroup):
    """Mod-l character values: (Xl, l, z, cd) with Xl[t, k] = chi_t(z_k)."""
    cd = group.conjugacy()
    n = cd.n_classes
    e = cd.exponent
    l = dixon_prime(group.order, e)
    z = pow(primitive_root(l), (l - 1) // e, l)

    eye = np.eye(n, dtype=np.int64)
    blocks = [(eye.copy(), list(range(n)))]
    order_of_use = sorted(range(1, n), key=lambda i: (int(cd.sizes[i]), i))
    for i in order_of_use:
        if all(B.shape[0] == 1 for B, _ in blocks):
            break
        M = class_matrix(group, cd, i) % l
        blocks = _split_blocks(blocks, M, l)
    assert all(B.shape[0] == 1 for B, _ in blocks), "table did not split"

    V = np.vstack([B for B, _ in blocks]) % l
    assert (V[:, 0] != 0).all()
    V = (V * np.array([[inv_mod(int(v), l)] for v in V[:, 0]])) % l

    csz_inv = np.array([inv_mod(int(s), l) for s in cd.sizes], dtype=np.int64)
    inv_perm = cd.inverse_class
    degrees = np.zeros(n, dtype=np.int64)
    Xl = np.zeros((n, n), dtype=np.int64)
    for t in range(n):
        s = int((V[t] * V[t][inv_perm] % l * csz_inv % l).sum() % l)
        d2 = (group.order % l) * inv_mod(s, l) % l
        d = sqrt_mod(d2, l)
        d = min(d, l - d)
        degrees[t] = d
        Xl[t] = V[t] * d % l * csz_inv % l
    assert int((degrees.astype(object) ** 2).sum()) == group.order, (
        "degree recovery failed"
    )
    return Xl, degrees, l, z, cd


def lift_table(group: MatrixGroup):
    """Exact table: (int coefficient tensor (n, n, phi(e)), e, degrees, cd).

    Entry [t, k] holds the canonical Z[zeta_e] coefficients of chi_t(z_k).
    """
    Xl, degrees, l, z, cd = character_table_mod_l(group)
    n = cd.n_classes
    e = cd.exponent
    pm = cd.power_map()

    # inverse Fourier transform over each cyclic power orbit
    a_idx, i_idx = np.meshgrid(np.arange(e), np.arange(e), indexing="ij")
    zpow = np.array([pow(z, a, l) for a in range(e)], dtype=np.int64)
    Zmat = zpow[((-a_idx * i_idx) % e)] % l  # Zmat[a, i] = z^(-a i)
    e_inv = inv_mod(e, l)

    W = Xl[:, pm.reshape(-1)].reshape(n, n, e)
    mult = np.empty((n, n, e), dtype=np.int64)
    for t in range(n):
        mult[t] = W[t].reshape(n, e) @ Zmat % l * e_inv % l
    # multiplicities are genuine eigenvalue counts: they must sum to degrees
    sums = mult.sum(axis=2)
    assert (sums == degrees[:, None]).all(), "lift produced non-multiplicities"

    red = np.array([zeta_power_coeffs(e, j) for j in range(e)], dtype=np.int64)
    coeffs = (mult.reshape(-1, e) @ red).reshape(n, n, phi(e))
    return coeffs, e, degrees, cd


def verify_orthogonality(coeffs: np.ndarray, cd: ConjugacyData, order: int):
    """Exact first and second orthogonality over Z[zeta_e].

    Products are expanded in the power basis, summed with integer matrix
    multiplications, then reduced once by the cyclotomic relations; the
    result must match |G| * I resp. diag(centralizer orders) on the nose.
    """
    n, ncl, d = coeffs.shape
    w = cd.sizes.astype(np.int64)
    invp = cd.inverse_class
    maxc = int(np.abs(coeffs).max())
    assert ncl * int(w.max()) * maxc * maxc < 2**62, "int64 overflow risk"

    conj_coeffs = coeffs[:, invp, :]
    # first (row) orthogonality
    U = [
        sum(
            coeffs[:, :, a] @ (conj_coeffs[:, :, s - a] * w[None, :]).T
            for a in range(max(0, s - d + 1), min(d, s + 1))
        )
        for s in range(2 * d - 1)
    ]
    _check_reduced(U, order * np.eye(n, dtype=np.int64), cd)
    # second (column) orthogonality
    V = [
        sum(
            coeffs[:, :, a].T @ conj_coeffs[:, :, s - a]
            for a in range(max(0, s - d + 1), min(d, s + 1))
        )
        for s in range(2 * d - 1)
    ]
    _check_reduced(V, np.diag(cd.centralizer_orders.astype(np.int64)), cd)


def _check_reduced(U, target, cd):
    """Reduce sum_s U_s x^s mod Phi_e; must equal target at x^0 and vanish
    at every higher basis power."""
    from .cyclotomic import _power_reductions

    d = (len(U) + 1) // 2
    e = cd.exponent
    table = _power_reductions(e)
    acc = [np.zeros_like(U[0]) for _ in range(d)]
    for s, Us in enumerate(U):
        row = table[s]
        for j in range(d):
            if row[j]:
                acc[j] = acc[j] + int(row[j]) * Us
    assert (acc[0] == target).all(), "orthogonality failed (constant term)"
    for j in range(1, d):
        assert not acc[j].any(), "orthogonality failed (irrational part)"
