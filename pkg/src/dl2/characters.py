"""Class functions, character tables, and the induction/inflation calculus.

Values are exact cyclotomics (`Cyclo`); inner products are exact rationals.
The heavy lifting (table computation, orthogonality) lives in `dixon` and
works on integer coefficient tensors; this module wraps the results in
objects convenient for the verification layer.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .abelian import DualChar
from .cyclotomic import Cyclo, phi
from .dixon import lift_table, verify_orthogonality
from .groups import MatrixGroup, ReductionHom, make_group


class ClassFunction:
    """A class function on an enumerated group, one Cyclo per class."""

    __slots__ = ("group", "values", "irreducible")

    def __init__(self, group: MatrixGroup, values, irreducible: bool = False):
        self.group = group
        self.values = tuple(values)
        self.irreducible = irreducible
        assert len(self.values) == group.conjugacy().n_classes

    def degree(self):
        return self.values[0]

    def __add__(self, other):
        assert self.group is other.group
        return ClassFunction(
            self.group, [a + b for a, b in zip(self.values, other.values)]
        )

    def __sub__(self, other):
        assert self.group is other.group
        return ClassFunction(
            self.group, [a - b for a, b in zip(self.values, other.values)]
        )

    def __neg__(self):
        return ClassFunction(self.group, [-a for a in self.values])

    def __mul__(self, other):
        """Pointwise product (tensor product of characters)."""
        assert self.group is other.group
        return ClassFunction(
            self.group, [a * b for a, b in zip(self.values, other.values)]
        )

    def conj(self):
        return ClassFunction(self.group, [v.conj() for v in self.values])

    def value_at_code(self, code: int) -> Cyclo:
        cd = self.group.conjugacy()
        return self.values[int(cd.class_of[code])]

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and self.group is other.group
            and self.values == other.values
        )

    def __hash__(self):
        return hash((id(self.group), self.values))

    def __repr__(self):
        return f"ClassFunction(deg={self.degree()}, irr={self.irreducible})"


def inner_product(f: ClassFunction, g: ClassFunction) -> Fraction:
    """<f, g> = (1/|G|) sum over G of f * conj(g), exact."""
    if f.group is not g.group:
        raise ValueError("inner product requires class functions on one group")
    cd = f.group.conjugacy()
    acc = Cyclo.zero(1)
    for k in range(cd.n_classes):
        term = f.values[k] * g.values[k].conj()
        acc = acc + term.scale(int(cd.sizes[k]))
    if not acc.is_rational():
        raise ValueError("inner product is not rational")
    return acc.rational_value() / f.group.order


class CharacterTable:
    """All irreducible characters of a group, canonically ordered."""

    def __init__(self, group: MatrixGroup, parts=None):
        if parts is None:
            coeffs, e, degs, cd = lift_table(group)
        else:
            coeffs, e, degs = parts
            cd = group.conjugacy()
        self.group = group
        self.exponent = e
        self.conjugacy = cd
        order = sorted(
            range(len(degs)),
            key=lambda t: (int(degs[t]), tuple(map(tuple, coeffs[t].tolist()))),
        )
        self.coeffs = coeffs[order]
        self.degrees = degs[order]
        self.chars = [
            ClassFunction(
                group,
                [Cyclo(e, self.coeffs[t, k].tolist()) for k in range(cd.n_classes)],
                irreducible=True,
            )
            for t in range(len(degs))
        ]
        self._index = {ch.values: i for i, ch in enumerate(self.chars)}

    def __len__(self):
        return len(self.chars)

    def verify(self):
        """Exact orthogonality and degree identities; raises on failure."""
        verify_orthogonality(self.coeffs, self.conjugacy, self.group.order)
        assert int((self.degrees.astype(object) ** 2).sum()) == self.group.order
        assert len(self.chars) == self.conjugacy.n_classes
        for d in self.degrees:
            assert self.group.order % int(d) == 0, "degree does not divide |G|"

    def find(self, f: ClassFunction) -> int | None:
        """Index of an irreducible equal to f, or None."""
        return self._index.get(tuple(f.values))

    def degree_count(self, d: int) -> int:
        return int((self.degrees == d).sum())

    def decompose(self, f: ClassFunction) -> list[tuple[int, Fraction]]:
        """Multiplicities <f, chi_i> for every irreducible, nonzero only."""
        out = []
        for i, ch in enumerate(self.chars):
            m = inner_product(f, ch)
            if m != 0:
                out.append((i, m))
        return out

    # -- dumps (stable, exact) ---------------------------------------------

    def to_tsv(self) -> str:
        cd = self.conjugacy
        lines = ["\t".join(["rep_index", "class_size"] + [f"chi{i}" for i in range(len(self))])]
        for k in range(cd.n_classes):
            rep_index = int(self.group.pos_of[int(cd.reps[k])])
            row = [str(rep_index), str(int(cd.sizes[k]))]
            row += [repr(ch.values[k]) for ch in self.chars]
            lines.append("\t".join(row))
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        cd = self.conjugacy
        return {
            "format": "dl2-table/1",
            "order": self.group.order,
            "flavor": self.group.flavor,
            "exponent": self.exponent,
            "class_reps": [int(c) for c in cd.reps],
            "class_sizes": [int(s) for s in cd.sizes],
            "characters": [
                {
                    "degree": int(self.degrees[i]),
                    "values": [list(map(int, self.coeffs[i, k])) for k in range(cd.n_classes)],
                }
                for i in range(len(self))
            ],
        }


_TABLE_CACHE: dict = {}
TABLE_BOUND = 50_000


def character_table(group: MatrixGroup, bound: int = TABLE_BOUND) -> CharacterTable:
    """Table of a group, cached per group object; enforces the size bound."""
    key = id(group)
    if key not in _TABLE_CACHE:
        if group.order > bound:
            raise ValueError(f"|G| = {group.order} exceeds table bound {bound}")
        _TABLE_CACHE[key] = CharacterTable(group)
    return _TABLE_CACHE[key]


# ---------------------------------------------------------------------------
# inflation along reductions, and the averaging adjoint


def inflate(chi: ClassFunction, hom: ReductionHom) -> ClassFunction:
    """Pull back a class function on G_{r'} to G_r along the reduction."""
    assert chi.group is hom.target
    src_cd = hom.source.conjugacy()
    tgt_cd = hom.target.conjugacy()
    vals = []
    for k in range(src_cd.n_classes):
        img = hom(int(src_cd.reps[k]))
        vals.append(chi.values[int(tgt_cd.class_of[img])])
    return ClassFunction(hom.source, vals, irreducible=chi.irreducible)


def kernel_average(psi: ClassFunction, hom: ReductionHom) -> ClassFunction:
    """The class function on G_{r'} obtained by averaging psi over kernel
    cosets: psi^N(ybar) = (1/|N|) sum over n in N of psi(y n)."""
    assert psi.group is hom.source
    src = hom.source
    src_cd = src.conjugacy()
    tgt_cd = hom.target.conjugacy()
    N = hom.kernel_codes
    sp = src.space
    vals = []
    for k in range(tgt_cd.n_classes):
        tgt_rep = int(tgt_cd.reps[k])
        # some preimage of the representative
        pos = int(np.nonzero(hom.image_of == tgt_rep)[0][0])
        y = int(src.codes[pos])
        coset = sp.mul(np.int64(y), N)
        classes = src_cd.class_of[coset]
        acc = Cyclo.zero(1)
        counts = np.bincount(classes, minlength=src_cd.n_classes)
        for cidx in np.nonzero(counts)[0]:
            acc = acc + psi.values[int(cidx)].scale(int(counts[cidx]))
        vals.append(acc.scale(Fraction(1, len(N))))
    return ClassFunction(hom.target, vals)


def adjunction_check(chi: ClassFunction, psi: ClassFunction, hom: ReductionHom) -> bool:
    """Whether <inflate(chi), psi>_G equals <chi, kernel_average(psi)>_{G'}."""
    lhs = inner_product(inflate(chi, hom), psi)
    rhs = inner_product(chi, kernel_average(psi, hom))
    return lhs == rhs


# ---------------------------------------------------------------------------
# induction and restriction


def induce(group: MatrixGroup, sub_codes: np.ndarray, sub_values: dict) -> ClassFunction:
    """Induced class function from a subgroup given by element codes and a
    value dict code -> Cyclo.  Standard formula summed over the big group."""
    sp = group.space
    cd = group.conjugacy()
    in_sub = np.zeros(sp.N, dtype=bool)
    in_sub[sub_codes] = True
    all_codes = group.codes
    all_inv = sp.inv(all_codes)
    vals = []
    for k in range(cd.n_classes):
        z = np.int64(cd.reps[k])
        conjs = sp.mul(sp.mul(all_inv, z), all_codes)
        hits = conjs[in_sub[conjs]]
        acc = Cyclo.zero(1)
        if len(hits):
            uniq, cnt = np.unique(hits, return_counts=True)
            for u, c in zip(uniq, cnt):
                acc = acc + sub_values[int(u)].scale(int(c))
        vals.append(acc.scale(Fraction(1, len(sub_codes))))
    return ClassFunction(group, vals)


def restrict(chi: ClassFunction, sub_codes: np.ndarray) -> dict:
    """Restriction to a subgroup as a value dict code -> Cyclo."""
    cd = chi.group.conjugacy()
    return {int(c): chi.values[int(cd.class_of[c])] for c in sub_codes}


def restrict_to_group(chi: ClassFunction, sub: MatrixGroup, positions: np.ndarray) -> ClassFunction:
    """Restriction along an embedding of enumerated groups; positions maps
    sub's element index to the big group's element index."""
    big_cd = chi.group.conjugacy()
    sub_cd = sub.conjugacy()
    vals = []
    big_codes = chi.group.codes
    for k in range(sub_cd.n_classes):
        sub_pos = int(sub.pos_of[int(sub_cd.reps[k])])
        big_code = int(big_codes[int(positions[sub_pos])])
        vals.append(chi.values[int(big_cd.class_of[big_code])])
    return ClassFunction(sub, vals)


def trivial_character(group: MatrixGroup) -> ClassFunction:
    one = Cyclo.from_rational(1)
    return ClassFunction(group, [one] * group.conjugacy().n_classes, irreducible=True)


def steinberg(group: MatrixGroup) -> ClassFunction:
    """Ind_B^G(1) - 1 at level r = 1; verified irreducible of degree q."""
    if group.ring.r != 1:
        raise ValueError("the Steinberg construction here requires level 1")
    B = group.borel_codes()
    one = Cyclo.from_rational(1)
    ind = induce(group, B, {int(c): one for c in B})
    st = ind - trivial_character(group)
    ip = inner_product(st, st)
    if ip != 1:
        raise ArithmeticError(f"Steinberg candidate has norm {ip}, expected 1")
    st.irreducible = True
    assert st.degree() == group.ring.q
    return st


def linear_character_from_det(group: MatrixGroup, alpha: DualChar) -> ClassFunction:
    """The one-dimensional character g -> alpha(det g)."""
    cd = group.conjugacy()
    dets = group.space.det[cd.reps]
    L = alpha.group.exponent
    vals = [Cyclo.root_of_unity(L, alpha.root_exp(int(d))) for d in dets]
    return ClassFunction(group, vals, irreducible=True)


def tensor_linear(chi: ClassFunction, alpha: DualChar) -> ClassFunction:
    """chi tensored with alpha(det(-)); preserves degree and irreducibility."""
    lin = linear_character_from_det(chi.group, alpha)
    out = chi * lin
    out.irreducible = chi.irreducible
    return out
