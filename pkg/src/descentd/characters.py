"""Permutation characters at Coxeter elements and the induced irreducibles.

For each class representative label the addressed subset is the complement
of the label's subset, matching the basis convention of the algebra module.
The square matrix of permutation-character values at Coxeter elements has
pairwise distinct columns, and each column induces a one-dimensional
representation of the descent algebra; reducing entries mod p and dropping
duplicate columns does the same for the mod-p algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import labels as lb
from .algebra import addressed_mask
from .coxeter import (
    GeneratorSet,
    SignedPermutation,
    _compose_t,
    _inverse_t,
    generator,
    group_data,
)


def _mask_of(J):
    return J.mask if isinstance(J, GeneratorSet) else int(J)


def parabolic_subgroup(n, J, gtype="D", max_n=None):
    """The standard parabolic subgroup generated by ``J``, as a set."""
    gd = group_data(n, gtype, max_n)
    member = gd.parabolic_bitmap(_mask_of(J))
    return {SignedPermutation(gd.images[x]) for x in range(gd.size) if member[x]}


def coxeter_element(J, ordering=None):
    """Product of the generators of ``J`` in the given order.

    The default order is the canonical generator order (primed generator
    first).  ``ordering`` must list every member of ``J`` exactly once.
    """
    n, gtype = J.n, J.gtype
    if ordering is None:
        ordering = sorted(J.members)
    elif sorted(ordering) != sorted(J.members) or len(ordering) != len(J.members):
        raise ValueError(f"{ordering!r} is not an ordering of {J!r}")
    img = tuple(range(1, n + 1))
    for g in ordering:
        img = _compose_t(img, generator(n, g, gtype).image)
    return SignedPermutation(img)


def _phi_values(gd, jmask, w_images):
    # count right cosets of W_J fixed by each w: those with x w x^-1 in W_J;
    # one pass over the minimal coset representatives serves every w
    member = gd.parabolic_bitmap(jmask)
    idx = gd.index()
    des_l = gd.des_l
    totals = [0] * len(w_images)
    for x in range(gd.size):
        if des_l[x] & jmask:
            continue
        ximg = gd.images[x]
        xinv = _inverse_t(ximg)
        for i, w_image in enumerate(w_images):
            z = _compose_t(_compose_t(ximg, w_image), xinv)
            if member[idx[z]]:
                totals[i] += 1
    return totals


def _phi_mask(gd, jmask, w_image):
    return _phi_values(gd, jmask, [w_image])[0]


def perm_character(n, J, w, gtype="D", max_n=None):
    """Number of right cosets of the parabolic W_J fixed by ``w``."""
    gd = group_data(n, gtype, max_n)
    return _phi_mask(gd, _mask_of(J), w.image)


@dataclass
class CharacterMatrix:
    """Character values at Coxeter elements over the class representatives.

    ``entries[r][c]`` is the character of the coset action for the subset
    addressed by representative ``r``, evaluated at the Coxeter element of
    the subset addressed by representative ``c``.
    """

    n: int
    representatives: tuple
    entries: tuple

    def column(self, c):
        return tuple(row[c] for row in self.entries)

    def columns_mod(self, p):
        return [tuple(v % p for v in self.column(c)) for c in range(len(self.representatives))]


def character_matrix(n, max_n=None):
    """The full character-value matrix for type D of rank ``n``."""
    gd = group_data(n, "D", max_n)
    reps = lb.class_representatives(n)
    masks = [addressed_mask(k, "D") for k in reps]
    cox = [
        coxeter_element(GeneratorSet.from_mask(m, n, "D")).image for m in masks
    ]
    entries = tuple(tuple(_phi_values(gd, jm, cox)) for jm in masks)
    return CharacterMatrix(n, reps, entries)


@lru_cache(maxsize=None)
def extended_character_table(n):
    """Character values on every basis label, per class representative.

    ``extended_character_table(n)[i][c]`` evaluates the one-dimensional map
    of representative ``c`` on the basis label at position ``i``; the
    character matrix is the square submatrix on representative rows.
    """
    gd = group_data(n, "D")
    labs = lb.all_labels(n)
    reps = lb.class_representatives(n)
    cox = [
        coxeter_element(GeneratorSet.from_mask(addressed_mask(k, "D"), n, "D")).image
        for k in reps
    ]
    return tuple(
        tuple(_phi_values(gd, addressed_mask(k, "D"), cox)) for k in labs
    )


class IrreducibleCharacter:
    """The one-dimensional representation attached to one representative.

    Maps the basis element of label ``k`` to the character of the subset
    addressed by ``k`` at the Coxeter element of the subset addressed by the
    chosen representative, extended linearly.
    """

    def __init__(self, table, rep):
        if table.group_type != "D":
            raise ValueError("irreducible maps are built for type D tables")
        self.table = table
        self.rep = rep
        self._col = lb.class_representatives(table.n).index(rep)

    def on_basis(self, i):
        return extended_character_table(self.table.n)[i][self._col]

    def __call__(self, elem):
        if elem.table is not self.table:
            raise ValueError("element belongs to a different table")
        total = sum(c * self.on_basis(i) for i, c in elem.coeffs.items())
        return total % elem.p if elem.p else total

    def vector(self):
        """Values on the full basis, in basis order."""
        return tuple(self.on_basis(i) for i in range(self.table.dim))


def irreducible_map(table, rep):
    """Linear functional through the character matrix column of ``rep``."""
    return IrreducibleCharacter(table, rep)


def irreducibles_mod_p(matrix, p, n=None):
    """Distinct columns of the character matrix with entries reduced mod p.

    Columns are returned in first-occurrence order.
    """
    lb._check_prime(p)
    seen = set()
    out = []
    for col in matrix.columns_mod(p):
        if col not in seen:
            seen.add(col)
            out.append(col)
    return out
