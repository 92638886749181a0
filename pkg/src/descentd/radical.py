"""Radical spanning sets of the type D descent algebra, exactly verified.

Over the rationals the radical is spanned by differences of equivalent
basis labels.  Mod an odd prime the same differences are joined by the
single basis elements whose label has a component repeated p or more times;
mod 2 almost everything falls in.  An alternative spanning set replaces the
multiplicity rule by divisibility of the self-structure constants.  The
verifier checks the two-sided ideal property, measures the nilpotency
index, and certifies maximality through the one-dimensional characters.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import labels as lb
from .algebra import addressed_mask, dense_times_sparse, structure_constant_mask
from .coxeter import group_data
from .linalg import Echelon


@dataclass
class RadicalBasis:
    """A spanning set of the radical: label differences and single labels."""

    table: object
    p: int
    spanning: list
    class_map: dict
    description: str = ""

    @property
    def dim(self):
        return self.table.dim

    def vectors(self):
        return [e.dense() for e in self.spanning]

    def echelon(self):
        ech = Echelon(self.dim, self.p)
        for v in self.vectors():
            ech.add(v)
        return ech

    def rank(self):
        return self.echelon().rank

    def quotient_dim(self):
        return self.dim - self.rank()

    def contains(self, elem):
        if elem.table is not self.table:
            raise ValueError("element belongs to a different table")
        return self.echelon().contains(elem.dense())


def _check_type_d(table):
    if table.group_type != "D":
        raise ValueError("radical spanning sets are implemented for type D tables")


def _difference_elements(table, p):
    cmap = lb.class_map(table.n)
    out = []
    for k in table.basis:
        rep = cmap[k]
        if rep != k:
            out.append(
                table.basis_element(k, p) - table.basis_element(rep, p)
            )
    return out


def radical_char0(table):
    """Differences of equivalent labels against their class representative.

    The spanning set has one element per non-representative label, so its
    size is the basis size minus the number of classes.
    """
    _check_type_d(table)
    return RadicalBasis(
        table,
        None,
        _difference_elements(table, None),
        lb.class_map(table.n),
        description="differences over label equivalence classes",
    )


def radical_mod_p(table, p):
    """The combinatorial mod-p spanning set.

    Odd p: the characteristic-zero differences plus every label with a
    component of multiplicity at least p.  p = 2: every non-empty label when
    n is even; when n is odd all labels except the empty one and the two
    one-part copies, plus the difference of those copies.
    """
    _check_type_d(table)
    lb._check_prime(p)
    n = table.n
    if p != 2:
        spanning = _difference_elements(table, p)
        spanning += [
            table.basis_element(k, p)
            for k in table.basis
            if lb.max_multiplicity(k) >= p
        ]
        desc = "class differences plus labels with a component of multiplicity >= p"
    elif n % 2 == 0:
        spanning = [
            table.basis_element(k, p) for k in table.basis if k.parts != ()
        ]
        desc = "all non-empty labels (p=2, n even)"
    else:
        main = lb.Composition((n,), lb.Region.MAIN, n)
        prime = lb.Composition((n,), lb.Region.MAIN_PRIME, n)
        spanning = [
            table.basis_element(k, p)
            for k in table.basis
            if k.parts != () and k not in (main, prime)
        ]
        spanning.append(table.basis_element(main, p) - table.basis_element(prime, p))
        desc = "all labels but three, plus the one-part difference (p=2, n odd)"
    return RadicalBasis(table, p, spanning, lb.class_map(n), description=desc)


def radical_mod_p_via_ajjj(table, p):
    """Spanning set from divisibility of the self-structure constants.

    Differences over conjugate subsets (the label classes) together with the
    single labels whose addressed subset T has p dividing the count of
    elements fixing T under conjugation.
    """
    _check_type_d(table)
    lb._check_prime(p)
    gd = group_data(table.n, "D")
    spanning = _difference_elements(table, p)
    for k in table.basis:
        t = addressed_mask(k, "D")
        if structure_constant_mask(gd, t, t, t) % p == 0:
            spanning.append(table.basis_element(k, p))
    return RadicalBasis(
        table,
        p,
        spanning,
        lb.class_map(table.n),
        description="class differences plus labels with p | a_TTT",
    )


@dataclass
class IdealReport:
    is_left_ideal: bool
    is_right_ideal: bool
    nilpotency_index: int
    quotient_dim: int
    failures: list = field(default_factory=list)

    @property
    def is_ideal(self):
        return self.is_left_ideal and self.is_right_ideal


def verify_ideal(rb, nilpotency_cap=None):
    """Check the two-sided ideal property and measure nilpotency.

    Escaping products are reported (spanning index, side, basis index)
    rather than raised.  The nilpotency index is the least power of the span
    that vanishes, searched up to dimension + 1.
    """
    table = rb.table
    dim = table.dim
    p = rb.p
    ech = rb.echelon()
    failures = []
    left_ok = right_ok = True
    seen = set()
    for si, v in enumerate(rb.spanning):
        for j in range(dim):
            bj = table.basis_element(j, p)
            for side, prod in (("right", v * bj), ("left", bj * v)):
                key = (side, tuple(sorted(prod.coeffs.items())))
                if key in seen:
                    continue
                seen.add(key)
                if not ech.contains(prod.dense()):
                    failures.append((si, side, j))
                    if side == "right":
                        right_ok = False
                    else:
                        left_ok = False
    quotient = dim - ech.rank
    cap = dim + 1 if nilpotency_cap is None else nilpotency_cap
    index = None
    power_basis = list(ech.pivots.values())
    k = 1
    while True:
        if not power_basis:
            index = k
            break
        if k > cap:
            failures.append(("nilpotency-cap", cap, None))
            break
        nxt = Echelon(dim, p)
        for u in power_basis:
            for v in rb.spanning:
                nxt.add(dense_times_sparse(table, u, v.coeffs, p))
        power_basis = list(nxt.pivots.values())
        k += 1
    return IdealReport(left_ok, right_ok, index, quotient, failures)


def spans_equal(rb_a, rb_b):
    """Exact equality of two spanning sets' spans (same table, same field)."""
    if rb_a.table is not rb_b.table or rb_a.p != rb_b.p:
        raise ValueError("spans live in different algebras")
    ea, eb = rb_a.echelon(), rb_b.echelon()
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(v) for v in rb_b.vectors())


def certificate(rb):
    """Character-based maximality certificate for a verified span.

    The distinct one-dimensional characters must all vanish on the span and
    be as many as the quotient dimension; together with nilpotency this
    pins the span as the whole radical.
    """
    from .characters import IrreducibleCharacter

    table = rb.table
    p = rb.p
    reps = lb.class_representatives(table.n)
    vectors = []
    for rep in reps:
        vec = IrreducibleCharacter(table, rep).vector()
        vectors.append(tuple(v % p for v in vec) if p else vec)
    distinct = sorted(set(vectors))
    ech = Echelon(table.dim, p)
    for v in distinct:
        ech.add(list(v))
    vanish = all(
        (sum(c * vec[i] for i, c in e.coeffs.items()) % p if p else
         sum(c * vec[i] for i, c in e.coeffs.items())) == 0
        for e in rb.spanning
        for vec in distinct
    )
    qdim = rb.quotient_dim()
    return {
        "distinct_characters": len(distinct),
        "character_rank": ech.rank,
        "quotient_dim": qdim,
        "characters_vanish_on_span": vanish,
        "certified": vanish and len(distinct) == qdim and ech.rank == qdim,
    }
