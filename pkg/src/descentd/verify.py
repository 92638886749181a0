"""Invariant suite behind the ``verify`` command.

Each check returns a result with a name, a flag, and a detail string that
carries the first counterexample on failure.  Exhaustive checks are run at
small ranks and replaced by seeded random sampling where the group grows.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import algebra, characters, labels as lb, radical, typea
from .coxeter import GeneratorSet, compose, enumerate_group, group_data, inverse, length


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _result(name, ok, bad=""):
    return CheckResult(name, ok, "" if ok else f"first counterexample: {bad}")


def check_group_order(gtype, n):
    gd = group_data(n, gtype)
    if gtype == "D":
        expected = 2 ** (n - 1) * _factorial(n)
    else:
        expected = _factorial(n)
    if gd.size != expected:
        return _result("group-order", False, f"|W| = {gd.size}, expected {expected}")
    if gtype == "D":
        for img in gd.images:
            if sum(v < 0 for v in img) % 2:
                return _result("group-order", False, f"odd sign count in {img}")
    if len(set(gd.images)) != gd.size:
        return _result("group-order", False, "duplicate elements in enumeration")
    return _result("group-order", True)


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def _inversions(img):
    return sum(
        1 for i in range(len(img)) for j in range(i + 1, len(img)) if img[i] > img[j]
    )


def check_descents_and_lengths(gtype, n, seed=0):
    gd = group_data(n, gtype)
    if n <= (4 if gtype == "D" else 5):
        # exhaustive: formula length against BFS word length, closed-form
        # descents against the length comparison, left descents via inverses
        depths = gd.word_lengths()
        word_len = (lambda w: length(w)) if gtype == "D" else (lambda w: _inversions(w.image))
        for x, w in enumerate(enumerate_group(n, gtype)):
            if word_len(w) != depths[x]:
                return _result(
                    "descents-and-lengths", False, f"length({w.image}) != BFS depth {depths[x]}"
                )
            mask = 0
            for g in range(gd.n_gen):
                s = _gen(n, g, gtype)
                if word_len(compose(w, s)) < word_len(w):
                    mask |= 1 << g
            if mask != gd.des_r[x]:
                return _result(
                    "descents-and-lengths", False, f"descent mask of {w.image}: {gd.des_r[x]} != {mask}"
                )
            inv_mask = gd.des_r[gd.index()[inverse(w).image]]
            if gd.des_l[x] != inv_mask:
                return _result("descents-and-lengths", False, f"left descents of {w.image}")
        return _result("descents-and-lengths", True)
    # larger ranks: seeded sample against the length comparison
    rng = random.Random(seed)
    sample = rng.sample(range(gd.size), min(200, gd.size))
    from .coxeter import SignedPermutation

    word_len = (lambda w: length(w)) if gtype == "D" else (lambda w: _inversions(w.image))
    for x in sample:
        w = SignedPermutation(gd.images[x])
        for g in range(gd.n_gen):
            s = _gen(n, g, gtype)
            drop = word_len(compose(w, s)) < word_len(w)
            if drop != bool(gd.des_r[x] >> g & 1):
                return _result("descents-and-lengths", False, f"{w.image}, generator bit {g}")
    return _result("descents-and-lengths", True)


def _gen(n, bit, gtype):
    from .coxeter import bit_gen, generator

    return generator(n, bit_gen(bit, gtype), gtype)


def check_label_bijection(n):
    labs = lb.all_labels(n)
    if len(labs) != 1 << n:
        return _result("label-bijection", False, f"{len(labs)} labels, expected {1 << n}")
    masks = [lb.subset_mask(k) for k in labs]
    if len(set(masks)) != len(masks):
        return _result("label-bijection", False, "subset map is not injective")
    if set(masks) != set(range(1 << n)):
        return _result("label-bijection", False, "subset map is not onto")
    for k, m in zip(labs, masks):
        back = lb.composition_from_mask(m, n, "D")
        if back != k:
            return _result("label-bijection", False, f"{k} -> {m:#x} -> {back}")
        in_j = (bool(m & 1), bool(m & 2))
        region = {
            (True, True): lb.Region.ONE,
            (True, False): lb.Region.MAIN,
            (False, True): lb.Region.MAIN_PRIME,
            (False, False): lb.Region.SMALL,
        }[in_j]
        if k.region is not region:
            return _result("label-bijection", False, f"region of {k} vs membership {in_j}")
    return _result("label-bijection", True)


def check_equivalence_classes(n):
    labs = lb.all_labels(n)
    cmap = lb.class_map(n)
    for a in labs:
        for b in labs:
            if lb.equivalent(a, b) != (cmap[a] == cmap[b]):
                return _result("equivalence-classes", False, f"{a} ~ {b}")
        if not lb.equivalent(a, a):
            return _result("equivalence-classes", False, f"{a} not reflexive")
    reps = lb.class_representatives(n)
    if len(reps) != len(set(cmap.values())):
        return _result("equivalence-classes", False, "representative count mismatch")
    if any(not k.is_partition() for k in reps):
        return _result("equivalence-classes", False, "non-partition representative")
    return _result("equivalence-classes", True)


def check_table_identity(table):
    e = table.identity_index()
    for j in range(table.dim):
        if table.product_on_basis(e, j) != {j: 1}:
            return _result("table-identity", False, f"e * B_{table.basis[j]}")
        if table.product_on_basis(j, e) != {j: 1}:
            return _result("table-identity", False, f"B_{table.basis[j]} * e")
    return _result("table-identity", True)


def check_counting_identity(table):
    for i in range(table.dim):
        for j in range(table.dim):
            if not table.counting_identity_holds(i, j):
                return _result(
                    "counting-identity", False, f"({table.basis[i]}, {table.basis[j]})"
                )
    return _result("counting-identity", True)


def check_associativity(table, seed=0):
    dim = table.dim
    if dim <= 16:
        triples = [(i, j, k) for i in range(dim) for j in range(dim) for k in range(dim)]
    else:
        rng = random.Random(seed)
        triples = [
            (rng.randrange(dim), rng.randrange(dim), rng.randrange(dim)) for _ in range(200)
        ]
    for i, j, k in triples:
        a = table.basis_element(i)
        b = table.basis_element(j)
        c = table.basis_element(k)
        if (a * b) * c != a * (b * c):
            return _result(
                "associativity",
                False,
                f"({table.basis[i]}, {table.basis[j]}, {table.basis[k]})",
            )
    return _result("associativity", True)


def check_method_agreement(table):
    if table.n > 5:
        return CheckResult("method-agreement", True, "skipped (rank > 5)")
    oracle = algebra.table_from_group_algebra(table.n, table.group_type)
    if oracle.constants == table.constants:
        return _result("method-agreement", True)
    for pair, row in oracle.constants.items():
        if table.constants.get(pair, {}) != row:
            return _result(
                "method-agreement",
                False,
                f"pair ({table.basis[pair[0]]}, {table.basis[pair[1]]})",
            )
    for pair in table.constants:
        if pair not in oracle.constants:
            return _result("method-agreement", False, f"extra row {pair}")
    return _result("method-agreement", True)


def check_matrix_rule_agreement(table):
    if table.group_type != "A":
        return CheckResult("matrix-rule-agreement", True, "skipped (type D)")
    if table.n > 5:
        return CheckResult("matrix-rule-agreement", True, "skipped (rank > 5)")
    for i, ka in enumerate(table.basis):
        for j, kb in enumerate(table.basis):
            want = {
                table.label_index(kr): c for kr, c in typea.multiply_sn(ka, kb).items()
            }
            if want != table.product_on_basis(i, j):
                return _result("matrix-rule-agreement", False, f"({ka}, {kb})")
    return _result("matrix-rule-agreement", True)


def check_radical_char0(table):
    rb = radical.radical_char0(table)
    n = table.n
    classes = len(lb.class_representatives(n))
    if len(rb.spanning) != table.dim - classes:
        return _result("radical-char0", False, f"spanning size {len(rb.spanning)}")
    report = radical.verify_ideal(rb)
    if not report.is_ideal:
        return _result("radical-char0", False, f"escaping product {report.failures[0]}")
    if report.nilpotency_index is None:
        return _result("radical-char0", False, "nilpotency cap exceeded")
    if report.quotient_dim != classes:
        return _result(
            "radical-char0", False, f"quotient {report.quotient_dim} != classes {classes}"
        )
    cert = radical.certificate(rb)
    if not cert["certified"]:
        return _result("radical-char0", False, f"certificate {cert}")
    return _result("radical-char0", True)


def check_radical_mod_p(table, p):
    rb = radical.radical_mod_p(table, p)
    alt = radical.radical_mod_p_via_ajjj(table, p)
    if not radical.spans_equal(rb, alt):
        return _result("radical-mod-p", False, f"spans differ for p={p}")
    report = radical.verify_ideal(rb)
    if not report.is_ideal:
        return _result("radical-mod-p", False, f"escaping product {report.failures[0]}")
    if report.nilpotency_index is None:
        return _result("radical-mod-p", False, "nilpotency cap exceeded")
    n = table.n
    expected = len(lb.p_modular_representatives(n, p))
    if report.quotient_dim != expected:
        return _result(
            "radical-mod-p",
            False,
            f"quotient {report.quotient_dim} != modular representatives {expected}",
        )
    if p == 2 and report.quotient_dim != (1 if n % 2 == 0 else 2):
        return _result("radical-mod-p", False, f"p=2 quotient {report.quotient_dim}")
    cert = radical.certificate(rb)
    if not cert["certified"]:
        return _result("radical-mod-p", False, f"certificate {cert}")
    return _result("radical-mod-p", True)


def check_characters(table, seed=0):
    n = table.n
    matrix = characters.character_matrix(n)
    reps = matrix.representatives
    classes = len(reps)
    cols = {matrix.column(c) for c in range(classes)}
    if len(cols) != classes:
        return _result("characters", False, "duplicate columns over the rationals")
    empty = lb.Composition((), lb.Region.SMALL, n)
    row = matrix.entries[reps.index(empty)]
    if any(v != 1 for v in row):
        return _result("characters", False, "row of the empty label is not all ones")
    ones = lb.Composition((1,) * n, lb.Region.ONE, n)
    gd = group_data(n, "D")
    col = matrix.column(reps.index(ones))
    for r, k in enumerate(reps):
        t = algebra.addressed_mask(k, "D")
        index = len(algebra._coset_rep_indices(gd, t))
        if col[r] != index:
            return _result("characters", False, f"identity column at {k}")
    # multiplicativity of the induced maps
    dim = table.dim
    if dim <= 16:
        pairs = [(i, j) for i in range(dim) for j in range(dim)]
    else:
        rng = random.Random(seed)
        pairs = [(rng.randrange(dim), rng.randrange(dim)) for _ in range(60)]
    for rep in reps:
        theta = characters.irreducible_map(table, rep)
        for i, j in pairs:
            prod = table.basis_element(i) * table.basis_element(j)
            if theta(prod) != theta.on_basis(i) * theta.on_basis(j):
                return _result(
                    "characters", False, f"theta_{rep} not multiplicative at ({i}, {j})"
                )
    # invariance under the Coxeter-element ordering
    if n <= 4:
        import itertools

        for k in reps:
            t = algebra.addressed_mask(k, "D")
            J = GeneratorSet.from_mask(t, n, "D")
            base = [characters.perm_character(n, algebra.addressed_mask(r, "D"),
                                              characters.coxeter_element(J)) for r in reps]
            for ordering in itertools.permutations(sorted(J.members)):
                c = characters.coxeter_element(J, ordering)
                got = [
                    characters.perm_character(n, algebra.addressed_mask(r, "D"), c)
                    for r in reps
                ]
                if got != base:
                    return _result("characters", False, f"ordering {ordering} of {J}")
    if n <= 4:
        # orbit counting: the coset action is transitive
        elems = enumerate_group(n, "D")
        for k in reps:
            t = algebra.addressed_mask(k, "D")
            total = sum(characters.perm_character(n, t, w) for w in elems)
            if total != len(elems):
                return _result("characters", False, f"orbit count at {k}")
    return _result("characters", True)


def check_irreducibles_mod_p(table, p):
    n = table.n
    matrix = characters.character_matrix(n)
    cols = characters.irreducibles_mod_p(matrix, p)
    rb = radical.radical_mod_p(table, p)
    qdim = rb.quotient_dim()
    if len(cols) != qdim:
        return _result(
            "irreducibles-mod-p", False, f"{len(cols)} distinct columns, quotient {qdim}"
        )
    selected = lb.p_modular_representatives(n, p)
    by_rep = {
        rep: tuple(v % p for v in matrix.column(c))
        for c, rep in enumerate(matrix.representatives)
    }
    chosen = [by_rep[rep] for rep in selected]
    if len(set(chosen)) != len(chosen) or set(chosen) != set(cols):
        return _result("irreducibles-mod-p", False, "selected labels do not hit each column once")
    return _result("irreducibles-mod-p", True)


def run_verify(gtype, n, p=None, threads=1, max_n=None, seed=0):
    """Run the invariant suite for one (type, rank, optional prime)."""
    results = [check_group_order(gtype, n), check_descents_and_lengths(gtype, n, seed)]
    table = algebra.get_table(gtype, n, threads=threads, max_n=max_n)
    if gtype == "D":
        results.append(check_label_bijection(n))
        results.append(check_equivalence_classes(n))
    results.append(check_table_identity(table))
    results.append(check_counting_identity(table))
    results.append(check_associativity(table, seed))
    results.append(check_method_agreement(table))
    if gtype == "A":
        results.append(check_matrix_rule_agreement(table))
    if gtype == "D":
        results.append(check_radical_char0(table))
        results.append(check_characters(table, seed))
        if p is not None:
            results.append(check_radical_mod_p(table, p))
            results.append(check_irreducibles_mod_p(table, p))
    return results
