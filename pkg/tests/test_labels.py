"""Label tests: the four-region set, the subset bijection, and equivalence."""

import pytest

from descentd.coxeter import PRIME, GeneratorSet
from descentd.labels import (
    Composition,
    Region,
    all_labels,
    class_map,
    class_representatives,
    composition_from_mask,
    composition_of,
    equivalent,
    format_label,
    max_multiplicity,
    modular_indexing_report,
    p_modular_representatives,
    parse_label,
    subset_mask,
    subset_of,
    type_a_labels,
)


def L(parts, region, n):
    return Composition(tuple(parts), region, n)


def test_all_labels_n3_exact():
    expected = [
        "[]@Small",
        "[1]@Small",
        "[1,1,1]@One",
        "[1,2]@One",
        "[2,1]@Main",
        "[3]@Main",
        "[2,1]@MainPrime",
        "[3]@MainPrime",
    ]
    assert [str(k) for k in all_labels(3)] == expected


def test_all_labels_n2_exact():
    assert [str(k) for k in all_labels(2)] == ["[]@Small", "[1,1]@One", "[2]@Main", "[2]@MainPrime"]


def test_all_labels_cardinality():
    for n in range(2, 8):
        assert len(all_labels(n)) == 2**n


def test_label_validation():
    with pytest.raises(ValueError):
        L([3], Region.SMALL, 4)  # sums past n - 2
    with pytest.raises(ValueError):
        L([2, 1], Region.MAIN, 4)  # wrong total
    with pytest.raises(ValueError):
        L([0, 3], Region.MAIN, 3)
    # first-component shape is checked by the subset correspondence
    loose = L([1, 2, 2, 1], Region.MAIN_PRIME, 6)
    with pytest.raises(ValueError):
        subset_mask(loose)


def test_subset_of_examples():
    assert subset_of(L([], Region.SMALL, 6)).mask == 0
    assert sorted(subset_of(L([2, 1], Region.SMALL, 6))) == [3, 5]
    assert sorted(subset_of(L([1, 2, 3], Region.ONE, 6))) == [PRIME, 1, 3]
    assert sorted(subset_of(L([2, 4], Region.MAIN, 6))) == [PRIME, 2]
    assert sorted(subset_of(L([2, 4], Region.MAIN_PRIME, 6))) == [1, 2]


def test_composition_of_examples():
    assert composition_of(GeneratorSet(5, set())).parts == ()
    full = GeneratorSet(4, set(range(4)))
    k = composition_of(full)
    assert k.parts == (1, 1, 1, 1) and k.region is Region.ONE
    k = composition_of(GeneratorSet(6, {PRIME, 2}))
    assert k.parts == (2, 4) and k.region is Region.MAIN


@pytest.mark.parametrize("n", range(2, 8))
def test_subset_bijection_exhaustive(n):
    labs = all_labels(n)
    masks = [subset_mask(k) for k in labs]
    assert sorted(masks) == list(range(2**n))
    for k, m in zip(labs, masks):
        assert composition_from_mask(m, n, "D") == k


@pytest.mark.parametrize("n", range(2, 8))
def test_region_characterization(n):
    for k in all_labels(n):
        m = subset_mask(k)
        has_prime, has_one = bool(m & 1), bool(m & 2)
        if k.region is Region.ONE:
            assert has_prime and has_one
        elif k.region is Region.MAIN:
            assert has_prime and not has_one
        elif k.region is Region.MAIN_PRIME:
            assert has_one and not has_prime
        else:
            assert not has_prime and not has_one


def test_equivalent_paper_pairs():
    assert equivalent(L([2, 1, 2, 1], Region.MAIN, 6), L([1, 2, 2, 1], Region.MAIN_PRIME, 6))
    assert not equivalent(L([4, 2], Region.MAIN, 6), L([2, 4], Region.MAIN_PRIME, 6))


@pytest.mark.parametrize("n", range(2, 8))
def test_equivalence_is_an_equivalence_relation(n):
    labs = all_labels(n)
    for a in labs:
        assert equivalent(a, a)
    for a in labs:
        for b in labs:
            assert equivalent(a, b) == equivalent(b, a)
    # transitivity via the class partition: equivalent iff same representative
    cmap = class_map(n)
    for a in labs:
        for b in labs:
            assert equivalent(a, b) == (cmap[a] == cmap[b])


def test_class_representatives_n4():
    reps = {str(k) for k in class_representatives(4)}
    assert reps == {
        "[]@Small",
        "[1]@Small",
        "[1,1]@Small",
        "[2]@Small",
        "[1,1,1,1]@One",
        "[2,1,1]@Main",
        "[2,2]@Main",
        "[3,1]@Main",
        "[4]@Main",
        "[2,2]@MainPrime",
        "[4]@MainPrime",
    }
    assert len(class_representatives(4)) == 11


def test_class_representatives_n2():
    assert [str(k) for k in class_representatives(2)] == [
        "[]@Small",
        "[1,1]@One",
        "[2]@Main",
        "[2]@MainPrime",
    ]


@pytest.mark.parametrize("n", range(2, 8))
def test_class_representatives_are_partitions_and_complete(n):
    reps = class_representatives(n)
    assert all(k.is_partition() for k in reps)
    # brute-force class count over the pairwise relation
    labs = all_labels(n)
    seen = []
    for a in labs:
        if not any(equivalent(a, b) for b in seen):
            seen.append(a)
    assert len(reps) == len(seen)


def test_max_multiplicity():
    assert max_multiplicity(L([1, 3, 1], Region.ONE, 5)) == 2
    assert max_multiplicity(L([], Region.SMALL, 4)) == 0
    assert max_multiplicity(L([2, 2, 2, 1], Region.MAIN, 7)) == 3


def test_p_modular_representatives_p2():
    assert [str(k) for k in p_modular_representatives(4, 2)] == ["[]@Small"]
    assert [str(k) for k in p_modular_representatives(5, 2)] == ["[]@Small", "[5]@Main"]


def test_p_modular_representatives_p3_n4():
    # oracle: the direct self-structure-constant computation
    from descentd.algebra import structure_constant_mask
    from descentd.coxeter import group_data
    from descentd.algebra import addressed_mask

    reps = class_representatives(4)
    gd = group_data(4, "D")
    expected = []
    for k in reps:
        t = addressed_mask(k, "D")
        if structure_constant_mask(gd, t, t, t) % 3:
            expected.append(k)
    got = p_modular_representatives(4, 3)
    assert list(got) == expected
    assert len(got) == 10
    assert L([1, 1, 1, 1], Region.ONE, 4) not in got


def test_p_modular_rejects_nonprime():
    with pytest.raises(ValueError):
        p_modular_representatives(4, 4)
    with pytest.raises(ValueError):
        p_modular_representatives(4, 1)


@pytest.mark.parametrize("n,p", [(4, 3), (5, 3), (5, 5)])
def test_modular_indexing_report_consistency(n, p):
    report = modular_indexing_report(n, p)
    assert report["ground_truth"] == p_modular_representatives(n, p)
    # the multiplicity reading matches the divisibility criterion at odd p
    assert report["matches_multiplicity"]


def test_label_text_roundtrip():
    for n in range(2, 7):
        for k in all_labels(n):
            assert parse_label(format_label(k), n, "D") == k
    for k in type_a_labels(5):
        assert parse_label(format_label(k), 5, "A") == k
    with pytest.raises(ValueError):
        parse_label("[2,1]", 3, "D")
    with pytest.raises(ValueError):
        parse_label("[2,1]@Main", 3, "A")
    with pytest.raises(ValueError):
        parse_label("[2,1]@Weird", 3, "D")


def test_type_a_labels_order():
    assert [k.parts for k in type_a_labels(3)] == [(1, 1, 1), (1, 2), (2, 1), (3,)]
