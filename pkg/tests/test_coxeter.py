"""Group-layer tests: generators, composition, lengths, descents, conjugation."""

import random

import pytest

from descentd.coxeter import (
    PRIME,
    GeneratorSet,
    ResourceLimitError,
    SignedPermutation,
    compose,
    conjugate_generator,
    enumerate_group,
    generator,
    generator_ids,
    group_data,
    identity,
    inverse,
    left_descent_set,
    length,
    right_descent_set,
)


def test_generator_images():
    assert generator(3, 1).image == (2, 1, 3)
    assert generator(3, PRIME).image == (-2, -1, 3)
    s = generator(2, 1)
    assert compose(s, s) == identity(2)


def test_all_generators_are_involutions():
    for n in (2, 3, 4):
        for g in generator_ids(n, "D"):
            s = generator(n, g)
            assert compose(s, s) == identity(n)


def test_generator_rejects_bad_input():
    with pytest.raises(ValueError):
        generator(3, 3)
    with pytest.raises(ValueError):
        generator(3, PRIME, gtype="A")
    with pytest.raises(ValueError):
        generator(1, 1)


def test_signed_permutation_validation():
    with pytest.raises(ValueError):
        SignedPermutation((1, 1))
    with pytest.raises(ValueError):
        SignedPermutation((1, 3))
    w = SignedPermutation((-2, -1, 3))
    assert w(2) == -1 and w(-2) == 1


def test_compose_identity_and_involution():
    for n in (2, 3):
        e = identity(n)
        for g in generator_ids(n, "D"):
            s = generator(n, g)
            assert compose(e, s) == s == compose(s, e)
            assert compose(s, s) == e


def test_compose_prime_with_s1_in_d2():
    # hand evaluation of the two transposition products
    assert compose(generator(2, PRIME), generator(2, 1)).image == (-1, -2)


def test_compose_rank_mismatch():
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_inverse_roundtrip_random():
    rng = random.Random(7)
    elems = enumerate_group(4, "D")
    for w in rng.sample(elems, 40):
        assert compose(w, inverse(w)) == identity(4)
        assert compose(inverse(w), w) == identity(4)
    assert inverse(identity(3)) == identity(3)
    for g in generator_ids(3, "D"):
        s = generator(3, g)
        assert inverse(s) == s


def test_group_axioms_random_triples():
    rng = random.Random(11)
    elems = enumerate_group(4, "D")
    for _ in range(60):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert compose(compose(a, b), c) == compose(a, compose(b, c))


def test_length_basics():
    assert length(identity(4)) == 0
    for n in (2, 3, 4):
        for g in generator_ids(n, "D"):
            assert length(generator(n, g)) == 1


@pytest.mark.parametrize("n", [3, 4])
def test_length_equals_bfs_word_length(n):
    gd = group_data(n, "D")
    depths = gd.word_lengths()
    for x, img in enumerate(gd.images):
        assert length(SignedPermutation(img)) == depths[x]


@pytest.mark.parametrize("n", [3, 4])
def test_descent_closed_forms_match_length_definition(n):
    elems = enumerate_group(n, "D")
    for w in elems:
        mask = right_descent_set(w).mask
        for g in generator_ids(n, "D"):
            drops = length(compose(w, generator(n, g))) < length(w)
            assert drops == bool(mask >> g & 1), (w, g)


def test_descents_trivial_cases():
    assert len(right_descent_set(identity(4))) == 0
    assert set(right_descent_set(generator(3, 1)).members) == {1}
    assert set(right_descent_set(generator(3, PRIME)).members) == {PRIME}
    assert len(left_descent_set(identity(3))) == 0


@pytest.mark.parametrize("n", [3, 4])
def test_left_descents_via_inverse(n):
    for w in enumerate_group(n, "D"):
        assert left_descent_set(w).mask == right_descent_set(inverse(w)).mask


def test_enumeration_counts_and_order():
    assert len(enumerate_group(2, "D")) == 4
    assert len(enumerate_group(4, "D")) == 192
    assert len(enumerate_group(4, "A")) == 24
    for n, gtype in [(3, "D"), (4, "D"), (4, "A")]:
        images = [w.image for w in enumerate_group(n, gtype)]
        assert images == sorted(images)
        assert len(set(images)) == len(images)


def test_enumeration_parity_constraint():
    for n in (2, 3, 4, 5, 6):
        elems = enumerate_group(n, "D")
        assert all(w.is_even_signed() for w in elems)
        assert len(elems) == 2 ** (n - 1) * _fact(n)


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def test_resource_bound():
    with pytest.raises(ResourceLimitError):
        enumerate_group(9, "D")
    with pytest.raises(ResourceLimitError):
        enumerate_group(9, "A")
    # explicit override admits larger type A ranks
    assert len(enumerate_group(9, "A", max_n=9)) == _fact(9)


def test_conjugate_generator_examples():
    e = identity(3)
    for g in generator_ids(3, "D"):
        assert conjugate_generator(e, g) == g
    # conjugating s_1 by s_2 leaves a non-generator reflection
    assert conjugate_generator(generator(3, 2), 1) is None


def _conjugate_oracle(x, g, gtype):
    # explicit composition x^-1 s x, compared against all generator images
    n = x.n
    s = generator(n, g, gtype)
    z = compose(inverse(x), compose(s, x))
    for h in generator_ids(n, gtype):
        if z == generator(n, h, gtype):
            return h
    return None


@pytest.mark.parametrize("gtype,n", [("D", 3), ("A", 4)])
def test_conjugate_generator_against_composition_oracle(gtype, n):
    for x in enumerate_group(n, gtype):
        for g in generator_ids(n, gtype):
            assert conjugate_generator(x, g, gtype) == _conjugate_oracle(x, g, gtype)


def test_conjugation_injective_on_defined_values():
    rng = random.Random(3)
    elems = enumerate_group(4, "D")
    for x in rng.sample(elems, 30):
        values = [conjugate_generator(x, g) for g in generator_ids(4, "D")]
        defined = [v for v in values if v is not None]
        assert len(defined) == len(set(defined))


def test_generator_set_mask_roundtrip():
    for mask in range(16):
        J = GeneratorSet.from_mask(mask, 4, "D")
        assert J.mask == mask
    J = GeneratorSet(4, {PRIME, 2})
    assert PRIME in J and 2 in J and 1 not in J
    with pytest.raises(ValueError):
        GeneratorSet(4, {4})
    with pytest.raises(ValueError):
        GeneratorSet(4, {0}, gtype="A")
