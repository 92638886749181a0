"""Matrix-rule multiplication and the composition-level Lie action."""

import pytest

from descentd.algebra import get_table
from descentd.labels import compositions_of
from descentd.typea import (
    FlowMatrix,
    adjacent_coarsenings,
    flow_matrices,
    lie_action,
    multinomial,
    multiply_sn,
    multiply_sn_formal,
    reading_word,
)


def test_reading_word_examples():
    assert reading_word(FlowMatrix.from_rows([[2, 0, 0], [0, 1, 1]])).parts == (2, 1, 1)
    assert reading_word(FlowMatrix.from_rows([[1, 0, 1], [1, 1, 0]])).parts == (1, 1, 1, 1)
    assert reading_word(FlowMatrix((), (), ())).parts == ()


def test_flow_matrix_validation():
    with pytest.raises(ValueError):
        FlowMatrix(((1, 0), (0, 1)), (1, 1), (2, 0))  # wrong column sums
    with pytest.raises(ValueError):
        FlowMatrix(((1, 0), (0, 1)), (2, 0), (1, 1))  # wrong row sums
    with pytest.raises(ValueError):
        FlowMatrix(((-1, 1),), (0,), (-1, 1))


def test_flow_matrices_worked_example():
    mats = {z.rows for z in flow_matrices((2, 1, 1), (2, 2))}
    assert mats == {
        ((2, 0, 0), (0, 1, 1)),
        ((0, 1, 1), (2, 0, 0)),
        ((1, 1, 0), (1, 0, 1)),
        ((1, 0, 1), (1, 1, 0)),
    }


def test_multiply_sn_worked_example():
    prod = multiply_sn((2, 1, 1), (2, 2))
    assert {k.parts: c for k, c in prod.items()} == {
        (2, 1, 1): 1,
        (1, 1, 2): 1,
        (1, 1, 1, 1): 2,
    }


def test_multiply_sn_single_column():
    # one-part left factor forces a single matrix equal to the right margin
    for nu in [(1, 2), (3,), (1, 1, 1)]:
        prod = multiply_sn((sum(nu),), nu)
        assert {k.parts: c for k, c in prod.items()} == {tuple(nu): 1}


def test_multiply_sn_rejects_unequal_totals():
    with pytest.raises(ValueError):
        multiply_sn((2, 1), (2, 2))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_matrix_rule_equals_group_table(n):
    t = get_table("A", n)
    for i, ka in enumerate(t.basis):
        for j, kb in enumerate(t.basis):
            want = {t.label_index(k): c for k, c in multiply_sn(ka, kb).items()}
            assert want == t.product_on_basis(i, j), (ka, kb)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matrix_rule_associative_with_identity(n):
    labels = [tuple(p) for p in compositions_of(n)]
    one = (n,)
    for ka in labels:
        prod = multiply_sn(one, ka)
        assert {k.parts: c for k, c in prod.items()} == {ka: 1}
        prod = multiply_sn(ka, one)
        assert {k.parts: c for k, c in prod.items()} == {ka: 1}
    for ka in labels:
        for kb in labels:
            ab = multiply_sn(ka, kb)
            for kc in labels:
                left = multiply_sn_formal(ab, {kc: 1})
                right = multiply_sn_formal({ka: 1}, multiply_sn(kb, kc))
                assert left == right


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_counting_identity_over_flow_matrices(n):
    # element-count bookkeeping: the reading words weighted by multinomials
    # recover the product of the two coset counts
    for ka in compositions_of(n):
        for kb in compositions_of(n):
            total = sum(
                multinomial(n, reading_word(z).parts) for z in flow_matrices(ka, kb)
            )
            assert total == multinomial(n, ka) * multinomial(n, kb)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_flow_matrix_count_equals_double_cosets(n):
    # independent group oracle: matrices with margins (kappa, nu) biject with
    # double cosets of the two Young subgroups
    import descentd.coxeter as cox

    gd = cox.group_data(n, "A")
    full = gd.full_mask
    from descentd.labels import subset_mask, Region, Composition

    def young_members(parts):
        mask = full ^ subset_mask(Composition(parts, Region.A, n))
        member = gd.parabolic_bitmap(mask)
        return [x for x in range(gd.size) if member[x]]

    cayley = gd.cayley_cols()
    for ka in compositions_of(n):
        for kb in compositions_of(n):
            left = young_members(kb)
            right = young_members(ka)
            seen = set()
            classes = 0
            for x in range(gd.size):
                if x in seen:
                    continue
                classes += 1
                orbit = {x}
                frontier = [x]
                while frontier:
                    z = frontier.pop()
                    for u in left:
                        y = cayley[z][u]
                        if y not in orbit:
                            orbit.add(y)
                            frontier.append(y)
                    for v in right:
                        y = cayley[v][z]
                        if y not in orbit:
                            orbit.add(y)
                            frontier.append(y)
                seen |= orbit
            assert classes == len(flow_matrices(ka, kb))


def test_adjacent_coarsenings():
    assert adjacent_coarsenings((2, 1)) == {(2, 1), (3,)}
    assert adjacent_coarsenings(()) == {()}
    assert adjacent_coarsenings((1, 1, 1)) == {(1, 1, 1), (2, 1), (1, 2), (3,)}


def test_lie_action_examples():
    act = lie_action((2, 1), (2, 1))
    assert {k.parts: c for k, c in act.items()} == {(2, 1): 1}
    act = lie_action((1, 2), (3,))
    assert {k.parts: c for k, c in act.items()} == {(1, 2): 1}
    assert lie_action((2, 1), (1, 2)) == {}
    with pytest.raises(ValueError):
        lie_action((2, 1), (2, 2))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_lie_action_vanishing_iff_no_adjacent_coarsening(n):
    for ka in compositions_of(n):
        coarse = adjacent_coarsenings(ka)
        for kb in compositions_of(n):
            empty = not lie_action(ka, kb)
            assert empty == (tuple(kb) not in coarse), (ka, kb)
