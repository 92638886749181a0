"""Symmetric-group descent algebra via matrices with prescribed margins.

The product of two basis elements indexed by compositions ``k`` and ``v`` of
``n`` is the sum, over all non-negative integer matrices whose column sums
are ``k`` and row sums are ``v``, of the basis element indexed by the
row-major reading word of the non-zero entries.  This is a purely
combinatorial rule and serves as an independent oracle for the group-built
type A table.

>>> z = FlowMatrix.from_rows([[2, 0, 0], [0, 1, 1]])
>>> reading_word(z).parts
(2, 1, 1)
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial

from .labels import Composition, Region


def _parts_of(k):
    if isinstance(k, Composition):
        return k.parts
    parts = tuple(k)
    if any(not isinstance(p, int) or p < 1 for p in parts):
        raise ValueError(f"not a composition: {k!r}")
    return parts


def _label(parts):
    return Composition(tuple(parts), Region.A, sum(parts))


@dataclass(frozen=True)
class FlowMatrix:
    """Non-negative integer matrix with prescribed row and column sums."""

    rows: tuple
    row_sums: tuple
    col_sums: tuple

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "row_sums", tuple(self.row_sums))
        object.__setattr__(self, "col_sums", tuple(self.col_sums))
        if any(v < 0 for r in rows for v in r):
            raise ValueError("entries must be non-negative")
        if len({len(r) for r in rows} | {len(self.col_sums)}) > 1:
            raise ValueError("ragged rows")
        if tuple(sum(r) for r in rows) != self.row_sums:
            raise ValueError(f"row sums of {rows!r} differ from {self.row_sums!r}")
        cols = tuple(sum(r[j] for r in rows) for j in range(len(self.col_sums)))
        if cols != self.col_sums:
            raise ValueError(f"column sums of {rows!r} differ from {self.col_sums!r}")

    @classmethod
    def from_rows(cls, rows):
        rows = tuple(tuple(r) for r in rows)
        row_sums = tuple(sum(r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        col_sums = tuple(sum(r[j] for r in rows) for j in range(ncols))
        return cls(rows, row_sums, col_sums)


def reading_word(z):
    """Row-major reading of the non-zero entries, as a type A label.

    >>> reading_word(FlowMatrix.from_rows([[1, 0, 1], [1, 1, 0]])).parts
    (1, 1, 1, 1)
    """
    rows = z.rows if isinstance(z, FlowMatrix) else z
    word = [v for r in rows for v in r if v]
    return _label(word)


def flow_matrices(col_sums, row_sums):
    """All matrices with the given margins, filled row by row.

    Remaining column budgets prune the recursion; the order is the
    lexicographic order of the flattened matrices.
    """
    kappa = _parts_of(col_sums)
    nu = _parts_of(row_sums)
    if sum(kappa) != sum(nu):
        raise ValueError(f"margin totals differ: {sum(kappa)} != {sum(nu)}")
    ncols = len(kappa)
    out = []
    rows = []

    def fill_row(i, remaining):
        if i == len(nu):
            out.append(FlowMatrix(tuple(rows), nu, kappa))
            return
        target = nu[i]
        row = [0] * ncols

        def fill_cell(j, rest):
            if j == ncols:
                if rest == 0:
                    rows.append(tuple(row))
                    new_rem = tuple(r - c for r, c in zip(remaining, row))
                    fill_row(i + 1, new_rem)
                    rows.pop()
                return
            tail_budget = sum(remaining[j + 1 :])
            lo = max(0, rest - tail_budget)
            for v in range(lo, min(remaining[j], rest) + 1):
                row[j] = v
                fill_cell(j + 1, rest - v)
            row[j] = 0

        fill_cell(0, target)

    fill_row(0, tuple(kappa))
    return out


def multiply_sn(kappa, nu):
    """Matrix-rule product of two type A basis elements.

    Returns the coefficient map, keyed by type A labels.

    >>> prod = multiply_sn((2, 1, 1), (2, 2))
    >>> {k.parts: c for k, c in prod.items()} == {(2, 1, 1): 1, (1, 1, 2): 1, (1, 1, 1, 1): 2}
    True
    """
    out = Counter()
    for z in flow_matrices(kappa, nu):
        out[reading_word(z)] += 1
    return dict(out)


def multiply_sn_formal(coeffs_a, coeffs_b):
    """Bilinear extension of :func:`multiply_sn` to coefficient maps."""
    out = Counter()
    for ka, ca in coeffs_a.items():
        for kb, cb in coeffs_b.items():
            for kr, c in multiply_sn(ka, kb).items():
                out[kr] += ca * cb * c
    return {k: c for k, c in out.items() if c}


def adjacent_coarsenings(kappa):
    """All compositions obtained by summing runs of adjacent components.

    >>> sorted(adjacent_coarsenings((2, 1)))
    [(2, 1), (3,)]
    """
    parts = _parts_of(kappa)
    if not parts:
        return {()}
    out = set()
    k = len(parts)
    for split in range(1 << (k - 1)):
        blocks = []
        acc = parts[0]
        for i in range(1, k):
            if split >> (i - 1) & 1:
                blocks.append(acc)
                acc = parts[i]
            else:
                acc += parts[i]
        blocks.append(acc)
        out.add(tuple(blocks))
    return out


def lie_action(kappa, nu):
    """Action of a basis element on a Lie monomial, at composition level.

    The defining matrices have one non-zero entry per column and assign
    whole consecutive blocks of columns to successive rows, so the action
    vanishes exactly when no adjacent-component coarsening of ``kappa``
    equals ``nu``.  Lie monomials are represented only by their degree
    compositions.

    >>> lie_action((2, 1), (1, 2))
    Counter()
    """
    kp = _parts_of(kappa)
    np_ = _parts_of(nu)
    if sum(kp) != sum(np_):
        raise ValueError(f"totals differ: {sum(kp)} != {sum(np_)}")
    # greedy consecutive split of kappa with block sums nu; at most one exists
    blocks = []
    pos = 0
    for target in np_:
        acc = 0
        start = pos
        while pos < len(kp) and acc < target:
            acc += kp[pos]
            pos += 1
        if acc != target:
            return Counter()
        blocks.append((start, pos))
    if pos != len(kp):
        return Counter()
    ncols = len(kp)
    rows = []
    for start, stop in blocks:
        row = [0] * ncols
        for j in range(start, stop):
            row[j] = kp[j]
        rows.append(tuple(row))
    z = FlowMatrix(tuple(rows), tuple(np_), tuple(kp))
    return Counter({reading_word(z): 1})


def multinomial(n, parts):
    """Number of words with letter multiplicities ``parts``."""
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
