"""Exact linear algebra over the rationals and prime fields.

Vectors are plain lists of Python integers.  Rational-span questions are
answered with fraction-free integer elimination (cross-multiplication plus
gcd normalisation), so no floating point or Fraction objects appear
anywhere.  Mod-p elimination normalises pivots with modular inverses.
"""

from __future__ import annotations

from math import gcd


def _normalize_int(row):
    g = 0
    for v in row:
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return [v // g for v in row]
    return row


class Echelon:
    """Incrementally maintained echelon basis for span/rank queries.

    ``p=None`` works over the rationals with integer rows; a prime ``p``
    works over the field with p elements.
    """

    def __init__(self, dim, p=None):
        self.dim = dim
        self.p = p
        self.pivots = {}  # pivot column -> row

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        """Residue of ``vec`` after elimination against the stored rows."""
        if len(vec) != self.dim:
            raise ValueError(f"dimension mismatch: {len(vec)} != {self.dim}")
        p = self.p
        v = [x % p for x in vec] if p else list(vec)
        for c in sorted(self.pivots):
            if v[c]:
                row = self.pivots[c]
                if p:
                    f = v[c]
                    v = [(a - f * b) % p for a, b in zip(v, row)]
                else:
                    a, b = row[c], v[c]
                    v = [a * x - b * y for x, y in zip(v, row)]
        if p is None:
            v = _normalize_int(v)
        return v

    def add(self, vec):
        """Insert a vector; returns True when it enlarges the span."""
        v = self.reduce(vec)
        for c, x in enumerate(v):
            if x:
                if self.p:
                    inv = pow(x, -1, self.p)
                    v = [(inv * a) % self.p for a in v]
                elif x < 0:
                    v = [-a for a in v]
                self.pivots[c] = v
                return True
        return False

    def contains(self, vec):
        return all(x == 0 for x in self.reduce(vec))


def echelon_of(rows, dim, p=None):
    ech = Echelon(dim, p)
    for r in rows:
        ech.add(r)
    return ech


def rank(rows, p=None):
    """Rank of a list of equal-length integer vectors.

    >>> rank([[1, 0], [0, 2], [1, 2]])
    2
    """
    rows = list(rows)
    if not rows:
        return 0
    return echelon_of(rows, len(rows[0]), p).rank


def in_span(vec, rows, p=None):
    """Exact span-membership test."""
    rows = list(rows)
    if not rows:
        return all((x % p if p else x) == 0 for x in vec)
    return echelon_of(rows, len(rows[0]), p).contains(vec)


def span_equal(rows_a, rows_b, p=None):
    """Whether two lists of vectors span the same subspace."""
    rows_a, rows_b = list(rows_a), list(rows_b)
    if not rows_a and not rows_b:
        return True
    dim = len((rows_a or rows_b)[0])
    ea = echelon_of(rows_a, dim, p)
    eb = echelon_of(rows_b, dim, p)
    if ea.rank != eb.rank:
        return False
    return all(ea.contains(r) for r in rows_b)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
