"""Composition labels for the descent basis.

For type D_n the basis elements are indexed by a multiset of labelled
compositions: compositions of every ``m <= n-2`` (region ``Small``),
compositions of ``n`` with first component 1 (region ``One``), and two
marked copies of the compositions of ``n`` with first component at least 2
(regions ``Main`` and ``MainPrime``).  This label set is in bijection with
the subsets of the generator set, and the basis element labelled ``k`` is
the coset-representative sum attached to the *complement* of the subset
corresponding to ``k``.

Type A basis labels are the plain compositions of ``n`` (region ``A``).

>>> [str(k) for k in all_labels(2)]
['[]@Small', '[1,1]@One', '[2]@Main', '[2]@MainPrime']
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .coxeter import GeneratorSet


class Region(enum.Enum):
    SMALL = "Small"
    ONE = "One"
    MAIN = "Main"
    MAIN_PRIME = "MainPrime"
    A = "A"


_D_REGIONS = (Region.SMALL, Region.ONE, Region.MAIN, Region.MAIN_PRIME)


@dataclass(frozen=True)
class Composition:
    """A labelled composition: ``parts`` with a region tag and ambient rank."""

    parts: tuple
    region: Region
    n: int

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise ValueError(f"composition parts must be positive integers: {self.parts!r}")
        total = sum(self.parts)
        r = self.region
        if r is Region.A:
            if self.n < 0 or total != self.n:
                raise ValueError(f"{self.parts!r} is not a composition of {self.n}")
            return
        if self.n < 2:
            raise ValueError(f"type D labels need rank >= 2, got {self.n}")
        if r is Region.SMALL:
            if total > self.n - 2:
                raise ValueError(f"Small label {self.parts!r} sums to {total} > {self.n - 2}")
        elif total != self.n:
            raise ValueError(f"{r.value} label must sum to {self.n}: {self.parts!r}")
        # first-component shape (1 for One, >= 2 for the marked copies) is not
        # enforced here: the equivalence relation is routinely applied to
        # region-tagged rearrangements outside the canonical label set.  The
        # subset correspondence enforces it.

    @property
    def total(self):
        return sum(self.parts)

    def is_partition(self):
        return all(a >= b for a, b in zip(self.parts, self.parts[1:]))

    def __str__(self):
        return format_label(self)

    def __repr__(self):
        return f"Composition({format_label(self)!r}, n={self.n})"


def format_label(k):
    """Canonical textual form, e.g. ``[2,4]@Main``; type A labels are bare."""
    body = "[" + ",".join(str(p) for p in k.parts) + "]"
    if k.region is Region.A:
        return body
    return body + "@" + k.region.value


def parse_label(text, n, gtype="D"):
    """Inverse of :func:`format_label`; the ambient rank comes from context."""
    text = text.strip()
    if "@" in text:
        body, _, tag = text.partition("@")
        try:
            region = Region(tag)
        except ValueError:
            raise ValueError(f"unknown region tag {tag!r} in {text!r}") from None
    else:
        body, region = text, Region.A
    if gtype == "A" and region is not Region.A:
        raise ValueError(f"type A labels carry no region tag: {text!r}")
    if gtype == "D" and region is Region.A:
        raise ValueError(f"type D labels need a region tag: {text!r}")
    body = body.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"malformed label {text!r}")
    inner = body[1:-1].strip()
    parts = tuple(int(tok) for tok in inner.split(",")) if inner else ()
    return Composition(parts, region, n)


def compositions_of(m):
    """All compositions of ``m >= 0`` in lexicographic order.

    >>> compositions_of(3)
    [(1, 1, 1), (1, 2), (2, 1), (3,)]
    """
    if m == 0:
        return [()]
    out = []

    def rec(rest, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for first in range(1, rest + 1):
            prefix.append(first)
            rec(rest - first, prefix)
            prefix.pop()

    rec(m, [])
    return out


@lru_cache(maxsize=None)
def all_labels(n):
    """The 2^n labels for type D_n in canonical order.

    Small labels come first, ordered by (sum, lexicographic); then the three
    full-sum regions, each in lexicographic order.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    out = []
    for m in range(0, n - 1):
        out.extend(Composition(p, Region.SMALL, n) for p in compositions_of(m))
    full = compositions_of(n)
    out.extend(Composition(p, Region.ONE, n) for p in full if p[0] == 1)
    out.extend(Composition(p, Region.MAIN, n) for p in full if p[0] >= 2)
    out.extend(Composition(p, Region.MAIN_PRIME, n) for p in full if p[0] >= 2)
    return tuple(out)


@lru_cache(maxsize=None)
def type_a_labels(n):
    """The 2^(n-1) type A labels (compositions of n), lexicographic."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return tuple(Composition(p, Region.A, n) for p in compositions_of(n))


def subset_mask(k):
    """Bit mask of the generator subset corresponding to a label.

    The four type D cases place generators at shifted partial sums; type A
    uses the proper partial sums of the composition.
    """
    parts, n = k.parts, k.n
    if k.region is Region.A:
        mask = 0
        acc = 0
        for p in parts[:-1]:
            acc += p
            mask |= 1 << (acc - 1)
        return mask
    if k.region is Region.ONE and parts[0] != 1:
        raise ValueError(f"{k} is not in the label set (first component must be 1)")
    if k.region in (Region.MAIN, Region.MAIN_PRIME) and parts[0] < 2:
        raise ValueError(f"{k} is not in the label set (first component must be >= 2)")
    if k.region is Region.SMALL:
        if not parts:
            return 0
        acc = n - sum(parts)
        mask = 1 << acc
        for p in parts[:-1]:
            acc += p
            mask |= 1 << acc
        return mask
    # full-sum regions: a base generator plus the proper partial sums
    mask = 1 if k.region in (Region.ONE, Region.MAIN) else 2
    acc = 0
    for p in parts[:-1]:
        acc += p
        mask |= 1 << acc
    return mask


def subset_of(k):
    """The generator subset corresponding to ``k``, as a :class:`GeneratorSet`.

    >>> sorted(subset_of(Composition((2, 1), Region.SMALL, 6)))
    [3, 5]
    """
    gtype = "A" if k.region is Region.A else "D"
    return GeneratorSet.from_mask(subset_mask(k), k.n, gtype)


def composition_from_mask(mask, n, gtype="D"):
    """Label corresponding to a generator-subset mask (inverse of subset_mask)."""
    if gtype == "A":
        bounds = [0] + [b + 1 for b in range(n - 1) if mask >> b & 1] + [n]
        parts = tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))
        return Composition(parts, Region.A, n)
    has_prime = bool(mask & 1)
    has_one = bool(mask & 2)
    idxs = [i for i in range(2, n) if mask >> i & 1]
    if has_prime and has_one:
        bounds = [0, 1] + idxs + [n]
        region = Region.ONE
    elif has_prime or has_one:
        bounds = [0] + idxs + [n]
        region = Region.MAIN if has_prime else Region.MAIN_PRIME
    else:
        if not idxs:
            return Composition((), Region.SMALL, n)
        bounds = idxs + [n]
        region = Region.SMALL
    parts = tuple(bounds[i + 1] - bounds[i] for i in range(len(bounds) - 1))
    return Composition(parts, region, n)


def composition_of(J, n=None):
    """Label corresponding to a generator subset.

    >>> str(composition_of(GeneratorSet(6, {0, 2})))
    '[2,4]@Main'
    """
    if n is None:
        n = J.n
    return composition_from_mask(J.mask, n, J.gtype)


def equivalent(a, b):
    """The label equivalence mirroring conjugacy of generator subsets.

    Two labels are equivalent when their component multisets agree, except
    for the cross pairing of the two marked full-sum copies when every
    component is even.

    >>> k = Composition((2, 1, 2, 1), Region.MAIN, 6)
    >>> v = Composition((1, 2, 2, 1), Region.MAIN_PRIME, 6)
    >>> equivalent(k, v)
    True
    """
    if a.region is Region.A or b.region is Region.A:
        raise ValueError("equivalence is defined for type D labels only")
    if a.n != b.n:
        raise ValueError(f"ambient rank mismatch: {a.n} != {b.n}")
    if sorted(a.parts) != sorted(b.parts):
        return False
    cross = {a.region, b.region} == {Region.MAIN, Region.MAIN_PRIME}
    if cross and all(p % 2 == 0 for p in a.parts):
        return False
    return True


@lru_cache(maxsize=None)
def class_map(n):
    """Map each label to its canonical class representative.

    The representative of a class is its unique partition member, taking the
    Main copy when the partition occurs in both marked regions.
    """
    out = {}
    for k in all_labels(n):
        key = tuple(sorted(k.parts, reverse=True))
        if k.region is Region.SMALL:
            rep = Composition(key, Region.SMALL, n)
        elif k.region is Region.MAIN_PRIME and all(p % 2 == 0 for p in k.parts):
            rep = Composition(key, Region.MAIN_PRIME, n)
        elif key and key[0] == 1:
            rep = Composition(key, Region.ONE, n)
        else:
            rep = Composition(key, Region.MAIN, n)
        out[k] = rep
    return out


@lru_cache(maxsize=None)
def class_representatives(n):
    """One label per equivalence class, in canonical label order.

    >>> len(class_representatives(4))
    11
    """
    cmap = class_map(n)
    seen = set()
    out = []
    for k in all_labels(n):
        rep = cmap[k]
        if rep not in seen:
            seen.add(rep)
            out.append(rep)
    return tuple(out)


def max_multiplicity(k):
    """Largest component multiplicity (0 for the empty composition).

    >>> max_multiplicity(Composition((1, 3, 1), Region.ONE, 5))
    2
    """
    if not k.parts:
        return 0
    return max(Counter(k.parts).values())


def is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_prime(p):
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")


def _ajjj(n, k):
    # coefficient of the basis element on itself in its own square, for the
    # subset complementary to the label's subset
    from .algebra import structure_constant_mask
    from .coxeter import group_data

    gd = group_data(n, "D")
    t = gd.full_mask ^ subset_mask(k)
    return structure_constant_mask(gd, t, t, t)


def p_modular_representatives(n, p):
    """Class representatives indexing the irreducible modules mod p.

    For odd primes these are the representatives whose self-structure
    constant is not divisible by p; for p = 2 the surviving labels collapse
    to the empty composition (n even) or to it plus the one-part Main label
    (n odd).

    >>> [str(k) for k in p_modular_representatives(4, 2)]
    ['[]@Small']
    """
    _check_prime(p)
    reps = class_representatives(n)
    if p == 2:
        keep = {(), (n,)} if n % 2 else {()}
        return tuple(
            k for k in reps if k.parts in keep and k.region in (Region.SMALL, Region.MAIN)
        )
    return tuple(k for k in reps if _ajjj(n, k) % p != 0)


def modular_indexing_report(n, p):
    """Compare combinatorial descriptions of the mod-p indexing set.

    The divisibility of the self-structure constants is taken as ground
    truth; the report states whether the multiplicity-based rule (no
    component repeated p or more times) and the part-divisibility rule (no
    part divisible by p) select the same representatives.
    """
    _check_prime(p)
    reps = class_representatives(n)
    ground = tuple(k for k in reps if _ajjj(n, k) % p != 0)
    low_mult = tuple(k for k in reps if max_multiplicity(k) < p)
    no_div = tuple(k for k in reps if all(part % p != 0 for part in k.parts))
    return {
        "n": n,
        "p": p,
        "ground_truth": ground,
        "multiplicity_rule": low_mult,
        "part_divisibility_rule": no_div,
        "matches_multiplicity": ground == low_mult,
        "matches_part_divisibility": ground == no_div,
    }


if __name__ == "__main__":
    import doctest

    doctest.testmod()
