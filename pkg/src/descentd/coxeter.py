"""Signed permutations and the Coxeter groups of types D and A.

Elements are kept in one-line notation as tuples ``image`` with
``image[i-1] = w(i)`` for ``i = 1..n``.  Negative entries encode sign flips;
the relation ``w(-i) = -w(i)`` is implicit and never stored.  Type D is the
group of signed permutations with an even number of negative entries,
generated by ``s_1', s_1, ..., s_{n-1}``; type A is the symmetric group with
the adjacent transpositions ``s_1, ..., s_{n-1}``.

Generator subsets are handled as bit masks in a fixed canonical order.  For
type D, bit 0 is the primed generator and bit ``i`` is ``s_i``; for type A,
bit ``i-1`` is ``s_i``.  Generator *ids* follow the same convention: the id
``PRIME == 0`` denotes ``s_1'`` and positive ids denote unprimed generators.
"""

from __future__ import annotations

import itertools
from array import array
from dataclasses import dataclass, field

PRIME = 0

DEFAULT_MAX_N = 8


class ResourceLimitError(RuntimeError):
    """A computation would exceed the configured rank bound."""


def _check_gtype(gtype):
    if gtype not in ("A", "D"):
        raise ValueError(f"group type must be 'A' or 'D', got {gtype!r}")


def _check_rank(n, gtype, max_n=None):
    _check_gtype(gtype)
    low = 2 if gtype == "D" else 1
    if not isinstance(n, int) or n < low:
        raise ValueError(f"rank must be an integer >= {low} for type {gtype}, got {n!r}")
    limit = DEFAULT_MAX_N if max_n is None else max_n
    if n > limit:
        raise ResourceLimitError(
            f"rank {n} exceeds the resource bound {limit}; pass max_n to override"
        )


def n_generators(n, gtype="D"):
    """Number of Coxeter generators: n for D_n, n-1 for S_n."""
    return n if gtype == "D" else n - 1


def generator_ids(n, gtype="D"):
    """Canonically ordered generator ids (primed first for type D)."""
    return tuple(range(n)) if gtype == "D" else tuple(range(1, n))


def gen_bit(g, n, gtype="D"):
    """Bit position of generator id ``g`` in a descent/subset mask."""
    if gtype == "D":
        if not 0 <= g <= n - 1:
            raise ValueError(f"generator id {g} invalid for D_{n}")
        return g
    if not 1 <= g <= n - 1:
        raise ValueError(f"generator id {g} invalid for S_{n}")
    return g - 1


def bit_gen(b, gtype="D"):
    """Generator id sitting at bit position ``b``."""
    return b if gtype == "D" else b + 1


def gen_name(g, gtype="D"):
    return "1'" if (gtype == "D" and g == PRIME) else str(g)


@dataclass(frozen=True)
class SignedPermutation:
    """A signed permutation in one-line notation.

    >>> w = SignedPermutation((-2, -1, 3))
    >>> w.n, w(1), w(-1)
    (3, -2, 2)
    """

    image: tuple

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        n = len(self.image)
        if sorted(abs(v) for v in self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation image: {self.image!r}")

    @property
    def n(self):
        return len(self.image)

    def __call__(self, i):
        if i == 0 or abs(i) > self.n:
            raise ValueError(f"argument {i} out of range for rank {self.n}")
        return self.image[i - 1] if i > 0 else -self.image[-i - 1]

    def is_even_signed(self):
        """True iff the number of negative one-line entries is even."""
        return sum(v < 0 for v in self.image) % 2 == 0

    def is_unsigned(self):
        return all(v > 0 for v in self.image)

    def __mul__(self, other):
        return compose(self, other)

    def __repr__(self):
        return f"SignedPermutation({self.image!r})"


@dataclass(frozen=True)
class GeneratorSet:
    """A subset of the Coxeter generators of rank ``n``.

    Members are generator ids; for type D the id 0 (``PRIME``) denotes the
    primed generator ``s_1'``.
    """

    n: int
    members: frozenset
    gtype: str = "D"

    def __post_init__(self):
        _check_gtype(self.gtype)
        object.__setattr__(self, "members", frozenset(self.members))
        for g in self.members:
            gen_bit(g, self.n, self.gtype)  # raises on invalid ids

    @classmethod
    def from_mask(cls, mask, n, gtype="D"):
        members = [bit_gen(b, gtype) for b in range(n_generators(n, gtype)) if mask >> b & 1]
        return cls(n, frozenset(members), gtype)

    @property
    def mask(self):
        m = 0
        for g in self.members:
            m |= 1 << gen_bit(g, self.n, self.gtype)
        return m

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __contains__(self, g):
        return g in self.members

    def __repr__(self):
        names = ",".join(gen_name(g, self.gtype) for g in sorted(self.members))
        return f"GeneratorSet({self.gtype}{self.n}:{{{names}}})"


def identity(n):
    return SignedPermutation(tuple(range(1, n + 1)))


def generator(n, g, gtype="D"):
    """The generator with id ``g`` as a signed permutation.

    For type D, ``s_i`` is the double transposition swapping ``i, i+1`` (and
    ``-i, -i-1``), and the primed generator (id 0) maps ``1 -> -2, 2 -> -1``.

    >>> generator(3, 1).image
    (2, 1, 3)
    >>> generator(3, PRIME).image
    (-2, -1, 3)
    """
    _check_gtype(gtype)
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank {n!r} too small for a generator of type {gtype}")
    gen_bit(g, n, gtype)  # validates id
    img = list(range(1, n + 1))
    if gtype == "D" and g == PRIME:
        img[0], img[1] = -2, -1
    else:
        img[g - 1], img[g] = img[g], img[g - 1]
    return SignedPermutation(tuple(img))


def _compose_t(a, b):
    # (a o b)(i) = a(b(i)) with a(-j) = -a(j)
    return tuple(a[j - 1] if j > 0 else -a[-j - 1] for j in b)


def _inverse_t(a):
    out = [0] * len(a)
    for i, v in enumerate(a, start=1):
        if v > 0:
            out[v - 1] = i
        else:
            out[-v - 1] = -i
    return tuple(out)


def compose(a, b):
    """Composition ``(a o b)(i) = a(b(i))``.

    >>> compose(generator(2, PRIME), generator(2, 1)).image
    (-1, -2)
    """
    if a.n != b.n:
        raise ValueError(f"rank mismatch: {a.n} != {b.n}")
    return SignedPermutation(_compose_t(a.image, b.image))


def inverse(w):
    return SignedPermutation(_inverse_t(w.image))


def length(w):
    """Coxeter length in type D: inversions plus negative-sum pairs.

    ``length(w) = #{i<j : w(i)>w(j)} + #{i<j : w(i)+w(j)<0}``; equals the
    word length of ``w`` over the type D generators.
    """
    if not w.is_even_signed():
        raise ValueError(f"{w!r} is not in D_{w.n} (odd number of sign flips)")
    img = w.image
    n = len(img)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            if img[i] > img[j]:
                total += 1
            if img[i] + img[j] < 0:
                total += 1
    return total


def _des_r_mask_t(img, gtype):
    m = 0
    if gtype == "D":
        if img[0] + img[1] < 0:
            m |= 1
        for i in range(1, len(img)):
            if img[i - 1] > img[i]:
                m |= 1 << i
    else:
        for i in range(1, len(img)):
            if img[i - 1] > img[i]:
                m |= 1 << (i - 1)
    return m


def right_descent_set(w, gtype="D"):
    """Generators ``s`` with ``length(w s) < length(w)``.

    Closed form: for ``i >= 1``, ``s_i`` is a right descent iff
    ``w(i) > w(i+1)``; the primed generator is one iff ``w(1) + w(2) < 0``.
    """
    if gtype == "D" and not w.is_even_signed():
        raise ValueError(f"{w!r} is not in D_{w.n}")
    if gtype == "A" and not w.is_unsigned():
        raise ValueError(f"{w!r} is not an unsigned permutation")
    return GeneratorSet.from_mask(_des_r_mask_t(w.image, gtype), w.n, gtype)


def left_descent_set(w, gtype="D"):
    """Right descent set of the inverse."""
    return right_descent_set(inverse(w), gtype)


def _iter_images(n, gtype):
    if gtype == "A":
        yield from itertools.permutations(range(1, n + 1))
        return
    # type D, lexicographic on one-line tuples: fill positions left to right,
    # trying values -n..-1, 1..n; the final slot's sign is forced by parity.
    img = [0] * n
    used = [False] * (n + 1)

    def rec(pos, negs):
        if pos == n - 1:
            v = next(u for u in range(1, n + 1) if not used[u])
            img[pos] = -v if negs % 2 else v
            yield tuple(img)
            return
        for v in itertools.chain(range(-n, 0), range(1, n + 1)):
            a = abs(v)
            if used[a]:
                continue
            used[a] = True
            img[pos] = v
            yield from rec(pos + 1, negs + (v < 0))
            used[a] = False

    yield from rec(0, 0)


def enumerate_group(n, gtype="D", max_n=None):
    """All elements of D_n (or S_n), in lexicographic one-line order.

    ``|D_n| = 2^(n-1) n!`` and ``|S_n| = n!``.  Raises
    :class:`ResourceLimitError` beyond the configured rank bound.
    """
    _check_rank(n, gtype, max_n)
    return [SignedPermutation(t) for t in _iter_images(n, gtype)]


def _conj_bit(p, q, gtype):
    # Generator bit of the reflection swapping p <-> q (and -p <-> -q),
    # or None when that reflection is not a generator.
    if gtype == "A":
        if q - p == 1:
            return p - 1
        if p - q == 1:
            return q - 1
        return None
    if (p < 0) != (q < 0):
        ap, aq = abs(p), abs(q)
        if ap + aq == 3 and min(ap, aq) == 1:  # the {1,-2} / {-1,2} pattern
            return 0
        return None
    ap, aq = abs(p), abs(q)
    a, b = (ap, aq) if ap < aq else (aq, ap)
    if b == a + 1:
        return a
    return None


def conjugate_generator(x, g, gtype="D"):
    """Id of ``x^-1 s_g x`` when that element is again a generator, else None.

    Conjugating the reflection that swaps ``u <-> v`` gives the reflection
    swapping ``x^-1(u) <-> x^-1(v)``, which is read off the inverse image.

    >>> conjugate_generator(generator(3, 2), 1) is None
    True
    """
    inv = _inverse_t(x.image)
    b = gen_bit(g, x.n, gtype)
    t = _conj_bit_from_inv(inv, b, gtype)
    return None if t is None else bit_gen(t, gtype)


def _conj_bit_from_inv(inv, b, gtype):
    if gtype == "D":
        if b == 0:
            p, q = inv[0], -inv[1]
        else:
            p, q = inv[b - 1], inv[b]
    else:
        p, q = inv[b], inv[b + 1]
    return _conj_bit(p, q, gtype)


# ---------------------------------------------------------------------------
# Bulk per-group data used by the algebra layer.

_ABSENT = 0xFF


@dataclass
class GroupData:
    """Precomputed per-element data for one group, in enumeration order.

    ``des_r``/``des_l`` are right/left descent masks, and ``conj`` is the
    flattened table ``conj[x * n_gen + b] = bit of x^-1 s_b x`` (0xFF when the
    conjugate is not a generator).  Everything is immutable after
    construction; the lazy caches are built at most once.
    """

    gtype: str
    n: int
    n_gen: int
    full_mask: int
    images: list
    des_r: array
    des_l: array
    conj: bytearray
    _index: dict = field(default=None, repr=False)
    _inv_idx: array = field(default=None, repr=False)
    _gen_cols: list = field(default=None, repr=False)
    _bfs: tuple = field(default=None, repr=False)
    _cayley: list = field(default=None, repr=False)
    _parabolic: dict = field(default_factory=dict, repr=False)

    @property
    def size(self):
        return len(self.images)

    def index(self):
        if self._index is None:
            self._index = {img: i for i, img in enumerate(self.images)}
        return self._index

    def identity_index(self):
        return self.index()[tuple(range(1, self.n + 1))]

    def inv_idx(self):
        if self._inv_idx is None:
            idx = self.index()
            self._inv_idx = array("i", (idx[_inverse_t(img)] for img in self.images))
        return self._inv_idx

    def _apply_gen_right(self, img, b):
        out = list(img)
        if self.gtype == "D":
            if b == 0:
                out[0], out[1] = -img[1], -img[0]
            else:
                out[b - 1], out[b] = img[b], img[b - 1]
        else:
            out[b], out[b + 1] = img[b + 1], img[b]
        return tuple(out)

    def gen_cols(self):
        """Right multiplication tables: ``gen_cols()[b][x] = idx(x * s_b)``."""
        if self._gen_cols is None:
            idx = self.index()
            cols = []
            for b in range(self.n_gen):
                cols.append(array("i", (idx[self._apply_gen_right(img, b)] for img in self.images)))
            self._gen_cols = cols
        return self._gen_cols

    def bfs(self):
        """Breadth-first search from the identity over right multiplication.

        Returns ``(depth, order, parent, genbit)``; depths are Cayley-graph
        word lengths over the generating set.
        """
        if self._bfs is None:
            cols = self.gen_cols()
            size = self.size
            depth = array("i", [-1] * size)
            parent = array("i", [-1] * size)
            genbit = array("i", [-1] * size)
            e = self.identity_index()
            depth[e] = 0
            order = [e]
            head = 0
            while head < len(order):
                z = order[head]
                head += 1
                for b in range(self.n_gen):
                    y = cols[b][z]
                    if depth[y] < 0:
                        depth[y] = depth[z] + 1
                        parent[y] = z
                        genbit[y] = b
                        order.append(y)
            self._bfs = (depth, order, parent, genbit)
        return self._bfs

    def word_lengths(self):
        return self.bfs()[0]

    def cayley_cols(self):
        """Full multiplication table, one column per right factor.

        ``cayley_cols()[y][x] = idx(x * y)``.  Quadratic in the group order,
        so only available for small groups.
        """
        if self._cayley is None:
            size = self.size
            if size > 4096:
                raise ResourceLimitError(
                    f"full multiplication table of a group of order {size} is out of bounds"
                )
            depth, order, parent, genbit = self.bfs()
            cols = [None] * size
            cols[self.identity_index()] = array("i", range(size))
            gcols = self.gen_cols()
            for y in order[1:]:
                gc = gcols[genbit[y]]
                cols[y] = array("i", (gc[v] for v in cols[parent[y]]))
            self._cayley = cols
        return self._cayley

    def parabolic_bitmap(self, mask):
        """Membership bytearray of the standard parabolic subgroup W_J."""
        cached = self._parabolic.get(mask)
        if cached is not None:
            return cached
        cols = self.gen_cols()
        bits = [b for b in range(self.n_gen) if mask >> b & 1]
        member = bytearray(self.size)
        e = self.identity_index()
        member[e] = 1
        stack = [e]
        while stack:
            z = stack.pop()
            for b in bits:
                y = cols[b][z]
                if not member[y]:
                    member[y] = 1
                    stack.append(y)
        self._parabolic[mask] = member
        return member


_GROUP_CACHE = {}


def group_data(n, gtype="D", max_n=None):
    """Build (and memoize) the bulk data tables for one group.

    The rank bound is enforced on first construction; a group already built
    under an explicit override stays accessible afterwards.
    """
    _check_gtype(gtype)
    key = (gtype, n)
    gd = _GROUP_CACHE.get(key)
    if gd is not None:
        return gd
    _check_rank(n, gtype, max_n)
    n_gen = n_generators(n, gtype)
    images = list(_iter_images(n, gtype))
    conj = bytearray(len(images) * n_gen)
    des_r = array("i", [0] * len(images))
    des_l = array("i", [0] * len(images))
    pos = 0
    for x, img in enumerate(images):
        des_r[x] = _des_r_mask_t(img, gtype)
        inv = _inverse_t(img)
        des_l[x] = _des_r_mask_t(inv, gtype)
        for b in range(n_gen):
            t = _conj_bit_from_inv(inv, b, gtype)
            conj[pos] = _ABSENT if t is None else t
            pos += 1
    gd = GroupData(
        gtype=gtype,
        n=n,
        n_gen=n_gen,
        full_mask=(1 << n_gen) - 1,
        images=images,
        des_r=des_r,
        des_l=des_l,
        conj=conj,
    )
    _GROUP_CACHE[key] = gd
    return gd


if __name__ == "__main__":
    import doctest

    doctest.testmod()
