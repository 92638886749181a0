"""The descent algebra: coset sums, structure constants, exact products.

The basis element labelled by a composition ``k`` is the formal sum of the
minimal-length coset representatives attached to the *complement* of the
generator subset corresponding to ``k``; the identity element is labelled by
the empty composition in type D and by the one-part composition in type A.

Structure constants are produced two independent ways: a single sweep over
the group counting the defining triples (the production path, backed by the
kernels), and exact convolution in the group algebra followed by Möbius
extraction over descent classes (the oracle path).
"""

from __future__ import annotations

import json
from array import array
from dataclasses import dataclass, field

from . import _kernels as kernels
from . import labels as lb
from .coxeter import GeneratorSet, SignedPermutation, _check_rank, group_data, n_generators

SCHEMA_VERSION = 1

_ABSENT = 0xFF


class NotInDescentSpanError(ValueError):
    """A group-algebra element is not constant on some descent class."""


# ---------------------------------------------------------------------------
# coset representatives and direct structure constants


def _coset_rep_indices(gd, jmask):
    des_r = gd.des_r
    return [x for x in range(gd.size) if not des_r[x] & jmask]


def coset_reps(n, J, gtype="D", max_n=None):
    """Minimal-length left coset representatives of the parabolic W_J.

    These are exactly the elements with no right descent in ``J``; the set
    contains the identity and has size ``|W| / |W_J|``.
    """
    gd = group_data(n, gtype, max_n)
    jmask = J.mask if isinstance(J, GeneratorSet) else int(J)
    return {SignedPermutation(gd.images[x]) for x in _coset_rep_indices(gd, jmask)}


def structure_constant_mask(gd, jmask, kmask, lmask):
    """Count elements x with no left descent in J, no right descent in K,
    whose generator conjugates of J meet K exactly in L."""
    des_l, des_r, conj = gd.des_l, gd.des_r, gd.conj
    g = gd.n_gen
    count = 0
    for x in range(gd.size):
        if des_l[x] & jmask or des_r[x] & kmask:
            continue
        m = 0
        rest = jmask
        base = x * g
        while rest:
            low = rest & -rest
            rest ^= low
            t = conj[base + low.bit_length() - 1]
            if t != _ABSENT:
                m |= 1 << t
        if m & kmask == lmask:
            count += 1
    return count


def structure_constant_direct(n, J, K, L, gtype="D", max_n=None):
    """Definitional count of the structure constant for subsets J, K, L."""
    gd = group_data(n, gtype, max_n)
    to_mask = lambda s: s.mask if isinstance(s, GeneratorSet) else int(s)
    return structure_constant_mask(gd, to_mask(J), to_mask(K), to_mask(L))


# ---------------------------------------------------------------------------
# the structure table


def _basis_labels(n, gtype):
    return lb.all_labels(n) if gtype == "D" else lb.type_a_labels(n)


def addressed_mask(k, gtype=None):
    """Mask of the subset whose coset sum the label addresses (the complement)."""
    if gtype is None:
        gtype = "A" if k.region is lb.Region.A else "D"
    full = (1 << n_generators(k.n, gtype)) - 1
    return full ^ lb.subset_mask(k)


@dataclass
class StructureTable:
    """Structure constants of one descent algebra over the integers.

    ``constants[(i, j)]`` is the sparse row of the product of basis elements
    ``i`` and ``j``, mapping a basis index to its non-negative coefficient.
    """

    group_type: str
    n: int
    basis: tuple
    constants: dict
    provenance: str = "sweep"
    _coset_sizes: list = field(default=None, repr=False)
    _label_index: dict = field(default=None, repr=False)

    @property
    def dim(self):
        return len(self.basis)

    def label_index(self, k):
        if self._label_index is None:
            self._label_index = {lab: i for i, lab in enumerate(self.basis)}
        return self._label_index[k]

    def identity_index(self):
        ident = () if self.group_type == "D" else (self.n,)
        for i, k in enumerate(self.basis):
            if k.parts == ident and k.region in (lb.Region.SMALL, lb.Region.A):
                return i
        raise AssertionError("identity label missing from basis")

    def product_on_basis(self, i, j):
        """Sparse coefficient row of ``B_i B_j`` (a dict index -> int)."""
        return self.constants.get((i, j), {})

    def coset_sizes(self):
        """|X_T| for the addressed subset T of each basis label."""
        if self._coset_sizes is None:
            gd = group_data(self.n, self.group_type)
            des_r = gd.des_r
            sizes = []
            for k in self.basis:
                t = addressed_mask(k, self.group_type)
                sizes.append(sum(1 for x in range(gd.size) if not des_r[x] & t))
            self._coset_sizes = sizes
        return self._coset_sizes

    def counting_identity_holds(self, i, j):
        """Element count bookkeeping: |X_i| |X_j| == sum_k c_ij^k |X_k|."""
        sizes = self.coset_sizes()
        rhs = sum(c * sizes[k] for k, c in self.product_on_basis(i, j).items())
        return sizes[i] * sizes[j] == rhs

    def element(self, coeffs=None, p=None):
        return AlgebraElement(self, dict(coeffs or {}), p)

    def basis_element(self, k, p=None):
        i = k if isinstance(k, int) else self.label_index(k)
        return AlgebraElement(self, {i: 1}, p)

    def one(self, p=None):
        return AlgebraElement(self, {self.identity_index(): 1}, p)

    # -- serialization ------------------------------------------------------

    def to_json_bytes(self):
        entries = sorted(
            (i, j, k, c)
            for (i, j), row in self.constants.items()
            for k, c in row.items()
            if c
        )
        doc = {
            "schema_version": SCHEMA_VERSION,
            "group_type": self.group_type,
            "n": self.n,
            "basis": [lb.format_label(k) for k in self.basis],
            "constants": [list(e) for e in entries],
        }
        return (json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n").encode()

    @classmethod
    def from_json_bytes(cls, data):
        doc = json.loads(data.decode())
        if doc.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
        gtype = doc["group_type"]
        n = doc["n"]
        basis = tuple(lb.parse_label(s, n, gtype) for s in doc["basis"])
        expected = _basis_labels(n, gtype)
        if basis != expected:
            raise ValueError("basis in cache does not match the canonical label order")
        constants = {}
        for i, j, k, c in doc["constants"]:
            constants.setdefault((i, j), {})[k] = c
        return cls(gtype, n, basis, constants, provenance="cache")


def _sweep_counts(gd, threads=1):
    g = gd.n_gen
    free_l = array("i", (gd.full_mask ^ m for m in gd.des_l))
    free_r = array("i", (gd.full_mask ^ m for m in gd.des_r))
    if threads <= 1:
        return kernels.structure_sweep(free_l, free_r, gd.conj, g, 0, gd.size)
    return _sweep_parallel(free_l, free_r, gd.conj, g, gd.size, threads)


_WORKER_ARGS = None


def _sweep_chunk(rng):
    free_l, free_r, conj, g = _WORKER_ARGS
    return kernels.structure_sweep(free_l, free_r, conj, g, rng[0], rng[1])


def _sweep_parallel(free_l, free_r, conj, g, size, threads):
    import concurrent.futures
    import multiprocessing

    global _WORKER_ARGS
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        return kernels.structure_sweep(free_l, free_r, conj, g, 0, size)
    chunk = -(-size // threads)
    ranges = [(lo, min(lo + chunk, size)) for lo in range(0, size, chunk)]
    _WORKER_ARGS = (free_l, free_r, conj, g)
    try:
        with concurrent.futures.ProcessPoolExecutor(threads, mp_context=ctx) as ex:
            parts = list(ex.map(_sweep_chunk, ranges))
    finally:
        _WORKER_ARGS = None
    total = parts[0]
    for part in parts[1:]:
        for key, c in part.items():
            total[key] = total.get(key, 0) + c
    return total


def build_table(n, gtype="D", threads=1, max_n=None):
    """Build the full structure table by one sweep over the group.

    For each group element the admissible subset pairs are enumerated and
    the conjugate-intersection target receives one count; relabelling to
    compositions goes through the complement convention.
    """
    _check_rank(n, gtype, max_n)
    gd = group_data(n, gtype, max_n)
    g = gd.n_gen
    basis = _basis_labels(n, gtype)
    by_addressed = {}
    for i, k in enumerate(basis):
        by_addressed[addressed_mask(k, gtype)] = i
    counts = _sweep_counts(gd, threads)
    gmask = (1 << g) - 1
    constants = {}
    for key, c in counts.items():
        lmask = key & gmask
        kmask = (key >> g) & gmask
        jmask = key >> (2 * g)
        pair = (by_addressed[jmask], by_addressed[kmask])
        row = constants.get(pair)
        if row is None:
            row = constants[pair] = {}
        row[by_addressed[lmask]] = c
    return StructureTable(gtype, n, basis, constants)


_TABLE_CACHE = {}


def get_table(gtype, n, threads=1, max_n=None):
    """Memoized access to the structure table of one group."""
    key = (gtype, n)
    table = _TABLE_CACHE.get(key)
    if table is None:
        table = _TABLE_CACHE[key] = build_table(n, gtype, threads=threads, max_n=max_n)
    return table


# ---------------------------------------------------------------------------
# algebra elements


class AlgebraElement:
    """A finitely supported combination of basis labels with exact scalars.

    Scalars are integers (``p=None``) or residues mod a prime ``p``; no zero
    coefficients are stored.
    """

    __slots__ = ("table", "coeffs", "p")

    def __init__(self, table, coeffs, p=None):
        if p is not None:
            lb._check_prime(p)
        self.table = table
        self.p = p
        clean = {}
        for i, c in coeffs.items():
            if not 0 <= i < table.dim:
                raise ValueError(f"basis index {i} out of range")
            c = c % p if p else c
            if c:
                clean[i] = c
        self.coeffs = clean

    def _check_compatible(self, other):
        if self.table is not other.table or self.p != other.p:
            raise ValueError("elements live in different algebras")

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (
            self.table is other.table and self.p == other.p and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.table), self.p, tuple(sorted(self.coeffs.items()))))

    def __add__(self, other):
        self._check_compatible(other)
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, 0) + c
        return AlgebraElement(self.table, out, self.p)

    def __neg__(self):
        return AlgebraElement(self.table, {i: -c for i, c in self.coeffs.items()}, self.p)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return AlgebraElement(self.table, {i: c * v for i, v in self.coeffs.items()}, self.p)

    def __mul__(self, other):
        self._check_compatible(other)
        table = self.table
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                ab = a * b
                for k, c in table.product_on_basis(i, j).items():
                    out[k] = out.get(k, 0) + ab * c
        return AlgebraElement(table, out, self.p)

    def dense(self):
        row = [0] * self.table.dim
        for i, c in self.coeffs.items():
            row[i] = c
        return row

    def reduce_mod(self, p):
        return AlgebraElement(self.table, dict(self.coeffs), p)

    def by_label(self):
        """Coefficients keyed by label, in canonical basis order."""
        basis = self.table.basis
        return {basis[i]: self.coeffs[i] for i in sorted(self.coeffs)}

    def __repr__(self):
        if not self.coeffs:
            return "AlgebraElement(0)"
        terms = " + ".join(
            f"{c}*B{lb.format_label(self.table.basis[i])}" for i, c in sorted(self.coeffs.items())
        )
        mod = f" mod {self.p}" if self.p else ""
        return f"AlgebraElement({terms}{mod})"


def dense_times_sparse(table, dense_row, sparse_coeffs, p=None):
    """Product of a dense coefficient row with a sparse element, as a row."""
    out = [0] * table.dim
    for j, b in sparse_coeffs.items():
        for i, a in enumerate(dense_row):
            if a:
                ab = a * b
                for k, c in table.product_on_basis(i, j).items():
                    out[k] += ab * c
    if p:
        out = [v % p for v in out]
    return out


# ---------------------------------------------------------------------------
# group-algebra oracle


def _group_algebra_counts(gd, jmask, kmask):
    cols = gd.cayley_cols()
    des_r = gd.des_r
    left = array("i", (x for x in range(gd.size) if not des_r[x] & jmask))
    right = array("i", (x for x in range(gd.size) if not des_r[x] & kmask))
    return kernels.convolve_counts(cols, left, right, gd.size)


def multiply_in_group_algebra(n, J, K, gtype="D", max_n=None):
    """Exact convolution of two coset-representative sums.

    Returns the product as a map from group elements to multiplicities.
    """
    gd = group_data(n, gtype, max_n)
    to_mask = lambda s: s.mask if isinstance(s, GeneratorSet) else int(s)
    counts = _group_algebra_counts(gd, to_mask(J), to_mask(K))
    return {
        SignedPermutation(gd.images[x]): c for x, c in enumerate(counts) if c
    }


def _extract_from_counts(counts, gd):
    # common value per descent class, then subset Möbius inversion
    g = gd.n_gen
    v = {}
    des_r = gd.des_r
    for x, c in enumerate(counts):
        t = des_r[x]
        prev = v.get(t)
        if prev is None:
            v[t] = c
        elif prev != c:
            raise NotInDescentSpanError(
                f"not in descent-algebra span: descent class {t:#x} carries "
                f"coefficients {prev} and {c}"
            )
    full = gd.full_mask
    out = {}
    for lmask in range(full + 1):
        total = 0
        sub = lmask
        while True:
            u = v.get(full ^ sub, 0)
            if u:
                sign = -1 if (bin(lmask ^ sub).count("1")) & 1 else 1
                total += sign * u
            if not sub:
                break
            sub = (sub - 1) & lmask
        if total:
            out[lmask] = total
    return out


def extract_coefficients(product, n, gtype="D", max_n=None):
    """Coefficients on the coset-sum basis of a descent-algebra element.

    ``product`` maps group elements to integers (as produced by
    :func:`multiply_in_group_algebra`).  Raises
    :class:`NotInDescentSpanError` when the input is not constant on some
    right-descent class.
    """
    gd = group_data(n, gtype, max_n)
    counts = [0] * gd.size
    idx = gd.index()
    for w, c in product.items():
        img = w.image if isinstance(w, SignedPermutation) else tuple(w)
        counts[idx[img]] = c
    return _extract_from_counts(counts, gd)


def table_from_group_algebra(n, gtype="D", max_n=None):
    """Structure table built entirely from group-algebra products.

    Independent of the sweep path; used to cross-validate it.
    """
    gd = group_data(n, gtype, max_n)
    basis = _basis_labels(n, gtype)
    addressed = [addressed_mask(k, gtype) for k in basis]
    index_of_mask = {m: i for i, m in enumerate(addressed)}
    constants = {}
    for i, jm in enumerate(addressed):
        for j, km in enumerate(addressed):
            counts = _group_algebra_counts(gd, jm, km)
            coeffs = _extract_from_counts(counts, gd)
            row = {index_of_mask[lm]: c for lm, c in coeffs.items()}
            if row:
                constants[(i, j)] = row
    return StructureTable(gtype, n, basis, constants, provenance="group-algebra")
