"""Pure-Python kernels; see the package docstring for the contract."""

from __future__ import annotations

BACKEND = "pure"

_ABSENT = 0xFF


def structure_sweep(free_left, free_right, conj, n_gen, start=0, end=None):
    stop = len(free_left) if end is None else end
    g = n_gen
    g2 = 2 * g
    counts = {}
    get = counts.get
    for x in range(start, stop):
        fl = free_left[x]
        fr = free_right[x]
        base = x * g
        # subsets J of fl, paired with the mask of their generator conjugates
        pairs = [(0, 0)]
        rest = fl
        while rest:
            low = rest & -rest
            rest ^= low
            t = conj[base + low.bit_length() - 1]
            tm = 0 if t == _ABSENT else 1 << t
            pairs += [(j | low, m | tm) for j, m in pairs]
        for j, m in pairs:
            jbase = j << g2
            sub = fr
            while True:
                key = jbase | (sub << g) | (m & sub)
                counts[key] = get(key, 0) + 1
                if not sub:
                    break
                sub = (sub - 1) & fr
    return counts


def convolve_counts(cayley_cols, left, right, size):
    counts = [0] * size
    for y in right:
        col = cayley_cols[y]
        for x in left:
            counts[col[x]] += 1
    return counts
