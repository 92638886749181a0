# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see the package docstring for the contract."""

from libc.stdlib cimport calloc, free

BACKEND = "c"

DEF ABSENT = 0xFF


def structure_sweep(const int[:] free_left, const int[:] free_right,
                    const unsigned char[:] conj, int n_gen,
                    Py_ssize_t start=0, end=None):
    cdef Py_ssize_t stop = free_left.shape[0] if end is None else <Py_ssize_t> end
    cdef int g = n_gen
    if g < 0 or g > 8:
        raise ValueError(f"generator count {g} outside the supported range 0..8")
    cdef int g2 = 2 * g
    cdef Py_ssize_t size = (<Py_ssize_t> 1) << (3 * g)
    cdef long long* acc = <long long*> calloc(size, sizeof(long long))
    if acc is NULL:
        raise MemoryError()
    cdef int pj[256]
    cdef int pm[256]
    cdef Py_ssize_t x, base, jbase, key
    cdef int fl, fr, b, t, tm, bb, cnt, i, m, sub
    try:
        for x in range(start, stop):
            fl = free_left[x]
            fr = free_right[x]
            base = x * g
            cnt = 1
            pj[0] = 0
            pm[0] = 0
            for b in range(g):
                if (fl >> b) & 1:
                    t = conj[base + b]
                    tm = 0 if t == ABSENT else 1 << t
                    bb = 1 << b
                    for i in range(cnt):
                        pj[cnt + i] = pj[i] | bb
                        pm[cnt + i] = pm[i] | tm
                    cnt <<= 1
            for i in range(cnt):
                jbase = (<Py_ssize_t> pj[i]) << g2
                m = pm[i]
                sub = fr
                while True:
                    acc[jbase | (sub << g) | (m & sub)] += 1
                    if sub == 0:
                        break
                    sub = (sub - 1) & fr
        counts = {}
        for key in range(size):
            if acc[key]:
                counts[key] = acc[key]
        return counts
    finally:
        free(acc)


def convolve_counts(list cayley_cols, const int[:] left, const int[:] right,
                    Py_ssize_t size):
    cdef long long* acc = <long long*> calloc(size, sizeof(long long))
    if acc is NULL:
        raise MemoryError()
    cdef const int[:] col
    cdef Py_ssize_t yi, xi, k
    try:
        for yi in range(right.shape[0]):
            col = cayley_cols[right[yi]]
            for xi in range(left.shape[0]):
                acc[col[left[xi]]] += 1
        return [acc[k] for k in range(size)]
    finally:
        free(acc)
