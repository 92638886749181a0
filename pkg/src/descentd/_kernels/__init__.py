"""Hot-loop kernels with a compiled core and a pure-Python fallback.

The compiled extension is preferred when it imported cleanly; setting the
environment variable ``DESCENTD_PURE`` forces the fallback.  Both backends
expose the same two functions:

``structure_sweep(free_left, free_right, conj, n_gen, start, end)``
    Accumulate structure-constant counts over a slice of the group.  Inputs
    are per-element masks of generators that are *not* left/right descents
    and the flattened generator-conjugation table; the result maps the
    packed key ``(J << 2g) | (K << g) | L`` to a count.

``convolve_counts(cayley_cols, left, right, size)``
    Counts of products ``x * y`` per element index, for ``x`` over ``left``
    and ``y`` over ``right``, given per-factor multiplication columns.
"""

import os

if os.environ.get("DESCENTD_PURE"):
    from . import _pure as _impl
else:
    try:
        from . import _speedups as _impl
    except ImportError:
        from . import _pure as _impl

BACKEND = _impl.BACKEND
structure_sweep = _impl.structure_sweep
convolve_counts = _impl.convolve_counts
