"""Pure-Python fallback for the compiled sweep kernels.

Same contract as the Cython module ``schubsing._kernels``; see
:mod:`schubsing.backend` for how one of the two is selected at import time.

Both functions work on flat buffers so the two implementations stay
line-for-line comparable:

* ``tables`` is the concatenation of ``count`` flattened rank tables of
  ``tlen`` bytes each;
* ``neighbors`` is the concatenation of per-permutation rows of ``ntrans``
  indices (the index of v.t for each transposition t).
"""

from __future__ import annotations

from typing import Sequence


def dominated_mask(tables: bytes, tlen: int, count: int, w: int, out: bytearray) -> None:
    """out[v] = 1 iff table v dominates table w pointwise (i.e. perm v <= perm w)."""
    ref = tables[w * tlen : (w + 1) * tlen]
    pos = 0
    for v in range(count):
        row = tables[pos : pos + tlen]
        out[v] = 1 if all(a >= b for a, b in zip(row, ref)) else 0
        pos += tlen


def count_in_mask(
    mask: bytes,
    neighbors: Sequence[int],
    ntrans: int,
    cands: Sequence[int],
    out: Sequence[int],
) -> None:
    """out[a] = number of neighbors of cands[a] whose mask bit is set."""
    for a, v in enumerate(cands):
        base = v * ntrans
        out[a] = sum(mask[i] for i in neighbors[base : base + ntrans])
