"""Cached enumeration of a full symmetric group for sweep-style computations.

Interval enumeration is done by filtering all of S_n with the rank-table
domination test; no poset data structure is kept.  For every group we store,
once per process:

* all n! permutations in lexicographic order of one-line notation,
* their flattened rank tables (one byte per entry),
* their Coxeter lengths,
* the index of v.t for every permutation v and transposition t.

Lower-interval masks are computed by the kernel backend (compiled or pure
Python, see :mod:`schubsing.backend`) and cached with a bounded LRU.  All
functions are deterministic; the caches are guarded by locks so threaded
callers only risk duplicate work, never wrong answers.
"""

from __future__ import annotations

import threading
from array import array
from collections import OrderedDict
from itertools import permutations as _lex_permutations

from .backend import kernels
from .perms import Permutation

__all__ = ["MAX_N", "SymmetricGroup", "symmetric_group"]

# 9! tables already take ~36 MB; past that, filtering all of S_n per query is
# no longer a sane strategy.
MAX_N = 9

_MASK_CACHE_BYTES = 1 << 27


def _zero_ints(count: int) -> array:
    return array("i", bytes(array("i").itemsize * count))


class SymmetricGroup:
    """All of S_n plus the precomputed arrays the sweep kernels consume."""

    def __init__(self, n: int):
        if not 1 <= n <= MAX_N:
            raise ValueError(f"n must be between 1 and {MAX_N}, got {n}")
        self.n = n
        self.perms: tuple[tuple[int, ...], ...] = tuple(
            _lex_permutations(range(1, n + 1))
        )
        self._index: dict[tuple[int, ...], int] = {
            p: i for i, p in enumerate(self.perms)
        }
        self.tlen = (n + 1) * (n + 1)
        self.tables = self._build_tables()
        self.lengths = array(
            "B",
            (
                sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])
                for p in self.perms
            ),
        )
        # Transpositions as 0-based position pairs, and the index of v.t
        # (swap the two positions in one-line notation) for every v, t.
        self.transpositions: tuple[tuple[int, int], ...] = tuple(
            (i, j) for i in range(n) for j in range(i + 1, n)
        )
        self.ntrans = len(self.transpositions)
        self.tprod = self._build_tprod()
        self._mask_cache: OrderedDict[int, bytes] = OrderedDict()
        self._mask_cache_size = max(64, _MASK_CACHE_BYTES // max(1, len(self.perms)))
        self._lock = threading.Lock()

    def _build_tables(self) -> bytes:
        n = self.n
        out = bytearray(len(self.perms) * self.tlen)
        pos = 0
        for p in self.perms:
            row = [0] * (n + 1)
            pos += n + 1  # zeroth row stays zero
            for i in range(n):
                wi = p[i]
                for q in range(wi, n + 1):
                    row[q] += 1
                out[pos : pos + n + 1] = bytes(row)
                pos += n + 1
        return bytes(out)

    def _build_tprod(self) -> array:
        index = self._index
        out = _zero_ints(len(self.perms) * self.ntrans)
        pos = 0
        for p in self.perms:
            lp = list(p)
            for i, j in self.transpositions:
                lp[i], lp[j] = lp[j], lp[i]
                out[pos] = index[tuple(lp)]
                lp[i], lp[j] = lp[j], lp[i]
                pos += 1
        return out

    def index_of(self, values: tuple[int, ...]) -> int:
        try:
            return self._index[values]
        except KeyError:
            raise ValueError(f"not a permutation of 1..{self.n}: {values!r}") from None

    def perm(self, idx: int) -> Permutation:
        return Permutation(self.perms[idx])

    def leq_idx(self, vi: int, wi: int) -> bool:
        """Bruhat comparison straight off the stored tables."""
        tlen = self.tlen
        tv = self.tables[vi * tlen : (vi + 1) * tlen]
        tw = self.tables[wi * tlen : (wi + 1) * tlen]
        return all(a >= b for a, b in zip(tv, tw))

    def lower_mask(self, wi: int) -> bytes:
        """Byte mask over all of S_n: mask[v] = 1 iff v <= w in Bruhat order."""
        with self._lock:
            cached = self._mask_cache.get(wi)
            if cached is not None:
                self._mask_cache.move_to_end(wi)
                return cached
        out = bytearray(len(self.perms))
        kernels.dominated_mask(self.tables, self.tlen, len(self.perms), wi, out)
        mask = bytes(out)
        with self._lock:
            self._mask_cache[wi] = mask
            while len(self._mask_cache) > self._mask_cache_size:
                self._mask_cache.popitem(last=False)
        return mask

    def interval(self, wi: int) -> array:
        """Indices of {v : v <= w}, ascending."""
        mask = self.lower_mask(wi)
        return array("i", (i for i, b in enumerate(mask) if b))

    def tangent_counts(self, wi: int, cands: array) -> array:
        """For each candidate v: #{transpositions t : v.t <= w}."""
        mask = self.lower_mask(wi)
        out = _zero_ints(len(cands))
        kernels.count_in_mask(mask, self.tprod, self.ntrans, cands, out)
        return out

    def tangent_count(self, vi: int, wi: int) -> int:
        return self.tangent_counts(wi, array("i", [vi]))[0]


_groups: dict[int, SymmetricGroup] = {}
_groups_lock = threading.Lock()


def symmetric_group(n: int) -> SymmetricGroup:
    """Process-wide cache of :class:`SymmetricGroup` instances."""
    with _groups_lock:
        group = _groups.get(n)
        if group is None:
            group = SymmetricGroup(n)
            _groups[n] = group
        return group
