# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled kernels for the symmetric-group sweeps.

Hot loops only: Bruhat domination masks over flattened rank tables, and
counting masked neighbors (the tangent-dimension inner loop).  The contract
is documented in the pure-Python twin ``schubsing._kernels_py``.
"""


def dominated_mask(const unsigned char[::1] tables, Py_ssize_t tlen,
                   Py_ssize_t count, Py_ssize_t w, unsigned char[::1] out):
    """out[v] = 1 iff table v dominates table w pointwise."""
    cdef Py_ssize_t v, i, off
    cdef Py_ssize_t base = w * tlen
    cdef unsigned char ok
    for v in range(count):
        off = v * tlen
        ok = 1
        for i in range(tlen):
            if tables[off + i] < tables[base + i]:
                ok = 0
                break
        out[v] = ok


def count_in_mask(const unsigned char[::1] mask, const int[::1] neighbors,
                  Py_ssize_t ntrans, const int[::1] cands, int[::1] out):
    """out[a] = number of neighbors of cands[a] whose mask bit is set."""
    cdef Py_ssize_t a, t, base
    cdef int c
    for a in range(cands.shape[0]):
        base = cands[a] * ntrans
        c = 0
        for t in range(ntrans):
            c += mask[neighbors[base + t]]
        out[a] = c
