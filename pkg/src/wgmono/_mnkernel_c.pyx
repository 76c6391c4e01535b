# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled border-strip recursion kernel.

Same bead-mask algorithm as ``_mnkernel_py`` (see there for the
encoding), with the recursion, memo, and bit bookkeeping in C++.
Character values are accumulated in int64, which is safe while
d * sqrt(d!) stays below 2^63; MAX_DEGREE pins the envelope and the
caller falls back to the pure kernel beyond it.
"""

from cython.operator cimport dereference
from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map
from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    """
    static inline int wg_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int wg_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int wg_popcount(unsigned long long x) nogil
    int wg_ctz(unsigned long long x) nogil

KERNEL_NAME = "compiled"
MAX_DEGREE = 26


cdef class _Session:
    cdef vector[int] last
    cdef vector[int] parent
    # one map per interned prefix: pid -> {shape mask -> character value}
    cdef vector[unordered_map[uint64_t, int64_t]] memo

    def __cinit__(self):
        self.last.push_back(0)
        self.parent.push_back(0)
        self.memo.resize(1)

    cdef int add_prefix(self, int par, int r):
        self.last.push_back(r)
        self.parent.push_back(par)
        self.memo.resize(self.memo.size() + 1)
        return <int>self.last.size() - 1

    cdef int64_t value(self, uint64_t mask, int pid) noexcept:
        if pid == 0:
            return 1
        cdef unordered_map[uint64_t, int64_t].iterator it = self.memo[pid].find(mask)
        if it != self.memo[pid].end():
            return dereference(it).second
        cdef int r = self.last[pid]
        cdef int par = self.parent[pid]
        cdef int64_t total = 0, child
        cdef uint64_t m = mask, low, between, sub
        cdef int b, nb
        while m:
            low = m & (~m + 1)
            m ^= low
            b = wg_ctz(low)
            nb = b - r
            if nb >= 0 and not (mask >> nb) & 1:
                between = (mask >> (nb + 1)) & ((<uint64_t>1 << (r - 1)) - 1)
                sub = (mask ^ low) | (<uint64_t>1 << nb)
                while sub & 1:
                    sub >>= 1
                child = self.value(sub, par)
                total += -child if wg_popcount(between) & 1 else child
        self.memo[pid][mask] = total
        return total


def compute_columns(masks, alphas):
    """Character values column by column: result[j][i] = chi(masks[i], alphas[j])."""
    cdef _Session s = _Session()
    ids = {(): 0}

    cdef vector[uint64_t] cmasks
    for m in masks:
        cmasks.push_back(m)

    cdef int pid, par
    cdef size_t i
    cdef int k
    out = []
    for alpha in alphas:
        t = tuple(alpha)
        cached = ids.get(t)
        if cached is None:
            par = 0
            for k in range(1, len(t) + 1):
                got = ids.get(t[:k])
                if got is None:
                    got = s.add_prefix(par, t[k - 1])
                    ids[t[:k]] = got
                par = got
            pid = par
        else:
            pid = cached
        col = []
        for i in range(cmasks.size()):
            col.append(s.value(cmasks[i], pid))
        out.append(col)
    return out
