"""Pure-Python border-strip recursion kernel.

Shapes travel as bead masks: bit b is set when some row i (1-based, rows
nonincreasing, no zero rows) has first-column hook lam_i + rows - i = b.
Removing a border strip of size r is then moving one bead from b down to
the free slot b - r; the strip height is the number of beads strictly
between, and the sign its parity.  Shedding a row renormalizes the mask
by shifting out the low set bits, so equal shapes always share a key.

The remaining parts of the class partition are interned as a prefix trie
(largest part stripped first), so columns that agree on their lower
parts share every subproblem through the memo.

``_mnkernel_c`` is the compiled twin; both expose ``compute_columns``
and must return identical values.
"""

from __future__ import annotations

KERNEL_NAME = "pure-python"
MAX_DEGREE = None  # unbounded ints, no cap

_PID_BITS = 20


def shape_mask(parts: tuple[int, ...]) -> int:
    """Bead mask of a partition given in nondecreasing stored form."""
    mask = 0
    n = len(parts)
    for i, p in enumerate(parts):
        mask |= 1 << (p + i)  # row n-i has hook p + (n - (n - i)) = p + i
    assert mask.bit_count() == n
    return mask


def compute_columns(masks: list[int], alphas: list[tuple[int, ...]]) -> list[list[int]]:
    """Character values column by column: result[j][i] = chi(masks[i], alphas[j])."""
    parent = [0]
    last = [0]
    ids: dict[tuple[int, ...], int] = {(): 0}

    def intern(t: tuple[int, ...]) -> int:
        pid = ids.get(t)
        if pid is None:
            par = intern(t[:-1])
            ids[t] = pid = len(parent)
            parent.append(par)
            last.append(t[-1])
        return pid

    memo: dict[int, int] = {}

    def value(mask: int, pid: int) -> int:
        if pid == 0:
            return 1  # empty class partition forces the empty shape
        key = (mask << _PID_BITS) | pid
        v = memo.get(key)
        if v is not None:
            return v
        r = last[pid]
        par = parent[pid]
        total = 0
        m = mask
        while m:
            low = m & -m
            m ^= low
            b = low.bit_length() - 1
            nb = b - r
            if nb >= 0 and not (mask >> nb) & 1:
                between = (mask >> (nb + 1)) & ((1 << (r - 1)) - 1)
                sub = (mask ^ low) | (1 << nb)
                while sub & 1:
                    sub >>= 1
                child = value(sub, par)
                total += -child if between.bit_count() & 1 else child
        memo[key] = total
        return total

    out = []
    for alpha in alphas:
        pid = intern(tuple(alpha))
        assert pid < (1 << _PID_BITS)
        out.append([value(m, pid) for m in masks])
    return out
