"""Brute-force monotone walk counting on the transposition Cayley graph.

A walk starts at the identity and multiplies one transposition per step
on the right; the edge for (i j) with i < j is labeled j, and a walk is
monotone when its label sequence is weakly increasing.  The dynamic
program runs over states (permutation, last label) for small degrees
and serves as the independent oracle for the character-formula series
coefficients.

Degrees are capped at 7 and lengths at 12: one step above either cap
roughly multiplies the state table past the supported envelope, so the
caps are hard errors rather than warnings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .characters import CharacterTable
from .errors import CapExceededError
from .genfun import series_coeff
from .partitions import Partition

MAX_DEGREE = 7
MAX_LENGTH = 12


def cycle_type(perm: tuple[int, ...]) -> Partition:
    """Cycle type of a permutation in one-line form on 0..d-1."""
    seen = [False] * len(perm)
    lens = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = perm[k]
            n += 1
        lens.append(n)
    return Partition(sorted(lens))


@dataclass(frozen=True)
class WalkCounts:
    degree: int
    max_length: int
    per_permutation: dict[tuple[tuple[int, ...], int], int]
    per_type: dict[tuple[Partition, int], int]


@dataclass(frozen=True)
class ClassFunctionResult:
    passed: bool
    witness: tuple[tuple[int, ...], tuple[int, ...], int] | None = None


@dataclass(frozen=True)
class OracleReport:
    passed: bool
    degree: int
    max_length: int
    mismatches: tuple[tuple[Partition, int, int, int], ...]


def enumerate_counts(d: int, R: int) -> WalkCounts:
    """Monotone walk counts for every permutation and length r <= R."""
    if not 2 <= d <= MAX_DEGREE:
        raise CapExceededError(f"degree {d} outside supported range 2..{MAX_DEGREE}")
    if not 0 <= R <= MAX_LENGTH:
        raise CapExceededError(f"length {R} outside supported range 0..{MAX_LENGTH}")

    perms = list(itertools.permutations(range(d)))
    index = {p: i for i, p in enumerate(perms)}
    identity = index[tuple(range(d))]

    # swap[i][(a, b)] = index of perms[i] with positions a, b exchanged,
    # i.e. right multiplication by the transposition (a b)
    pairs = [(a, b) for b in range(1, d) for a in range(b)]
    swap = []
    for p in perms:
        row = {}
        for a, b in pairs:
            q = list(p)
            q[a], q[b] = q[b], q[a]
            row[(a, b)] = index[tuple(q)]
        swap.append(row)

    per_permutation: dict[tuple[tuple[int, ...], int], int] = {}
    for i, p in enumerate(perms):
        per_permutation[(p, 0)] = 1 if i == identity else 0

    # state[i][lab]: walks ending at perms[i] whose last label is lab
    # (label of (a b) is b; lab 0 is the empty-walk sentinel)
    state = [[0] * d for _ in perms]
    state[identity][0] = 1
    for r in range(1, R + 1):
        nxt = [[0] * d for _ in perms]
        for i, labs in enumerate(state):
            for lab in range(d):
                c = labs[lab]
                if not c:
                    continue
                for b in range(max(lab, 1), d):
                    for a in range(b):
                        nxt[swap[i][(a, b)]][b] += c
        state = nxt
        for i, p in enumerate(perms):
            per_permutation[(p, r)] = sum(state[i])

    per_type: dict[tuple[Partition, int], int] = {}
    for i, p in enumerate(perms):
        t = cycle_type(p)
        for r in range(R + 1):
            key = (t, r)
            if key not in per_type:  # first permutation of the class in index order
                per_type[key] = per_permutation[(p, r)]

    return WalkCounts(d, R, per_permutation, per_type)


def class_function_check(w: WalkCounts) -> ClassFunctionResult:
    """Verify counts are constant on conjugacy classes for every length."""
    rep: dict[Partition, tuple[int, ...]] = {}
    for (perm, r), count in sorted(w.per_permutation.items()):
        t = cycle_type(perm)
        first = rep.setdefault(t, perm)
        if count != w.per_permutation[(first, r)]:
            return ClassFunctionResult(False, (first, perm, r))
    return ClassFunctionResult(True)


def oracle_compare(d: int, R: int, table: CharacterTable) -> OracleReport:
    """Walk-count DP against the character-formula coefficients, all types."""
    counts = enumerate_counts(d, R)
    mismatches = []
    seen_types = sorted({t for t, _ in counts.per_type})
    for t in seen_types:
        for r in range(R + 1):
            walked = counts.per_type[(t, r)]
            formula = series_coeff(t, r, table)
            if walked != formula:
                mismatches.append((t, r, walked, formula))
    return OracleReport(not mismatches, d, R, tuple(mismatches))
