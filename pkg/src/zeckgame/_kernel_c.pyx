# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled playout kernel.

Bit-for-bit equivalent to `zeckgame._kernel_py`; see that module for the
enumeration-order and random-draw contract. Only the hot inner loop lives
here; all game analysis stays in pure Python.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    ctypedef unsigned long long u64 "unsigned long long"

cdef u64 GOLDEN = 0x9E3779B97F4A7C15ULL


cdef inline u64 mix64(u64 x) nogil:
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL
    return x ^ (x >> 31)


cdef int playout(long long n, int ell, u64 state, long long *counts) nogil:
    cdef int length = 0
    cdef int nmoves, i, kind, packed
    cdef int moves[192]
    cdef int j
    for j in range(ell + 1):
        counts[j] = 0
    counts[1] = n
    while True:
        nmoves = 0
        if counts[1] >= 2:
            moves[nmoves] = 0
            nmoves += 1
        if ell >= 2 and counts[2] >= 2:
            moves[nmoves] = 64
            nmoves += 1
        for i in range(3, ell + 1):
            if counts[i] >= 2:
                moves[nmoves] = 128 + i
                nmoves += 1
        for i in range(1, ell):
            if counts[i] >= 1 and counts[i + 1] >= 1:
                moves[nmoves] = 192 + i
                nmoves += 1
        if nmoves == 0:
            return length
        state = state + GOLDEN
        packed = moves[mix64(state) % <u64>nmoves]
        kind = packed >> 6
        i = packed & 63
        if kind == 0:
            counts[1] -= 2
            counts[2] += 1
        elif kind == 1:
            counts[2] -= 2
            counts[1] += 1
            counts[3] += 1
        elif kind == 2:
            counts[i] -= 2
            counts[i - 2] += 1
            counts[i + 1] += 1
        else:
            counts[i] -= 1
            counts[i + 1] -= 1
            counts[i + 2] += 1
        length += 1


def random_playout_length(n, stream_seed):
    """Number of moves in one uniform-random game on n."""
    from .core import fib_table

    cdef int ell = fib_table(n).ell
    cdef long long *counts = <long long *> malloc((ell + 1) * sizeof(long long))
    if counts == NULL:
        raise MemoryError()
    try:
        return playout(n, ell, <u64> (stream_seed & 0xFFFFFFFFFFFFFFFF), counts)
    finally:
        free(counts)


def random_playout_lengths(n, seed, start, count):
    """Lengths of games number start..start+count-1 of a run seeded with seed."""
    from .core import fib_table
    from .rng import derive_stream_seed

    cdef int ell = fib_table(n).ell
    cdef long long nn = n
    cdef long long *counts = <long long *> malloc((ell + 1) * sizeof(long long))
    if counts == NULL:
        raise MemoryError()
    lengths = []
    try:
        for g in range(start, start + count):
            lengths.append(
                playout(nn, ell, <u64> derive_stream_seed(seed, g), counts)
            )
    finally:
        free(counts)
    return lengths
