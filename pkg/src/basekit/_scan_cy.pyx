# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled tuple-scan kernel; same contract as the pure module.

Stabilizer bitsets arrive as a (points, words) uint64 matrix, bit 0 of word 0
being the identity element.  The scan runs nogil so callers may partition the
first-coordinate range across threads and sum the results.
"""

from libc.stdlib cimport free, malloc

MAX_DEPTH = 62


def count_range(const unsigned long long[:, ::1] stabs, Py_ssize_t depth,
                Py_ssize_t lo, Py_ssize_t hi):
    """(count, nodes) of regular depth-tuples with first coordinate in [lo, hi)."""
    cdef Py_ssize_t P = stabs.shape[0]
    cdef Py_ssize_t W = stabs.shape[1]
    if depth <= 0 or depth > MAX_DEPTH:
        raise ValueError("depth out of range for the compiled kernel")
    if lo < 0 or hi > P or lo > hi:
        raise ValueError("bad first-coordinate range")
    cdef unsigned long long* buf = <unsigned long long*> malloc(depth * W * sizeof(unsigned long long))
    if buf == NULL:
        raise MemoryError()
    cdef long long[64] pows
    cdef Py_ssize_t[64] idx
    cdef Py_ssize_t i, level, p, w, limit
    cdef long long total = 0, nodes = 0
    cdef unsigned long long m, other
    cdef unsigned long long* cur
    cdef unsigned long long* parent
    pows[0] = 1
    for i in range(1, depth):
        pows[i] = pows[i - 1] * P
    level = 0
    idx[0] = lo
    with nogil:
        while True:
            limit = hi if level == 0 else P
            if idx[level] >= limit:
                if level == 0:
                    break
                level -= 1
                idx[level] += 1
                continue
            p = idx[level]
            cur = buf + level * W
            if level == 0:
                m = stabs[p, 0]
                cur[0] = m
                other = m & ~(<unsigned long long> 1)
                for w in range(1, W):
                    m = stabs[p, w]
                    cur[w] = m
                    other |= m
            else:
                parent = buf + (level - 1) * W
                m = parent[0] & stabs[p, 0]
                cur[0] = m
                other = m & ~(<unsigned long long> 1)
                for w in range(1, W):
                    m = parent[w] & stabs[p, w]
                    cur[w] = m
                    other |= m
            nodes += 1
            if other == 0:
                total += pows[depth - level - 1]
                idx[level] += 1
            elif level + 1 < depth:
                level += 1
                idx[level] = 0
            else:
                idx[level] += 1
    free(buf)
    return total, nodes


def find_first(const unsigned long long[:, ::1] stabs, Py_ssize_t depth):
    """Lexicographically least regular depth-tuple, or None."""
    cdef Py_ssize_t P = stabs.shape[0]
    cdef Py_ssize_t W = stabs.shape[1]
    if depth <= 0 or depth > MAX_DEPTH:
        raise ValueError("depth out of range for the compiled kernel")
    cdef unsigned long long* buf = <unsigned long long*> malloc(depth * W * sizeof(unsigned long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t[64] idx
    cdef Py_ssize_t level = 0, p, w
    cdef long long hit_level = -1
    cdef unsigned long long m, other
    cdef unsigned long long* cur
    cdef unsigned long long* parent
    idx[0] = 0
    with nogil:
        while True:
            if idx[level] >= P:
                if level == 0:
                    break
                level -= 1
                idx[level] += 1
                continue
            p = idx[level]
            cur = buf + level * W
            if level == 0:
                m = stabs[p, 0]
                cur[0] = m
                other = m & ~(<unsigned long long> 1)
                for w in range(1, W):
                    m = stabs[p, w]
                    cur[w] = m
                    other |= m
            else:
                parent = buf + (level - 1) * W
                m = parent[0] & stabs[p, 0]
                cur[0] = m
                other = m & ~(<unsigned long long> 1)
                for w in range(1, W):
                    m = parent[w] & stabs[p, w]
                    cur[w] = m
                    other |= m
            if other == 0:
                hit_level = level
                break
            if level + 1 < depth:
                level += 1
                idx[level] = 0
            else:
                idx[level] += 1
    if hit_level < 0:
        free(buf)
        return None
    out = [idx[i] for i in range(hit_level + 1)]
    out.extend([0] * (depth - hit_level - 1))
    free(buf)
    return tuple(out)
