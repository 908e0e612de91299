# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the truth-table kernels in ``revsynth._kernels_py``.

Same gate encoding: (kind, cmask, pmask, m1, m2) per gate; kind 0 is a
mixed-polarity multi-control Toffoli, kind 1 a multi-control swap.  Tables
hold values below 2^24, so C longs are ample.
"""

from libc.stdlib cimport free, malloc


def simulate_value(gates, long x):
    cdef long kind, cmask, pmask, m1, m2
    for kind, cmask, pmask, m1, m2 in gates:
        if x & cmask == pmask:
            if kind == 0:
                x ^= m1
            elif (x & m1 != 0) != (x & m2 != 0):
                x ^= m1 | m2
    return x


def simulate_table(gates, int width):
    cdef Py_ssize_t size = 1 << width
    cdef Py_ssize_t i
    cdef long kind, cmask, pmask, m1, m2, both, x
    cdef long *table = <long *> malloc(size * sizeof(long))
    if table == NULL:
        raise MemoryError()
    try:
        for i in range(size):
            table[i] = i
        for kind, cmask, pmask, m1, m2 in gates:
            both = m1 | m2
            for i in range(size):
                x = table[i]
                if x & cmask == pmask:
                    if kind == 0:
                        table[i] = x ^ m1
                    elif (x & m1 != 0) != (x & m2 != 0):
                        table[i] = x ^ both
        return tuple([table[i] for i in range(size)])
    finally:
        free(table)


def apply_gate_table(outputs, gate):
    cdef long kind, cmask, pmask, m1, m2, both, x
    kind, cmask, pmask, m1, m2 = gate
    both = m1 | m2
    cdef list result = []
    for x in outputs:
        if x & cmask == pmask:
            if kind == 0:
                x ^= m1
            elif (x & m1 != 0) != (x & m2 != 0):
                x ^= both
        result.append(x)
    return tuple(result)


def swap_values(outputs, long u, long v):
    cdef long w
    cdef list result = []
    for w in outputs:
        if w == v:
            result.append(u)
        elif w == u:
            result.append(v)
        else:
            result.append(w)
    return tuple(result)


def flip_column(outputs, int line):
    cdef long bit = 1 << line
    cdef long w
    return tuple([w ^ bit for w in outputs])


def mismatch_sides(outputs, int line):
    cdef long bit = 1 << line
    cdef long x = 0, w
    cdef list zeros = []
    cdef list ones = []
    for w in outputs:
        if (w ^ x) & bit:
            if w & bit:
                ones.append(w)
            else:
                zeros.append(w)
        x += 1
    return zeros, ones
