# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cylinder survival counting (64-bit fast path).

Same contract as kernels._pure.cylinder_counts; callers must ensure
2^depth * max(pa, pb, qa, qb) fits comfortably in 63 bits.
"""


def cylinder_counts(int depth, unsigned long long pa, unsigned long long qa,
                    unsigned long long pb, unsigned long long qb):
    if depth < 1:
        raise ValueError("depth must be positive")
    cdef unsigned long long n = 1ULL << depth
    cdef unsigned long long mask = n - 1
    cdef unsigned long long a_scaled = pa * n
    cdef unsigned long long b_scaled = pb * n
    cdef unsigned long long lower = 0, upper = 0
    cdef unsigned long long k, c, w, top
    cdef int j
    cdef bint disjoint, never_inside
    for k in range(n):
        c = k
        w = 1
        disjoint = True
        never_inside = True
        for j in range(depth):
            top = c + w
            if disjoint and not (top * qa <= a_scaled or c * qb >= b_scaled):
                disjoint = False
                if not never_inside:
                    break
            if never_inside and c * qa > a_scaled and top * qb < b_scaled:
                never_inside = False
                if not disjoint:
                    break
            c = (c << 1) & mask
            w <<= 1
        lower += disjoint
        upper += never_inside
    return lower, upper
