# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled residue-table kernels.

Twin of `_kernel_py`; same functions, same semantics, same sentinel.
Values are kept in 64-bit signed storage; generators beyond the 62-bit
sentinel are rejected rather than silently wrapped.
"""
from libc.stdlib cimport free, malloc

UNREACHABLE = -1

cdef long long SENTINEL = (<long long> 1) << 62


cdef long long c_gcd(long long a, long long b):
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


def residue_table(modulus, gens):
    """Least-element table of the monoid spanned by `gens`, modulo `modulus`.

    Entry i is the coefficient k with k*modulus + i the least monoid
    element congruent to i, or -1 when the class holds no element.
    See the pure twin for the cycle-relaxation argument.
    """
    cdef long long m = modulus
    if m < 1:
        raise ValueError("modulus must be positive")
    gens_sorted = sorted(gens)
    cdef long long *w = <long long *> malloc(m * sizeof(long long))
    if w == NULL:
        raise MemoryError()
    cdef long long g, step, d, cycle_len, best, cand, cur
    cdef long long i, lead, p, best_pos
    try:
        for i in range(m):
            w[i] = SENTINEL
        w[0] = 0
        for gen in gens_sorted:
            g = gen
            if g >= SENTINEL:
                raise OverflowError("generator exceeds the 62-bit kernel range")
            step = g % m
            if step == 0:
                continue
            d = c_gcd(step, m)
            cycle_len = m // d
            for lead in range(d):
                best_pos = lead
                best = w[lead]
                p = lead
                for i in range(cycle_len - 1):
                    p += step
                    if p >= m:
                        p -= m
                    if w[p] < best:
                        best = w[p]
                        best_pos = p
                p = best_pos
                cur = w[p]
                for i in range(cycle_len - 1):
                    p += step
                    if p >= m:
                        p -= m
                    if cur < SENTINEL:
                        cand = cur + g
                        if cand < w[p]:
                            w[p] = cand
                    cur = w[p]
        out = [0] * m
        for i in range(m):
            out[i] = (w[i] - i) // m if w[i] < SENTINEL else -1
        return out
    finally:
        free(w)


def minimal_residues(modulus, coeffs):
    """Residues whose table element is a minimal generator.

    Same pair scan as the pure twin: a nonzero table element fails
    minimality exactly when it is the sum of two nonzero table elements.
    """
    cdef long long m = modulus
    if m < 1:
        raise ValueError("modulus must be positive")
    cdef long long *w = <long long *> malloc(m * sizeof(long long))
    if w == NULL:
        raise MemoryError()
    cdef long long i, j, k, wi
    cdef bint decomposable
    out = []
    try:
        for i in range(m):
            w[i] = (<long long> coeffs[i]) * m + i
        for i in range(1, m):
            wi = w[i]
            decomposable = 0
            for j in range(1, m):
                k = i - j
                if k < 0:
                    k += m
                if k == 0 or k < j:
                    continue
                if w[j] + w[k] == wi:
                    decomposable = 1
                    break
            if not decomposable:
                out.append(i)
        return out
    finally:
        free(w)
