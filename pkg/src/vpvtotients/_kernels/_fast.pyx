# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: selector enumeration and visible-point enumeration.

Mirrors the API of `_ref.py`.  The selector loops walk [0,k)^m with an
odometer counter and an incrementally maintained gcd stack, which avoids
re-reducing the full tuple at every step.
"""

from libc.math cimport cos, sin, M_PI
from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef long long _gcd(long long a, long long b) noexcept nogil:
    cdef long long t
    while b:
        t = a % b
        a = b
        b = t
    return a


def selector_tuples(int m, int k):
    """Selector tuples in lexicographic order."""
    cdef list out = []
    cdef int i
    cdef long long g, s
    cdef int* j = <int*>malloc(m * sizeof(int))
    if j == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            j[i] = 0
        while True:
            g = k
            s = 0
            for i in range(m):
                g = _gcd(g, j[i])
                s += j[i]
            if g == 1 and s != 0:
                out.append(tuple([j[i] for i in range(m)]))
            # odometer increment, last index fastest -> lexicographic order
            i = m - 1
            while i >= 0:
                j[i] += 1
                if j[i] < k:
                    break
                j[i] = 0
                i -= 1
            if i < 0:
                break
    finally:
        free(j)
    return out


def selector_count(int m, int k):
    cdef long long count = 0
    cdef int i
    cdef long long g, s
    cdef int* j = <int*>malloc(m * sizeof(int))
    if j == NULL:
        raise MemoryError()
    try:
        for i in range(m):
            j[i] = 0
        while True:
            g = k
            s = 0
            for i in range(m):
                g = _gcd(g, j[i])
                s += j[i]
            if g == 1 and s != 0:
                count += 1
            i = m - 1
            while i >= 0:
                j[i] += 1
                if j[i] < k:
                    break
                j[i] = 0
                i -= 1
            if i < 0:
                break
    finally:
        free(j)
    return count


def selector_cos_sum(int k, tuple n):
    """sum over the selector of cos(2*pi*(j . n)/k)."""
    cdef int m = len(n)
    cdef int i
    cdef long long g, s, dot
    cdef double total = 0.0
    cdef double w = 2.0 * M_PI / k
    cdef long long* nv = <long long*>malloc(m * sizeof(long long))
    cdef int* j = <int*>malloc(m * sizeof(int))
    if nv == NULL or j == NULL:
        free(nv)
        free(j)
        raise MemoryError()
    try:
        for i in range(m):
            nv[i] = n[i]
            j[i] = 0
        while True:
            g = k
            s = 0
            dot = 0
            for i in range(m):
                g = _gcd(g, j[i])
                s += j[i]
                dot += j[i] * nv[i]
            if g == 1 and s != 0:
                dot = dot % k
                if dot < 0:
                    dot += k
                total += cos(w * dot)
            i = m - 1
            while i >= 0:
                j[i] += 1
                if j[i] < k:
                    break
                j[i] = 0
                i -= 1
            if i < 0:
                break
    finally:
        free(nv)
        free(j)
    return total


def selector_char_sum(int k, tuple thetas):
    """sum over the selector of exp(2*pi*i*(j . theta)/k)."""
    cdef int m = len(thetas)
    cdef int i
    cdef long long g, s
    cdef double phase
    cdef double re = 0.0, im = 0.0
    cdef double w = 2.0 * M_PI / k
    cdef double* tv = <double*>malloc(m * sizeof(double))
    cdef int* j = <int*>malloc(m * sizeof(int))
    if tv == NULL or j == NULL:
        free(tv)
        free(j)
        raise MemoryError()
    try:
        for i in range(m):
            tv[i] = thetas[i]
            j[i] = 0
        while True:
            g = k
            s = 0
            phase = 0.0
            for i in range(m):
                g = _gcd(g, j[i])
                s += j[i]
                phase += j[i] * tv[i]
            if g == 1 and s != 0:
                phase *= w
                re += cos(phase)
                im += sin(phase)
            i = m - 1
            while i >= 0:
                j[i] += 1
                if j[i] < k:
                    break
                j[i] = 0
                i -= 1
            if i < 0:
                break
    finally:
        free(tv)
        free(j)
    return complex(re, im)


def selector_power_sum(int t, int m, int k):
    """Exact sum over the selector of (j_1 + ... + j_m)**t."""
    cdef int smax = m * (k - 1)
    cdef int i
    cdef long long g, s
    cdef long long* counts = <long long*>malloc((smax + 1) * sizeof(long long))
    cdef int* j = <int*>malloc(m * sizeof(int))
    if counts == NULL or j == NULL:
        free(counts)
        free(j)
        raise MemoryError()
    try:
        for i in range(smax + 1):
            counts[i] = 0
        for i in range(m):
            j[i] = 0
        while True:
            g = k
            s = 0
            for i in range(m):
                g = _gcd(g, j[i])
                s += j[i]
            if g == 1 and s != 0:
                counts[s] += 1
            i = m - 1
            while i >= 0:
                j[i] += 1
                if j[i] < k:
                    break
                j[i] = 0
                i -= 1
            if i < 0:
                break
        # combine with Python ints: exact for any t
        return sum(counts[i] * i**t for i in range(smax + 1) if counts[i])
    finally:
        free(counts)
        free(j)


def visible_points_box(tuple bounds):
    """Lattice points in the box prod [1, b_i] with coordinate gcd 1, lex order."""
    cdef int d = len(bounds)
    cdef int i
    cdef long long g
    cdef list out = []
    cdef long long* bv = <long long*>malloc(d * sizeof(long long))
    cdef long long* x = <long long*>malloc(d * sizeof(long long))
    if bv == NULL or x == NULL:
        free(bv)
        free(x)
        raise MemoryError()
    try:
        for i in range(d):
            bv[i] = bounds[i]
            x[i] = 1
        while True:
            g = 0
            for i in range(d):
                g = _gcd(g, x[i])
            if g == 1:
                out.append(tuple([x[i] for i in range(d)]))
            i = d - 1
            while i >= 0:
                x[i] += 1
                if x[i] <= bv[i]:
                    break
                x[i] = 1
                i -= 1
            if i < 0:
                break
    finally:
        free(bv)
        free(x)
    return out
