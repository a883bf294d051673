# cython: language_level=3
"""Compiled kernels; see _pykernels.py for the reference semantics."""

from libc.stdlib cimport malloc, free
from libc.string cimport memcmp


cdef int* _to_buffer(object seq, Py_ssize_t n) except NULL:
    cdef int* buf = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def orbit_labels(generators, Py_ssize_t n):
    cdef Py_ssize_t ngen = len(generators)
    cdef int** gens = <int**> malloc((ngen if ngen > 0 else 1) * sizeof(int*))
    cdef int* labels = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    cdef int* stack = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    cdef Py_ssize_t g, i, start, top
    cdef int x, y, count = 0
    if gens == NULL or labels == NULL or stack == NULL:
        free(gens); free(labels); free(stack)
        raise MemoryError()
    for g in range(ngen):
        gens[g] = NULL
    try:
        for g in range(ngen):
            gens[g] = _to_buffer(generators[g], n)
        for i in range(n):
            labels[i] = -1
        for start in range(n):
            if labels[start] >= 0:
                continue
            labels[start] = count
            top = 0
            stack[top] = <int> start
            top += 1
            while top > 0:
                top -= 1
                x = stack[top]
                for g in range(ngen):
                    y = gens[g][x]
                    if labels[y] < 0:
                        labels[y] = count
                        stack[top] = y
                        top += 1
            count += 1
        return count, [labels[i] for i in range(n)]
    finally:
        for g in range(ngen):
            free(gens[g])
        free(gens)
        free(labels)
        free(stack)


def cycles(perm):
    cdef Py_ssize_t n = len(perm)
    cdef int* p = _to_buffer(perm, n)
    cdef char* seen = <char*> malloc(n if n > 0 else 1)
    cdef Py_ssize_t start
    cdef int x
    out = []
    try:
        for start in range(n):
            seen[start] = 0
        for start in range(n):
            if seen[start]:
                continue
            cyc = []
            x = <int> start
            while not seen[x]:
                seen[x] = 1
                cyc.append(x)
                x = p[x]
            out.append(cyc)
        return out
    finally:
        free(p)
        free(seen)


def cycle_count(perm):
    cdef Py_ssize_t n = len(perm)
    cdef int* p = _to_buffer(perm, n)
    cdef char* seen = <char*> malloc(n if n > 0 else 1)
    cdef Py_ssize_t start
    cdef int x, count = 0
    try:
        for start in range(n):
            seen[start] = 0
        for start in range(n):
            if seen[start]:
                continue
            count += 1
            x = <int> start
            while not seen[x]:
                seen[x] = 1
                x = p[x]
        return count
    finally:
        free(p)
        free(seen)


def face_permutation(P):
    cdef Py_ssize_t q, n = len(P)
    return [P[q ^ 3] for q in range(n)]


cdef Py_ssize_t _bfs(const int* P, Py_ssize_t n, int root, int* label, int* order, int* code) noexcept nogil:
    cdef Py_ssize_t i, head = 0, filled = 1, k = 0
    cdef int q, g, j
    cdef int nb[3]
    for i in range(n):
        label[i] = -1
    label[root] = 0
    order[0] = root
    while head < filled:
        q = order[head]
        nb[0] = q ^ 1
        nb[1] = q ^ 2
        nb[2] = P[q]
        for j in range(3):
            g = nb[j]
            if label[g] < 0:
                label[g] = <int> filled
                order[filled] = g
                filled += 1
            code[k] = label[g]
            k += 1
        head += 1
    return filled


def rooted_code(P, int root):
    cdef Py_ssize_t n = len(P)
    cdef int* p = _to_buffer(P, n)
    cdef int* label = <int*> malloc(n * sizeof(int))
    cdef int* order = <int*> malloc(n * sizeof(int))
    cdef int* code = <int*> malloc(3 * n * sizeof(int))
    cdef Py_ssize_t filled, i
    try:
        filled = _bfs(p, n, root, label, order, code)
        return tuple([code[i] for i in range(3 * filled)]), tuple([order[i] for i in range(filled)])
    finally:
        free(p); free(label); free(order); free(code)


cdef inline int _cmp(const int* a, Py_ssize_t la, const int* b, Py_ssize_t lb) noexcept nogil:
    cdef Py_ssize_t i, m = la if la < lb else lb
    for i in range(m):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    if la == lb:
        return 0
    return -1 if la < lb else 1


def canonical_code(P):
    cdef Py_ssize_t n = len(P)
    if n == 0:
        return None, 0
    cdef int* p = _to_buffer(P, n)
    cdef int* label = <int*> malloc(n * sizeof(int))
    cdef int* order = <int*> malloc(n * sizeof(int))
    cdef int* code = <int*> malloc(3 * n * sizeof(int))
    cdef int* best = <int*> malloc(3 * n * sizeof(int))
    cdef Py_ssize_t root, i, filled, best_len = -1
    cdef int count = 0, c
    try:
        with nogil:
            for root in range(n):
                filled = _bfs(p, n, <int> root, label, order, code)
                if best_len < 0:
                    c = -1
                else:
                    c = _cmp(code, 3 * filled, best, best_len)
                if c < 0:
                    for i in range(3 * filled):
                        best[i] = code[i]
                    best_len = 3 * filled
                    count = 1
                elif c == 0:
                    count += 1
        return tuple([best[i] for i in range(best_len)]), count
    finally:
        free(p); free(label); free(order); free(code); free(best)


def matching_roots(P, target):
    cdef Py_ssize_t n = len(P)
    cdef Py_ssize_t lt = len(target)
    cdef int* p = _to_buffer(P, n)
    cdef int* t = _to_buffer(target, lt)
    cdef int* label = <int*> malloc(n * sizeof(int))
    cdef int* order = <int*> malloc(n * sizeof(int))
    cdef int* code = <int*> malloc(3 * n * sizeof(int))
    cdef Py_ssize_t root, filled
    out = []
    try:
        for root in range(n):
            filled = _bfs(p, n, <int> root, label, order, code)
            if _cmp(code, 3 * filled, t, lt) == 0:
                out.append(root)
        return out
    finally:
        free(p); free(t); free(label); free(order); free(code)
