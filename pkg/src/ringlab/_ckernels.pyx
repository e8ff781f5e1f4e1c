# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled table kernels; same signatures and results as ``_pykernels``."""

import numpy as np
cimport numpy as cnp

ctypedef cnp.uint16_t ord_t

cnp.import_array()


def inverse_table(const ord_t[:, ::1] mul, Py_ssize_t one):
    cdef Py_ssize_t n = mul.shape[0], a, b
    cdef cnp.ndarray[cnp.int32_t, ndim=1] inv = np.full(n, -1, dtype=np.int32)
    for a in range(n):
        for b in range(n):
            if mul[a, b] == one and mul[b, a] == one:
                inv[a] = b
                break
    return inv


def clean_counts(const ord_t[:, ::1] add, const ord_t[::1] neg,
                 const ord_t[:, ::1] mul, idempotents, unit_mask):
    cdef Py_ssize_t n = add.shape[0], a, t, e, u
    cdef const ord_t[::1] idem = np.ascontiguousarray(idempotents, dtype=np.uint16)
    cdef const cnp.uint8_t[::1] unit = np.ascontiguousarray(unit_mask, dtype=np.uint8)
    cdef Py_ssize_t m = idem.shape[0]
    clean_arr = np.zeros(n, dtype=np.int32)
    strong_arr = np.zeros(n, dtype=np.int32)
    cdef cnp.int32_t[::1] clean = clean_arr
    cdef cnp.int32_t[::1] strong = strong_arr
    for a in range(n):
        for t in range(m):
            e = idem[t]
            u = add[a, neg[e]]
            if unit[u]:
                clean[a] += 1
                if mul[e, u] == mul[u, e]:
                    strong[a] += 1
    return clean_arr, strong_arr


def radical_mask(const ord_t[:, ::1] mul, const ord_t[::1] one_minus,
                 unit_mask, bint right):
    cdef Py_ssize_t n = mul.shape[0], x, r, p
    cdef const cnp.uint8_t[::1] unit = np.ascontiguousarray(unit_mask, dtype=np.uint8)
    out_arr = np.ones(n, dtype=bool)
    cdef cnp.uint8_t[::1] out = out_arr.view(np.uint8)
    for x in range(n):
        for r in range(n):
            p = mul[r, x] if right else mul[x, r]
            if not unit[one_minus[p]]:
                out[x] = 0
                break
    return out_arr


def saturate(const ord_t[:, ::1] add, const ord_t[:, ::1] mul, seeds,
             bint left, bint right):
    cdef Py_ssize_t n = add.shape[0], x, y, i, r, count = 0, head = 0
    member_arr = np.zeros(n, dtype=bool)
    cdef cnp.uint8_t[::1] member = member_arr.view(np.uint8)
    cdef cnp.int32_t[::1] order = np.empty(n, dtype=np.int32)
    for s in seeds:
        x = s
        if not member[x]:
            member[x] = 1
            order[count] = x
            count += 1
    # order[:head] are processed members; order[head:count] is the queue
    while head < count:
        x = order[head]
        head += 1
        for i in range(head):
            y = add[x, order[i]]
            if not member[y]:
                member[y] = 1
                order[count] = y
                count += 1
        for r in range(n):
            if left:
                y = mul[r, x]
                if not member[y]:
                    member[y] = 1
                    order[count] = y
                    count += 1
            if right:
                y = mul[x, r]
                if not member[y]:
                    member[y] = 1
                    order[count] = y
                    count += 1
    return member_arr


def componentwise_table(const ord_t[:, ::1] coords, const ord_t[:, ::1] rop,
                        Py_ssize_t radix):
    cdef Py_ssize_t n = coords.shape[0], d = coords.shape[1], a, b, t
    cdef Py_ssize_t acc
    cdef cnp.int64_t[::1] w = radix ** np.arange(d, dtype=np.int64)
    out_arr = np.empty((n, n), dtype=np.uint16)
    cdef ord_t[:, ::1] out = out_arr
    for a in range(n):
        for b in range(n):
            acc = 0
            for t in range(d):
                acc += rop[coords[a, t], coords[b, t]] * w[t]
            out[a, b] = <ord_t>acc
    return out_arr


def bilinear_table(const ord_t[:, ::1] coords, triples, const ord_t[:, ::1] radd,
                   const ord_t[:, ::1] rmul, Py_ssize_t rzero, Py_ssize_t radix):
    cdef Py_ssize_t n = coords.shape[0], d = coords.shape[1], a, b, t, k
    cdef Py_ssize_t acc
    cdef const cnp.int32_t[:, ::1] tr = np.ascontiguousarray(triples, dtype=np.int32).reshape(-1, 3)
    cdef Py_ssize_t nt = tr.shape[0]
    cdef cnp.int64_t[::1] w = radix ** np.arange(d, dtype=np.int64)
    cdef ord_t[::1] tmp = np.empty(d, dtype=np.uint16)
    out_arr = np.empty((n, n), dtype=np.uint16)
    cdef ord_t[:, ::1] out = out_arr
    for a in range(n):
        for b in range(n):
            for k in range(d):
                tmp[k] = rzero
            for t in range(nt):
                k = tr[t, 2]
                tmp[k] = radd[tmp[k], rmul[coords[a, tr[t, 0]], coords[b, tr[t, 1]]]]
            acc = 0
            for k in range(d):
                acc += tmp[k] * w[k]
            out[a, b] = <ord_t>acc
    return out_arr


def assoc_violation(const ord_t[:, ::1] op):
    cdef Py_ssize_t n = op.shape[0], a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if op[op[a, b], c] != op[a, op[b, c]]:
                    return (a, b, c)
    return None


def distrib_violation(const ord_t[:, ::1] add, const ord_t[:, ::1] mul):
    cdef Py_ssize_t n = add.shape[0], a, b, c
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]:
                    return ("left distributivity", a, b, c)
        for b in range(n):
            for c in range(n):
                if mul[add[b, c], a] != add[mul[b, a], mul[c, a]]:
                    return ("right distributivity", b, c, a)
    return None
