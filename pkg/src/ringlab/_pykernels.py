"""Numpy implementations of the table kernels.

Used when the compiled ``_ckernels`` extension is unavailable, and as the
reference the compiled versions are tested against.  Every function takes
and returns plain numpy arrays; ordinals are ``uint16``.
"""

import numpy as np

ORD = np.uint16

# rows of the n x n intermediate processed at once by chunked kernels
_CHUNK = 256


def inverse_table(mul, one):
    n = mul.shape[0]
    hits = (mul == one) & (mul.T == one)
    found = hits.any(axis=1)
    inv = np.where(found, hits.argmax(axis=1), -1).astype(np.int32)
    return inv


def clean_counts(add, neg, mul, idempotents, unit_mask):
    n = add.shape[0]
    clean = np.zeros(n, dtype=np.int32)
    strong = np.zeros(n, dtype=np.int32)
    elems = np.arange(n)
    units = unit_mask.astype(bool)
    for e in idempotents:
        u = add[:, neg[e]]
        ok = units[u]
        clean += ok
        strong += ok & (mul[e, u] == mul[u, e])
    return clean, strong


def radical_mask(mul, one_minus, unit_mask, right):
    units = unit_mask.astype(bool)
    n = mul.shape[0]
    out = np.empty(n, dtype=bool)
    for lo in range(0, n, _CHUNK):
        hi = min(n, lo + _CHUNK)
        # right-handed: 1 - r x over all r, i.e. column x of mul
        block = mul[:, lo:hi] if right else mul[lo:hi, :].T
        out[lo:hi] = units[one_minus[block]].all(axis=0)
    return out


def saturate(add, mul, seeds, left, right):
    n = add.shape[0]
    member = np.zeros(n, dtype=bool)
    members = []
    queue = []
    for s in seeds:
        s = int(s)
        if not member[s]:
            member[s] = True
            queue.append(s)
    while queue:
        x = queue.pop()
        members.append(x)
        cand = [add[x, members]]
        if left:
            cand.append(mul[:, x])
        if right:
            cand.append(mul[x, :])
        for y in np.unique(np.concatenate(cand)):
            if not member[y]:
                member[y] = True
                queue.append(int(y))
    return member


def componentwise_table(coords, rop, radix):
    n, d = coords.shape
    weights = radix ** np.arange(d, dtype=np.int64)
    out = np.empty((n, n), dtype=ORD)
    rop = rop.astype(np.int64)
    for lo in range(0, n, _CHUNK):
        hi = min(n, lo + _CHUNK)
        acc = np.zeros((hi - lo, n), dtype=np.int64)
        for t in range(d):
            acc += rop[coords[lo:hi, t][:, None], coords[None, :, t]] * weights[t]
        out[lo:hi] = acc
    return out


def bilinear_table(coords, triples, radd, rmul, rzero, radix):
    n, d = coords.shape
    weights = radix ** np.arange(d, dtype=np.int64)
    out = np.empty((n, n), dtype=ORD)
    for lo in range(0, n, _CHUNK):
        hi = min(n, lo + _CHUNK)
        acc = np.full((d, hi - lo, n), rzero, dtype=ORD)
        for i, j, k in triples:
            prod = rmul[coords[lo:hi, i][:, None], coords[None, :, j]]
            acc[k] = radd[acc[k], prod]
        enc = np.zeros((hi - lo, n), dtype=np.int64)
        for k in range(d):
            enc += acc[k].astype(np.int64) * weights[k]
        out[lo:hi] = enc
    return out


def assoc_violation(op):
    n = op.shape[0]
    for a in range(n):
        # (a b) c versus a (b c), all b, c at once
        lhs = op[op[a, :], :]
        rhs = op[a, op]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return (a, int(b), int(c))
    return None


def distrib_violation(add, mul):
    n = add.shape[0]
    for a in range(n):
        # a (b + c) = ab + ac
        lhs = mul[a, add]
        rhs = add[mul[a, :][:, None], mul[a, :][None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return ("left distributivity", a, int(b), int(c))
        # (b + c) a = ba + ca
        lhs = mul[add, a]
        rhs = add[mul[:, a][:, None], mul[:, a][None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            b, c = bad[0]
            return ("right distributivity", int(b), int(c), a)
    return None
