"""Naive reference implementations, independent of ringlab.

Elements are Python tuples/ints with arithmetic written from the
definitions; every quantity is found by brute force over the whole ring.
Element lists follow the same little-endian mixed-radix order as ringlab
so that ordinals can be compared directly.
"""

import itertools
from math import gcd


class OracleRing:
    def __init__(self, elements, add, mul, zero, one, name):
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.add, self.mul, self.zero, self.one, self.name = add, mul, zero, one, name

    @property
    def order(self):
        return len(self.elements)

    def neg(self, x):
        return next(y for y in self.elements if self.add(x, y) == self.zero)

    def sub(self, x, y):
        return self.add(x, self.neg(y))


def zn(n):
    return OracleRing(range(n), lambda a, b: (a + b) % n, lambda a, b: (a * b) % n, 0, 1 % n, f"Z{n}")


def product(R, S):
    # first coordinate varies fastest
    els = [(a, b) for b in S.elements for a in R.elements]
    return OracleRing(
        els,
        lambda x, y: (R.add(x[0], y[0]), S.add(x[1], y[1])),
        lambda x, y: (R.mul(x[0], y[0]), S.mul(x[1], y[1])),
        (R.zero, S.zero), (R.one, S.one), f"{R.name}x{S.name}",
    )


def matrices(R, k, triangular=False):
    """k x k matrices as row-major tuples; entry (0,0) varies fastest."""
    pos = [(i, j) for i in range(k) for j in range(k) if not triangular or i <= j]

    def full(x):
        m = [[R.zero] * k for _ in range(k)]
        for (i, j), v in zip(pos, x):
            m[i][j] = v
        return m

    def pack(m):
        return tuple(m[i][j] for i, j in pos)

    def add(x, y):
        return tuple(R.add(a, b) for a, b in zip(x, y))

    def mul(x, y):
        a, b = full(x), full(y)
        c = [[R.zero] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                acc = R.zero
                for t in range(k):
                    acc = R.add(acc, R.mul(a[i][t], b[t][j]))
                c[i][j] = acc
        return pack(c)

    els = [tuple(reversed(t)) for t in itertools.product(R.elements, repeat=len(pos))]
    one = pack([[R.one if i == j else R.zero for j in range(k)] for i in range(k)])
    zero = tuple(R.zero for _ in pos)
    return OracleRing(els, add, mul, zero, one, f"{'T' if triangular else 'M'}({k},{R.name})")


def cyclic_group_ring(R, n):
    """R C_n: coefficient tuples indexed by g^0..g^(n-1)."""

    def add(x, y):
        return tuple(R.add(a, b) for a, b in zip(x, y))

    def mul(x, y):
        c = [R.zero] * n
        for i in range(n):
            for j in range(n):
                c[(i + j) % n] = R.add(c[(i + j) % n], R.mul(x[i], y[j]))
        return tuple(c)

    els = [tuple(reversed(t)) for t in itertools.product(R.elements, repeat=n)]
    one = tuple(R.one if i == 0 else R.zero for i in range(n))
    return OracleRing(els, add, mul, tuple([R.zero] * n), one, f"GR({R.name},C{n})")


def klein_group_ring(R):
    """R (C_2 x C_2) with group elements (i, j), i fastest."""
    gs = [(0, 0), (1, 0), (0, 1), (1, 1)]

    def add(x, y):
        return tuple(R.add(a, b) for a, b in zip(x, y))

    def mul(x, y):
        c = [R.zero] * 4
        for s, g in enumerate(gs):
            for t, h in enumerate(gs):
                k = gs.index(((g[0] + h[0]) % 2, (g[1] + h[1]) % 2))
                c[k] = R.add(c[k], R.mul(x[s], y[t]))
        return tuple(c)

    els = [tuple(reversed(t)) for t in itertools.product(R.elements, repeat=4)]
    one = (R.one, R.zero, R.zero, R.zero)
    return OracleRing(els, add, mul, (R.zero,) * 4, one, f"GR({R.name},C2*C2)")


def trivial_extension(R):
    """R + R with (r,m)(s,n) = (rs, rn + ms); r varies fastest."""
    els = [(r, m) for m in R.elements for r in R.elements]
    return OracleRing(
        els,
        lambda x, y: (R.add(x[0], y[0]), R.add(x[1], y[1])),
        lambda x, y: (R.mul(x[0], y[0]), R.add(R.mul(x[0], y[1]), R.mul(x[1], y[0]))),
        (R.zero, R.zero), (R.one, R.zero), f"TrivExt({R.name})",
    )


# -- brute-force invariants ------------------------------------------------------


def units(R):
    return {x for x in R.elements if any(R.mul(x, y) == R.one == R.mul(y, x) for y in R.elements)}


def idempotents(R):
    return {x for x in R.elements if R.mul(x, x) == x}


def center(R):
    return {x for x in R.elements if all(R.mul(x, y) == R.mul(y, x) for y in R.elements)}


def radical(R):
    U = units(R)
    return {x for x in R.elements if all(R.sub(R.one, R.mul(r, x)) in U for r in R.elements)}


def decompositions(R, a, strongly):
    U, out = units(R), []
    for e in R.elements:
        if R.mul(e, e) != e:
            continue
        u = R.sub(a, e)
        if u in U and (not strongly or R.mul(e, u) == R.mul(u, e)):
            out.append((e, u))
    return out


def flags(R):
    U = units(R)
    J = radical(R)
    Id = idempotents(R)
    Z = center(R)
    clean = {a: len(decompositions(R, a, False)) for a in R.elements}
    strong = {a: len(decompositions(R, a, True)) for a in R.elements}
    nonunits = [a for a in R.elements if a not in U]
    return {
        "clean": all(c >= 1 for c in clean.values()),
        "strongly_clean": all(c >= 1 for c in strong.values()),
        "uniquely_clean": all(c == 1 for c in clean.values()),
        "usc": all(c == 1 for c in strong.values()),
        "guc": all(clean[a] == 1 for a in nonunits),
        "gusc": all(strong[a] == 1 for a in nonunits),
        "local": all(R.add(a, b) not in U for a in nonunits for b in nonunits),
        "boolean": len(Id) == R.order,
        "division": len(nonunits) == 1,
        "abelian": Id <= Z,
        "units": len(U),
        "idempotents": len(Id),
        "radical": len(J),
        "center": len(Z),
    }


def gusc_failures(R):
    U = units(R)
    return [a for a in R.elements if a not in U and len(decompositions(R, a, True)) != 1]


def m2_units_by_determinant(p):
    """|GL_2(Z_p)| for prime p, by counting invertible determinants."""
    return sum(1 for a, b, c, d in itertools.product(range(p), repeat=4) if gcd((a * d - b * c) % p, p) == 1)
