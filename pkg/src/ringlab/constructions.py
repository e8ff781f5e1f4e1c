"""Ring constructions with fixed, documented ordinal encodings.

Encodings are little-endian mixed radix throughout: the first factor (or
matrix entry, or group element) varies fastest.

* ``Z_n``: ordinal ``i`` is the residue ``i``.
* ``M_k(R)``: entries in row-major order; ``T_k(R)`` uses the entries with
  ``i <= j``, also row-major.
* ``R_1 x ... x R_m``: ``a_1 + |R_1| a_2 + |R_1||R_2| a_3 + ...``.
* ``RG``: the coefficient of group element ``g`` has weight ``|R|**g``.
* ``T(R, M)`` and ``I(R, M)``: ``(r, m)`` is ``r + |R| m``.
* ``R/I``: cosets are ordered by their least member.
* ``eRe``: members ordered by their ordinal in ``R``.
"""

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .errors import (
    CapacityError,
    DomainError,
    InternalConsistencyError,
    MalformedBimoduleError,
    MalformedTableError,
    NotAnIdealError,
)
from .ring import ORDINAL_DTYPE, ElementSet, FiniteRing, MAX_ORDER, parse_table_text

DEFAULT_ORDER_CAP = 4096


def _check_cap(order: int, cap: Optional[int], what: str) -> None:
    limit = DEFAULT_ORDER_CAP if cap is None else cap
    limit = min(limit, MAX_ORDER)
    if order > limit:
        raise CapacityError(f"{what} would have order {order}, above the order cap {limit}")


def _digits(n_elems: int, radix: int, width: int) -> np.ndarray:
    """Little-endian base-``radix`` digits of ``0..n_elems-1``."""
    ar = np.arange(n_elems, dtype=np.int64)
    out = np.empty((n_elems, width), dtype=ORDINAL_DTYPE)
    for t in range(width):
        out[:, t] = ar % radix
        ar //= radix
    return out


# -- groups ---------------------------------------------------------------


@dataclass(frozen=True)
class GroupTable:
    """A finite group by its multiplication table."""

    order: int
    mul: np.ndarray
    identity: int = 0
    labels: tuple = ()
    name: str = ""

    def __post_init__(self):
        mul = np.ascontiguousarray(self.mul, dtype=np.int64)
        n = self.order
        if mul.shape != (n, n) or n < 1:
            raise MalformedTableError(f"group table must be {n}x{n}")
        if mul.min() < 0 or mul.max() >= n:
            raise MalformedTableError("group table entries out of range")
        ar = np.arange(n)
        e = self.identity
        if not (np.array_equal(mul[e], ar) and np.array_equal(mul[:, e], ar)):
            raise MalformedTableError(f"element {e} is not a two-sided identity")
        if not ((mul == e).any(axis=1)).all():
            raise MalformedTableError("some element has no inverse")
        for a in range(n):
            if not np.array_equal(mul[mul[a, :], :], mul[a, mul]):
                raise MalformedTableError(f"group multiplication not associative at {a}")
        mul.setflags(write=False)
        object.__setattr__(self, "mul", mul)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))

    def element_order(self, g: int) -> int:
        k, x = 1, int(g)
        while x != self.identity:
            x = int(self.mul[x, g])
            k += 1
        return k

    def is_p_group(self, p: int) -> bool:
        """True iff every element's order is a power of ``p``."""
        for g in range(self.order):
            k = self.element_order(g)
            while k % p == 0:
                k //= p
            if k != 1:
                return False
        return True

    def p_group_primes(self, candidates) -> list:
        return [p for p in candidates if self.is_p_group(p)]


def make_cyclic_group(n: int, generator: str = "g") -> GroupTable:
    if n < 1:
        raise DomainError("cyclic group order must be >= 1")
    ar = np.arange(n)
    labels = ["1"] + [generator if i == 1 else f"{generator}^{i}" for i in range(1, n)]
    return GroupTable(n, (ar[:, None] + ar[None, :]) % n, 0, tuple(labels), f"C{n}")


def make_group_product(groups: Sequence[GroupTable]) -> GroupTable:
    """Direct product; element labels join the non-identity components."""
    if len(groups) < 2:
        raise DomainError("a group product needs at least two factors")
    sizes = [G.order for G in groups]
    n = int(np.prod(sizes))
    weights = np.cumprod([1] + sizes[:-1])
    ar = np.arange(n)
    coords = [(ar // w) % s for w, s in zip(weights, sizes)]
    mul = np.zeros((n, n), dtype=np.int64)
    for G, c, w in zip(groups, coords, weights):
        mul += G.mul[c[:, None], c[None, :]] * w
    labels = []
    for a in range(n):
        parts = []
        for k, (G, c) in enumerate(zip(groups, coords)):
            if c[a] != G.identity:
                parts.append(_rename_generator(G.labels[c[a]], k + 1))
        labels.append("*".join(parts) if parts else "1")
    identity = int(sum(G.identity * w for G, w in zip(groups, weights)))
    return GroupTable(n, mul, identity, tuple(labels), "*".join(G.name for G in groups))


def _rename_generator(label: str, k: int) -> str:
    # "g^3" from factor k becomes "g3^3", keeping factor labels distinct
    if label.startswith("g"):
        return f"g{k}" + label[1:]
    return f"({label})_{k}"


def parse_group_table(text: str, source: str = "<text>") -> GroupTable:
    mul = parse_table_text(text, source)
    n = mul.shape[0]
    ar = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(mul[e], ar) and np.array_equal(mul[:, e], ar)]
    if not ids:
        raise MalformedTableError(f"{source}: no identity element")
    return GroupTable(n, mul, ids[0], name=f"group({source})")


# -- basic rings ------------------------------------------------------------


def make_zn(n: int, cap: Optional[int] = None) -> FiniteRing:
    if n < 2:
        raise DomainError("Z_n requires n >= 2")
    _check_cap(n, cap, f"Z{n}")
    ar = np.arange(n)
    add = (ar[:, None] + ar[None, :]) % n
    mul = (ar[:, None] * ar[None, :]) % n
    return FiniteRing(add, mul, 0, 1 % n, provenance=f"Z{n}", check=False)


def _encode(coords: np.ndarray, radix: int) -> np.ndarray:
    w = radix ** np.arange(coords.shape[1], dtype=np.int64)
    return coords.astype(np.int64) @ w


def make_matrix_ring(R: FiniteRing, k: int, triangular: bool = False, cap: Optional[int] = None,
                     provenance: str = "") -> FiniteRing:
    """Full (``M_k``) or upper triangular (``T_k``) matrices over ``R``."""
    if k < 1:
        raise DomainError("matrix size must be >= 1")
    positions = [(i, j) for i in range(k) for j in range(k) if not triangular or i <= j]
    d = len(positions)
    q = R.order
    what = provenance or f"{'T' if triangular else 'M'}({k},{R.provenance})"
    _check_cap(q ** d, cap, what)
    n = q ** d
    coords = _digits(n, q, d)
    index = {p: t for t, p in enumerate(positions)}
    triples = [
        (index[(i, l)], index[(l2, j)], index[(i, j)])
        for (i, l) in positions
        for (l2, j) in positions
        if l == l2
    ]
    add = kernels.componentwise_table(coords, R.add, q)
    mul = kernels.bilinear_table(coords, np.array(triples, dtype=np.int32), R.add, R.mul, R.zero, q)
    zero_c = np.full(d, R.zero)
    one_c = np.array([R.one if i == j else R.zero for (i, j) in positions])

    def label(a, coords=coords, positions=positions, k=k, R=R):
        grid = [[R.label(R.zero)] * k for _ in range(k)]
        for t, (i, j) in enumerate(positions):
            grid[i][j] = R.label(int(coords[a, t]))
        return "[" + ",".join("[" + ",".join(row) + "]" for row in grid) + "]"

    return FiniteRing(
        add, mul,
        int(_encode(zero_c[None, :], q)[0]), int(_encode(one_c[None, :], q)[0]),
        labels=label, provenance=what, check=False,
    )


def make_product(factors: Sequence[FiniteRing], cap: Optional[int] = None,
                 provenance: str = "") -> FiniteRing:
    """Direct product with componentwise operations; labels are tuples."""
    if len(factors) < 2:
        raise DomainError("a direct product needs at least two factors")
    sizes = [F.order for F in factors]
    n = int(np.prod(sizes, dtype=np.int64))
    what = provenance or "x".join(F.provenance for F in factors)
    _check_cap(n, cap, what)
    weights = np.cumprod([1] + sizes[:-1]).astype(np.int64)
    ar = np.arange(n, dtype=np.int64)
    coords = [((ar // w) % s) for w, s in zip(weights, sizes)]
    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for F, c, w in zip(factors, coords, weights):
        add += F.add[c[:, None], c[None, :]].astype(np.int64) * w
        mul += F.mul[c[:, None], c[None, :]].astype(np.int64) * w
    zero = int(sum(F.zero * w for F, w in zip(factors, weights)))
    one = int(sum(F.one * w for F, w in zip(factors, weights)))

    def label(a, coords=coords, factors=factors):
        return "(" + ",".join(F.label(int(c[a])) for F, c in zip(factors, coords)) + ")"

    ring = FiniteRing(add, mul, zero, one, labels=label, provenance=what, check=False)
    ring.factor_coords = tuple(c.astype(ORDINAL_DTYPE) for c in coords)
    return ring


def product_coordinates(P: FiniteRing, a: int) -> tuple:
    """Factor ordinals of ``a`` in a ring built by :func:`make_product`."""
    return tuple(int(c[a]) for c in P.factor_coords)


def make_group_ring(R: FiniteRing, G: GroupTable, cap: Optional[int] = None,
                    provenance: str = "") -> FiniteRing:
    """``RG``: functions ``G -> R`` with convolution product."""
    q, m = R.order, G.order
    what = provenance or f"GR({R.provenance},{G.name})"
    if m * np.log2(q) > 24:
        raise CapacityError(f"{what} has order {q}^{m}, above the order cap")
    _check_cap(q ** m, cap, what)
    n = q ** m
    coords = _digits(n, q, m)
    triples = np.array([(g, h, int(G.mul[g, h])) for g in range(m) for h in range(m)], dtype=np.int32)
    add = kernels.componentwise_table(coords, R.add, q)
    mul = kernels.bilinear_table(coords, triples, R.add, R.mul, R.zero, q)
    zero_c = np.full(m, R.zero)
    one_c = np.full(m, R.zero)
    one_c[G.identity] = R.one

    def label(a, coords=coords, R=R, G=G):
        terms = []
        for g in range(G.order):
            c = int(coords[a, g])
            if c == R.zero:
                continue
            cl, gl = R.label(c), G.labels[g]
            if g == G.identity:
                terms.append(cl)
            elif c == R.one:
                terms.append(gl)
            else:
                terms.append(f"{cl}*{gl}")
        return "+".join(terms) if terms else R.label(R.zero)

    ring = FiniteRing(add, mul, int(_encode(zero_c[None, :], q)[0]), int(_encode(one_c[None, :], q)[0]),
                      labels=label, provenance=what, check=False)
    ring.group_coeffs = coords
    return ring


def group_ring_element(RG: FiniteRing, R: FiniteRing, coeffs: Sequence[int]) -> int:
    """Ordinal of ``sum_g coeffs[g] * g`` in a ring from :func:`make_group_ring`."""
    q = R.order
    return int(sum(int(c) * q ** g for g, c in enumerate(coeffs)))


# -- bimodules and extensions ------------------------------------------------


@dataclass(frozen=True)
class Bimodule:
    """An ``R``-bimodule by explicit tables.

    ``left_action[r, m] = r m`` and ``right_action[m, r] = m r``.
    ``internal_mul`` (``M x M``) turns ``M`` into a non-unital ring, as
    needed for ideal extensions.
    """

    carrier_size: int
    add_table: np.ndarray
    left_action: np.ndarray
    right_action: np.ndarray
    internal_mul: Optional[np.ndarray] = None
    labels: tuple = ()
    name: str = "M"
    zero: int = field(default=-1)

    def __post_init__(self):
        for attr in ("add_table", "left_action", "right_action", "internal_mul"):
            val = getattr(self, attr)
            if val is not None:
                val = np.ascontiguousarray(val, dtype=np.int64)
                val.setflags(write=False)
                object.__setattr__(self, attr, val)
        m = self.carrier_size
        if self.add_table.shape != (m, m):
            raise MalformedBimoduleError("shape of add_table", self.add_table.shape)
        if self.zero < 0:
            ar = np.arange(m)
            z = [i for i in range(m) if np.array_equal(self.add_table[i], ar)]
            if not z:
                raise MalformedBimoduleError("additive identity", ())
            object.__setattr__(self, "zero", z[0])
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(m)))


def _first_bad(mask_fail: np.ndarray):
    bad = np.argwhere(mask_fail)
    return tuple(int(v) for v in bad[0]) if bad.size else None


def check_bimodule(R: FiniteRing, M: Bimodule, require_internal: bool = False) -> None:
    """Raise :class:`MalformedBimoduleError` on the first failing identity."""
    m = M.carrier_size
    A, L, Rt = M.add_table, M.left_action, M.right_action
    if L.shape != (R.order, m) or Rt.shape != (m, R.order):
        raise MalformedBimoduleError("action table shapes", (L.shape, Rt.shape))
    for name, t in (("add_table", A), ("left_action", L), ("right_action", Rt)):
        if t.min() < 0 or t.max() >= m:
            raise MalformedBimoduleError(f"{name} entries in range", ())
    ar = np.arange(m)
    z = M.zero
    checks = [
        ("m+0=m", ~((A[:, z] == ar) & (A[z, :] == ar))[:, None]),
        ("m+n=n+m", A != A.T),
        ("additive inverses", ~(A == z).any(axis=1)[:, None]),
    ]
    for name, fail in checks:
        w = _first_bad(fail)
        if w is not None:
            raise MalformedBimoduleError(name, w)
    for a in range(m):
        w = _first_bad(A[A[a, :], :] != A[a, A])
        if w is not None:
            raise MalformedBimoduleError("(m+n)+p=m+(n+p)", (a,) + w)
    Ra, Rm = R.add.astype(np.int64), R.mul.astype(np.int64)
    one = R.one
    w = _first_bad(~(L[one, :] == ar)[:, None])
    if w is not None:
        raise MalformedBimoduleError("1m=m", w)
    w = _first_bad(~(Rt[:, one] == ar)[:, None])
    if w is not None:
        raise MalformedBimoduleError("m1=m", w)
    for r in range(R.order):
        # (r+s)m = rm+sm ; r(m+n) = rm+rn ; (rs)m = r(sm)
        w = _first_bad(L[Ra[r, :], :] != A[L[r, :][None, :], L])
        if w is not None:
            raise MalformedBimoduleError("(r+s)m=rm+sm", (r,) + w)
        w = _first_bad(L[r, A] != A[L[r, :][:, None], L[r, :][None, :]])
        if w is not None:
            raise MalformedBimoduleError("r(m+n)=rm+rn", (r,) + w)
        w = _first_bad(L[Rm[r, :], :] != L[r, L])
        if w is not None:
            raise MalformedBimoduleError("(rs)m=r(sm)", (r,) + w)
        # m(r+s) = mr+ms ; (m+n)r = mr+nr ; m(rs) = (mr)s ; (rm)s = r(ms)
        w = _first_bad(Rt[:, Ra[r, :]] != A[Rt[:, r][:, None], Rt])
        if w is not None:
            raise MalformedBimoduleError("m(r+s)=mr+ms", (r,) + w)
        w = _first_bad(Rt[A, r] != A[Rt[:, r][:, None], Rt[:, r][None, :]])
        if w is not None:
            raise MalformedBimoduleError("(m+n)r=mr+nr", (r,) + w)
        w = _first_bad(Rt[:, Rm[r, :]] != Rt[Rt[:, r], :])
        if w is not None:
            raise MalformedBimoduleError("m(rs)=(mr)s", (r,) + w)
        w = _first_bad(Rt[L[r, :], :] != L[r, Rt])
        if w is not None:
            raise MalformedBimoduleError("(rm)s=r(ms)", (r,) + w)
    P = M.internal_mul
    if P is None:
        if require_internal:
            raise MalformedBimoduleError("internal multiplication present", ())
        return
    if P.shape != (m, m) or P.min() < 0 or P.max() >= m:
        raise MalformedBimoduleError("internal_mul shape/range", P.shape)
    for a in range(m):
        w = _first_bad(P[P[a, :], :] != P[a, P])
        if w is not None:
            raise MalformedBimoduleError("(mn)p=m(np)", (a,) + w)
        w = _first_bad(P[a, A] != A[P[a, :][:, None], P[a, :][None, :]])
        if w is not None:
            raise MalformedBimoduleError("m(n+p)=mn+mp", (a,) + w)
        w = _first_bad(P[A, a] != A[P[:, a][:, None], P[:, a][None, :]])
        if w is not None:
            raise MalformedBimoduleError("(n+p)m=nm+pm", (a,) + w)
    for r in range(R.order):
        # (mn)r = m(nr) ; (mr)n = m(rn) ; (rm)n = r(mn)
        w = _first_bad(Rt[P, r] != P[:, Rt[:, r]])
        if w is not None:
            raise MalformedBimoduleError("(mn)r=m(nr)", (r,) + w)
        w = _first_bad(P[Rt[:, r], :] != P[:, L[r, :]])
        if w is not None:
            raise MalformedBimoduleError("(mr)n=m(rn)", (r,) + w)
        w = _first_bad(P[L[r, :], :] != L[r, P])
        if w is not None:
            raise MalformedBimoduleError("(rm)n=r(mn)", (r,) + w)


def regular_bimodule(R: FiniteRing, with_internal: bool = False) -> Bimodule:
    """``M = R`` acting on itself by multiplication."""
    return Bimodule(
        R.order, R.add, R.mul, R.mul,
        internal_mul=R.mul if with_internal else None,
        labels=R.labels, name=R.provenance, zero=R.zero,
    )


def ideal_bimodule(S: FiniteRing, ideal: Sequence[int], scalar_lift: Sequence[int],
                   with_internal: bool = True, name: str = "M") -> Bimodule:
    """An ideal ``I`` of ``S`` viewed as a bimodule over a ring ``R``.

    ``scalar_lift[r]`` is the element of ``S`` by which ``r`` acts; whether
    this gives a bimodule is checked by :func:`check_bimodule` when the
    extension is built.
    """
    elems = [int(x) for x in sorted(set(int(x) for x in ideal))]
    pos = {x: i for i, x in enumerate(elems)}
    E = np.array(elems)
    lift = np.array([int(s) for s in scalar_lift])

    def restrict(table):
        try:
            return np.vectorize(pos.__getitem__)(table)
        except KeyError as exc:
            raise NotAnIdealError(f"{name} is not closed in {S.provenance}", exc.args) from exc

    add = restrict(S.add[np.ix_(E, E)])
    left = restrict(S.mul[np.ix_(lift, E)])
    right = restrict(S.mul[np.ix_(E, lift)])
    internal = restrict(S.mul[np.ix_(E, E)]) if with_internal else None
    return Bimodule(len(elems), add, left, right, internal,
                    labels=tuple(S.label(x) for x in elems), name=name, zero=pos.get(S.zero, -1))


def _extension(R: FiniteRing, M: Bimodule, with_internal: bool, cap, provenance) -> FiniteRing:
    q, m = R.order, M.carrier_size
    _check_cap(q * m, cap, provenance)
    n = q * m
    ar = np.arange(n)
    r, x = ar % q, ar // q
    Ra, Rm = R.add.astype(np.int64), R.mul.astype(np.int64)
    A, L, Rt = M.add_table, M.left_action, M.right_action
    add = Ra[r[:, None], r[None, :]] + q * A[x[:, None], x[None, :]]
    # (r, m)(s, n) = (rs, rn + ms [+ mn])
    mod = A[L[r[:, None], x[None, :]], Rt[x[:, None], r[None, :]]]
    if with_internal:
        mod = A[mod, M.internal_mul[x[:, None], x[None, :]]]
    mul = Rm[r[:, None], r[None, :]] + q * mod

    def label(a, R=R, M=M, q=q):
        return f"({R.label(a % q)},{M.labels[a // q]})"

    return FiniteRing(add, mul, R.zero + q * M.zero, R.one + q * M.zero,
                      labels=label, provenance=provenance, check=False)


def make_trivial_extension(R: FiniteRing, M: Optional[Bimodule] = None, cap: Optional[int] = None,
                           provenance: str = "") -> FiniteRing:
    """``T(R, M)`` with ``(r, m)(s, n) = (rs, rn + ms)``; ``M`` defaults to ``R``."""
    if M is None:
        M = regular_bimodule(R)
        provenance = provenance or f"TrivExt({R.provenance})"
    check_bimodule(R, M)
    return _extension(R, M, False, cap, provenance or f"T({R.provenance},{M.name})")


def make_ideal_extension(R: FiniteRing, M: Bimodule, cap: Optional[int] = None,
                         provenance: str = "") -> FiniteRing:
    """``I(R, M)`` with ``(r, m)(s, n) = (rs, rn + ms + mn)``."""
    check_bimodule(R, M, require_internal=True)
    return _extension(R, M, True, cap, provenance or f"IdealExt({R.provenance},{M.name})")


# -- quotients and corners ----------------------------------------------------


def ideal_violation(R: FiniteRing, I: ElementSet):
    """First closure failure of ``I`` as a two-sided ideal, or ``None``."""
    if R.zero not in I:
        return ("contains zero", (R.zero,))
    E = I.ordinals
    mask = I.mask
    w = _first_bad(~mask[R.add[np.ix_(E, E)]])
    if w is not None:
        return ("closed under addition", (int(E[w[0]]), int(E[w[1]])))
    w = _first_bad(~mask[R.mul[:, E]])
    if w is not None:
        return ("closed under left multiplication", (w[0], int(E[w[1]])))
    w = _first_bad(~mask[R.mul[E, :]])
    if w is not None:
        return ("closed under right multiplication", (int(E[w[0]]), w[1]))
    return None


def make_quotient(R: FiniteRing, I: ElementSet, provenance: str = ""):
    """``R/I`` and the projection array (element of ``R`` -> coset ordinal)."""
    if I.ring_order != R.order:
        raise DomainError("ideal mask does not match the ring order")
    bad = ideal_violation(R, I)
    if bad is not None:
        raise NotAnIdealError(f"not a two-sided ideal: fails '{bad[0]}'", bad[1])
    if len(I) == R.order:
        raise DomainError("quotient by the whole ring is trivial")
    reps_of = R.add[:, I.ordinals].min(axis=1)
    reps = np.unique(reps_of)
    index = np.full(R.order, -1, dtype=np.int64)
    index[reps] = np.arange(reps.size)
    proj = index[reps_of].astype(ORDINAL_DTYPE)
    add = proj[R.add[np.ix_(reps, reps)]]
    mul = proj[R.mul[np.ix_(reps, reps)]]
    what = provenance or f"{R.provenance}/I"

    def label(a, R=R, reps=reps):
        return "[" + R.label(int(reps[a])) + "]"

    Q = FiniteRing(add, mul, int(proj[R.zero]), int(proj[R.one]), labels=label, provenance=what, check=False)
    Q.representatives = reps
    proj.setflags(write=False)
    return Q, proj


def corner_ring(R: FiniteRing, e: int, provenance: str = "") -> FiniteRing:
    """``eRe`` with identity ``e``."""
    e = R._check(e)
    if e not in R.idempotents:
        raise DomainError(f"element {e} is not idempotent")
    if e == R.zero:
        raise DomainError("corner ring of the zero idempotent is trivial")
    members = np.unique(R.mul[R.mul[e, :], e])
    index = np.full(R.order, -1, dtype=np.int64)
    index[members] = np.arange(members.size)
    add = index[R.add[np.ix_(members, members)]]
    mul = index[R.mul[np.ix_(members, members)]]
    if (add < 0).any() or (mul < 0).any():
        raise InternalConsistencyError("eRe not closed")

    def label(a, R=R, members=members):
        return R.label(int(members[a]))

    ring = FiniteRing(add, mul, int(index[R.zero]), int(index[e]), labels=label,
                      provenance=provenance or f"Corner({R.provenance},{e})", check=False)
    ring.embedding = members
    return ring
