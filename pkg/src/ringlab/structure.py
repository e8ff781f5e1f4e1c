"""Structural predicates of finite rings: the Jacobson radical, one-sided
ideals, and the ring-level flags used by the clean-element classification."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import kernels
from .errors import CapacityError, InternalConsistencyError
from .ring import ElementSet, FiniteRing

DEFAULT_IDEAL_CAP = 512

LEFT, RIGHT, TWO_SIDED = "left", "right", "two-sided"


def _radical_side(R: FiniteRing, right: bool) -> np.ndarray:
    one_minus = np.ascontiguousarray(R.sub[R.one, :])
    return kernels.radical_mask(R.mul, one_minus, R.units.mask, right)


def jacobson_radical(R: FiniteRing) -> ElementSet:
    """``J(R) = {x : 1 - r x is a unit for every r}``.

    The left-handed test (``1 - x r``) is run as well and must agree.
    """

    def compute():
        right = _radical_side(R, True)
        left = _radical_side(R, False)
        if not np.array_equal(right, left):
            raise InternalConsistencyError(f"left and right quasi-regular sets differ in {R!r}")
        return ElementSet(right)

    return R.memo("jacobson", compute)


def nonunits(R: FiniteRing) -> ElementSet:
    return R.units.complement()


@dataclass
class StructuralFlags:
    local: bool
    boolean: bool
    division: bool
    abelian: bool
    # flag name -> witness ordinal(s) for each negative flag
    witnesses: dict = field(default_factory=dict)


def structural_flags(R: FiniteRing) -> StructuralFlags:
    def compute():
        J = jacobson_radical(R)
        nu = nonunits(R)
        wit = {}
        local = nu == J
        if not local:
            # the non-units of a non-local finite ring are not closed under +
            elems = nu.ordinals
            sums = R.add[np.ix_(elems, elems)]
            hit = np.argwhere(R.units.mask[sums])
            a, b = elems[hit[0][0]], elems[hit[0][1]]
            wit["local"] = (int(a), int(b))
        not_idem = R.idempotents.complement()
        boolean = len(not_idem) == 0
        if not boolean:
            wit["boolean"] = (int(not_idem.ordinals[0]),)
        bad_div = nu.ordinals[nu.ordinals != R.zero]
        division = bad_div.size == 0
        if not division:
            wit["division"] = (int(bad_div[0]),)
        off = (R.idempotents - R.center).ordinals
        abelian = off.size == 0
        if not abelian:
            e = int(off[0])
            r = int(np.flatnonzero(R.mul[e, :] != R.mul[:, e])[0])
            wit["abelian"] = (e, r)
        return StructuralFlags(local, boolean, division, abelian, wit)

    return R.memo("structural_flags", compute)


def _side_flags(side):
    if side == LEFT:
        return True, False
    if side == RIGHT:
        return False, True
    if side == TWO_SIDED:
        return True, True
    raise ValueError(f"unknown side {side!r}")


def one_sided_ideal_closure(R: FiniteRing, gens, side: str = TWO_SIDED) -> ElementSet:
    """Least subset containing ``gens`` (and 0) closed under addition and
    multiplication by ``R`` on the chosen side(s)."""
    left, right = _side_flags(side)
    seeds = [R.zero] + [int(g) for g in gens]
    return ElementSet(kernels.saturate(R.add, R.mul, seeds, left, right))


def principal_ideal(R: FiniteRing, a: int, side: str) -> ElementSet:
    """``Ra`` (left), ``aR`` (right); these are already additively closed."""
    if side == LEFT:
        return ElementSet.from_ordinals(R.order, R.mul[:, a])
    if side == RIGHT:
        return ElementSet.from_ordinals(R.order, R.mul[a, :])
    return one_sided_ideal_closure(R, [a], TWO_SIDED)


def _ideal_sum(R: FiniteRing, I: ElementSet, K: ElementSet) -> ElementSet:
    sums = R.add[np.ix_(I.ordinals, K.ordinals)]
    return ElementSet.from_ordinals(R.order, np.unique(sums))


def _check_lattice_cap(R: FiniteRing, cap: Optional[int]):
    cap = DEFAULT_IDEAL_CAP if cap is None else cap
    if R.order > cap:
        raise CapacityError(
            f"ideal-lattice enumeration for order {R.order} exceeds the ideal cap {cap} "
            f"(raise it with --ideal-cap)"
        )


def one_sided_ideals(R: FiniteRing, side: str, cap: Optional[int] = None, within: Optional[ElementSet] = None):
    """All ideals of the given side, by BFS: principal seeds closed under
    pairwise sums.  With ``within``, only ideals contained in that set."""
    _check_lattice_cap(R, cap)
    key = ("ideals", side, None if within is None else within.as_int())

    def compute():
        gens = range(R.order) if within is None else within.ordinals
        principal = []
        seen = set()
        for a in gens:
            P = principal_ideal(R, int(a), side)
            if P not in seen:
                seen.add(P)
                principal.append(P)
        zero = ElementSet.from_ordinals(R.order, [R.zero])
        found = {zero} | seen
        frontier = list(seen)
        while frontier:
            nxt = []
            for I in frontier:
                for P in principal:
                    if P.issubset(I):
                        continue
                    S = _ideal_sum(R, I, P)
                    if S not in found:
                        found.add(S)
                        nxt.append(S)
            frontier = nxt
        return sorted(found, key=lambda s: (len(s), s.as_int()))

    return R.memo(key, compute)


def maximal_one_sided_ideals(R: FiniteRing, side: str, cap: Optional[int] = None):
    """Proper ideals of the given side that are maximal under inclusion."""
    units = R.units

    def compute():
        proper = [I for I in one_sided_ideals(R, side, cap) if len(I & units) == 0]
        return [I for I in proper if not any(I < K for K in proper)]

    _check_lattice_cap(R, cap)
    return R.memo(("maximal", side), compute)


def is_two_sided(R: FiniteRing, I: ElementSet):
    """``None`` if ``I`` absorbs multiplication on both sides, else a
    violating pair ``(x, r)`` with ``x`` in ``I`` (``"right"`` means ``xr``
    escapes ``I``, ``"left"`` means ``rx`` does)."""
    E = I.ordinals
    bad = np.argwhere(~I.mask[R.mul[E, :]])
    if bad.size:
        return ("right", int(E[bad[0][0]]), int(bad[0][1]))
    bad = np.argwhere(~I.mask[R.mul[:, E]])
    if bad.size:
        return ("left", int(E[bad[0][1]]), int(bad[0][0]))
    return None


@dataclass
class QuasiDuoResult:
    holds: bool
    side: str
    ideal: Optional[ElementSet] = None
    witness: Optional[tuple] = None


def is_quasi_duo(R: FiniteRing, side: str, cap: Optional[int] = None) -> QuasiDuoResult:
    """Every maximal ideal of ``side`` is two-sided.  Raises
    :class:`CapacityError` above the ideal cap."""
    for I in maximal_one_sided_ideals(R, side, cap):
        bad = is_two_sided(R, I)
        if bad is not None:
            return QuasiDuoResult(False, side, I, bad)
    return QuasiDuoResult(True, side)


@dataclass
class SemipotentResult:
    holds: bool
    witness: Optional[int] = None
    side: Optional[str] = None


def is_semipotent(R: FiniteRing) -> SemipotentResult:
    """Principal-ideal test: for each ``a`` outside ``J`` both ``Ra`` and
    ``aR`` must contain a nonzero idempotent.

    Any one-sided ideal not inside ``J`` contains such an ``a`` and hence
    the principal ideal it generates, so the reduction is exact.
    """

    def compute():
        J = jacobson_radical(R)
        good = R.idempotents.mask.copy()
        good[R.zero] = False
        hits = good[R.mul]
        left_ok = hits.any(axis=0)  # column a: {r a}
        right_ok = hits.any(axis=1)  # row a: {a r}
        outside = ~J.mask
        for side, ok in ((LEFT, left_ok), (RIGHT, right_ok)):
            bad = np.flatnonzero(outside & ~ok)
            if bad.size:
                return SemipotentResult(False, int(bad[0]), side)
        return SemipotentResult(True)

    return R.memo("semipotent", compute)


def is_semipotent_by_lattice(R: FiniteRing, cap: Optional[int] = None) -> bool:
    """Reference check over the full one-sided ideal lattices."""
    J = jacobson_radical(R)
    good = R.idempotents.mask.copy()
    good[R.zero] = False
    for side in (LEFT, RIGHT):
        for I in one_sided_ideals(R, side, cap):
            if not I.issubset(J) and not (I.mask & good).any():
                return False
    return True


@dataclass
class CharacteristicResult:
    additive_order: int
    # (n, ordinal of n*1, status) with status in {"in_J", "unit", "neither"}
    entries: list
    holds: bool
    witness: Optional[int] = None


def characteristic_dichotomy(R: FiniteRing) -> CharacteristicResult:
    """Each sum ``n = 1 + ... + 1`` (n >= 2) lies in ``J(R)``, is a unit, or neither."""

    def compute():
        J = jacobson_radical(R)
        entries = []
        acc, n = R.one, 1
        while True:
            acc = int(R.add[acc, R.one])
            n += 1
            if acc in J:
                status = "in_J"
            elif acc in R.units:
                status = "unit"
            else:
                status = "neither"
            entries.append((n, acc, status))
            if acc == R.zero:
                break
        bad = [n for n, _, s in entries if s == "neither"]
        return CharacteristicResult(n, entries, not bad, bad[0] if bad else None)

    return R.memo("characteristic", compute)


def is_identity_two_good(R: FiniteRing):
    """``(True, (u, v))`` with units ``u + v = 1`` (least ``u``), else ``(False, None)``."""
    U = R.units.ordinals
    partners = R.sub[R.one, U]
    ok = R.units.mask[partners]
    if ok.any():
        i = int(np.flatnonzero(ok)[0])
        return True, (int(U[i]), int(partners[i]))
    return False, None


def is_two_good_pair(R: FiniteRing, u: int, v: int) -> bool:
    return u in R.units and v in R.units and R.plus(u, v) == R.one


def additive_order(R: FiniteRing, a: int) -> int:
    k, x = 1, int(a)
    while x != R.zero:
        x = int(R.add[x, a])
        k += 1
    return k


def prime_factors(n: int) -> list:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def radical_primes(R: FiniteRing) -> list:
    """Primes ``p`` with ``p * 1`` in ``J(R)``; each divides the characteristic."""
    J = jacobson_radical(R)
    char = additive_order(R, R.one)
    return [p for p in prime_factors(char) if R.multiple(p) in J]
