"""Finite unital rings given by dense operation tables.

Elements are ordinals ``0..n-1``.  A :class:`FiniteRing` owns read-only
``uint16`` addition and multiplication tables together with derived data
(negation, inverses, the basic element sets) that is computed once and
cached on the instance.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, NamedTuple, Optional, Sequence

import numpy as np

from . import kernels
from .errors import AxiomError, DomainError, InternalConsistencyError, MalformedTableError, TrivialRingError

ORDINAL_DTYPE = np.uint16
MAX_ORDER = int(np.iinfo(ORDINAL_DTYPE).max)


class ElementSet:
    """An immutable subset of a ring's elements, stored as a boolean mask."""

    __slots__ = ("_mask", "_ordinals")

    def __init__(self, mask):
        mask = np.array(mask, dtype=bool)
        if mask.ndim != 1:
            raise ValueError("mask must be one-dimensional")
        mask.setflags(write=False)
        self._mask = mask
        self._ordinals = None

    @classmethod
    def from_ordinals(cls, ring_order: int, ordinals: Iterable[int]) -> "ElementSet":
        mask = np.zeros(ring_order, dtype=bool)
        idx = np.fromiter((int(i) for i in ordinals), dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= ring_order):
            raise DomainError("ordinal out of range for ElementSet")
        mask[idx] = True
        return cls(mask)

    @classmethod
    def full(cls, ring_order: int) -> "ElementSet":
        return cls(np.ones(ring_order, dtype=bool))

    @property
    def ring_order(self) -> int:
        return self._mask.shape[0]

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    @property
    def ordinals(self) -> np.ndarray:
        if self._ordinals is None:
            idx = np.flatnonzero(self._mask)
            idx.setflags(write=False)
            self._ordinals = idx
        return self._ordinals

    def as_int(self) -> int:
        """The set as a Python integer bitmask (bit i set iff i is a member)."""
        packed = np.packbits(self._mask, bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    def __contains__(self, i) -> bool:
        return bool(self._mask[int(i)])

    def __iter__(self):
        return (int(i) for i in self.ordinals)

    def __len__(self) -> int:
        return int(self._mask.sum())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ElementSet):
            return NotImplemented
        return self.ring_order == other.ring_order and bool(np.array_equal(self._mask, other._mask))

    def __hash__(self) -> int:
        return hash((self.ring_order, self._mask.tobytes()))

    def __and__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self._mask & other._mask)

    def __or__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self._mask | other._mask)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self._mask & ~other._mask)

    def complement(self) -> "ElementSet":
        return ElementSet(~self._mask)

    def issubset(self, other: "ElementSet") -> bool:
        return not bool((self._mask & ~other._mask).any())

    def __le__(self, other: "ElementSet") -> bool:
        return self.issubset(other)

    def __lt__(self, other: "ElementSet") -> bool:
        return self.issubset(other) and len(self) < len(other)

    def __repr__(self) -> str:
        items = list(self)
        if len(items) > 12:
            body = ", ".join(map(str, items[:12])) + ", ..."
        else:
            body = ", ".join(map(str, items))
        return f"ElementSet({{{body}}} of {self.ring_order})"


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of :func:`verify_ring_axioms`.

    ``axiom`` names the first failing law; ``witness`` is the offending tuple
    of ordinals, read in the order the law is written (for right
    distributivity ``(b, c, a)`` means ``(b + c) a``).
    """

    ok: bool
    axiom: Optional[str] = None
    witness: Optional[tuple] = None
    zero: Optional[int] = None
    one: Optional[int] = None


def _as_table(table, name) -> np.ndarray:
    try:
        arr = np.asarray(table)
    except (TypeError, ValueError) as exc:
        raise MalformedTableError(f"{name} is not a rectangular table") from exc
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise MalformedTableError(f"{name} must be square, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        raise MalformedTableError(f"{name} entries must be integers")
    return arr


def _find_identity(op) -> Optional[int]:
    n = op.shape[0]
    ar = np.arange(n)
    rows = (op == ar[None, :]).all(axis=1)
    cols = (op == ar[:, None]).all(axis=0)
    both = np.flatnonzero(rows & cols)
    return int(both[0]) if both.size else None


def verify_ring_axioms(add_table, mul_table, zero=None, one=None) -> AxiomReport:
    """Exhaustively check the unital ring axioms on a pair of tables.

    Dimension problems raise :class:`MalformedTableError`; an order below 2
    raises :class:`TrivialRingError`.  Law violations are returned, not
    raised.  ``zero``/``one`` are inferred when not given.
    """
    add = _as_table(add_table, "add_table")
    mul = _as_table(mul_table, "mul_table")
    if add.shape != mul.shape:
        raise MalformedTableError(f"table shapes differ: {add.shape} vs {mul.shape}")
    n = add.shape[0]
    if n < 2:
        raise TrivialRingError("rings of order < 2 are not supported")
    if n > MAX_ORDER:
        raise MalformedTableError(f"order {n} exceeds the ordinal width ({MAX_ORDER})")
    for name, t in (("add_table", add), ("mul_table", mul)):
        if t.min() < 0 or t.max() >= n:
            raise MalformedTableError(f"{name} has entries outside 0..{n - 1}")
    add = np.ascontiguousarray(add, dtype=ORDINAL_DTYPE)
    mul = np.ascontiguousarray(mul, dtype=ORDINAL_DTYPE)

    z = _find_identity(add) if zero is None else int(zero)
    if z is None:
        return AxiomReport(False, "additive identity", ())
    ar = np.arange(n)
    if not (np.array_equal(add[z], ar) and np.array_equal(add[:, z], ar)):
        return AxiomReport(False, "additive identity", (z,))
    bad = np.argwhere(add != add.T)
    if bad.size:
        return AxiomReport(False, "additive commutativity", tuple(int(v) for v in bad[0]))
    has_neg = (add == z).any(axis=1)
    if not has_neg.all():
        return AxiomReport(False, "additive inverse", (int(np.flatnonzero(~has_neg)[0]),))
    w = kernels.assoc_violation(add)
    if w is not None:
        return AxiomReport(False, "additive associativity", tuple(int(v) for v in w))

    o = _find_identity(mul) if one is None else int(one)
    if o is None:
        return AxiomReport(False, "multiplicative identity", ())
    if not (np.array_equal(mul[o], ar) and np.array_equal(mul[:, o], ar)):
        return AxiomReport(False, "multiplicative identity", (o,))
    if o == z:
        return AxiomReport(False, "nontriviality (zero equals one)", (z,))
    w = kernels.assoc_violation(mul)
    if w is not None:
        return AxiomReport(False, "multiplicative associativity", tuple(int(v) for v in w))
    w = kernels.distrib_violation(add, mul)
    if w is not None:
        return AxiomReport(False, w[0], tuple(int(v) for v in w[1:]))
    return AxiomReport(True, zero=z, one=o)


class ElementPredicates(NamedTuple):
    unit: bool
    idempotent: bool
    nilpotent: bool
    central: bool


class StructureSets(NamedTuple):
    units: ElementSet
    idempotents: ElementSet
    nilpotents: ElementSet
    center: ElementSet


class FiniteRing:
    """A unital ring on ordinals ``0..order-1``.

    With ``check=True`` (the default) the tables must pass
    :func:`verify_ring_axioms`, otherwise :class:`AxiomError` is raised.
    Constructors in :mod:`ringlab.constructions` pass ``check=False`` because
    their outputs satisfy the axioms by construction.

    ``labels`` is either a sequence of strings or a callable mapping an
    ordinal to its label; labels are rendered lazily.
    """

    def __init__(
        self,
        add_table,
        mul_table,
        zero: Optional[int] = None,
        one: Optional[int] = None,
        labels=None,
        provenance: str = "",
        check: bool = True,
    ):
        if check:
            report = verify_ring_axioms(add_table, mul_table, zero, one)
            if not report.ok:
                raise AxiomError(report)
            zero, one = report.zero, report.one
        add = np.ascontiguousarray(add_table, dtype=ORDINAL_DTYPE)
        mul = np.ascontiguousarray(mul_table, dtype=ORDINAL_DTYPE)
        if add.ndim != 2 or add.shape != mul.shape or add.shape[0] != add.shape[1]:
            raise MalformedTableError("tables must be square and of equal shape")
        if add.shape[0] < 2:
            raise TrivialRingError("rings of order < 2 are not supported")
        if zero is None:
            zero = _find_identity(add)
        if one is None:
            one = _find_identity(mul)
        if zero is None or one is None:
            raise MalformedTableError("could not infer zero/one from the tables")
        add.setflags(write=False)
        mul.setflags(write=False)
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.provenance = provenance
        self._labels = labels
        self._memo = {}
        neg = np.argmax(add == self.zero, axis=1).astype(ORDINAL_DTYPE)
        neg.setflags(write=False)
        self.neg = neg

    @property
    def order(self) -> int:
        return self.add.shape[0]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        name = self.provenance or "raw tables"
        return f"FiniteRing({name}, order={self.order})"

    # -- labels ---------------------------------------------------------

    def label(self, a: int) -> str:
        a = self._check(a)
        lab = self._labels
        if lab is None:
            return str(a)
        if callable(lab):
            return lab(a)
        return str(lab[a])

    @cached_property
    def labels(self) -> tuple:
        return tuple(self.label(a) for a in range(self.order))

    def ordinal_of(self, label: str) -> int:
        """Inverse of :meth:`label` (linear scan)."""
        for a in range(self.order):
            if self.label(a) == label:
                return a
        raise DomainError(f"no element labelled {label!r}")

    # -- arithmetic -----------------------------------------------------

    def _check(self, a) -> int:
        a = int(a)
        if not 0 <= a < self.order:
            raise DomainError(f"ordinal {a} out of range for a ring of order {self.order}")
        return a

    def plus(self, a, b) -> int:
        return int(self.add[self._check(a), self._check(b)])

    def times(self, a, b) -> int:
        return int(self.mul[self._check(a), self._check(b)])

    def minus(self, a, b) -> int:
        return int(self.add[self._check(a), self.neg[self._check(b)]])

    def negate(self, a) -> int:
        return int(self.neg[self._check(a)])

    def power(self, a, k: int) -> int:
        a = self._check(a)
        result, base = self.one, a
        while k:
            if k & 1:
                result = int(self.mul[result, base])
            base = int(self.mul[base, base])
            k >>= 1
        return result

    def multiple(self, k: int, a=None) -> int:
        """``k * a`` as an iterated sum (``a`` defaults to the identity)."""
        a = self.one if a is None else self._check(a)
        acc = self.zero
        for _ in range(k):
            acc = int(self.add[acc, a])
        return acc

    @cached_property
    def sub(self) -> np.ndarray:
        """``sub[a, b] = a - b``."""
        t = np.ascontiguousarray(self.add[:, self.neg])
        t.setflags(write=False)
        return t

    # -- cached structure -----------------------------------------------

    @cached_property
    def inverses(self) -> np.ndarray:
        """``inverses[a]`` is the two-sided inverse of ``a`` or -1."""
        inv = kernels.inverse_table(self.mul, self.one)
        inv.setflags(write=False)
        return inv

    @cached_property
    def units(self) -> ElementSet:
        return ElementSet(self.inverses >= 0)

    @cached_property
    def idempotents(self) -> ElementSet:
        ar = np.arange(self.order)
        return ElementSet(self.mul[ar, ar] == ar)

    @cached_property
    def nilpotents(self) -> ElementSet:
        # a^k = 0 for some k <= n  iff  a^(2^j) = 0 once 2^j >= n
        cur = np.arange(self.order)
        steps = max(1, int(np.ceil(np.log2(self.order))))
        for _ in range(steps):
            cur = self.mul[cur, cur]
        return ElementSet(cur == self.zero)

    @cached_property
    def center(self) -> ElementSet:
        return ElementSet((self.mul == self.mul.T).all(axis=1))

    def structure_sets(self) -> StructureSets:
        return StructureSets(self.units, self.idempotents, self.nilpotents, self.center)

    def memo(self, key, compute: Callable):
        """Write-once per-ring cache used by the analysis modules."""
        try:
            return self._memo[key]
        except KeyError:
            value = compute()
            return self._memo.setdefault(key, value)


def inverse(R: FiniteRing, a: int) -> Optional[int]:
    """The two-sided inverse of ``a``, or ``None``.

    Both products are checked explicitly even though a one-sided inverse
    is two-sided in a finite ring.
    """
    a = R._check(a)
    b = int(R.inverses[a])
    if b < 0:
        return None
    if R.mul[a, b] != R.one or R.mul[b, a] != R.one:
        raise InternalConsistencyError("inverse table inconsistent")
    return b


def element_predicates(R: FiniteRing, a: int) -> ElementPredicates:
    a = R._check(a)
    return ElementPredicates(
        unit=a in R.units,
        idempotent=a in R.idempotents,
        nilpotent=a in R.nilpotents,
        central=a in R.center,
    )


def structure_sets(R: FiniteRing) -> StructureSets:
    return R.structure_sets()


# -- raw table files ----------------------------------------------------


def _parse_header(lines: Sequence[str], source: str) -> int:
    if not lines:
        raise MalformedTableError(f"{source}: empty input")
    parts = lines[0].split()
    if len(parts) != 2 or parts[0] != "order":
        raise MalformedTableError(f"{source}: first line must be 'order <n>'")
    try:
        n = int(parts[1])
    except ValueError as exc:
        raise MalformedTableError(f"{source}: bad order {parts[1]!r}") from exc
    if n < 1:
        raise MalformedTableError(f"{source}: order must be positive")
    return n


def _parse_rows(lines: Sequence[str], n: int, source: str, what: str) -> np.ndarray:
    if len(lines) != n:
        raise MalformedTableError(f"{source}: {what} needs {n} rows, got {len(lines)}")
    rows = []
    for i, line in enumerate(lines):
        try:
            row = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise MalformedTableError(f"{source}: {what} row {i} is not integers") from exc
        if len(row) != n:
            raise MalformedTableError(f"{source}: {what} row {i} has {len(row)} entries, expected {n}")
        rows.append(row)
    return np.array(rows, dtype=np.int64)


def _blocks(text: str):
    lines = [ln.strip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    blocks, cur = [], []
    for ln in lines:
        if ln.startswith("#"):
            continue
        if ln:
            cur.append(ln)
        elif cur:
            blocks.append(cur)
            cur = []
    if cur:
        blocks.append(cur)
    return blocks


def parse_ring_tables(text: str, source: str = "<text>", provenance: str = "") -> FiniteRing:
    """Parse the raw-table format: ``order n``, the addition table, a blank
    line, then the multiplication table.  Zero and one are inferred."""
    blocks = _blocks(text)
    if not blocks:
        raise MalformedTableError(f"{source}: empty input")
    head = blocks[0]
    n = _parse_header(head, source)
    if len(blocks) != 2:
        raise MalformedTableError(f"{source}: expected an addition and a multiplication table")
    add = _parse_rows(head[1:], n, source, "add_table")
    mul = _parse_rows(blocks[1], n, source, "mul_table")
    return FiniteRing(add, mul, provenance=provenance or f"tables({source})")


def read_ring_tables(path) -> FiniteRing:
    with open(path, encoding="utf-8") as fh:
        return parse_ring_tables(fh.read(), source=str(path))


def format_ring_tables(R: FiniteRing) -> str:
    lines = [f"order {R.order}"]
    lines += [" ".join(map(str, row)) for row in R.add.tolist()]
    lines.append("")
    lines += [" ".join(map(str, row)) for row in R.mul.tolist()]
    return "\n".join(lines) + "\n"


def parse_table_text(text: str, source: str = "<text>") -> np.ndarray:
    """Single-table variant of the format (used for group tables)."""
    blocks = _blocks(text)
    if len(blocks) != 1:
        raise MalformedTableError(f"{source}: expected exactly one table")
    n = _parse_header(blocks[0], source)
    return _parse_rows(blocks[0][1:], n, source, "table")
