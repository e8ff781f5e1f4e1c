"""The default corpus of finite rings and on-demand construction helpers."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .. import constructions as cons
from ..clean import classify_ring
from ..errors import CapacityError
from ..expr import GR, Corner, Mat, Prod, Quot, Tri, TrivExt, Zn, evaluate, parse_ring_expr, render
from ..ring import ElementSet, FiniteRing
from ..structure import DEFAULT_IDEAL_CAP, jacobson_radical

MIN_ORDER_CAP = 16

IDEAL_EXTENSION_NAME = "IdealExt(Z4,2Z8)"


@dataclass
class CorpusEntry:
    name: str
    expr: Optional[object]  # RingExpr, or None for table-only constructions
    ring: FiniteRing
    kind: str
    meta: dict = field(default_factory=dict)


def _kind(node) -> str:
    return {
        Zn: "zn", Mat: "matrix", Tri: "triangular", Prod: "product", GR: "group_ring",
        TrivExt: "trivial_extension", Quot: "quotient", Corner: "corner",
    }[type(node)]


def z4_over_2z8(cap=None) -> FiniteRing:
    """``I(Z_4, 2Z_8)``: the ideal ``{0,2,4,6}`` of ``Z_8`` with its own
    nonzero multiplication (2*2 = 4), ``Z_4`` acting by integer multiples."""
    Z8 = cons.make_zn(8)
    M = cons.ideal_bimodule(Z8, [0, 2, 4, 6], scalar_lift=[0, 1, 2, 3], with_internal=True, name="2Z8")
    return cons.make_ideal_extension(cons.make_zn(4), M, cap=cap, provenance=IDEAL_EXTENSION_NAME)


class Corpus:
    """Named rings plus caps.  Classification reports and rings built on
    demand by claim checkers are memoised per corpus."""

    def __init__(self, order_cap: int, ideal_cap: int = DEFAULT_IDEAL_CAP):
        self.order_cap = order_cap
        self.ideal_cap = ideal_cap
        self.entries: list = []
        self.dropped: list = []
        self._by_name: dict = {}
        self._extra: dict = {}

    def add(self, entry: CorpusEntry):
        if entry.name in self._by_name:
            raise ValueError(f"duplicate corpus entry {entry.name}")
        self.entries.append(entry)
        self._by_name[entry.name] = entry

    def add_expr(self, text: str, meta=None) -> Optional[CorpusEntry]:
        node = parse_ring_expr(text)
        name = render(node)
        if name in self._by_name:
            return self._by_name[name]
        try:
            ring = self.build(name)
        except CapacityError:
            self.dropped.append(name)
            return None
        entry = CorpusEntry(name, node, ring, _kind(node), dict(meta or {}))
        self.add(entry)
        return entry

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, name) -> CorpusEntry:
        return self._by_name[name]

    def names(self) -> list:
        return [e.name for e in self.entries]

    def build(self, text: str) -> FiniteRing:
        """Evaluate an expression within the order cap, memoised."""
        node = parse_ring_expr(text)
        name = render(node)
        if name in self._by_name:
            return self._by_name[name].ring
        if name not in self._extra:
            try:
                self._extra[name] = evaluate(node, self.order_cap)
            except CapacityError as exc:
                self._extra[name] = exc
        got = self._extra[name]
        if isinstance(got, CapacityError):
            raise got
        return got

    def try_build(self, text: str) -> Optional[FiniteRing]:
        try:
            return self.build(text)
        except CapacityError:
            return None

    def report(self, R: FiniteRing):
        return classify_ring(R, self.ideal_cap)

    def quotient_by_radical(self, R: FiniteRing) -> FiniteRing:
        def compute():
            return cons.make_quotient(R, jacobson_radical(R), f"Quot({R.provenance},J)")[0]

        return R.memo("quotient_by_radical", compute)


BASE_RINGS = ["Z2", "Z3", "Z4"]
GROUPS = ["C1", "C2", "C3", "C4", "C2*C2"]


def default_corpus(order_cap: int = cons.DEFAULT_ORDER_CAP, ideal_cap: int = DEFAULT_IDEAL_CAP) -> Corpus:
    """Deterministic corpus; entries beyond ``order_cap`` are dropped and
    listed in ``corpus.dropped``."""
    if order_cap < MIN_ORDER_CAP:
        dropped = [f"Z{n}" for n in range(order_cap + 1, 17)]
        raise CapacityError(
            f"order cap {order_cap} is below the minimum {MIN_ORDER_CAP}; would drop: {', '.join(dropped)}",
            dropped,
        )
    C = Corpus(order_cap, ideal_cap)
    for n in range(2, 17):
        C.add_expr(f"Z{n}")
    for k in (2, 3):
        for base in BASE_RINGS:
            C.add_expr(f"T({k},{base})")
    C.add_expr("M(2,Z2)")
    C.add_expr("M(2,Z3)")
    for text in ("Z2xZ3", "Z2xZ2", "T(2,Z2)xT(2,Z2)"):
        C.add_expr(text)
    for base in BASE_RINGS:
        for g in GROUPS:
            C.add_expr(f"GR({base},{g})")
    for base in ("Z2", "Z3", "Z4"):
        C.add_expr(f"TrivExt({base})")
    if 16 <= order_cap:
        C.add(CorpusEntry(IDEAL_EXTENSION_NAME, None, z4_over_2z8(order_cap), "ideal_extension",
                          {"base": "Z4", "module": "2Z8"}))
    else:
        C.dropped.append(IDEAL_EXTENSION_NAME)
    base_entries = [e for e in C.entries if e.expr is not None]
    for entry in base_entries:
        if len(jacobson_radical(entry.ring)) > 1:
            C.add_expr(f"Quot({entry.name},J)")
    prod_name = "T(2,Z2)xT(2,Z2)"
    if prod_name in C.names():
        P = C[prod_name].ring
        for e in P.idempotents:
            if e not in (P.zero, P.one):
                C.add_expr(f"Corner({prod_name},{e})")
    return C
