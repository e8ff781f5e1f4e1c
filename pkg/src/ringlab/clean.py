"""Clean, strongly clean and uniquely (strongly) clean elements and rings."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import kernels
from .errors import CapacityError, InternalConsistencyError
from .ring import ElementSet, FiniteRing
from .structure import (
    DEFAULT_IDEAL_CAP,
    LEFT,
    RIGHT,
    characteristic_dichotomy,
    is_identity_two_good,
    is_quasi_duo,
    is_semipotent,
    jacobson_radical,
    structural_flags,
)


@dataclass(frozen=True)
class CleanDecomposition:
    """``a = e + u`` with ``e`` idempotent and ``u`` a unit."""

    e: int
    u: int
    strongly: bool

    def to_dict(self, R: FiniteRing) -> dict:
        return {
            "e": self.e,
            "e_label": R.label(self.e),
            "u": self.u,
            "u_label": R.label(self.u),
            "strongly": self.strongly,
        }


def decompositions(R: FiniteRing, a: int, strongly_only: bool = False) -> list:
    """All clean decompositions of ``a``, ordered by the idempotent's ordinal."""
    a = R._check(a)
    out = []
    for e in R.idempotents:
        u = int(R.sub[a, e])
        if u not in R.units:
            continue
        strongly = bool(R.mul[e, u] == R.mul[u, e])
        if strongly or not strongly_only:
            out.append(CleanDecomposition(e, u, strongly))
    return out


def clean_counts(R: FiniteRing):
    """Per-element counts of clean and of strongly clean decompositions."""

    def compute():
        clean, strong = kernels.clean_counts(
            R.add, R.neg, R.mul, R.idempotents.ordinals, R.units.mask
        )
        clean.setflags(write=False)
        strong.setflags(write=False)
        return clean, strong

    return R.memo("clean_counts", compute)


@dataclass(frozen=True)
class ElementCleanClass:
    clean: bool
    strongly_clean: bool
    uniquely_clean: bool
    usc: bool
    clean_count: int
    strongly_clean_count: int


def element_clean_class(R: FiniteRing, a: int) -> ElementCleanClass:
    a = R._check(a)
    clean, strong = clean_counts(R)
    c, s = int(clean[a]), int(strong[a])
    return ElementCleanClass(c >= 1, s >= 1, c == 1, s == 1, c, s)


def usc_mask(R: FiniteRing) -> np.ndarray:
    return clean_counts(R)[1] == 1


def ucn_sets(R: FiniteRing):
    """``(ucn, ucn0)``: the uniquely clean elements, and ``{e + j}`` over
    central idempotents ``e`` and radical elements ``j``."""
    clean, _ = clean_counts(R)
    ucn = ElementSet(clean == 1)
    J = jacobson_radical(R).ordinals
    central_idem = (R.idempotents & R.center).ordinals
    ucn0 = ElementSet.from_ordinals(R.order, R.add[np.ix_(central_idem, J)].ravel())
    return ucn, ucn0


@dataclass(frozen=True)
class ModRadicalCount:
    count: int
    idempotents: tuple


def unique_idempotent_mod_radical(R: FiniteRing, a: int, require_commute: bool) -> ModRadicalCount:
    """Idempotents ``e`` with ``a - e`` in ``J(R)`` (and ``ea = ae`` if requested)."""
    a = R._check(a)
    J = jacobson_radical(R)
    hits = []
    for e in R.idempotents:
        if int(R.sub[a, e]) not in J:
            continue
        if require_commute and R.mul[e, a] != R.mul[a, e]:
            continue
        hits.append(e)
    return ModRadicalCount(len(hits), tuple(hits))


def mod_radical_counts(R: FiniteRing, require_commute: bool) -> np.ndarray:
    """Vectorised :func:`unique_idempotent_mod_radical` counts for every element."""

    def compute():
        J = jacobson_radical(R).mask
        counts = np.zeros(R.order, dtype=np.int32)
        ar = np.arange(R.order)
        for e in R.idempotents:
            ok = J[R.sub[:, e]]
            if require_commute:
                ok &= R.mul[e, ar] == R.mul[ar, e]
            counts += ok
        return counts

    return R.memo(("mod_radical", require_commute), compute)


# -- ring classification -------------------------------------------------

FLAG_ORDER = (
    "clean",
    "strongly_clean",
    "uniquely_clean",
    "usc",
    "guc",
    "gusc",
    "local",
    "boolean",
    "division",
    "abelian",
    "semipotent",
    "quasi_duo_left",
    "quasi_duo_right",
    "identity_two_good",
    "characteristic_dichotomy",
)

# (premise, conclusion) edges of the hierarchy diagram
DIAGRAM = (
    ("uniquely_clean", "usc"),
    ("uniquely_clean", "guc"),
    ("usc", "gusc"),
    ("guc", "gusc"),
    ("gusc", "strongly_clean"),
    ("strongly_clean", "clean"),
)


@dataclass
class Witness:
    flag: str
    element_ordinal: int
    element_label: str
    decompositions: list = field(default_factory=list)
    related: list = field(default_factory=list)
    note: str = ""

    def to_dict(self) -> dict:
        d = {
            "flag": self.flag,
            "element_ordinal": self.element_ordinal,
            "element_label": self.element_label,
            "decompositions": self.decompositions,
        }
        if self.related:
            d["related"] = self.related
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class ClassificationReport:
    expression: str
    order: int
    flags: dict
    counts: dict
    witnesses: list
    details: dict
    diagram_violations: list

    def witness_for(self, flag: str) -> Optional[Witness]:
        for w in self.witnesses:
            if w.flag == flag:
                return w
        return None

    def to_json_dict(self) -> dict:
        return {
            "expression": self.expression,
            "order": self.order,
            "flags": self.flags,
            "counts": self.counts,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "details": self.details,
            "diagram_violations": self.diagram_violations,
        }


def _ref(R: FiniteRing, a: int) -> dict:
    return {"ordinal": int(a), "label": R.label(int(a))}


def _decomp_witness(R, flag, a, strongly_only, note=""):
    ds = [d.to_dict(R) for d in decompositions(R, a, strongly_only=strongly_only)]
    return Witness(flag, int(a), R.label(int(a)), ds, note=note)


def diagram_violations(flags: dict) -> list:
    return [f"{p} => {c}" for p, c in DIAGRAM if flags[p] and not flags[c]]


def classify_ring(R: FiniteRing, ideal_cap: Optional[int] = None) -> ClassificationReport:
    """Element- and ring-level classification with a witness for every
    negative flag (the least failing ordinal)."""
    ideal_cap = DEFAULT_IDEAL_CAP if ideal_cap is None else ideal_cap
    key = ("classification", ideal_cap)
    return R.memo(key, lambda: _classify(R, ideal_cap))


def _classify(R: FiniteRing, ideal_cap: int) -> ClassificationReport:
    clean, strong = clean_counts(R)
    unit = R.units.mask
    nonunit = ~unit
    if not nonunit.any():
        raise InternalConsistencyError("a nontrivial ring always has the non-unit 0")
    flags, witnesses = {}, []

    def first(mask):
        idx = np.flatnonzero(mask)
        return int(idx[0]) if idx.size else None

    # element-level quantifiers: all elements, or the non-units only
    tests = (
        ("clean", clean < 1, None, False),
        ("strongly_clean", strong < 1, None, False),
        ("uniquely_clean", clean != 1, None, False),
        ("usc", strong != 1, None, True),
        ("guc", (clean != 1) & nonunit, None, False),
        ("gusc", (strong != 1) & nonunit, None, True),
    )
    for name, fail, _, strongly in tests:
        a = first(fail)
        flags[name] = a is None
        if a is not None:
            witnesses.append(_decomp_witness(R, name, a, strongly_only=strongly))

    sf = structural_flags(R)
    for name in ("local", "boolean", "division", "abelian"):
        flags[name] = getattr(sf, name)
        if name in sf.witnesses:
            w = sf.witnesses[name]
            related = [_ref(R, x) for x in w[1:]]
            note = {
                "local": "two non-units whose sum is a unit",
                "boolean": "element that is not idempotent",
                "division": "nonzero non-unit",
                "abelian": "non-central idempotent and an element it does not commute with",
            }[name]
            witnesses.append(Witness(name, w[0], R.label(w[0]), related=related, note=note))

    sp = is_semipotent(R)
    flags["semipotent"] = sp.holds
    if not sp.holds:
        witnesses.append(Witness("semipotent", sp.witness, R.label(sp.witness),
                                 note=f"{sp.side} principal ideal outside J(R) without a nonzero idempotent"))

    for side, name in ((LEFT, "quasi_duo_left"), (RIGHT, "quasi_duo_right")):
        try:
            qd = is_quasi_duo(R, side, ideal_cap)
        except CapacityError:
            flags[name] = None
            continue
        flags[name] = qd.holds
        if not qd.holds:
            where, x, r = qd.witness
            witnesses.append(Witness(
                name, x, R.label(x), related=[_ref(R, r)],
                note=f"maximal {side} ideal {list(qd.ideal)} is not closed: {where} product with the related element escapes",
            ))

    good, pair = is_identity_two_good(R)
    flags["identity_two_good"] = good
    if not good:
        witnesses.append(Witness("identity_two_good", R.one, R.label(R.one),
                                 note="1 is not a sum of two units"))
    ch = characteristic_dichotomy(R)
    flags["characteristic_dichotomy"] = ch.holds
    if not ch.holds:
        a = R.multiple(ch.witness)
        witnesses.append(Witness("characteristic_dichotomy", a, R.label(a),
                                 note=f"{ch.witness}*1 is neither in J(R) nor a unit"))

    J = jacobson_radical(R)
    counts = {
        "units": len(R.units),
        "idempotents": len(R.idempotents),
        "nilpotents": len(R.nilpotents),
        "radical": len(J),
        "center": len(R.center),
    }
    ucn, ucn0 = ucn_sets(R)
    details = {
        "identity_two_good_pair": [_ref(R, x) for x in pair] if pair else None,
        "characteristic": [
            {"n": n, "ordinal": o, "label": R.label(o), "status": s} for n, o, s in ch.entries
        ],
        "radical": [_ref(R, x) for x in J],
        "ucn_equals_ucn0": ucn == ucn0,
        "quasi_duo_checked": flags["quasi_duo_left"] is not None,
    }
    flags = {k: flags[k] for k in FLAG_ORDER}
    return ClassificationReport(
        expression=R.provenance,
        order=R.order,
        flags=flags,
        counts=counts,
        witnesses=sorted(witnesses, key=lambda w: FLAG_ORDER.index(w.flag)),
        details=details,
        diagram_violations=diagram_violations(flags),
    )
