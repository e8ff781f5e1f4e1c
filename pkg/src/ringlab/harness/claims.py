"""Claim registry: each checkable statement bound to a corpus-wide checker.

Conditional statements are checked as material implications over the
applicable rings; biconditionals in both directions.  A claim whose
hypothesis no corpus ring meets is reported as verified with zero
applicable entries, which the text report shows explicitly.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .. import constructions as cons
from ..clean import classify_ring, decompositions, mod_radical_counts, ucn_sets, usc_mask
from ..errors import CapacityError, RegistryError
from ..expr import GR, Mat, Prod, Tri, TrivExt, parse_ring_expr, render
from ..ring import ElementSet, FiniteRing
from ..structure import (
    TWO_SIDED,
    additive_order,
    is_two_good_pair,
    jacobson_radical,
    one_sided_ideals,
    radical_primes,
    structural_flags,
)
from .corpus import IDEAL_EXTENSION_NAME, Corpus

VERIFIED, REFUTED, PARTIAL, NOT_CHECKED, EVIDENCE = (
    "verified", "refuted", "partially-checked", "not-checked", "evidence",
)

# refutation of any of these indicates an implementation bug (or an error in the claim itself)
THEOREM_CLASS = frozenset({"E2.7", "L2.9", "C2.10", "P2.20", "P2.21", "T3.3", "E3.5"})

RADICAL_SUBSET_CAP = 16


@dataclass
class RingOutcome:
    ring: str
    result: str  # "ok" | "violation" | "skipped"
    detail: str = ""
    witness: Optional[dict] = None

    def to_dict(self) -> dict:
        d = {"ring": self.ring, "result": self.result, "detail": self.detail}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class ClaimReport:
    claim_id: str
    locus: str
    statement: str
    status: str
    outcomes: list = field(default_factory=list)
    note: str = ""
    theorem_class: bool = False

    @property
    def applicable(self) -> int:
        return sum(o.result != "skipped" for o in self.outcomes)

    @property
    def violations(self) -> list:
        return [o for o in self.outcomes if o.result == "violation"]

    @property
    def skipped(self) -> list:
        return [o for o in self.outcomes if o.result == "skipped"]

    def to_json_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "locus": self.locus,
            "statement": self.statement,
            "status": self.status,
            "theorem_class": self.theorem_class,
            "applicable": self.applicable,
            "violations": len(self.violations),
            "skipped": len(self.skipped),
            "note": self.note,
            "outcomes": [o.to_dict() for o in self.outcomes],
        }


class _Run:
    def __init__(self):
        self.outcomes = []
        self._seen = set()

    def seen(self, name) -> bool:
        if name in self._seen:
            return True
        self._seen.add(name)
        return False

    def check(self, ring: str, ok: bool, detail: str, witness=None):
        self.outcomes.append(RingOutcome(ring, "ok" if ok else "violation", detail, None if ok else witness))

    def skip(self, ring: str, reason: str):
        self.outcomes.append(RingOutcome(ring, "skipped", reason))


def _el(R: FiniteRing, a) -> dict:
    return {"ordinal": int(a), "label": R.label(int(a))}


def _decomp_list(R, a, strongly_only=True):
    return [d.to_dict(R) for d in decompositions(R, a, strongly_only)]


def _flag_witness(corpus: Corpus, R: FiniteRing, flag: str):
    w = corpus.report(R).witness_for(flag)
    return None if w is None else {"expression": R.provenance, **w.to_dict()}


def _imp(p: bool, q: bool) -> bool:
    return (not p) or q


def _fl(corpus, R):
    return corpus.report(R).flags


# -- shared ring families ----------------------------------------------------

PRODUCT_BASES = ["Z2", "Z3", "Z4", "Z5", "T(2,Z2)", "TrivExt(Z2)", "GR(Z2,C2)", "M(2,Z2)"]
GROUP_RING_BASES = ["Z2", "Z3", "Z4", "Z5", "Z6", "Z8", "Z9", "Z2xZ2", "TrivExt(Z2)", "T(2,Z2)", "M(2,Z2)"]
GROUP_RING_GROUPS = ["C1", "C2", "C3", "C4", "C5", "C6", "C2*C2"]
TRIVEXT_BASES = ["Z2", "Z3", "Z4", "Z5", "Z6", "Z2xZ2", "T(2,Z2)", "GR(Z2,C2)", "M(2,Z2)"]
BOOLEAN_BASES = ["Z2", "Z2xZ2"]
ODD_CYCLIC = [3, 5, 7, 9, 11]


def binary_products(corpus: Corpus):
    """(name, product ring, [factor rings]) for corpus products and all
    pairs of :data:`PRODUCT_BASES` within the cap."""
    out, seen = [], set()
    for entry in corpus:
        if entry.kind == "product":
            node = entry.expr
            factors = [corpus.build(render(node.left)), corpus.build(render(node.right))]
            out.append((entry.name, entry.ring, factors))
            seen.add(entry.name)
    for i, a in enumerate(PRODUCT_BASES):
        for b in PRODUCT_BASES[i:]:
            name = render(parse_ring_expr(f"{a}x{b}"))
            if name in seen:
                continue
            seen.add(name)
            P = corpus.try_build(name)
            if P is None:
                continue
            out.append((name, P, [corpus.build(a), corpus.build(b)]))
    return out


def group_ring_pairs(corpus: Corpus):
    """(name, RG, R, G, base name, group name) for corpus group rings and the
    base x group grid within the cap."""
    out, seen = [], set()
    candidates = []
    for entry in corpus:
        if entry.kind == "group_ring":
            candidates.append((render(entry.expr.ring), render(entry.expr.group)))
    candidates += [(b, g) for b in GROUP_RING_BASES for g in GROUP_RING_GROUPS]
    from ..expr import evaluate_group

    for base, grp in candidates:
        name = f"GR({base},{grp})"
        name = render(parse_ring_expr(name))
        if name in seen:
            continue
        seen.add(name)
        R = corpus.build(base)
        G = evaluate_group(parse_ring_expr(f"GR(Z2,{grp})").group)
        if G.order * np.log2(R.order) > np.log2(corpus.order_cap) + 1e-9:
            continue
        RG = corpus.try_build(name)
        if RG is None:
            continue
        out.append((name, RG, R, G, base, grp))
    return out


def trivial_extensions(corpus: Corpus):
    out, seen = [], set()
    names = [e.name for e in corpus if e.kind == "trivial_extension"]
    names += [f"TrivExt({b})" for b in TRIVEXT_BASES]
    for name in names:
        name = render(parse_ring_expr(name))
        if name in seen:
            continue
        seen.add(name)
        T = corpus.try_build(name)
        if T is None:
            continue
        base = render(parse_ring_expr(name).ring)
        out.append((name, T, corpus.build(base), cons.regular_bimodule(corpus.build(base))))
    return out


def ideal_extensions(corpus: Corpus):
    """The corpus ideal extension plus two small table-defined ones."""
    out = []
    if IDEAL_EXTENSION_NAME in corpus.names():
        entry = corpus[IDEAL_EXTENSION_NAME]
        Z8 = cons.make_zn(8)
        M = cons.ideal_bimodule(Z8, [0, 2, 4, 6], [0, 1, 2, 3], True, "2Z8")
        out.append((entry.name, entry.ring, corpus.build("Z4"), M))
    Z2, Z4 = corpus.build("Z2"), corpus.build("Z4")
    # Z2 acting on the ideal {0,2} of Z4: zero internal multiplication
    M = cons.ideal_bimodule(Z4, [0, 2], [0, 1], True, "2Z4")
    out.append(("IdealExt(Z2,2Z4)", cons.make_ideal_extension(Z2, M, provenance="IdealExt(Z2,2Z4)"), Z2, M))
    # Z2 as a non-unital ring over itself: m + n + mn = 0 has no solution for m = 1
    M = cons.regular_bimodule(Z2, with_internal=True)
    out.append(("IdealExt(Z2,Z2)", cons.make_ideal_extension(Z2, M, provenance="IdealExt(Z2,Z2)"), Z2, M))
    return out


# -- checkers -------------------------------------------------------------------


def check_L2_1(corpus, run):
    for entry in corpus:
        R = entry.ring
        m = usc_mask(R)
        one_minus = R.sub[R.one, :]
        bad = np.flatnonzero(m != m[one_minus])
        if bad.size:
            a = int(bad[0])
            run.check(entry.name, False, f"usc({R.label(a)}) != usc(1-a)",
                      {"expression": entry.name, "element": _el(R, a), "one_minus": _el(R, one_minus[a])})
        else:
            run.check(entry.name, True, f"{R.order} elements")


def check_L2_2(corpus, run):
    for entry in corpus:
        f = _fl(corpus, entry.ring)
        if not f["gusc"]:
            continue
        run.check(entry.name, f["strongly_clean"], "GUSC; strongly clean" if f["strongly_clean"] else "GUSC but not strongly clean",
                  _flag_witness(corpus, entry.ring, "strongly_clean"))


def check_L2_3(corpus, run):
    for name, P, factors in binary_products(corpus):
        fp = _fl(corpus, P)
        if not fp["gusc"]:
            continue
        bad = [F for F in factors if not _fl(corpus, F)["gusc"]]
        run.check(name, not bad, "product GUSC; factors GUSC" if not bad else f"factor {bad[0].provenance} not GUSC",
                  _flag_witness(corpus, bad[0], "gusc") if bad else None)


def check_P2_5(corpus, run):
    for name, P, factors in binary_products(corpus):
        lhs = _fl(corpus, P)["gusc"]
        rhs = all(_fl(corpus, F)["usc"] for F in factors)
        detail = f"GUSC(product)={lhs}, all factors USC={rhs}"
        wit = None
        if lhs != rhs:
            wit = _flag_witness(corpus, P, "gusc") if not lhs else {"factors": [F.provenance for F in factors]}
        run.check(name, lhs == rhs, detail, wit)


def check_C2_6(corpus, run):
    for entry in corpus:
        R = entry.ring
        if not _fl(corpus, R)["gusc"]:
            continue
        for e in (R.idempotents & R.center):
            if e in (R.zero, R.one):
                continue
            name = f"Corner({entry.name},{e})"
            S = cons.corner_ring(R, e, name)
            fs = _fl(corpus, S)
            ok = fs["gusc"] and fs["usc"]
            run.check(name, ok, f"eRe GUSC={fs['gusc']} USC={fs['usc']}",
                      _flag_witness(corpus, S, "usc" if fs["gusc"] else "gusc"))


def check_E2_7(corpus, run):
    for entry in corpus:
        f = _fl(corpus, entry.ring)
        if f["local"]:
            run.check(entry.name, f["gusc"], f"local; GUSC={f['gusc']}", _flag_witness(corpus, entry.ring, "gusc"))


def check_P2_8(corpus, run):
    for entry in corpus:
        R = entry.ring
        f = _fl(corpus, R)
        two = len(R.idempotents) == 2
        clauses = {
            "local": f["local"],
            "gusc+Id={0,1}": f["gusc"] and two,
            "strongly_clean+Id={0,1}": f["strongly_clean"] and two,
            "clean+Id={0,1}": f["clean"] and two,
            "guc+Id={0,1}": f["guc"] and two,
        }
        vals = set(clauses.values())
        run.check(entry.name, len(vals) == 1, ", ".join(f"{k}={v}" for k, v in clauses.items()),
                  {"expression": entry.name, "clauses": clauses})


def check_L2_9(corpus, run):
    for entry in corpus:
        f = _fl(corpus, entry.ring)
        rhs = f["local"] or f["usc"]
        detail = f"GUSC={f['gusc']}, local={f['local']}, USC={f['usc']}"
        wit = None
        if f["gusc"] != rhs:
            wit = {"expression": entry.name, "local": _flag_witness(corpus, entry.ring, "local"),
                   "usc": _flag_witness(corpus, entry.ring, "usc"), "gusc": _flag_witness(corpus, entry.ring, "gusc")}
        run.check(entry.name, f["gusc"] == rhs, detail, wit)


def check_C2_10(corpus, run):
    for entry in corpus:
        R = entry.ring
        if not _fl(corpus, R)["gusc"]:
            continue
        Q = corpus.quotient_by_radical(R)
        sf = structural_flags(Q)
        ok = sf.boolean or sf.division
        wit = None
        if not ok:
            wit = {"expression": Q.provenance,
                   "not_idempotent": _el(Q, sf.witnesses["boolean"][0]),
                   "nonzero_nonunit": _el(Q, sf.witnesses["division"][0])}
        run.check(entry.name, ok, f"R/J order {Q.order}: Boolean={sf.boolean}, division={sf.division}", wit)


def radical_ideals(R: FiniteRing):
    """Two-sided ideals contained in ``J(R)``."""
    J = jacobson_radical(R)
    return one_sided_ideals(R, TWO_SIDED, cap=R.order, within=J)


def check_P0_2_3(corpus, run):
    for entry in corpus:
        R = entry.ring
        f = _fl(corpus, R)
        if not f["abelian"]:
            continue
        J = jacobson_radical(R)
        if len(J) > RADICAL_SUBSET_CAP:
            run.skip(entry.name, f"|J| = {len(J)} exceeds the radical-subset cap {RADICAL_SUBSET_CAP}")
            continue
        bad = []
        ideals = radical_ideals(R)
        for I in ideals:
            Q = cons.make_quotient(R, I, f"{entry.name}/I{list(I)}")[0]
            if _fl(corpus, Q)["gusc"] != f["gusc"]:
                bad.append((I, Q))
        wit = None
        if bad:
            I, Q = bad[0]
            wit = {"expression": entry.name, "ideal": list(I), "gusc_R": f["gusc"], "gusc_quotient": _fl(corpus, Q)["gusc"]}
        run.check(entry.name, not bad, f"{len(ideals)} ideals inside J(R); GUSC(R)={f['gusc']}", wit)


def check_L2_11(corpus, run):
    for entry in corpus:
        R = entry.ring
        f = _fl(corpus, R)
        if not f["gusc"]:
            continue
        ch = corpus.report(R).details["characteristic"]
        run.check(entry.name, f["characteristic_dichotomy"],
                  "; ".join(f"{c['n']}:{c['status']}" for c in ch[:6]) + (" ..." if len(ch) > 6 else ""),
                  _flag_witness(corpus, R, "characteristic_dichotomy"))


def _matrix_rings(corpus):
    out = [(e.name, e.ring, e.expr) for e in corpus if e.kind == "matrix" and e.expr.k >= 2]
    for extra in ("M(2,Z4)", "M(2,Z5)"):
        R = corpus.try_build(extra)
        if R is not None and extra not in corpus.names():
            out.append((extra, R, parse_ring_expr(extra)))
    return out


def displayed_two_good_pair(R: FiniteRing, base: FiniteRing):
    """``[[1,1],[1,0]]`` and ``[[0,-1],[-1,1]]`` as ordinals of ``M_2(base)``."""
    o, z, m = base.one, base.zero, base.negate(base.one)
    q = base.order

    def enc(entries):
        return int(sum(int(v) * q ** t for t, v in enumerate(entries)))

    return enc([o, o, o, z]), enc([z, m, m, o])


def check_E2_12(corpus, run):
    for name, R, node in _matrix_rings(corpus):
        f = _fl(corpus, R)
        detail = f"GUSC={f['gusc']}"
        if node.k == 2:
            base = corpus.build(render(node.ring))
            u, v = displayed_two_good_pair(R, base)
            detail += f"; displayed 2-good pair valid={is_two_good_pair(R, u, v)}"
        wit = None
        if f["gusc"]:
            wit = {"expression": name, "note": "every non-unit has exactly one strongly clean decomposition",
                   "local": _flag_witness(corpus, R, "local"), "usc": _flag_witness(corpus, R, "usc")}
        run.check(name, not f["gusc"], detail, wit)


def check_E2_13(corpus, run):
    for entry in corpus:
        if entry.kind != "triangular":
            continue
        T = entry.ring
        R = corpus.build(render(entry.expr.ring))
        ft, fr = _fl(corpus, T), _fl(corpus, R)
        commutative = len(R.center) == R.order
        ok = _imp(ft["gusc"], fr["gusc"]) and _imp(commutative and fr["usc"], ft["gusc"])
        run.check(entry.name, ok,
                  f"GUSC(T)={ft['gusc']}, GUSC(R)={fr['gusc']}, R commutative={commutative}, USC(R)={fr['usc']}",
                  _flag_witness(corpus, T, "gusc"))


def check_P2_15(corpus, run):
    for entry in corpus:
        R = entry.ring
        f = _fl(corpus, R)
        if not f["gusc"]:
            continue
        if f["quasi_duo_left"] is None:
            run.skip(entry.name, f"order {R.order} above the ideal-lattice cap {corpus.ideal_cap}")
            continue
        ok = f["quasi_duo_left"] and f["quasi_duo_right"]
        wit = _flag_witness(corpus, R, "quasi_duo_left") or _flag_witness(corpus, R, "quasi_duo_right")
        run.check(entry.name, ok, f"left={f['quasi_duo_left']}, right={f['quasi_duo_right']}", wit)


def check_P2_16(corpus, run):
    for entry in corpus:
        Q = corpus.quotient_by_radical(entry.ring)
        f = _fl(corpus, Q)
        wit = None
        if f["gusc"] != f["guc"]:
            wit = _flag_witness(corpus, Q, "guc" if f["gusc"] else "gusc")
        run.check(entry.name, f["gusc"] == f["guc"], f"R/J order {Q.order}: GUSC={f['gusc']}, GUC={f['guc']}", wit)


def check_C0_2_3(corpus, run):
    for entry in corpus:
        R = entry.ring
        if len(jacobson_radical(R)) != 1:
            continue
        f = _fl(corpus, R)
        wit = None
        if f["gusc"] != f["guc"]:
            wit = _flag_witness(corpus, R, "guc" if f["gusc"] else "gusc")
        run.check(entry.name, f["gusc"] == f["guc"], f"J=0: GUSC={f['gusc']}, GUC={f['guc']}", wit)


def _ucn_check(corpus, run, flag):
    for entry in corpus:
        R = entry.ring
        if not _fl(corpus, R)[flag]:
            continue
        ucn, ucn0 = ucn_sets(R)
        wit = None
        if ucn != ucn0:
            diff = (ucn - ucn0) | (ucn0 - ucn)
            a = next(iter(diff))
            wit = {"expression": entry.name, "element": _el(R, a), "in_ucn": a in ucn, "in_ucn0": a in ucn0}
        run.check(entry.name, ucn == ucn0, f"|ucn|={len(ucn)}, |ucn0|={len(ucn0)}", wit)


def check_L2_17(corpus, run):
    _ucn_check(corpus, run, "local")


def check_L2_18(corpus, run):
    _ucn_check(corpus, run, "usc")


def check_L2_19(corpus, run):
    _ucn_check(corpus, run, "gusc")


def check_P2_20(corpus, run):
    for entry in corpus:
        R = entry.ring
        if not _fl(corpus, R)["gusc"]:
            continue
        counts = mod_radical_counts(R, True)
        bad = np.flatnonzero(~R.units.mask & (counts != 1))
        wit = None
        if bad.size:
            a = int(bad[0])
            wit = {"expression": entry.name, "element": _el(R, a), "count": int(counts[a])}
        run.check(entry.name, not bad.size, f"{len(R.units.complement())} non-units checked", wit)


def check_P2_21(corpus, run):
    for entry in corpus:
        R = entry.ring
        counts = mod_radical_counts(R, False)
        if (counts[~R.units.mask] != 1).any():
            continue
        f = _fl(corpus, R)
        run.check(entry.name, f["guc"], f"hypothesis holds; GUC={f['guc']}", _flag_witness(corpus, R, "guc"))


def _idempotents_commute_with_module(R, M) -> bool:
    for e in R.idempotents:
        if not np.array_equal(M.left_action[e, :], M.right_action[:, e]):
            return False
    return True


def check_P2_22(corpus, run):
    for name, T, R, M in trivial_extensions(corpus):
        ft, fr = _fl(corpus, T), _fl(corpus, R)
        hyp = _idempotents_commute_with_module(R, M)
        module_part = T.idempotents.ordinals // R.order
        claim = (module_part == M.zero).all()
        ok = _imp(ft["gusc"], fr["gusc"]) and _imp(hyp and fr["gusc"], ft["gusc"]) and _imp(hyp, claim)
        wit = None
        if not ok:
            wit = {"expression": name, "gusc_T": _flag_witness(corpus, T, "gusc"), "gusc_R": _flag_witness(corpus, R, "gusc")}
            if hyp and not claim:
                bad = T.idempotents.ordinals[module_part != M.zero][0]
                wit["idempotent_with_module_part"] = _el(T, bad)
        run.check(name, ok, f"GUSC(T)={ft['gusc']}, GUSC(R)={fr['gusc']}, ex=xe={hyp}, idempotents (e,0)={bool(claim)}", wit)


def _quasi_regular_module(M) -> bool:
    """Every ``m`` has some ``n`` with ``m + n + mn = 0``."""
    m = np.arange(M.carrier_size)
    total = M.add_table[M.add_table[m[:, None], m[None, :]], M.internal_mul]
    return bool((total == M.zero).any(axis=1).all())


def check_P2_23(corpus, run):
    for name, X, R, M in ideal_extensions(corpus):
        fx, fr = _fl(corpus, X), _fl(corpus, R)
        cond_a = _idempotents_commute_with_module(R, M)
        cond_b = _quasi_regular_module(M)
        module_part = X.idempotents.ordinals // R.order
        idem_form = (module_part == M.zero).all()
        ok = (_imp(fx["gusc"], fr["gusc"]) and _imp(cond_a and cond_b and fr["gusc"], fx["gusc"])
              and _imp(cond_a and cond_b, idem_form))
        run.check(name, ok,
                  f"GUSC(I)={fx['gusc']}, GUSC(R)={fr['gusc']}, (a)={cond_a}, (b)={cond_b}, idempotents (e,0)={bool(idem_form)}",
                  None if ok else {"expression": name, "gusc": _flag_witness(corpus, X, "gusc")})


def _p_group_condition(R, G):
    """Primes p with G a p-group and p*1 in J(R)."""
    return [p for p in radical_primes(R) if G.is_p_group(p)]


def _displayed_cyclic_witness(RG: FiniteRing, R: FiniteRing, G) -> Optional[dict]:
    """``1 + g^(n-1)`` with its two displayed strongly clean decompositions,
    for Boolean ``R`` and odd cyclic ``G`` of order >= 3."""
    n = G.order
    if n < 3 or n % 2 == 0 or not G.name.startswith("C") or "*" in G.name:
        return None
    if not structural_flags(R).boolean:
        return None
    o, z = R.one, R.zero
    a = cons.group_ring_element(RG, R, [o] + [z] * (n - 2) + [o])
    e1, u1 = RG.one, cons.group_ring_element(RG, R, [z] * (n - 1) + [o])
    e2 = cons.group_ring_element(RG, R, [o] * n)
    # x + g^(n-1) with x = g + ... + g^(n-1)
    x = cons.group_ring_element(RG, R, [z] + [o] * (n - 1))
    u2 = RG.plus(x, u1)
    return {"expression": RG.provenance, "element": _el(RG, a), "displayed_decompositions": [
        {"e": _el(RG, e1), "u": _el(RG, u1)}, {"e": _el(RG, e2), "u": _el(RG, u2)}],
        "decompositions": _decomp_list(RG, a), "a": a, "pairs": [(e1, u1), (e2, u2)]}


def gusc_witness(corpus, RG, R, G):
    shown = _displayed_cyclic_witness(RG, R, G)
    if shown is not None and shown["a"] not in RG.units and len(shown["decompositions"]) != 1:
        out = {k: v for k, v in shown.items() if k not in ("a", "pairs")}
        out["flag"] = "gusc"
        return out
    return _flag_witness(corpus, RG, "gusc")


def check_P3_1(corpus, run):
    for name, RG, R, G, *_ in group_ring_pairs(corpus):
        if not _fl(corpus, RG)["gusc"]:
            continue
        primes = _p_group_condition(R, G)
        ok = _fl(corpus, R)["gusc"] and bool(primes)
        run.check(name, ok, f"GUSC(R)={_fl(corpus, R)['gusc']}, primes p with G p-group and p in J(R): {primes}",
                  {"expression": name, "gusc_R": _flag_witness(corpus, R, "gusc")})


def check_P3_2(corpus, run):
    for name, RG, R, G, *_ in group_ring_pairs(corpus):
        if corpus.quotient_by_radical(R).order != 2:
            continue
        lhs = _fl(corpus, RG)["gusc"]
        rhs = G.is_p_group(2)
        run.check(name, lhs == rhs, f"R/J = Z2; GUSC(RG)={lhs}, G 2-group={rhs}",
                  gusc_witness(corpus, RG, R, G) if not lhs else None)


def check_T3_3(corpus, run):
    for name, RG, R, G, *_ in group_ring_pairs(corpus):
        lhs = _fl(corpus, RG)["gusc"]
        primes = _p_group_condition(R, G)
        rhs = _fl(corpus, R)["gusc"] and bool(primes)
        wit = gusc_witness(corpus, RG, R, G) if not lhs else None
        detail = f"GUSC(RG)={lhs}; GUSC(R)={_fl(corpus, R)['gusc']}, p-group primes in J(R)={primes}"
        if lhs != rhs and wit is None:
            wit = {"expression": name, "gusc_R": _flag_witness(corpus, R, "gusc")}
        run.outcomes.append(RingOutcome(name, "ok" if lhs == rhs else "violation", detail, wit))


def check_C3_4(corpus, run):
    for name, RG, R, G, *_ in group_ring_pairs(corpus):
        if G.order == 1:
            # the trivial group is a p-group for every p; read as nontrivial
            continue
        if not G.is_p_group(2):
            continue
        lhs = _fl(corpus, RG)["gusc"]
        two_in_J = R.multiple(2) in jacobson_radical(R)
        rhs = _fl(corpus, R)["gusc"] and two_in_J
        run.check(name, lhs == rhs, f"GUSC(RG)={lhs}, GUSC(R)={_fl(corpus, R)['gusc']}, 2 in J(R)={two_in_J}",
                  gusc_witness(corpus, RG, R, G) if not lhs else {"expression": name})


def check_E3_5(corpus, run):
    from ..constructions import make_cyclic_group

    for base in BOOLEAN_BASES:
        R = corpus.build(base)
        for n in ODD_CYCLIC:
            name = f"GR({base},C{n})"
            RG = corpus.try_build(name)
            if RG is None:
                continue
            G = make_cyclic_group(n)
            w = _displayed_cyclic_witness(RG, R, G)
            a = w["a"]
            displayed_ok = all(
                e in RG.idempotents and u in RG.units and RG.plus(e, u) == a and RG.times(e, u) == RG.times(u, e)
                for e, u in w["pairs"]
            ) and w["pairs"][0][0] != w["pairs"][1][0]
            f = _fl(corpus, RG)
            ok = a not in RG.units and displayed_ok and not f["gusc"]
            out = {k: v for k, v in w.items() if k not in ("a", "pairs")}
            run.outcomes.append(RingOutcome(
                name, "ok" if ok else "violation",
                f"1+g^{n - 1} non-unit={a not in RG.units}, displayed decompositions valid={displayed_ok}, GUSC={f['gusc']}",
                out,
            ))


def check_E1_7(corpus, run):
    """The finite items: T_2(Z_2) USC, not UC, GUSC, not GUC; Z_5 GUC, not
    UC; and the diagram implications on every corpus ring."""
    for text, want in (
        ("T(2,Z2)", {"usc": True, "uniquely_clean": False, "gusc": True, "guc": False, "strongly_clean": True}),
        ("Z5", {"guc": True, "uniquely_clean": False}),
    ):
        f = _fl(corpus, corpus.build(text))
        got = {k: f[k] for k in want}
        run.check(f"{text} (named example)", got == want, ", ".join(f"{k}={v}" for k, v in got.items()),
                  {"expected": want, "got": got})
    for entry in corpus:
        rep = corpus.report(entry.ring)
        run.check(entry.name, not rep.diagram_violations,
                  "diagram implications hold" if not rep.diagram_violations else "; ".join(rep.diagram_violations),
                  {"expression": entry.name, "violations": rep.diagram_violations})


def check_R1_7(corpus, run):
    for entry in corpus:
        f = _fl(corpus, entry.ring)
        rhs = f["abelian"] and f["gusc"]
        run.check(entry.name, f["guc"] == rhs, f"GUC={f['guc']}, abelian={f['abelian']}, GUSC={f['gusc']}",
                  {"expression": entry.name, "abelian": _flag_witness(corpus, entry.ring, "abelian"),
                   "guc": _flag_witness(corpus, entry.ring, "guc")})


@dataclass(frozen=True)
class Claim:
    claim_id: str
    locus: str
    statement: str
    checker: Optional[Callable] = None
    out_of_scope_reason: str = ""

    @property
    def theorem_class(self) -> bool:
        return self.claim_id in THEOREM_CLASS


INFINITE = "not machine-checked: infinite carrier"

CLAIMS = [
    Claim("E1.7", "Example 1.7 (1),(2),(4) and the hierarchy diagram",
          "T_2(Z_2) is USC, not UC, GUSC, not GUC; Z_5 is GUC, not UC; UC=>USC=>GUSC=>strongly clean=>clean, UC=>GUC=>GUSC",
          check_E1_7),
    Claim("E1.7(3)", "Example 1.7(3)", "Z_(3) is GUSC but not USC", out_of_scope_reason=INFINITE),
    Claim("E1.7(5)", "Example 1.7(5)", "M_2 over the p-adic integers is strongly clean, not USC, not GUSC", out_of_scope_reason=INFINITE),
    Claim("R1.7", "remark after Example 1.7", "R is GUC iff R is abelian and GUSC", check_R1_7),
    Claim("L2.1", "Lemma 2.1", "a is USC iff 1-a is USC", check_L2_1),
    Claim("L2.2", "Lemma 2.2", "GUSC => strongly clean", check_L2_2),
    Claim("L2.3", "Lemma 2.3", "a GUSC direct product has GUSC factors", check_L2_3),
    Claim("P2.5", "Proposition 2.5", "a direct product is GUSC iff each factor is USC", check_P2_5),
    Claim("C2.6", "Corollary 2.6", "R GUSC, 0 != e central idempotent => eRe GUSC, and USC when e != 1", check_C2_6),
    Claim("E2.7", "Example 2.7", "local => GUSC", check_E2_7),
    Claim("P2.8", "Proposition 2.8", "local <=> GUSC+Id={0,1} <=> strongly clean+Id={0,1} <=> clean+Id={0,1} <=> GUC+Id={0,1} (exchange clause not independently checked)", check_P2_8),
    Claim("L2.9", "Lemma 2.9", "GUSC <=> local or USC", check_L2_9),
    Claim("C2.10", "Corollary 2.10", "GUSC => R/J(R) Boolean or division", check_C2_10),
    Claim("P0.2.3", "Proposition 0.2.3", "R abelian, I ideal inside J(R): R/I GUSC <=> R GUSC (I = J(R) included)", check_P0_2_3),
    Claim("L2.11", "Lemma 2.11", "GUSC => every n*1 lies in J(R) or U(R)", check_L2_11),
    Claim("E2.12", "Example 2.12", "M_n(R) is never GUSC for n >= 2; the displayed pair shows 1 is 2-good in M_2(R)", check_E2_12),
    Claim("E2.13", "Example 2.13", "T_n(R) GUSC => R GUSC; R commutative USC => T_n(R) GUSC", check_E2_13),
    Claim("P2.14", "Proposition 2.14", "R[x] is not GUSC for commutative R", out_of_scope_reason=INFINITE),
    Claim("P2.15", "Proposition 2.15", "GUSC => left and right quasi-duo", check_P2_15),
    Claim("P2.16", "Proposition 2.16", "R/J(R) GUSC <=> R/J(R) GUC", check_P2_16),
    Claim("C0.2.3", "Corollary 0.2.3", "J(R)=0: GUSC <=> GUC", check_C0_2_3),
    Claim("L2.17", "Lemma 2.17", "local => ucn(R) = ucn_0(R)", check_L2_17),
    Claim("L2.18", "Lemma 2.18", "USC => ucn(R) = ucn_0(R)", check_L2_18),
    Claim("L2.19", "Lemma 2.19", "GUSC => ucn(R) = ucn_0(R)", check_L2_19),
    Claim("P2.20", "Proposition 2.20", "GUSC => each non-unit a has a unique idempotent e with ea=ae and a-e in J(R)", check_P2_20),
    Claim("P2.21", "Proposition 2.21", "each non-unit a has a unique idempotent e with a-e in J(R) => GUC", check_P2_21),
    Claim("P2.22", "Proposition 2.22", "T(R,M) GUSC => R GUSC; converse when ex=xe for e in Id(R), x in M; then idempotents of T(R,M) are (e,0)", check_P2_22),
    Claim("P2.23", "Proposition 2.23", "I(R,M) GUSC => R GUSC; converse under (a) em=me and (b) m+n+mn=0 solvable", check_P2_23),
    Claim("P0.2.10", "Proposition 0.2.10", "R[A,B] GUSC <=> A, B GUSC", out_of_scope_reason=INFINITE),
    Claim("P3.1", "Proposition 3.1", "RG GUSC => R GUSC and G a p-group with p in J(R)", check_P3_1),
    Claim("P3.2", "Proposition 3.2", "R/J(R) = Z_2: RG GUSC <=> G a 2-group", check_P3_2),
    Claim("T3.3", "Theorem 3.3", "RG GUSC <=> R GUSC and G a p-group with p in J(R)", check_T3_3),
    Claim("C3.4", "Corollary 3.4", "G a nontrivial 2-group: RG GUSC <=> R GUSC and 2 in J(R)", check_C3_4),
    Claim("E3.5", "Example 3.5", "R Boolean, n >= 3 odd: RC_n is not GUSC, witnessed by 1+g^(n-1)", check_E3_5),
]

REGISTRY = {c.claim_id: c for c in CLAIMS}

P_GROUP_NOTE = ("p-groups are tested by element orders (every element has p-power order); "
                "the printed definition says 'every element is a power of p'")


def registry_self_test() -> list:
    """Problems with the registry; empty when every in-scope claim is executable."""
    problems = []
    for c in CLAIMS:
        if not c.locus:
            problems.append(f"{c.claim_id}: no locus")
        if c.checker is None and not c.out_of_scope_reason:
            problems.append(f"{c.claim_id}: no checker")
    if len(REGISTRY) != len(CLAIMS):
        problems.append("duplicate claim ids")
    return problems


def list_claims() -> list:
    return list(CLAIMS)


def verify_claim(claim_id: str, corpus: Corpus) -> ClaimReport:
    try:
        claim = REGISTRY[claim_id]
    except KeyError:
        raise RegistryError(f"unknown claim id {claim_id!r}; known: {', '.join(REGISTRY)}") from None
    if claim.checker is None:
        return ClaimReport(claim.claim_id, claim.locus, claim.statement, NOT_CHECKED,
                           note=claim.out_of_scope_reason, theorem_class=claim.theorem_class)
    if not len(corpus):
        raise RegistryError("empty corpus")
    run = _Run()
    claim.checker(corpus, run)
    rep = ClaimReport(claim.claim_id, claim.locus, claim.statement, VERIFIED, run.outcomes,
                      theorem_class=claim.theorem_class)
    if rep.violations:
        rep.status = REFUTED
    elif rep.skipped:
        rep.status = PARTIAL
    if rep.applicable == 0:
        rep.note = "0 applicable entries"
    if claim.claim_id.startswith(("P3.", "T3.", "C3.")):
        rep.note = (rep.note + "; " if rep.note else "") + P_GROUP_NOTE
    return rep


def scan_open_problem(corpus: Corpus) -> ClaimReport:
    """For semi-potent corpus rings, compare GUSC and GUC.  Disagreements are
    listed as candidate counterexamples (empirical evidence only)."""
    outcomes = []
    for entry in corpus:
        f = _fl(corpus, entry.ring)
        if not f["semipotent"]:
            continue
        agree = f["gusc"] == f["guc"]
        wit = None
        if not agree:
            wit = {"expression": entry.name, "semipotent": True, "gusc": f["gusc"], "guc": f["guc"],
                   "guc_witness": _flag_witness(corpus, entry.ring, "guc"),
                   "gusc_witness": _flag_witness(corpus, entry.ring, "gusc")}
        outcomes.append(RingOutcome(
            entry.name, "ok" if agree else "candidate",
            f"semipotent=True, GUSC={f['gusc']}, GUC={f['guc']}", wit,
        ))
    rep = ClaimReport("PROBLEM", "closing Problem", "semi-potent R: GUSC <=> GUC ?", EVIDENCE, outcomes)
    if not outcomes:
        rep.note = "no applicable rings"
    else:
        cands = [o.ring for o in outcomes if o.result == "candidate"]
        rep.note = (f"empirical evidence: {len(cands)} candidate counterexample(s): {', '.join(cands)}"
                    if cands else "empirical evidence: no disagreement found")
    return rep
