"""Command-line front end: ``ringlab classify|element|verify|scan-problem|axioms``.

Exit codes: 0 success, 1 a theorem-class claim was refuted, 2 usage, parse
or input error, 3 capacity exceeded.
"""

import argparse
import json
import sys

from . import __version__
from .cache import SCHEMA_VERSION, ReportCache, cache_key, default_cache_dir, dumps
from .clean import FLAG_ORDER, classify_ring, decompositions, element_clean_class
from .constructions import DEFAULT_ORDER_CAP
from .errors import AxiomError, CapacityError, DomainError, RegistryError, RingLabError
from .expr import evaluate, parse_ring_expr, render
from .ring import read_ring_tables, verify_ring_axioms
from .structure import DEFAULT_IDEAL_CAP

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_globals(p, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--format", choices=("text", "json"), default=d("text"))
    p.add_argument("--cap", type=int, default=d(DEFAULT_ORDER_CAP), help="largest ring order to construct")
    p.add_argument("--ideal-cap", type=int, default=d(DEFAULT_IDEAL_CAP),
                   help="largest order for ideal-lattice enumeration")
    p.add_argument("--cache-dir", default=d(None), help="report cache (default $RINGLAB_CACHE or ./.ringlab-cache)")
    p.add_argument("--no-cache", action="store_true", default=d(False))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ringlab", description="Clean-element hierarchy for finite rings.")
    parser.add_argument("--version", action="version", version=f"ringlab {__version__}")
    _add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="classify a ring expression")
    p.add_argument("expr")
    p = sub.add_parser("element", help="clean decompositions of one element")
    p.add_argument("expr")
    p.add_argument("ordinal", type=int)
    p = sub.add_parser("verify", help="verify a registered claim, or all of them")
    p.add_argument("claim", nargs="?")
    p.add_argument("--list", action="store_true", help="list registered claims")
    sub.add_parser("scan-problem", help="GUSC vs GUC on semi-potent corpus rings")
    p = sub.add_parser("axioms", help="check ring axioms of a raw-table file")
    p.add_argument("table_file")
    for p in sub.choices.values():
        _add_globals(p, suppress=True)
    return parser


# -- payloads ------------------------------------------------------------------


def _caps(args) -> dict:
    return {"order": args.cap, "ideal": args.ideal_cap}


def _cached(args, command, subject, compute):
    cache = None if args.no_cache else ReportCache(args.cache_dir or default_cache_dir())
    key = cache_key(command, subject, _caps(args))
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    payload = json.loads(dumps(compute()))  # normalise tuples and key order
    if cache is not None:
        cache.put(key, payload)
    return payload


def classify_payload(expr: str, cap: int, ideal_cap: int) -> dict:
    node = parse_ring_expr(expr)
    R = evaluate(node, cap)
    rep = classify_ring(R, ideal_cap).to_json_dict()
    rep["expression"] = render(node)
    return {"schema_version": SCHEMA_VERSION, "command": "classify",
            "caps": {"order": cap, "ideal": ideal_cap}, **rep}


def element_payload(expr: str, ordinal: int, cap: int) -> dict:
    node = parse_ring_expr(expr)
    R = evaluate(node, cap)
    if not 0 <= ordinal < R.order:
        raise DomainError(f"ordinal {ordinal} out of range for a ring of order {R.order}")
    cls = element_clean_class(R, ordinal)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "element",
        "expression": render(node),
        "order": R.order,
        "element_ordinal": ordinal,
        "element_label": R.label(ordinal),
        "unit": ordinal in R.units,
        "class": {
            "clean": cls.clean, "strongly_clean": cls.strongly_clean,
            "uniquely_clean": cls.uniquely_clean, "usc": cls.usc,
            "clean_count": cls.clean_count, "strongly_clean_count": cls.strongly_clean_count,
        },
        "decompositions": [d.to_dict(R) for d in decompositions(R, ordinal)],
    }


def verify_payload(claim: str, cap: int, ideal_cap: int) -> dict:
    from .harness import REGISTRY, default_corpus, verify_claim

    corpus = default_corpus(cap, ideal_cap)
    ids = list(REGISTRY) if claim == "all" else [claim]
    reports = [verify_claim(cid, corpus).to_json_dict() for cid in ids]
    refuted = [r["claim_id"] for r in reports if r["status"] == "refuted" and r["theorem_class"]]
    return {"schema_version": SCHEMA_VERSION, "command": "verify", "caps": {"order": cap, "ideal": ideal_cap},
            "corpus_size": len(corpus), "claims": reports, "refuted_theorem_class": refuted}


def scan_payload(cap: int, ideal_cap: int) -> dict:
    from .harness import default_corpus, scan_open_problem

    rep = scan_open_problem(default_corpus(cap, ideal_cap)).to_json_dict()
    return {"schema_version": SCHEMA_VERSION, "command": "scan-problem",
            "caps": {"order": cap, "ideal": ideal_cap}, **rep}


def axioms_payload(path: str) -> dict:
    try:
        R = read_ring_tables(path)
        rep = verify_ring_axioms(R.add, R.mul)
    except AxiomError as exc:
        rep = exc.report
    return {
        "schema_version": SCHEMA_VERSION, "command": "axioms", "source": path,
        "ok": rep.ok, "axiom": rep.axiom,
        "witness": None if rep.witness is None else [int(v) for v in rep.witness],
        "zero": rep.zero, "one": rep.one,
    }


# -- text rendering ----------------------------------------------------------


def _b(v) -> str:
    return {True: "true", False: "false", None: "n/a"}[v]


def _decomp_line(d) -> str:
    kind = "strongly clean" if d["strongly"] else "clean"
    return f"e={d['e']} {d['e_label']}  u={d['u']} {d['u_label']}  ({kind})"


def text_classify(p) -> str:
    out = [f"{p['expression']}  (order {p['order']})", "flags:"]
    out += [f"  {k:<26} {_b(p['flags'][k])}" for k in FLAG_ORDER]
    out.append("counts:")
    out += [f"  {k:<26} {v}" for k, v in p["counts"].items()]
    if p["witnesses"]:
        out.append("witnesses:")
    for w in p["witnesses"]:
        line = f"  {w['flag']}: element {w['element_ordinal']} {w['element_label']}"
        if w.get("note"):
            line += f"  [{w['note']}]"
        if w.get("related"):
            line += "  related: " + ", ".join(f"{r['ordinal']} {r['label']}" for r in w["related"])
        out.append(line)
        if w["decompositions"]:
            out += [f"      {_decomp_line(d)}" for d in w["decompositions"]]
        elif w["flag"] in ("clean", "strongly_clean", "uniquely_clean", "usc", "guc", "gusc"):
            out.append("      no decomposition")
    pair = p["details"].get("identity_two_good_pair")
    if pair:
        out.append(f"1 = {pair[0]['label']} + {pair[1]['label']} (units)")
    if p["diagram_violations"]:
        out.append("DIAGRAM VIOLATIONS: " + "; ".join(p["diagram_violations"]))
    return "\n".join(out)


def text_element(p) -> str:
    c = p["class"]
    out = [f"{p['expression']}: element {p['element_ordinal']} {p['element_label']}"
           f"  ({'unit' if p['unit'] else 'non-unit'})"]
    out += [f"  {k:<22} {_b(v) if isinstance(v, bool) else v}" for k, v in c.items()]
    out.append("decompositions:")
    out += [f"  {_decomp_line(d)}" for d in p["decompositions"]] or ["  none"]
    return "\n".join(out)


def _short(w) -> str:
    return json.dumps(w, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def text_claim(r) -> str:
    head = (f"{r['claim_id']:<8} {r['status']:<18} applicable={r['applicable']} "
            f"violations={r['violations']} skipped={r['skipped']}  [{r['locus']}]")
    out = [head, f"  {r['statement']}"]
    if r["note"]:
        out.append(f"  note: {r['note']}")
    if r["outcomes"]:
        width = max(len(o["ring"]) for o in r["outcomes"])
        for o in r["outcomes"]:
            out.append(f"  {o['ring']:<{width}}  {o['result']:<9}  {o['detail']}")
            if o["result"] in ("violation", "candidate") and o.get("witness") is not None:
                out.append(f"  {'':<{width}}  witness: {_short(o['witness'])}")
    return "\n".join(out)


def text_verify(p) -> str:
    blocks = [text_claim(r) for r in p["claims"]]
    summary = f"{len(p['claims'])} claim(s) over {p['corpus_size']} corpus rings"
    if p["refuted_theorem_class"]:
        summary += "; refuted theorem-class: " + ", ".join(p["refuted_theorem_class"])
    return "\n\n".join(blocks + [summary])


def text_axioms(p) -> str:
    if p["ok"]:
        return f"{p['source']}: ring axioms hold (zero {p['zero']}, one {p['one']})"
    return f"{p['source']}: {p['axiom']} fails at {p['witness']}"


def text_list():
    from .harness import CLAIMS

    return "\n".join(
        f"{c.claim_id:<8} {'theorem' if c.theorem_class else '':<8} {c.locus:<42} "
        f"{c.out_of_scope_reason or c.statement}"
        for c in CLAIMS
    )


# -- entry point ---------------------------------------------------------------


def _emit(args, payload, text_fn):
    if args.format == "json":
        sys.stdout.write(dumps(payload))
    else:
        sys.stdout.write(text_fn(payload) + "\n")


def _error(args, exc, code) -> int:
    kind = getattr(exc, "kind", "error")
    if getattr(args, "format", "text") == "json":
        err = {"kind": kind, "message": str(exc)}
        for attr in ("position", "reason", "dropped"):
            if hasattr(exc, attr):
                err[attr] = getattr(exc, attr)
        if hasattr(exc, "expected"):
            err["expected"] = sorted(exc.expected)
        sys.stdout.write(dumps({"schema_version": SCHEMA_VERSION, "error": err}))
    else:
        sys.stderr.write(f"ringlab: {kind}: {exc}\n")
    return code


def run_command(argv) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "classify":
            expr = render(parse_ring_expr(args.expr))
            payload = _cached(args, "classify", expr, lambda: classify_payload(expr, args.cap, args.ideal_cap))
            _emit(args, payload, text_classify)
        elif args.command == "element":
            _emit(args, element_payload(args.expr, args.ordinal, args.cap), text_element)
        elif args.command == "verify":
            if args.list:
                from .harness import CLAIMS

                if args.format == "json":
                    sys.stdout.write(dumps({"schema_version": SCHEMA_VERSION, "claims": [
                        {"claim_id": c.claim_id, "locus": c.locus, "statement": c.statement,
                         "theorem_class": c.theorem_class, "in_scope": c.checker is not None,
                         "note": c.out_of_scope_reason} for c in CLAIMS]}))
                else:
                    sys.stdout.write(text_list() + "\n")
                return EXIT_OK
            if not args.claim:
                raise DomainError("verify needs a claim id, 'all', or --list")
            from .harness import REGISTRY

            if args.claim != "all" and args.claim not in REGISTRY:
                raise RegistryError(f"unknown claim id {args.claim!r} (see 'ringlab verify --list')")
            payload = _cached(args, "verify", args.claim, lambda: verify_payload(args.claim, args.cap, args.ideal_cap))
            _emit(args, payload, text_verify)
            if payload["refuted_theorem_class"]:
                return EXIT_REFUTED
        elif args.command == "scan-problem":
            payload = _cached(args, "scan-problem", "", lambda: scan_payload(args.cap, args.ideal_cap))
            _emit(args, payload, text_claim)
        elif args.command == "axioms":
            payload = axioms_payload(args.table_file)
            _emit(args, payload, text_axioms)
            if not payload["ok"]:
                return EXIT_USAGE
    except CapacityError as exc:
        return _error(args, exc, EXIT_CAPACITY)
    except OSError as exc:
        exc.kind = "io"
        return _error(args, exc, EXIT_USAGE)
    except RingLabError as exc:
        return _error(args, exc, EXIT_USAGE)
    return EXIT_OK


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
