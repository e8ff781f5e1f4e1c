"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json] [EXPR ...]

Each operation runs on a freshly built ring so cached properties do not
leak between repetitions; the best of N runs is reported.
"""

import argparse
import json
import time

from ringlab import kernels
from ringlab.clean import classify_ring, clean_counts
from ringlab.expr import evaluate, parse_ring_expr
from ringlab.ring import verify_ring_axioms
from ringlab.structure import jacobson_radical

DEFAULT_EXPRS = ["T(2,Z4)", "M(2,Z3)", "GR(Z2,C8)", "T(3,Z2)xZ5", "GR(Z4,C2*C2)", "M(2,Z4)"]

OPERATIONS = {
    "build": lambda node, R: evaluate(node),
    "axioms": lambda node, R: verify_ring_axioms(R.add, R.mul),
    "clean_counts": lambda node, R: clean_counts(R),
    "radical": lambda node, R: jacobson_radical(R),
    "classify": lambda node, R: classify_ring(R),
}


def best_of(fn, node, repeat):
    best = float("inf")
    for _ in range(repeat):
        R = evaluate(node)
        t0 = time.perf_counter()
        fn(node, R)
        best = min(best, time.perf_counter() - t0)
    return best


def run(exprs, repeat):
    rows = []
    for text in exprs:
        node = parse_ring_expr(text)
        for op, fn in OPERATIONS.items():
            times = {}
            for name in sorted(kernels.BACKENDS):
                with kernels.use_backend(name):
                    times[name] = best_of(fn, node, repeat)
            rows.append({"expression": text, "order": evaluate(node).order, "operation": op, "seconds": times})
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("exprs", nargs="*", default=DEFAULT_EXPRS)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)
    if len(kernels.BACKENDS) < 2:
        print(f"only the {kernels.BACKEND} backend is available; build the extension to compare")
    rows = run(args.exprs, args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    names = sorted(kernels.BACKENDS)
    print(f"{'expression':<16}{'order':>6}  {'operation':<13}" + "".join(f"{n + ' ms':>13}" for n in names) + "   speedup")
    for r in rows:
        t = r["seconds"]
        cells = "".join(f"{t[n] * 1e3:>13.2f}" for n in names)
        speed = ""
        if "compiled" in t and "python" in t and t["compiled"] > 0:
            speed = f"{t['python'] / t['compiled']:>9.1f}x"
        print(f"{r['expression']:<16}{r['order']:>6}  {r['operation']:<13}{cells}{speed}")


if __name__ == "__main__":
    main()
