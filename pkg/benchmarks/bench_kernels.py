"""Compare the compiled and pure-Python enumeration kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--json]

Each workload runs under both backends; the script checks the outputs are
identical before reporting timings.
"""
import argparse
import json
import random
import sys
import time

from ldegeom import Instance, Solution, hilbert_basis, kernels
from ldegeom.hilbert import sub_solutions


def workloads():
    rng = random.Random(1)
    mixed = [
        Instance(tuple(rng.randint(1, 12) for _ in range(rng.randint(1, 3))),
                 tuple(rng.randint(1, 12) for _ in range(rng.randint(1, 3))))
        for _ in range(40)
    ]
    return [
        ("hilbert, 40 random n,m<=3 coef<=12", lambda: [hilbert_basis(i) for i in mixed]),
        ("hilbert a=(23,17,11) b=(19,13,7)", lambda: hilbert_basis(Instance((23, 17, 11), (19, 13, 7)))),
        ("hilbert a=(9,8,7,5) b=(6,4)", lambda: hilbert_basis(Instance((9, 8, 7, 5), (6, 4)))),
        ("sub-solutions of 6*((2),(2,1,1))",
         lambda: sub_solutions(Instance((6,), (2, 3, 5)), Solution((12,), (12, 6, 6)))),
    ]


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print machine-readable results")
    args = ap.parse_args(argv)

    if not kernels.HAVE_COMPILED:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    rows = []
    for name, fn in workloads():
        timings = {}
        outputs = {}
        for backend in ("python", "compiled"):
            prev = kernels.use_backend(backend)
            try:
                timings[backend], outputs[backend] = best_of(fn, args.repeat)
            finally:
                kernels.use_backend(prev)
        if outputs["python"] != outputs["compiled"]:
            print(f"backends disagree on {name}", file=sys.stderr)
            return 2
        rows.append({
            "workload": name,
            "python_s": timings["python"],
            "compiled_s": timings["compiled"],
            "speedup": timings["python"] / timings["compiled"],
        })
    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        width = max(len(r["workload"]) for r in rows)
        print(f"{'workload':<{width}}  {'python':>9}  {'compiled':>9}  speedup")
        for r in rows:
            print(f"{r['workload']:<{width}}  {r['python_s']:9.4f}  {r['compiled_s']:9.4f}  {r['speedup']:6.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
