"""Time the compiled kernels against the pure-Python twins.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one JSON line per (kernel, backend) with the best wall time, plus the
speedup when both backends are importable.  Results are cross-checked so a
fast but wrong kernel cannot look good.
"""

import argparse
import array
import json
import random
import sys
import timeit

from bgs_forge import _kernels
from bgs_forge.machine import decode_machine


def _tm_workload():
    rng = random.Random(7)
    jobs = []
    for _ in range(2000):
        m = decode_machine(rng.randrange(10**9))
        bits = "".join(rng.choice("01") for _ in range(rng.randrange(12)))
        jobs.append((m.flat_table, bits))
    return jobs


def _tree_census(mod, n, cutoff):
    # a stripped copy of the tree walk, parameterised by backend
    first = _kernels.beaver_options(n, True)
    other = _kernels.beaver_options(n, False)
    per = 4 * n + 1
    halted = unresolved = sigma = 0
    stack = [array.array("q", [-2] * (2 * n))]
    while stack:
        t = stack.pop()
        status, steps, ones, slot = mod.run_beaver(t, cutoff)
        if status == _kernels.UNDEFINED:
            for opt in first if slot == 0 else other:
                c = array.array("q", t)
                c[slot] = opt
                stack.append(c)
        elif status == _kernels.HALTED:
            halted += per ** t.count(-2)
            sigma = max(sigma, ones)
        else:
            unresolved += per ** t.count(-2)
    return sigma, halted, unresolved


CASES = {
    "run_tm x2000 (budget 2000)": lambda mod, jobs: [mod.run_tm(t, b, 2000) for t, b in jobs],
    "tree census n=3 cutoff 300": lambda mod, _: _tree_census(mod, 3, 300),
    "brute census n=2 cutoff 1000": lambda mod, _: mod.brute_census(2, 1000, True),
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = _kernels.backends()
    if "native" not in backends:
        print("compiled extension not built; timing the pure backend only", file=sys.stderr)
    jobs = _tm_workload()
    for name, fn in CASES.items():
        times, results = {}, {}
        for label, mod in sorted(backends.items()):
            results[label] = fn(mod, jobs)
            times[label] = min(timeit.repeat(lambda: fn(mod, jobs), number=1, repeat=args.repeat))
        if len(results) > 1 and len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {name}")
        row = {"kernel": name, **{f"{k}_s": round(v, 4) for k, v in times.items()}}
        if "native" in times:
            row["speedup"] = round(times["python"] / times["native"], 1)
        print(json.dumps(row))


if __name__ == "__main__":
    main()
