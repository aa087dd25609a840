"""Compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--skip-end-to-end]

Each kernel runs on the same random big-integer inputs under both backends;
the end-to-end row times one fixture through the CLI with DDECOMP_PURE unset
and set.
"""

import argparse
import os
import random
import subprocess
import sys
import timeit
from pathlib import Path

from ddecomp import _pykernels

try:
    from ddecomp import _ckernels
except ImportError:
    _ckernels = None

ROOT = Path(__file__).resolve().parent.parent


def _poly(rng, n, bits):
    return [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(n)] + [rng.randint(1, 9)]


def cases(rng):
    a, b = _poly(rng, 60, 200), _poly(rng, 40, 200)
    sq = [[rng.randint(-99, 99) for _ in range(14)] for _ in range(14)]
    D = 12
    grid = [[rng.randint(-999, 999) for _ in range(D + 1 - i)] for i in range(D + 1)]
    desc = _poly(rng, 30, 64)
    return [
        ("mul", "mul", (a, b)),
        ("prem", "prem", (a, b)),
        ("bareiss 14x14", "bareiss_det", (sq,)),
        ("line_restrict deg 12", "line_restrict", (grid, 3, -7, 5, 2, 11)),
        ("taylor_shift1", "taylor_shift1", (desc,)),
        ("descartes_01", "descartes_01", (desc,)),
    ]


def bench_kernels(repeat):
    rng = random.Random(1)
    print(f"{'kernel':24s} {'pure ms':>10s} {'compiled ms':>12s} {'speedup':>8s}")
    for label, name, args in cases(rng):
        row = []
        for mod in (_pykernels, _ckernels):
            if mod is None:
                row.append(None)
                continue
            fn = getattr(mod, name)
            n = 20
            t = min(timeit.repeat(lambda: fn(*args), number=n, repeat=repeat)) / n
            row.append(t * 1e3)
        if _ckernels is not None:
            assert getattr(_pykernels, name)(*args) == getattr(_ckernels, name)(*args)
        py, cy = row
        cy_s = f"{cy:12.3f}" if cy is not None else f"{'n/a':>12s}"
        sp = f"{py / cy:7.1f}x" if cy else f"{'n/a':>8s}"
        print(f"{label:24s} {py:10.3f} {cy_s} {sp}")


def bench_end_to_end(example):
    path = ROOT / "fixtures" / example
    print(f"\nend to end: ddecomp analyze {path.name}")
    for label, pure in (("compiled", False), ("pure", True)):
        env = dict(os.environ)
        env.pop("DDECOMP_PURE", None)
        if pure:
            env["DDECOMP_PURE"] = "1"
        code = ("import time, sys; from ddecomp.cli.main import main; t=time.perf_counter(); "
                f"main(['analyze', {str(path)!r}, '--json', '/dev/null']); "
                "print(time.perf_counter()-t, file=sys.stderr)")
        res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                             text=True, check=True)
        print(f"  {label:9s} {float(res.stderr.strip().splitlines()[-1]):8.2f} s")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--example", default="example3.txt")
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the pure backend is timed")
    bench_kernels(args.repeat)
    if not args.skip_end_to_end:
        bench_end_to_end(args.example)


if __name__ == "__main__":
    main()
