"""Compare the compiled kernel extension against the pure-Python fallback.

Runs the hot numerical kernels (Bessel K, survival function with adaptive
quadrature) and one end-to-end optimization in each backend, in separate
interpreters so the import-time backend choice applies cleanly.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import json
import os
import subprocess
import sys

_PROBE = r'''
import json, time
import cachenoma
from cachenoma.backend import bessel_k, sf_w

def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best

def bench_bessel():
    for i in range(2000):
        bessel_k(1.0 + (i % 7) * 0.5, 0.01 + i * 0.01)

def bench_survival():
    for i in range(500):
        sf_w(0.01 + i * 0.01, 1.0, 1.0, 0.25)

def bench_optimize():
    from cachenoma.config import load_config
    from cachenoma.caching import CacheCase
    from cachenoma.optimizer import optimize_case
    sc = load_config().scenario
    for case in (CacheCase.A, CacheCase.D):
        optimize_case(case, sc)

repeat = int(__import__("sys").argv[1])
print(json.dumps({
    "backend": cachenoma.active_backend(),
    "bessel_2000": timeit(bench_bessel, repeat),
    "survival_500": timeit(bench_survival, repeat),
    "optimize_a_d": timeit(bench_optimize, repeat),
}))
'''


def run_backend(backend, repeat):
    env = dict(os.environ, CACHENOMA_BACKEND=backend)
    proc = subprocess.run([sys.executable, "-c", _PROBE, str(repeat)],
                          env=env, capture_output=True, text=True)
    if proc.returncode != 0:
        raise RuntimeError(f"backend {backend!r} failed:\n{proc.stderr}")
    return json.loads(proc.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions, best-of (default 3)")
    args = parser.parse_args()

    results = []
    for backend in ("c", "py"):
        try:
            results.append(run_backend(backend, args.repeat))
        except RuntimeError as exc:
            print(f"skipping backend {backend!r}: {exc}", file=sys.stderr)
    if not results:
        print("no backend available", file=sys.stderr)
        return 1

    keys = ("bessel_2000", "survival_500", "optimize_a_d")
    header = f"{'benchmark':<14}" + "".join(f"{r['backend']:>12}" for r in results)
    if len(results) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for key in keys:
        row = f"{key:<14}" + "".join(f"{r[key] * 1e3:>10.2f}ms" for r in results)
        if len(results) == 2:
            row += f"{results[1][key] / results[0][key]:>9.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
