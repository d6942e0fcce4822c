"""Compare the pure-Python and compiled residue-table kernels.

Two views: the kernels head to head on fixed workloads, and a few
end-to-end searches run in subprocesses with the backend pinned via
SEMIGROUP_FORGE_BACKEND.  Times are best-of-N wall clock.
"""
from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

from semigroup_forge import _kernel_py

try:
    from semigroup_forge import _kernel
except ImportError:
    _kernel = None


def _workloads(seed: int = 5):
    rng = random.Random(seed)
    out = []
    for m in (50, 200, 800, 2500):
        gens = sorted(set(rng.sample(range(m + 1, 12 * m), 5) + [m]))
        out.append((m, gens))
    return out


def _best_of(repeat: int, fn) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(repeat: int) -> None:
    print("residue_table + minimal_residues, best of", repeat)
    header = f"{'workload':>16}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}"
    print(header, flush=True)
    print("-" * len(header), flush=True)
    for m, gens in _workloads():
        def run(mod):
            coeffs = mod.residue_table(m, gens)
            mod.minimal_residues(m, coeffs)

        pure = _best_of(repeat, lambda: run(_kernel_py))
        label = f"m={m} e={len(gens)}"
        if _kernel is None:
            print(
                f"{label:>16}  {pure * 1e3:>8.2f}ms  {'absent':>10}  {'':>8}",
                flush=True,
            )
            continue
        comp = _best_of(repeat, lambda: run(_kernel))
        print(
            f"{label:>16}  {pure * 1e3:>8.2f}ms  {comp * 1e3:>8.2f}ms  "
            f"{pure / comp:>7.1f}x",
            flush=True,
        )


END_TO_END = [
    ("min_frobenius(10,4)", "from semigroup_forge.search import min_frobenius;"
     "min_frobenius(10, 4)"),
    ("min_frobenius(12,5)", "from semigroup_forge.search import min_frobenius;"
     "min_frobenius(12, 5)"),
    ("min_genus_packed(30,5)", "from semigroup_forge.search import min_genus_packed;"
     "min_genus_packed(30, 5)"),
]


def bench_end_to_end(repeat: int) -> None:
    backends = ["pure"] + (["compiled"] if _kernel is not None else [])
    print()
    print("end-to-end searches (subprocess per run, import time excluded), best of", repeat)
    header = f"{'task':>22}  " + "  ".join(f"{b:>10}" for b in backends)
    print(header, flush=True)
    print("-" * len(header), flush=True)
    for label, code in END_TO_END:
        times = []
        for backend in backends:
            env = dict(os.environ, SEMIGROUP_FORGE_BACKEND=backend)
            script = (
                "import time; import semigroup_forge; t0=time.perf_counter();"
                f"{code};print(time.perf_counter()-t0)"
            )
            best = float("inf")
            for _ in range(repeat):
                proc = subprocess.run(
                    [sys.executable, "-c", script],
                    capture_output=True,
                    text=True,
                    env=env,
                    check=True,
                )
                best = min(best, float(proc.stdout.strip().splitlines()[-1]))
            times.append(best)
        print(
            f"{label:>22}  " + "  ".join(f"{t * 1e3:>8.1f}ms" for t in times),
            flush=True,
        )


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5, help="best-of repetitions")
    parser.add_argument(
        "--skip-end-to-end", action="store_true", help="kernel microbenchmarks only"
    )
    ns = parser.parse_args(argv)
    if _kernel is None:
        print("note: compiled kernel not built; showing pure timings only")
    bench_kernels(ns.repeat)
    if not ns.skip_end_to_end:
        bench_end_to_end(ns.repeat)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
