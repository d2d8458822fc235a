"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--skip-end-to-end]

Kernel rows call both backends on identical inputs in this process. The
end-to-end rows run a workload in a child process with and without
IRNG_PURE_PYTHON=1, so the whole library uses one backend at a time.
"""

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from irng import _pykernel, catalog

try:
    from irng import _ckernel
except ImportError:
    _ckernel = None

END_TO_END = {
    "BFS of EL_3(Z/4)": "from irng import catalog\n"
                        "from irng.elgroup import generate_group\n"
                        "assert generate_group(catalog.cyclic_rng(4, 1), 3).order == 43008\n",
    "weight of aug3_s3": "from irng import catalog\n"
                         "from irng.ideals import weight_exact\n"
                         "print(weight_exact(catalog.get('aug3_s3')))\n",
    "cor6 on aug2_a4": "from irng import catalog\n"
                       "from irng.constructions import single_generator_finite_irng\n"
                       "assert single_generator_finite_irng(catalog.get('aug2_a4'))[1].ok\n",
}


def _best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def kernel_rows(repeat):
    R = catalog.get("aug2_a4")  # rank 11 over Z/2
    rnd = random.Random(0)
    vecs = [tuple(rnd.randrange(d) for d in R.factors) for _ in range(2000)]
    k4 = catalog.cyclic_rng(4, 1)
    n = 3
    mats = [tuple(rnd.randrange(4) for _ in range(n * n)) for _ in range(2000)]

    def mul_job(mod):
        K = mod.RngKernel(R.factors, R.constants)
        return lambda: [K.mul(x, y) for x, y in zip(vecs, reversed(vecs))]

    def el_job(mod):
        K = mod.RngKernel(k4.factors, k4.constants)
        return lambda: [K.el_mul(a, b, n) for a, b in zip(mats, reversed(mats))]

    def lattice_job(mod):
        def run():
            L = mod.Lattice(R.factors)
            for v in vecs[:400]:
                L.add(v)
                L.contains(v)
        return run

    rows = []
    for label, job in (("bilinear mul x2000 (rank 11)", mul_job),
                       ("el_mul x2000 (n = 3 over Z/4)", el_job),
                       ("lattice add+contains x400", lattice_job)):
        py = _best(job(_pykernel), repeat)
        c = _best(job(_ckernel), repeat) if _ckernel else None
        rows.append((label, py, c))
    return rows


def end_to_end_rows(repeat):
    rows = []
    for label, code in END_TO_END.items():
        times = {}
        for backend, flag in (("python", "1"), ("cython", "0")):
            env = dict(os.environ, IRNG_PURE_PYTHON=flag)
            best = None
            for _ in range(repeat):
                t0 = time.perf_counter()
                subprocess.run([sys.executable, "-c", code], env=env, check=True,
                               stdout=subprocess.DEVNULL)
                dt = time.perf_counter() - t0
                best = dt if best is None else min(best, dt)
            times[backend] = best
        rows.append((label, times["python"], times["cython"] if _ckernel else None))
    return rows


def show(title, rows):
    print(title)
    print(f"  {'workload':34s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for label, py, c in rows:
        cs = f"{c:9.4f}s" if c is not None else "       n/a"
        sp = f"{py / c:7.1f}x" if c else "     n/a"
        print(f"  {label:34s} {py:9.4f}s {cs} {sp}")


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--skip-end-to-end", action="store_true")
    args = p.parse_args(argv)
    if _ckernel is None:
        print("compiled kernel not built; only the Python column is filled")
    show("kernels (in process)", kernel_rows(args.repeat))
    if not args.skip_end_to_end:
        show("end to end (child process, includes interpreter start)",
             end_to_end_rows(args.repeat))


if __name__ == "__main__":
    main()
