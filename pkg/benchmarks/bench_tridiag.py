"""Time the compiled Householder kernels against the numpy fallback.

The backend is fixed at import time, so each measurement runs in a child
process with DBMTRI_FORCE_BACKEND set.  The parent prints per-size timings
for both backends, the speedup, and a cross-backend agreement check on an
identical seeded input.

Usage:
    python3 benchmarks/bench_tridiag.py [--sizes 100 200 400] [--repeats 5]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def child(sizes, repeats: int) -> None:
    import numpy as np

    from dbmtri import backend_name, gbe_sample_stationary, tridiagonalize
    from dbmtri.spectral import EigenRequest, eigs_extreme

    out = {"backend": backend_name(), "tridiag": {}, "eig": {}}
    for n in sizes:
        a = gbe_sample_stationary(n, 1, 42)
        best = float("inf")
        for _ in range(repeats):
            work = a.copy()
            t0 = time.perf_counter()
            t = tridiagonalize(work)
            best = min(best, time.perf_counter() - t0)
        out["tridiag"][str(n)] = best
        if n == sizes[-1]:
            # agreement probe: same input on both backends must give the
            # same tridiagonal to rounding
            out["diag_sum"] = float(np.sum(t.diag))
            out["offdiag_sum"] = float(np.sum(t.offdiag))

    big = tridiagonalize(gbe_sample_stationary(sizes[-1], 1, 7))
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        eigs_extreme(EigenRequest(big, how_many=2, which="largest"))
        best = min(best, time.perf_counter() - t0)
    out["eig"][str(sizes[-1])] = best
    print(json.dumps(out))


def run_backend(force: str, sizes, repeats: int) -> dict:
    env = dict(os.environ, DBMTRI_FORCE_BACKEND=force)
    argv = [sys.executable, __file__, "--child", "--repeats", str(repeats), "--sizes"]
    argv += [str(n) for n in sizes]
    proc = subprocess.run(argv, env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout.splitlines()[-1])


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 200, 400])
    ap.add_argument("--repeats", type=int, default=5)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args(argv)

    if args.child:
        child(args.sizes, args.repeats)
        return 0

    try:
        cy = run_backend("cy", args.sizes, args.repeats)
    except subprocess.CalledProcessError:
        print("compiled backend unavailable; timing the fallback only")
        cy = None
    py = run_backend("py", args.sizes, args.repeats)

    print(f"{'kernel':<18}{'numpy':>12}{'cython':>12}{'speedup':>10}")
    for n in args.sizes:
        tpy = py["tridiag"][str(n)]
        if cy is None:
            print(f"tridiagonalize {n:>4}{tpy * 1e3:>10.2f}ms{'-':>12}{'-':>10}")
        else:
            tcy = cy["tridiag"][str(n)]
            print(f"tridiagonalize {n:>4}{tpy * 1e3:>10.2f}ms{tcy * 1e3:>10.2f}ms{tpy / tcy:>9.1f}x")
    n = str(args.sizes[-1])
    if cy is not None:
        tpy, tcy = py["eig"][n], cy["eig"][n]
        print(f"eigs_extreme  {n:>5}{tpy * 1e3:>10.2f}ms{tcy * 1e3:>10.2f}ms{tpy / tcy:>9.1f}x")
        for key in ("diag_sum", "offdiag_sum"):
            gap = abs(py[key] - cy[key])
            tag = "ok" if gap <= 1e-9 else "MISMATCH"
            print(f"agreement {key}: |numpy - cython| = {gap:.2e} [{tag}]")
    else:
        print(f"eigs_extreme  {n:>5}{py['eig'][n] * 1e3:>10.2f}ms")
    return 0


if __name__ == "__main__":
    sys.exit(main())
