"""Compare the compiled and numpy box-search backends.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from k3moduli import intmat, kernels
from k3moduli.named import box_bounds, make, rho_on_L_minus

CASES = [
    ("D4 roots", "D4", -2),
    ("E6 roots", "E6", -2),
    ("E7 roots", "E7", -2),
    ("E8 roots", "E8", -2),
    ("D4^2 norm -4", "D4^2", -4),
]


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["numpy"] + (["compiled"] if kernels._compiled is not None else [])
    print(f"{'case':<16}{'hits':>8}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for label, expr, target in CASES:
        lat = make(expr)
        gram, bounds = lat.gram, box_bounds(lat, target)
        times, hits = {}, set()
        for b in backends:
            t, res = _time(lambda: kernels.box_search(gram, bounds, target, backend=b), args.repeat)
            times[b] = t
            hits.add(len(res))
        if len(hits) != 1:
            raise SystemExit(f"{label}: backends disagree ({hits})")
        speed = f"{times['numpy'] / times['compiled']:9.1f}x" if "compiled" in times else "       n/a"
        print(f"{label:<16}{hits.pop():>8}" + "".join(f"{times[b]:>11.4f}s" for b in backends) + speed)

    # every rho-isotropic vector of L- in the unit box, two quadratic constraints at once
    rho = rho_on_L_minus()
    g = rho.host.gram
    gr = intmat.matmul(g, rho.matrix)
    sym2 = [[gr[i][j] + gr[j][i] for j in range(len(g))] for i in range(len(g))]
    times, hits = {}, set()
    for b in backends:
        t, res = _time(lambda: kernels.box_search(g, 1, 0, gram2=sym2, target2=0, backend=b), args.repeat)
        times[b] = t
        hits.add(len(res))
    if len(hits) != 1:
        raise SystemExit(f"isotropic: backends disagree ({hits})")
    speed = f"{times['numpy'] / times['compiled']:9.1f}x" if "compiled" in times else "       n/a"
    print(f"{'L- isotropic':<16}{hits.pop():>8}" + "".join(f"{times[b]:>11.4f}s" for b in backends) + speed)


if __name__ == "__main__":
    main()
