"""Time the compiled and pure-Python group-scan kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import itertools
import timeit
from array import array

from rootableaux import _pykernels
from rootableaux.roots import _signed_perms, build_root_system, kernel_roots
from rootableaux.shapes import zero_and_one_sets

try:
    from rootableaux import _ckernels
except ImportError:
    _ckernels = None

CASES = [("A", 6), ("B", 5), ("C", 5), ("D", 6)]


def inputs(family: str, rank: int):
    R = build_root_system(family, rank)
    n = R.ambient_dim
    flat = array("q", itertools.chain.from_iterable(_signed_perms(family, n)))
    roots = kernel_roots(R)
    masks = _pykernels.inversion_masks(flat, n, roots)
    gamma = R.weight_from_pairings([1] * rank)
    Z, P = zero_and_one_sets(R, gamma)
    return R, n, flat, roots, masks, R.mask(Z), R.mask(P)


def best(stmt, repeat: int) -> float:
    return min(timeit.repeat(stmt, number=1, repeat=repeat))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", _pykernels)] + ([("compiled", _ckernels)] if _ckernels else [])
    print(f"{'system':8} {'kernel':16} " + " ".join(f"{b:>10}" for b, _ in backends) + "   speedup")
    for family, rank in CASES:
        R, n, flat, roots, masks, z, p = inputs(family, rank)
        rows = {
            "inversion_masks": lambda k: k.inversion_masks(flat, n, roots),
            "select": lambda k: k.select(masks, z, p, 0),
            "group_by_label": lambda k: k.group_by_label(masks, z, p),
        }
        for name, call in rows.items():
            times = [best(lambda: call(k), args.repeat) for _, k in backends]
            speed = f"{times[0] / times[1]:8.1f}x" if len(times) > 1 and times[1] else "       -"
            print(f"{R.name:8} {name:16} " + " ".join(f"{t * 1e3:8.2f}ms" for t in times) + f"  {speed}")
    if _ckernels is None:
        print("compiled kernels not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
