#!/usr/bin/env python3
"""Benchmark the pure-Python word kernel against the compiled one.

Runs the exact same workloads through both backends:

* ``reduce``     -- free reduction of long letter streams with many
                    cancellations;
* ``concat``     -- products of already-reduced words;
* ``substitute`` -- the hot loop: applying endomorphism image tables,
                    here the images of a pillar-switching product at
                    genus 12 applied to random words.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--scale N]
"""

import argparse
import random
import time

from mcgcalc import _wordops_py
from mcgcalc.braids import psi_action, random_braid_word
from mcgcalc.words import Basis, random_word

try:
    from mcgcalc import _wordops_c
except ImportError:
    _wordops_c = None


def time_call(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def reduce_workload(rng, scale):
    alphabet = list(range(1, 25))
    seq = []
    for _ in range(200_000 * scale):
        c = rng.choice(alphabet) * rng.choice((1, -1))
        seq.append(c)
        if rng.random() < 0.4:
            seq.append(-c)
    return (seq,)


def concat_workload(rng, scale):
    basis = Basis.xy(12)
    u = random_word(basis, 100_000 * scale, rng)
    return (u.data, u.inverse().data)


def substitute_workload(rng, scale):
    genus = 12
    braid = random_braid_word(genus, 14, rng)
    table = psi_action(braid)._table
    word = random_word(Basis.xy(genus), 40_000 * scale, rng)
    return (word.data, table)


WORKLOADS = [
    ("reduce", "reduce_letters", reduce_workload),
    ("concat", "concat_reduced", concat_workload),
    ("substitute", "substitute", substitute_workload),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--scale", type=int, default=1)
    args = parser.parse_args()

    if _wordops_c is None:
        print("compiled kernel not built; timing the pure kernel only")

    print(f"{'workload':<12} {'pure (ms)':>10} {'compiled (ms)':>14} {'speedup':>8}")
    for name, func_name, build in WORKLOADS:
        rng = random.Random(0)
        call_args = build(rng, args.scale)
        py_fn = getattr(_wordops_py, func_name)
        py_time = time_call(py_fn, call_args, args.repeat)
        if _wordops_c is None:
            print(f"{name:<12} {py_time * 1e3:>10.2f} {'-':>14} {'-':>8}")
            continue
        c_fn = getattr(_wordops_c, func_name)
        assert c_fn(*call_args) == py_fn(*call_args), f"{name}: backends disagree"
        c_time = time_call(c_fn, call_args, args.repeat)
        print(
            f"{name:<12} {py_time * 1e3:>10.2f} {c_time * 1e3:>14.2f} "
            f"{py_time / c_time:>7.1f}x"
        )


if __name__ == "__main__":
    main()
