"""Benchmark the compiled triple-store core against the pure-Python one.

Measures bulk insertion, indexed pattern matching, and rule saturation
to fixpoint on synthetic workloads of interned term ids. Run from the
repository root:

    python3 benchmarks/bench_backends.py --triples 20000
"""

from __future__ import annotations

import argparse
import random
import time

from mmods import _core_py

try:
    from mmods import _core
except ImportError:
    _core = None

WILDCARD = -1


def build_ops(n_triples: int, id_range: int, seed: int = 0):
    rng = random.Random(seed)
    return [
        (rng.randrange(id_range), rng.randrange(id_range), rng.randrange(id_range))
        for _ in range(n_triples)
    ]


def fill(module, ops):
    store = module.TripleStore()
    for s, p, o in ops:
        store.add(s, p, o)
    return store


def best_of(repeats, fn):
    timings = []
    for _ in range(repeats):
        started = time.perf_counter()
        fn()
        timings.append(time.perf_counter() - started)
    return min(timings)


def bench_add(module, ops, repeats):
    return best_of(repeats, lambda: fill(module, ops))


def bench_match(module, ops, repeats, probes=4000, seed=1):
    store = fill(module, ops)
    rng = random.Random(seed)
    id_range = max(max(t) for t in ops) + 1
    patterns = []
    for _ in range(probes):
        mask = rng.randrange(1, 8)
        probe = [
            rng.randrange(id_range) if mask & (1 << i) else WILDCARD for i in range(3)
        ]
        patterns.append(tuple(probe))

    def run():
        total = 0
        for s, p, o in patterns:
            total += len(store.match(s, p, o))
        return total

    return best_of(repeats, run)


def bench_saturate(module, ops, repeats, seed=2):
    rng = random.Random(seed)
    id_range = max(max(t) for t in ops) + 1
    chains = [
        (
            rng.randrange(id_range),
            rng.randrange(id_range),
            bool(rng.getrandbits(1)),
            rng.randrange(id_range),
        )
        for _ in range(4)
    ]
    subclass_pairs = [(rng.randrange(id_range), rng.randrange(id_range)) for _ in range(4)]

    def run():
        store = fill(module, ops)
        module.saturate(store, chains, subclass_pairs, 0)

    return best_of(repeats, run)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--triples", type=int, default=20000)
    parser.add_argument("--id-range", type=int, default=400)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    if _core is None:
        print("compiled core not available; showing pure-Python timings only")

    ops = build_ops(args.triples, args.id_range)
    rows = []
    for label, bench in [
        (f"add {args.triples} triples", bench_add),
        ("match 4000 patterns", bench_match),
        ("saturate to fixpoint", bench_saturate),
    ]:
        pure = bench(_core_py, ops, args.repeats)
        if _core is not None:
            fast = bench(_core, ops, args.repeats)
            rows.append((label, pure, fast, pure / fast))
        else:
            rows.append((label, pure, None, None))

    width = max(len(r[0]) for r in rows)
    header = f"{'workload':<{width}}  {'python':>10}  {'compiled':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, pure, fast, speedup in rows:
        if fast is None:
            print(f"{label:<{width}}  {pure * 1000:>8.1f}ms  {'-':>10}  {'-':>8}")
        else:
            print(
                f"{label:<{width}}  {pure * 1000:>8.1f}ms  {fast * 1000:>8.1f}ms  "
                f"{speedup:>7.1f}x"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
