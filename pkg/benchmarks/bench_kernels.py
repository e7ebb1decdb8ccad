#!/usr/bin/env python3
"""Benchmark the compiled string kernels against the pure-Python fallback.

Two workloads: raw edit-distance calls on random Hinglish-like word
pairs, and a realistic localization pass (full lexicon scan over a
chat answer). Run from the repo root:

    python3 benchmarks/bench_kernels.py
"""

import random
import statistics
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from sehatbot import speed  # noqa: E402
from sehatbot.speed import _pure  # noqa: E402

try:
    from sehatbot.speed import _kernels
except ImportError:
    _kernels = None

WORDS = (
    "aap sawaal jawab sehat mahila baccha ghar kaam paani dawai dard pet "
    "mahina din subah asar alag sahi thoda bahut kripya samay umar saal "
    "mahavari seva salah tareeke pradaata istemal swaasthya peshevar "
    "chikitsakiya contraceptive telehealth recanalization"
).split()


def make_pairs(n, rng):
    pairs = []
    for _ in range(n):
        a = " ".join(rng.choice(WORDS) for _ in range(rng.randint(1, 3)))
        b = " ".join(rng.choice(WORDS) for _ in range(rng.randint(1, 3)))
        pairs.append((a, b))
    return pairs


def time_fn(fn, repeats=5):
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return min(samples), statistics.median(samples)


def bench_levenshtein(impl, pairs):
    lev = impl.levenshtein

    def run():
        for a, b in pairs:
            lev(a, b)

    return time_fn(run)


def bench_localize(module_name, text, lexicon):
    # Force the localization scan onto one implementation.
    import sehatbot.localization as localization

    impl = _kernels if module_name == "cython" else _pure
    original = localization.speed
    localization.speed = impl
    try:
        def run():
            for _ in range(50):
                localization.localize(text, lexicon)

        return time_fn(run)
    finally:
        localization.speed = original


def main():
    rng = random.Random(7)
    pairs = make_pairs(20_000, rng)
    print(f"active implementation at import: {speed.IMPLEMENTATION}")
    print()
    print(f"{'workload':<34}{'impl':<14}{'best':>10}{'median':>10}")

    rows = [("pure-python", _pure)]
    if _kernels is not None:
        rows.append(("cython", _kernels))

    results = {}
    for name, impl in rows:
        best, median = bench_levenshtein(impl, pairs)
        results[name] = best
        print(f"{'levenshtein x20k pairs':<34}{name:<14}{best:>9.3f}s{median:>9.3f}s")

    from sehatbot.localization import load_lexicon

    lexicon = load_lexicon(ROOT / "src" / "sehatbot" / "data" / "lexicon.tsv")
    answer = (
        "Aapko swaasthya seva pradaata se milna chahiye aur unki peshevar "
        "salah par dhyan dena chahiye kyunki jawab chikitsakiya tareeke se "
        "sahi hona zaroori hai. "
    ) * 4
    loc_results = {}
    for name, _impl in rows:
        best, median = bench_localize(name, answer, lexicon)
        loc_results[name] = best
        print(f"{'localize x50 passes':<34}{name:<14}{best:>9.3f}s{median:>9.3f}s")

    if _kernels is not None:
        print()
        print(f"levenshtein speedup: {results['pure-python'] / results['cython']:.1f}x")
        print(f"localize speedup:    {loc_results['pure-python'] / loc_results['cython']:.1f}x")


if __name__ == "__main__":
    main()
