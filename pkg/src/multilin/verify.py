"""Seeded self-check: run every law suite and report pass counts.

The report contains only the seed and the counts, so two runs with the same
seed produce identical bytes.  Each law gets its own generator derived from
the seed and the law's name; adding a law does not reshuffle the others.
"""
from __future__ import annotations

import random
import zlib

from multilin.laws import EXHAUSTIVE, SUITES, LawViolation


def law_rng(seed: int, name: str) -> random.Random:
    return random.Random(seed * 1_000_003 + zlib.crc32(name.encode()))


def run_law(law, seed: int, rounds: int) -> tuple[int, int, list[str]]:
    if law in EXHAUSTIVE:
        rounds = 1
    rng = law_rng(seed, law.__name__)
    passed, failures = 0, []
    for i in range(rounds):
        try:
            law(rng)
        except LawViolation as exc:
            failures.append(f"{law.__name__} round {i}: {exc}")
        else:
            passed += 1
    return passed, rounds, failures


def run_suites(seed: int, rounds: int = 25, suites=None) -> tuple[list[str], bool]:
    names = list(SUITES) if suites is None else list(suites)
    lines = [f"multilin verify: seed={seed} rounds={rounds}"]
    ok = True
    for name in names:
        passed = total = 0
        failures = []
        for law in SUITES[name]:
            p, t, f = run_law(law, seed, rounds)
            passed += p
            total += t
            failures.extend(f)
        status = "ok" if passed == total else "FAIL"
        ok &= passed == total
        lines.append(f"{name:<22} {passed:>4}/{total:<4} {status}")
        lines.extend(f"  {msg}" for msg in failures)
    lines.append("all suites passed" if ok else "some suites FAILED")
    return lines, ok
