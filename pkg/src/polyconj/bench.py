"""Benchmark harness for the twisted-subset-sum table solver.

Two suites:

* ``scaling``: fixed n, coefficient magnitudes scaled so sum|k_i| = S for a
  range of S.  Demonstrates pseudo-polynomial behaviour: wall time stays
  inside a quadratic envelope in S (the sparse rows make it nearly flat).
* ``adversarial``: fixed n, random coefficients of a given bit-length.
  Touched-state counts at least double when the bit-length doubles, which
  is the exponential regime that keeps the problem NP-complete in binary.
"""

from __future__ import annotations

import random
import time
from typing import Sequence

from .tssp import TsspInstance, build_dp, extract_assignment, twisted_sum

SCALING_N = 10
SCALING_SUMS = (10**3, 10**4, 10**5, 10**6)
ADVERSARIAL_N = 18
ADVERSARIAL_BITS = (4, 8, 16)


def _scaled_instance(rng: random.Random, n: int, total: int) -> TsspInstance:
    """Coefficients with |k_1| + ... + |k_n| exactly ``total``."""
    cuts = sorted(rng.randint(0, total) for _ in range(n - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [total])]
    coeffs = tuple(p if rng.random() < 0.5 else -p for p in parts)
    bits = tuple(rng.randint(0, 1) for _ in range(n))
    return TsspInstance(coefficients=coeffs, target=twisted_sum(coeffs, bits))


def _adversarial_instance(rng: random.Random, n: int, bit_length: int) -> TsspInstance:
    """Random coefficients of exactly ``bit_length`` bits, random signs."""
    lo, hi = 1 << (bit_length - 1), (1 << bit_length) - 1
    coeffs = tuple(rng.randint(lo, hi) * (1 if rng.random() < 0.5 else -1) for _ in range(n))
    bits = tuple(rng.randint(0, 1) for _ in range(n))
    return TsspInstance(coefficients=coeffs, target=twisted_sum(coeffs, bits))


def _timed_solve(inst: TsspInstance, max_cells: int, repeats: int) -> tuple[float, int]:
    best = float("inf")
    table = None
    for _ in range(repeats):
        start = time.perf_counter()
        table = build_dp(inst, max_cells=max_cells)
        extract_assignment(table, inst.target)
        best = min(best, time.perf_counter() - start)
    assert table is not None
    return best, table.total_marks


def scaling_rows(
    n: int = SCALING_N,
    sums: Sequence[int] = SCALING_SUMS,
    seed: int = 20250809,
    max_cells: int = 10**8,
    repeats: int = 3,
) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for total in sums:
        inst = _scaled_instance(rng, n, total)
        seconds, states = _timed_solve(inst, max_cells, repeats)
        rows.append(
            {
                "n": n,
                "S": total,
                "seconds": seconds,
                "states": states,
                "dense_cells": (n + 1) * (2 * total + 1),
            }
        )
    return rows


def adversarial_rows(
    n: int = ADVERSARIAL_N,
    bit_lengths: Sequence[int] = ADVERSARIAL_BITS,
    seed: int = 20250809,
    max_cells: int = 10**8,
) -> list[dict]:
    rng = random.Random(seed)
    rows = []
    for bits in bit_lengths:
        inst = _adversarial_instance(rng, n, bits)
        seconds, states = _timed_solve(inst, max_cells, repeats=1)
        rows.append(
            {
                "n": n,
                "coefficient_bits": bits,
                "S": inst.abs_sum,
                "seconds": seconds,
                "states": states,
            }
        )
    return rows


def format_table(rows: Sequence[dict], columns: Sequence[str]) -> str:
    """Plain-text table with right-aligned columns."""
    rendered = [[_cell(row[c]) for c in columns] for row in rows]
    widths = [
        max(len(col), *(len(r[i]) for r in rendered)) for i, col in enumerate(columns)
    ]
    lines = ["  ".join(col.rjust(w) for col, w in zip(columns, widths))]
    for r in rendered:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
    return "\n".join(lines)


def _cell(value) -> str:
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)
