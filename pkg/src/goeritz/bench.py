"""Timing of the two SNF kernels on full Goeritz matrices."""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import smith
from .torus import goeritz_full

DEFAULT_PAIRS = ((5, 6), (7, 8), (8, 10), (10, 12), (12, 14), (14, 14))


@dataclass
class BenchRow:
    p: int
    q: int
    size: int
    python_s: float
    native_s: float | None  # None when the extension is missing or overflowed

    @property
    def speedup(self) -> float | None:
        if self.native_s is None or self.native_s == 0:
            return None
        return self.python_s / self.native_s


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run(pairs=DEFAULT_PAIRS, repeat: int = 3) -> list[BenchRow]:
    rows = []
    for p, q in pairs:
        m = goeritz_full((p, q))
        expected = smith.smith_normal_form(m, backend="python")
        py = _best_of(lambda: smith.smith_normal_form(m, backend="python"), repeat)
        nat = None
        if smith._snf_native is not None:
            try:
                if smith.smith_normal_form(m, backend="native") != expected:
                    raise AssertionError(f"kernels disagree on T({p},{q})")
                nat = _best_of(lambda: smith.smith_normal_form(m, backend="native"), repeat)
            except OverflowError:
                nat = None
        rows.append(BenchRow(p, q, m.rows, py, nat))
    return rows


def format_table(rows: list[BenchRow]) -> str:
    lines = [f"{'pair':>10} {'size':>5} {'python ms':>11} {'native ms':>11} {'speedup':>8}"]
    for r in rows:
        nat = f"{r.native_s * 1e3:11.2f}" if r.native_s is not None else f"{'n/a':>11}"
        sp = f"{r.speedup:7.1f}x" if r.speedup is not None else f"{'n/a':>8}"
        lines.append(f"{f'T({r.p},{r.q})':>10} {r.size:5d} {r.python_s * 1e3:11.2f} {nat} {sp}")
    return "\n".join(lines)
