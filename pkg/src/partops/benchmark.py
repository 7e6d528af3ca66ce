"""Throughput benchmark across generators and kernel backends.

Runs each selected (order, backend) pair over the same k values, measures
partitions per second, and enforces the correctness gate: every pair must
report exactly the recurrence count.  Output can also be discarded into a
null sink or written to a file, mirroring the screen-versus-file split that
dominates generator timing in practice.
"""

from __future__ import annotations

import io
import time
from dataclasses import dataclass
from typing import List, Optional

from . import backends
from .counting import count_partitions
from .partition import format_partition

__all__ = ["BenchResult", "run_bench", "format_report"]


@dataclass
class BenchResult:
    k: int
    order: str
    backend: str
    count: int
    seconds: float
    sink: str

    @property
    def rate(self) -> float:
        return self.count / self.seconds if self.seconds > 0 else float("inf")


_COUNTERS = {
    "brcp": "brcp_count",
    "revlex": "revlex_count",
    "ascending": "ascending_count",
}
_VISITORS = {
    "brcp": "brcp_visit",
    "revlex": "revlex_visit",
    "ascending": "ascending_visit",
}


def run_bench(k_values: List[int], orders: List[str],
              backend_names: List[str], *, sink: str = "null",
              sink_path: Optional[str] = None, repeat: int = 1) -> List[BenchResult]:
    """Benchmark every (k, order, backend) combination.

    ``sink='null'`` counts without materialising output; ``sink='file'``
    formats every partition and writes it to ``sink_path`` (or discards the
    formatted text when no path is given, timing the formatting alone).

    Raises RuntimeError when any run disagrees with the recurrence count.
    """
    results = []
    for k in k_values:
        expected = count_partitions(k)
        for backend_name in backend_names:
            kern = backends.get_backend(backend_name)
            for order in orders:
                if order not in _COUNTERS:
                    raise ValueError(f"unknown order {order!r}")
                best = None
                count = None
                for _ in range(max(repeat, 1)):
                    if sink == "null":
                        fn = getattr(kern, _COUNTERS[order])
                        t0 = time.perf_counter()
                        count = fn(k)
                        dt = time.perf_counter() - t0
                    else:
                        stream = (open(sink_path, "w", encoding="utf-8")
                                  if sink_path else io.StringIO())
                        visit = getattr(kern, _VISITORS[order])
                        term = [0]

                        def writer(view, _s=stream, _t=term):
                            _t[0] += 1
                            _s.write(f"{_t[0]}: {format_partition(view)}\n")

                        t0 = time.perf_counter()
                        count = visit(k, writer)
                        dt = time.perf_counter() - t0
                        stream.close() if sink_path else None
                    best = dt if best is None else min(best, dt)
                if count != expected:
                    raise RuntimeError(
                        f"count mismatch: {order}/{backend_name} at k={k} "
                        f"returned {count}, recurrence gives {expected}")
                results.append(BenchResult(k, order, backend_name, count,
                                           best, sink))
    return results


def format_report(results: List[BenchResult], fmt: str = "text") -> str:
    if fmt == "csv":
        lines = ["k,order,backend,count,seconds,rate,sink"]
        for r in results:
            lines.append(f"{r.k},{r.order},{r.backend},{r.count},"
                         f"{r.seconds:.6f},{r.rate:.1f},{r.sink}")
        return "\n".join(lines) + "\n"
    width = max((len(r.order) + len(r.backend) for r in results), default=10)
    lines = []
    for r in results:
        label = f"{r.order}/{r.backend}"
        lines.append(f"k={r.k:<4d} {label:<{width + 1}s} "
                     f"{r.count:>12d} partitions  {r.seconds:>9.4f}s  "
                     f"{r.rate:>12.0f}/s")
    lines.append("counts agree with the recurrence for all runs")
    return "\n".join(lines) + "\n"
