"""Counts of degree sequences of simple graphs, by vertex count and sum.

For n-vertex simple graphs the quantities here count distinct degree
sequences (written non-increasing):

  * d(n): zero-free sequences, every degree at least 1;
  * d0(n): sequences allowing zero degrees;
  * h(n): zero-free with largest degree exactly n - 1;
  * l(n): zero-free with largest degree at most n - 2.

Degree-sum profiles split a family's count by the sum N: family G is
all zero-free sequences (even N from n to n(n-1)), family L restricts
the largest degree to at most n - 2 (even N from n to n(n-2)), family H
pins the largest degree at n - 1 (even N from 2(n-1) to n(n-1)).  The
L profile is symmetric about n(n-1)/2 and the H profile about
(n+2)(n-1)/2, which lets production runs compute only the lower halves.

Two routes to d(n) are provided: a direct sum over the full G range
(count_d_basic) and a faster route (count_d_improved) that sums the
lower half of the L profile, doubles it, and adds d0(n-1) for the
high-largest-degree part, using exact values d(2)..d(n-1) supplied as a
DnSeries.  The series persists between runs as an OEIS-style b-file.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import MissingPriorError
from .partition_table import PartitionTable, TableParams

FAMILIES = ("G", "L", "H")


def _even_range(lo: int, hi: int) -> range:
    """Even integers from lo to hi inclusive."""
    return range(lo + (lo & 1), hi + 1, 2)


@dataclass
class SumProfile:
    """Per-degree-sum counts for one family.

    Attributes:
        n: number of vertices.
        family: "G", "L", or "H".
        entries: mapping from even degree sum N to the count of
            sequences in the family with that sum; keys cover the
            family's whole index range, zeros included.
    """

    n: int
    family: str
    entries: dict

    def total(self) -> int:
        return sum(self.entries.values())


class DnSeries:
    """Exact values d(1)..d(n_max), the zero-free counts, 1-indexed.

    d(1) = 0 (a single vertex admits no zero-free sequence) anchors the
    series; values append contiguously.
    """

    def __init__(self, values: Iterable[int] = (0,)):
        vals = [int(v) for v in values]
        if not vals or vals[0] != 0:
            raise ValueError("series must start with d(1) = 0")
        if len(vals) >= 2 and vals[1] != 1:
            raise ValueError("d(2) must be 1")
        if any(v < 0 for v in vals):
            raise ValueError("counts are nonnegative")
        self._vals = vals

    @property
    def n_max(self) -> int:
        return len(self._vals)

    def __contains__(self, n: int) -> bool:
        return 1 <= n <= len(self._vals)

    def __getitem__(self, n: int) -> int:
        if n not in self:
            raise MissingPriorError(
                f"series holds d(1)..d({self.n_max}) but d({n}) was needed"
            )
        return self._vals[n - 1]

    def append(self, value: int) -> None:
        """Record d(n_max + 1)."""
        if self.n_max == 1 and value != 1:
            raise ValueError("d(2) must be 1")
        if value < 0:
            raise ValueError("counts are nonnegative")
        self._vals.append(int(value))

    def items(self) -> Iterator[tuple]:
        for i, v in enumerate(self._vals, start=1):
            yield i, v

    def __eq__(self, other) -> bool:
        return isinstance(other, DnSeries) and self._vals == other._vals


def read_series_file(path) -> DnSeries:
    """Load a DnSeries from a b-file (`n value` per line).

    Blank lines and lines starting with '#' are skipped.  The remaining
    lines must cover n = 1..n_max contiguously (any order).
    """
    pairs = {}
    with open(path, "r", encoding="ascii") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ValueError(f"malformed series line: {raw!r}")
            n, value = int(fields[0]), int(fields[1])
            if n in pairs:
                raise ValueError(f"duplicate series entry for n={n}")
            pairs[n] = value
    if not pairs or sorted(pairs) != list(range(1, len(pairs) + 1)):
        raise ValueError("series file must cover n = 1..n_max without gaps")
    return DnSeries(pairs[n] for n in range(1, len(pairs) + 1))


def write_series_file(path, series: DnSeries) -> None:
    """Write a DnSeries as a b-file: `n value`, LF-terminated, ascending n."""
    with open(path, "w", encoding="ascii", newline="") as fh:
        for n, value in series.items():
            fh.write(f"{n} {value}\n")


def _build_table(n, max_sum, kernel, memory_cap) -> PartitionTable:
    return PartitionTable.build(
        TableParams(max_sum=max_sum, max_part=n - 2, target_parts=n - 1),
        kernel=kernel,
        memory_cap=memory_cap,
    )


def _check_table(
    table: PartitionTable, n: int, need_sum: int, need_part: int | None = None
) -> None:
    if need_part is None:
        need_part = n - 2
    p = table.params
    if p.target_parts != n - 1:
        raise ValueError(
            f"shared table is filled to l={p.target_parts}, need l={n - 1}"
        )
    if p.max_part < need_part or p.max_sum < need_sum:
        raise ValueError(
            f"shared table stores (max_sum={p.max_sum}, max_part={p.max_part}), "
            f"need (max_sum={need_sum}, max_part={need_part})"
        )


def _g_entry(table: PartitionTable, N: int, n: int, part_cap: int) -> int:
    """Sum of graphical counts over largest degree 1..min(part_cap, N-n+1)."""
    kmax = min(part_cap, N - n + 1)
    total = 0
    for k in range(1, kmax + 1):
        total += table.g_prime(N, k, n)
    return total


def count_d_basic(
    n: int,
    *,
    table: PartitionTable | None = None,
    kernel: str = "vector",
    memory_cap: int | None = None,
) -> int:
    """d(n) by direct summation over the full degree-sum range.

    Builds (or reuses) a table with max_sum = n(n-1) and sums the
    per-sum, per-largest-degree graphical counts over even sums from n
    to n(n-1).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return 0
    if table is None:
        table = _build_table(n, n * (n - 1), kernel, memory_cap)
    else:
        _check_table(table, n, n * (n - 2))
    total = 0
    for N in _even_range(n, n * (n - 1)):
        total += _g_entry(table, N, n, n - 1)
    return total


def count_d_improved(
    n: int,
    prior: DnSeries,
    *,
    table: PartitionTable | None = None,
    kernel: str = "vector",
    memory_cap: int | None = None,
) -> int:
    """d(n) from the lower half of the L profile plus d0(n-1).

    The L profile is symmetric about half = n(n-1)/2, so twice the sum
    of entries below half, plus the middle entry when half is even,
    gives l(n); sequences with largest degree n - 1 contribute d0(n-1).
    Needs exact d(2)..d(n-1) in ``prior`` and a table only up to
    max_sum = half.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return 0
    if prior.n_max < n - 1:
        raise MissingPriorError(
            f"improved route to d({n}) needs d(1)..d({n - 1}), "
            f"series holds up to d({prior.n_max})"
        )
    if n == 2:
        return count_d0(1, prior)
    half = n * (n - 1) // 2
    if table is None:
        table = _build_table(n, half, kernel, memory_cap)
    else:
        _check_table(table, n, half - n)
    lower = 0
    for N in _even_range(n, half - 1):
        lower += _g_entry(table, N, n, n - 2)
    total = 2 * lower
    if half % 2 == 0:
        total += _g_entry(table, half, n, n - 2)
    return total + count_d0(n - 1, prior)


def count_d0(n: int, prior: DnSeries) -> int:
    """d0(n) = 1 + d(2) + ... + d(n); the lone empty-ish sequence is all zeros."""
    if n < 1:
        raise ValueError("need n >= 1")
    if prior.n_max < n:
        raise MissingPriorError(
            f"d0({n}) needs d(1)..d({n}), series holds up to d({prior.n_max})"
        )
    total = 1
    for i in range(2, n + 1):
        total += prior[i]
    return total


def count_h(n: int, prior: DnSeries) -> int:
    """h(n) = d0(n-1): drop the forced degree-(n-1) vertex, zeros may appear."""
    if n < 2:
        raise ValueError("need n >= 2")
    return count_d0(n - 1, prior)


def count_l(
    n: int,
    *,
    table: PartitionTable | None = None,
    kernel: str = "vector",
    memory_cap: int | None = None,
) -> int:
    """l(n): zero-free sequences with largest degree at most n - 2."""
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return 0
    return profile(
        n, "L", table=table, kernel=kernel, memory_cap=memory_cap
    ).total()


def profile(
    n: int,
    family: str,
    *,
    mirror: bool = True,
    table: PartitionTable | None = None,
    kernel: str = "vector",
    memory_cap: int | None = None,
) -> SumProfile:
    """Per-degree-sum counts for family "G", "L", or "H".

    With ``mirror`` (the default) the L and H families compute only the
    lower half of their range directly and fill the upper half from
    their exact symmetry; ``mirror=False`` computes every entry
    directly, which needs a larger table and exists so the symmetry can
    be validated rather than assumed.
    """
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}")
    if n < 2:
        raise ValueError("need n >= 2")

    if family == "G":
        lo, hi = n, n * (n - 1)
        center = None
        part_cap = n - 1
        need = n * (n - 2)
    elif family == "L":
        lo, hi = n, n * (n - 2)
        center = n * (n - 1)
        part_cap = n - 2
        need = n * (n - 1) // 2 - n if mirror else max(0, n * (n - 3))
    else:
        lo, hi = 2 * (n - 1), n * (n - 1)
        center = (n + 2) * (n - 1)
        part_cap = n - 1
        need = (n - 1) * (n - 2) // 2 if mirror else (n - 1) * (n - 2)

    if hi < lo:
        return SumProfile(n=n, family=family, entries={})
    if table is None:
        table = _build_table(n, max(0, need), kernel, memory_cap)
    else:
        _check_table(table, n, max(0, need))

    entries = {}
    direct_hi = hi if (family == "G" or not mirror) else center // 2
    for N in _even_range(lo, min(hi, direct_hi)):
        if family == "H":
            entries[N] = table.g_prime(N, n - 1, n)
        else:
            entries[N] = _g_entry(table, N, n, part_cap)
    if family != "G" and mirror:
        for N in _even_range(direct_hi + 1, hi):
            entries[N] = entries[center - N]
    return SumProfile(n=n, family=family, entries=entries)


def count_by_largest(
    n: int,
    *,
    table: PartitionTable | None = None,
    kernel: str = "vector",
    memory_cap: int | None = None,
) -> dict:
    """Split d(n) by largest degree: mapping k -> count, k = 1..n-1."""
    if n < 2:
        raise ValueError("need n >= 2")
    if table is None:
        table = _build_table(n, n * (n - 1), kernel, memory_cap)
    else:
        _check_table(table, n, n * (n - 2))
    out = {k: 0 for k in range(1, n)}
    for N in _even_range(n, n * (n - 1)):
        kmax = min(n - 1, N - n + 1)
        for k in range(1, kmax + 1):
            out[k] += table.g_prime(N, k, n)
    return out


def extend_series(
    series: DnSeries,
    n: int,
    *,
    kernel: str = "vector",
    memory_cap: int | None = None,
) -> DnSeries:
    """Grow ``series`` in place with the improved route until it holds d(n)."""
    while series.n_max < n:
        i = series.n_max + 1
        series.append(
            count_d_improved(i, series, kernel=kernel, memory_cap=memory_cap)
        )
    return series
