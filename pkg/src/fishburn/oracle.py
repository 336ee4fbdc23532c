"""Independent ground truth: Fishburn numbers from the generating function
sum_n prod_{k=1..n} (1 - (1-x)^k), and brute-force avoider filtering."""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from math import comb

from .objects import (
    FishburnError,
    enumerate_ascent_sequences,
    enumerate_fishburn_matrices,
)
from .patterns import contains_pattern, enumerate_avoiders

FILTER_CAP = 9


class TruncatedSeries:
    """Power series with integer coefficients, cut off above degree N."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, N: int):
        coeffs = list(coeffs)[:N + 1]
        self.coeffs = coeffs + [0] * (N + 1 - len(coeffs))

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)],
                               self.N)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        N = self.N
        out = [0] * (N + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(N + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, N)

    def __repr__(self):
        return f"TruncatedSeries({self.coeffs})"


def fishburn_numbers(N: int) -> list[int]:
    """F_0, ..., F_N."""
    if N < 1:
        raise FishburnError(f"N must be >= 1, got {N}")
    total = TruncatedSeries([1], N)  # empty product
    prod = TruncatedSeries([1], N)
    # factors have zero constant term, so terms past n = N vanish mod x^(N+1)
    for k in range(1, N + 1):
        # 1 - (1-x)^k
        factor = TruncatedSeries(
            [0] + [-((-1) ** j) * comb(k, j) for j in range(1, k + 1)], N)
        prod = prod * factor
        total = total + prod
    return total.coeffs


def filter_avoiders(n: int, cap: int = FILTER_CAP) -> set[tuple[int, ...]]:
    """All avoiders of length ``n`` by filtering the full symmetric group."""
    if n < 1:
        raise FishburnError(f"n must be >= 1, got {n}")
    if n > cap:
        raise FishburnError(f"n = {n} exceeds the factorial filter cap {cap}")
    return {p for p in itertools.permutations(range(1, n + 1))
            if not contains_pattern(p)}


@dataclass
class CountRecord:
    n: int
    family: str
    count: int
    expected: int

    @property
    def status(self) -> str:
        return "pass" if self.count == self.expected else "FAIL"

    def to_dict(self) -> dict:
        return {**asdict(self), "status": self.status}


@dataclass
class CountReport:
    records: list[CountRecord]

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.records)

    @property
    def failures(self) -> list[CountRecord]:
        return [r for r in self.records if r.status != "pass"]

    def to_dict(self) -> dict:
        return {"check": "counts", "passed": self.passed,
                "records": [r.to_dict() for r in self.records]}

    def table(self) -> str:
        lines = [f"{'n':>3}  {'family':<10} {'count':>8} {'expected':>8}  status"]
        for r in self.records:
            lines.append(f"{r.n:>3}  {r.family:<10} {r.count:>8} "
                         f"{r.expected:>8}  {r.status}")
        return "\n".join(lines)


FAMILIES = {
    "sequences": enumerate_ascent_sequences,
    "matrices": enumerate_fishburn_matrices,
    "avoiders": enumerate_avoiders,
}


def cross_check_counts(n_max: int) -> CountReport:
    """Compare the size of each family against F_n for n = 1..n_max."""
    if not 1 <= n_max <= FILTER_CAP:
        raise FishburnError(f"n_max must be in 1..{FILTER_CAP}, got {n_max}")
    F = fishburn_numbers(n_max)
    records = []
    for n in range(1, n_max + 1):
        for family, gen in FAMILIES.items():
            records.append(CountRecord(n, family, sum(1 for _ in gen(n)), F[n]))
    return CountReport(records)
