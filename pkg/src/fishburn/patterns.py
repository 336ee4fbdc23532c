"""Containment of the bivincular pattern and active sites of avoiders.

An occurrence is a triple ``p[i] p[i+1] ... p[j]`` (0-based ``j > i + 1``)
with ``p[i] + 1 == p[j] < p[i+1]``: the first two entries are adjacent in
position, the first and last adjacent in value.

Gaps of a permutation of length ``n`` are numbered ``0..n`` from the front,
gap ``g`` sitting between ``p[g-1]`` and ``p[g]``.  Active gaps additionally
carry labels counted from the right starting at 0.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .objects import FishburnError


class PatternError(FishburnError):
    """Raised when an operation defined only on avoiders gets a containing
    permutation."""


def find_occurrence(p: Sequence[int]) -> tuple[int, int, int] | None:
    """Return 1-based positions ``(i, i+1, j)`` of some occurrence, or None."""
    pos = {v: k for k, v in enumerate(p)}
    for i in range(len(p) - 1):
        a = p[i]
        j = pos.get(a + 1)
        if j is not None and j > i + 1 and a + 1 < p[i + 1]:
            return i + 1, i + 2, j + 1
    return None


def contains_pattern(p: Sequence[int]) -> bool:
    return find_occurrence(p) is not None


def require_avoider(p: Sequence[int]) -> None:
    occ = find_occurrence(p)
    if occ is not None:
        i, i1, j = occ
        raise PatternError(
            f"{' '.join(map(str, p))} contains the pattern at positions "
            f"{i},{i1},{j} (values {p[i - 1]},{p[i1 - 1]},{p[j - 1]})")


@dataclass(frozen=True)
class ActiveSiteLabeling:
    """Active gaps of an avoider, left to right, with right-to-left labels."""

    perm: tuple[int, ...]
    sites: tuple[int, ...]

    @property
    def labels(self) -> dict[int, int]:
        s = len(self.sites)
        return {g: s - 1 - k for k, g in enumerate(self.sites)}

    def gap_of(self, label: int) -> int:
        s = len(self.sites)
        if not 0 <= label < s:
            raise FishburnError(f"label {label} out of range: s(p) = {s}")
        return self.sites[s - 1 - label]

    def label_right_of(self, position: int) -> int:
        """Largest label among active gaps to the right of the 1-based
        ``position``."""
        for k, g in enumerate(self.sites):
            if g >= position:
                return len(self.sites) - 1 - k
        raise AssertionError("end gap is always active")

    def __len__(self) -> int:
        return len(self.sites)

    def __str__(self) -> str:
        """Render like ``_3 5 2 3 1 _2 6 4 _1 7 _0``."""
        labels = self.labels
        out = []
        for g in range(len(self.perm) + 1):
            if g in labels:
                out.append(f"_{labels[g]}")
            if g < len(self.perm):
                out.append(str(self.perm[g]))
        return " ".join(out)


def _insert(p: Sequence[int], gap: int, value: int) -> tuple[int, ...]:
    return (*p[:gap], value, *p[gap:])


def active_sites(p: Sequence[int]) -> ActiveSiteLabeling:
    """Gaps where the new maximum can go while keeping ``p`` an avoider.

    Found by trial insertion, which is all the definition gives us.
    """
    p = tuple(p)
    require_avoider(p)
    return ActiveSiteLabeling(p, _active_gaps(p))


@lru_cache(maxsize=1 << 16)
def _active_gaps(p: tuple[int, ...]) -> tuple[int, ...]:
    m = len(p) + 1
    return tuple(g for g in range(m) if not contains_pattern(_insert(p, g, m)))


def insert_max(p: Sequence[int], label: int) -> tuple[int, ...]:
    """Insert ``n+1`` into the active site of ``p`` carrying ``label``."""
    lab = active_sites(p)
    return _insert(lab.perm, lab.gap_of(label), len(lab.perm) + 1)


def enumerate_avoiders(n: int) -> Iterator[tuple[int, ...]]:
    """Yield all avoiders of length ``n``.

    Grown by inserting maxima into active sites with labels tried in
    increasing order, so the stream follows lexicographic order of the
    encoding ``theta``.
    """
    if n < 1:
        raise FishburnError(f"n must be >= 1, got {n}")

    def rec(p: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(p) == n:
            yield p
            return
        lab = active_sites(p)
        for label in range(len(lab)):
            yield from rec(_insert(p, lab.gap_of(label), len(p) + 1))

    yield from rec((1,))
