"""Statistics on avoiders, ascent sequences and Fishburn matrices.

Positions are reported 1-based.  Where the literature writes a "set" of
labels or values that can repeat, the multiset is kept (sorted tuple), and
value sets are projected from index sets only where they are compared.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

from .objects import (
    FishburnError,
    Matrix,
    StatPolynomial,
    ascents,
    check_ascent_sequence,
    check_fishburn_matrix,
    check_permutation,
    dim,
    index,
)
from .patterns import active_sites


def modified_sequence(x: Sequence[int]) -> tuple[int, ...]:
    """For each ascent position i (increasing), bump every earlier entry
    that is at least ``x[i+1]``."""
    x = check_ascent_sequence(x)
    out = list(x)
    for i in ascents(x):
        bound = out[i]  # x_{i+1}, untouched by earlier passes
        for j in range(i - 1):
            if out[j] >= bound:
                out[j] += 1
    return tuple(out)


# -- permutations -----------------------------------------------------------

def _lr_maxima(p):
    out, best = [], 0
    for v in p:
        if v > best:
            out.append(v)
            best = v
    return out


def _lr_minima(p):
    out, best = [], len(p) + 1
    for v in p:
        if v < best:
            out.append(v)
            best = v
    return out


@dataclass(frozen=True)
class PermStats:
    lrmax_set: frozenset[int]
    lrmin_set: frozenset[int]
    rlmax_set: frozenset[int]
    rlmin_set: frozenset[int]
    lmaxl: tuple[int, ...]
    rmaxl: tuple[int, ...]
    delta: StatPolynomial
    a: int
    s: int

    @property
    def LRmax(self) -> int:
        return len(self.lrmax_set)

    @property
    def LRmin(self) -> int:
        return len(self.lrmin_set)

    @property
    def RLmax(self) -> int:
        return len(self.rlmax_set)

    @property
    def RLmin(self) -> int:
        return len(self.rlmin_set)

    def to_dict(self) -> dict:
        return {
            "LRmax": self.LRmax, "LRmin": self.LRmin,
            "RLmax": self.RLmax, "RLmin": self.RLmin,
            "LRMAX": sorted(self.lrmax_set), "LRMIN": sorted(self.lrmin_set),
            "RLMAX": sorted(self.rlmax_set), "RLMIN": sorted(self.rlmin_set),
            "LMAXL": list(self.lmaxl), "RMAXL": list(self.rmaxl),
            "delta": self.delta.to_json(), "a": self.a, "s": self.s,
        }


def perm_stats(p: Sequence[int]) -> PermStats:
    p = check_permutation(p)
    if not p:
        raise FishburnError("perm_stats needs n >= 1")
    lab = active_sites(p)  # raises on containing input
    n = len(p)
    pos = {v: k for k, v in enumerate(p, 1)}
    lrmax = _lr_maxima(p)
    rlmax = _lr_maxima(p[::-1])
    lmaxl = tuple(sorted(lab.label_right_of(pos[v]) for v in lrmax))
    rmaxl = tuple(sorted(lab.label_right_of(pos[v]) for v in rlmax))
    return PermStats(
        lrmax_set=frozenset(lrmax),
        lrmin_set=frozenset(_lr_minima(p)),
        rlmax_set=frozenset(rlmax),
        rlmin_set=frozenset(_lr_minima(p[::-1])),
        lmaxl=lmaxl,
        rmaxl=rmaxl,
        delta=StatPolynomial.from_exponents(lmaxl),
        a=lab.label_right_of(pos[n]),
        s=len(lab),
    )


# -- sequences --------------------------------------------------------------

@dataclass(frozen=True)
class SeqStats:
    seq: tuple[int, ...]
    asc_set: tuple[int, ...]
    zero: int
    maxstat: int
    rmin_indices: tuple[int, ...]
    rmax_indices: tuple[int, ...]
    chi: StatPolynomial

    @property
    def Rmin(self) -> int:
        return len(self.rmin_indices)

    @property
    def Rmax(self) -> int:
        return len(self.rmax_indices)

    @property
    def rmin_values(self) -> frozenset[int]:
        return frozenset(self.seq[i - 1] for i in self.rmin_indices)

    def to_dict(self) -> dict:
        return {
            "ASC": list(self.asc_set), "asc": len(self.asc_set),
            "zero": self.zero, "max": self.maxstat,
            "Rmin": self.Rmin, "Rmax": self.Rmax,
            "RMIN_indices": list(self.rmin_indices),
            "RMAX_indices": list(self.rmax_indices),
            "RMIN": sorted(self.rmin_values),
            "chi": self.chi.to_json(),
        }


def seq_stats(x: Sequence[int]) -> SeqStats:
    """Statistics of an arbitrary integer sequence (not necessarily an
    ascent sequence, so it also serves modified sequences)."""
    x = tuple(x)
    n = len(x)
    maxstat = 0
    n_asc = -1  # makes x_1 = 0 count towards max
    for i, v in enumerate(x):
        if v == n_asc + 1:
            maxstat += 1
        if i == 0:
            n_asc = 0
        elif x[i - 1] < v:
            n_asc += 1
    rmin, rmax = [], []
    low, high = None, None
    for i in range(n - 1, -1, -1):
        v = x[i]
        if low is None or v < low:
            rmin.append(i + 1)
        if high is None or v >= high:
            rmax.append(i + 1)
        low = v if low is None else min(low, v)
        high = v if high is None else max(high, v)
    rmin.reverse()
    rmax.reverse()
    return SeqStats(
        seq=x,
        asc_set=tuple(ascents(x)),
        zero=x.count(0),
        maxstat=maxstat,
        rmin_indices=tuple(rmin),
        rmax_indices=tuple(rmax),
        chi=StatPolynomial.from_exponents(x[i - 1] for i in rmax),
    )


# -- matrices ---------------------------------------------------------------

@dataclass(frozen=True)
class MatrixStats:
    rsum: tuple[int, ...]
    csum: tuple[int, ...]
    tr: int
    ne_cells: tuple[tuple[int, int], ...]
    lam: StatPolynomial
    dim: int
    index: int

    @property
    def ne(self) -> int:
        return len(self.ne_cells)

    @property
    def ne_rows(self) -> frozenset[int]:
        """NE(A): row number minus one of each wNE-cell."""
        return frozenset(i - 1 for i, _ in self.ne_cells)

    @property
    def rsum1(self) -> int:
        return self.rsum[0]

    @property
    def csum_dim(self) -> int:
        return self.csum[-1]

    def to_dict(self) -> dict:
        return {
            "rsum": list(self.rsum), "csum": list(self.csum),
            "rsum1": self.rsum1, "csum_dim": self.csum_dim,
            "tr": self.tr, "ne": self.ne,
            "wNE_cells": [list(c) for c in self.ne_cells],
            "NE": sorted(self.ne_rows),
            "lambda": self.lam.to_json(),
            "dim": self.dim, "index": self.index,
        }


def wne_cells(a: Matrix) -> list[tuple[int, int]]:
    """1-based cells (i, j) that are nonzero with every other cell weakly
    north-east of them zero."""
    k = len(a)
    out = []
    for i in range(k):
        for j in range(k):
            if a[i][j] and all(a[s][t] == 0 or (s, t) == (i, j)
                               for s in range(i + 1) for t in range(j, k)):
                out.append((i + 1, j + 1))
    return out


def matrix_stats(a: Matrix) -> MatrixStats:
    a = check_fishburn_matrix(a)
    k = dim(a)
    cells = wne_cells(a)
    rows = [i for i, _ in cells]
    cols = [j for _, j in cells]
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise AssertionError(f"two wNE-cells share a row or column: {cells}")
    return MatrixStats(
        rsum=tuple(sum(r) for r in a),
        csum=tuple(sum(a[i][j] for i in range(k)) for j in range(k)),
        tr=sum(1 for i in range(k) if a[i][i]),
        ne_cells=tuple(cells),
        lam=StatPolynomial({i: a[i][k - 1] for i in range(k)}),
        dim=k,
        index=index(a),
    )


# -- named scalar statistics, used by joint tables --------------------------

def _seq_scalar(name: str) -> Callable[[tuple[int, ...]], int]:
    def get(x):
        if name == "Rmax_hat":
            return seq_stats(modified_sequence(x)).Rmax
        st = seq_stats(x)
        return {"zero": st.zero, "max": st.maxstat, "Rmin": st.Rmin,
                "Rmax": st.Rmax, "asc": len(st.asc_set), "last": x[-1]}[name]
    return get


STATISTICS: dict[str, dict[str, Callable]] = {
    "avoiders": {
        name: (lambda nm: lambda p: getattr(perm_stats(p), nm))(name)
        for name in ("LRmax", "LRmin", "RLmax", "RLmin", "s", "a")
    },
    "sequences": {
        name: _seq_scalar(name)
        for name in ("zero", "max", "Rmin", "Rmax", "Rmax_hat", "asc", "last")
    },
    "matrices": {
        name: (lambda nm: lambda a: getattr(matrix_stats(a), nm))(name)
        for name in ("rsum1", "csum_dim", "tr", "ne", "dim", "index")
    },
}


def statistic(family: str, name: str) -> Callable:
    if family not in STATISTICS:
        raise FishburnError(
            f"unknown family {family!r}; choose from {sorted(STATISTICS)}")
    stats = STATISTICS[family]
    if name not in stats:
        raise FishburnError(
            f"unknown statistic {name!r} on {family}; available: "
            f"{', '.join(stats)}")
    return stats[name]
