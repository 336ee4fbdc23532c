"""Exhaustive checks of the bijections and equidistribution results."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass, field

from . import bijections as bj
from .objects import (
    FishburnError,
    asc,
    dim,
    enumerate_ascent_sequences,
    enumerate_fishburn_matrices,
    index,
    inverse,
)
from .oracle import FAMILIES, cross_check_counts, filter_avoiders, fishburn_numbers
from .patterns import contains_pattern, enumerate_avoiders
from .stats import matrix_stats, modified_sequence, perm_stats, seq_stats, statistic

PROFILES = {"ci": 7, "long": 8}
REMARK_PERM = (8, 5, 2, 3, 1, 6, 4, 7)
SYMMETRIC_PAIRS = [
    ("matrices", "rsum1", "ne"),
    ("sequences", "zero", "Rmin"),
    ("avoiders", "LRmax", "RLmax"),
]


@dataclass
class JointTable:
    n: int
    family: str
    stat_pair: tuple[str, str]
    counts: dict[tuple[int, int], int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n, "family": self.family, "stat_pair": list(self.stat_pair),
            "counts": [[a, b, c] for (a, b), c in sorted(self.counts.items())],
            "total": self.total,
        }

    def grid(self) -> str:
        """Counts with rows indexed by the first statistic."""
        if not self.counts:
            return "(empty)"
        vals = sorted({v for ab in self.counts for v in ab})
        w = max(len(str(c)) for c in self.counts.values())
        w = max(w, *(len(str(v)) for v in vals))
        sa, sb = self.stat_pair
        lines = [f"{sa} \\ {sb}", " " * (w + 1) + " ".join(f"{v:>{w}}" for v in vals)]
        for a in vals:
            lines.append(f"{a:>{w}} " + " ".join(
                f"{self.counts.get((a, b), 0):>{w}}" for b in vals))
        return "\n".join(lines)


def _objects(family: str, n: int) -> Iterable:
    if family not in FAMILIES:
        raise FishburnError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    return FAMILIES[family](n)


def joint_table(family: str, stat_a: str, stat_b: str, n: int) -> JointTable:
    fa = statistic(family, stat_a)
    fb = statistic(family, stat_b)
    counts = Counter((fa(obj), fb(obj)) for obj in _objects(family, n))
    return JointTable(n, family, (stat_a, stat_b), dict(sorted(counts.items())))


def check_symmetry(t: JointTable) -> bool:
    return all(t.counts.get((b, a), 0) == c for (a, b), c in t.counts.items())


# -- reports ----------------------------------------------------------------

@dataclass
class Failure:
    check: str
    obj: object
    detail: dict

    def to_dict(self) -> dict:
        return {"check": self.check, "object": _jsonable(self.obj),
                "detail": _jsonable(self.detail)}


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (tuple, list, set, frozenset)):
        items = sorted(v) if isinstance(v, (set, frozenset)) else v
        return [_jsonable(x) for x in items]
    if hasattr(v, "to_json"):
        return v.to_json()
    return v


@dataclass
class SectionReport:
    name: str
    checked: int = 0
    failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, check: str, obj, **detail) -> None:
        self.failures.append(Failure(check, obj, detail))

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "failures": [f.to_dict() for f in self.failures],
                "notes": self.notes}

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"[{status}] {self.name}: {self.checked} checks"
        if self.failures:
            f = self.failures[0]
            out += f"; first failure {f.check} on {_jsonable(f.obj)}: {_jsonable(f.detail)}"
        return out


def _expect(rep: SectionReport, check: str, obj, got, want) -> None:
    rep.checked += 1
    if got != want:
        rep.fail(check, obj, got=got, expected=want)


# -- transport ----------------------------------------------------------------

def check_transport(n_max: int) -> SectionReport:
    """Statistic transport through theta, phi and alpha on every object of
    size at most ``n_max``."""
    if not 1 <= n_max <= 8:
        raise FishburnError(f"n_max must be in 1..8, got {n_max}")
    rep = SectionReport(f"transport n<={n_max}")
    for n in range(1, n_max + 1):
        for p in enumerate_avoiders(n):
            x = bj.theta(p)
            ps = perm_stats(p)
            xs = seq_stats(x)
            xh = seq_stats(modified_sequence(x))
            _expect(rep, "RLmin=zero", p, ps.RLmin, xs.zero)
            _expect(rep, "LRmin=max", p, ps.LRmin, xs.maxstat)
            _expect(rep, "RMAXL=RMIN", p, ps.rmaxl,
                    tuple(sorted(x[i - 1] for i in xs.rmin_indices)))
            _expect(rep, "delta=chi(hat)", p, ps.delta, xh.chi)
            _expect(rep, "RLmax=Rmin", p, ps.RLmax, xs.Rmin)
            _expect(rep, "LRmax=Rmax(hat)", p, ps.LRmax, xh.Rmax)
            _expect(rep, "s=2+asc", p, ps.s, 2 + asc(x))
            _expect(rep, "a=last", p, ps.a, x[-1])
            _expect(rep, "delta(1)=LRmax", p, ps.delta(1), ps.LRmax)

            m = matrix_stats(bj.alpha(p))
            _expect(rep, "LRmax=rsum1(alpha)", p, ps.LRmax, m.rsum1)
            _expect(rep, "RLmin=csum_dim(alpha)", p, ps.RLmin, m.csum_dim)
            _expect(rep, "RLmax=ne(alpha)", p, ps.RLmax, m.ne)
            _expect(rep, "LRmin=tr(alpha)", p, ps.LRmin, m.tr)

        for x in enumerate_ascent_sequences(n):
            a = bj.phi(x)
            xs = seq_stats(x)
            xh = seq_stats(modified_sequence(x))
            ms = matrix_stats(a)
            _expect(rep, "zero=rsum1", x, xs.zero, ms.rsum1)
            _expect(rep, "max=tr", x, xs.maxstat, ms.tr)
            _expect(rep, "RMIN=NE", x, xs.rmin_values, ms.ne_rows)
            _expect(rep, "chi(hat)=lambda", x, xh.chi, ms.lam)
            _expect(rep, "Rmin=ne", x, xs.Rmin, ms.ne)
            _expect(rep, "Rmax(hat)=csum_dim", x, xh.Rmax, ms.csum_dim)
            _expect(rep, "dim=asc+1", x, dim(a), asc(x) + 1)
            _expect(rep, "index=last+1", x, index(a), x[-1] + 1)
            _expect(rep, "chi(1)=Rmax(hat)", x, xh.chi(1), xh.Rmax)
            _expect(rep, "lambda(1)=csum_dim", x, ms.lam(1), ms.csum_dim)
    return rep


def check_roundtrips(n_max: int, fg_max: int | None = None) -> SectionReport:
    """theta/theta_inv, phi/psi and flip round-trips, and f(g(A, i)) = A."""
    fg_max = min(n_max, 7) if fg_max is None else fg_max
    rep = SectionReport(f"round-trips n<={n_max}, f.g n<={fg_max}")
    for n in range(1, n_max + 1):
        for p in enumerate_avoiders(n):
            _expect(rep, "theta_inv.theta", p, bj.theta_inv(bj.theta(p)), p)
        for x in enumerate_ascent_sequences(n):
            _expect(rep, "theta.theta_inv", x, bj.theta(bj.theta_inv(x)), x)
            _expect(rep, "psi.phi", x, bj.psi(bj.phi(x)), x)
        for a in enumerate_fishburn_matrices(n):
            _expect(rep, "phi.psi", a, bj.phi(bj.psi(a)), a)
            _expect(rep, "flip.flip", a, bj.flip(bj.flip(a)), a)
            fa, ma = matrix_stats(bj.flip(a)), matrix_stats(a)
            _expect(rep, "flip stats", a,
                    (ma.rsum1, ma.tr, ma.ne, ma.csum_dim),
                    (fa.csum_dim, fa.tr, fa.ne, fa.rsum1))
            if n <= fg_max:
                for i in range(dim(a) + 1):
                    g = bj.addition_g(a, i)
                    _expect(rep, f"f.g(i={i})", a, bj.removal_f(g), a)
                    _expect(rep, f"index.g(i={i})", a, index(g), i + 1)
    return rep


def check_avoider_oracle(n_max: int) -> SectionReport:
    rep = SectionReport(f"avoider generation vs factorial filter n<={n_max}")
    for n in range(1, n_max + 1):
        _expect(rep, "set equality", n, set(enumerate_avoiders(n)), filter_avoiders(n))
    return rep


def check_symmetries(n_max: int) -> tuple[SectionReport, list[JointTable]]:
    rep = SectionReport(f"symmetric joint distributions n<={n_max}")
    tables = []
    for n in range(1, n_max + 1):
        F = fishburn_numbers(n)[n]
        group = [joint_table(fam, sa, sb, n) for fam, sa, sb in SYMMETRIC_PAIRS]
        for t in group:
            _expect(rep, "total=F_n", (t.family, *t.stat_pair, n), t.total, F)
            _expect(rep, "symmetric", (t.family, *t.stat_pair, n), check_symmetry(t), True)
        ref = group[0].counts
        for t in group[1:]:
            _expect(rep, "tables agree", (t.family, *t.stat_pair, n), t.counts, ref)
        tables.extend(group)
    return rep, tables


# -- the non-commutation with inversion -------------------------------------

@dataclass
class RemarkReport:
    perm: tuple[int, ...]
    inverse: tuple[int, ...]
    inverse_avoids: bool
    theta: tuple[int, ...] | None = None
    theta_inverse: tuple[int, ...] | None = None
    asc: tuple[int, int] | None = None
    dims: tuple[int, int] | None = None
    alpha: tuple | None = None
    alpha_inverse: tuple | None = None
    commutes: bool | None = None

    def to_dict(self) -> dict:
        return {k: _jsonable(v) for k, v in self.__dict__.items()}

    def text(self) -> str:
        if not self.inverse_avoids:
            return f"pi = {_s(self.perm)}: inverse not an avoider ({_s(self.inverse)})"
        return "\n".join([
            f"pi = {_s(self.perm)}, pi^-1 = {_s(self.inverse)}",
            f"theta(pi) = {''.join(map(str, self.theta))}, "
            f"theta(pi^-1) = {''.join(map(str, self.theta_inverse))}",
            f"asc: {self.asc[0]} vs {self.asc[1]}; dim of phi images: "
            f"{self.dims[0]} vs {self.dims[1]}",
            "alpha(pi^-1) " + ("==" if self.commutes else "!=") + " flip(alpha(pi))",
        ])


def _s(p) -> str:
    return " ".join(map(str, p))


def check_remark(p) -> RemarkReport:
    p = tuple(p)
    q = inverse(p)
    # the avoider class is closed under inversion, so this also catches a
    # containing p
    rep = RemarkReport(p, q, not contains_pattern(q))
    if not rep.inverse_avoids:
        return rep
    x, y = bj.theta(p), bj.theta(q)
    ax, ay = bj.phi(x), bj.phi(y)
    rep.theta, rep.theta_inverse = x, y
    rep.asc = (asc(x), asc(y))
    rep.dims = (dim(ax), dim(ay))
    rep.alpha, rep.alpha_inverse = bj.flip(ax), bj.flip(ay)
    rep.commutes = rep.alpha_inverse == bj.flip(rep.alpha)
    return rep


# -- full harness -------------------------------------------------------------

CHECKS = ("counts", "roundtrips", "transport", "symmetry", "remark")


@dataclass
class VerificationReport:
    profile: str
    n_max: int
    sections: list[SectionReport]
    tables: list[JointTable]
    counts: object = None
    remark: RemarkReport | None = None

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.sections)

    def to_dict(self) -> dict:
        return {
            "profile": self.profile, "n_max": self.n_max, "passed": self.passed,
            "sections": [s.to_dict() for s in self.sections],
            "counts": self.counts.to_dict() if self.counts else None,
            "tables": [t.to_dict() for t in self.tables],
            "remark": self.remark.to_dict() if self.remark else None,
        }

    def text(self) -> str:
        out = [f"profile {self.profile} (n <= {self.n_max})"]
        if self.counts is not None:
            out.append(self.counts.table())
        if self.remark is not None:
            out.append(self.remark.text())
        out.extend(s.line() for s in self.sections)
        out.append("OVERALL: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(out)


def run_verification(profile: str = "ci", only: Iterable[str] | None = None) -> VerificationReport:
    if profile not in PROFILES:
        raise FishburnError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}")
    n_max = PROFILES[profile]
    only = set(CHECKS if not only else only)
    unknown = only - set(CHECKS)
    if unknown:
        raise FishburnError(f"unknown checks {sorted(unknown)}; choose from {list(CHECKS)}")
    report = VerificationReport(profile, n_max, [], [])

    if "counts" in only:
        counts = cross_check_counts(n_max)
        sec = SectionReport(f"counts n<={n_max}", checked=len(counts.records))
        for r in counts.failures:
            sec.fail("count", (r.family, r.n), got=r.count, expected=r.expected)
        report.counts = counts
        report.sections.append(sec)
        report.sections.append(check_avoider_oracle(min(n_max, 7)))
    if "roundtrips" in only:
        report.sections.append(check_roundtrips(n_max))
    if "transport" in only:
        report.sections.append(check_transport(n_max))
    if "symmetry" in only:
        sec, tables = check_symmetries(n_max)
        report.sections.append(sec)
        report.tables = tables
    if "remark" in only:
        rem = check_remark(REMARK_PERM)
        sec = SectionReport("remark 85231647")
        _expect(sec, "theta(pi)", REMARK_PERM, rem.theta, (0, 1, 1, 0, 2, 1, 0, 3))
        _expect(sec, "theta(pi^-1)", REMARK_PERM, rem.theta_inverse, (0, 1, 2, 2, 3, 1, 3, 1))
        _expect(sec, "asc", REMARK_PERM, rem.asc, (3, 4))
        _expect(sec, "dims", REMARK_PERM, rem.dims, (4, 5))
        _expect(sec, "alpha(pi^-1) != flip(alpha(pi))", REMARK_PERM, rem.commutes, False)
        report.remark = rem
        report.sections.append(sec)
    return report
