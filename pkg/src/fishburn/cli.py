"""Command line: ``fishburn {enumerate,map,stats,table,verify,numbers}``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bijections as bj
from .formats import format_text, parse, to_json
from .objects import (
    FishburnError,
    enumerate_ascent_sequences,
    enumerate_fishburn_matrices,
    index,
)
from .oracle import fishburn_numbers
from .patterns import active_sites, enumerate_avoiders
from .stats import matrix_stats, modified_sequence, perm_stats, seq_stats
from .verify import CHECKS, PROFILES, check_symmetry, joint_table, run_verification

ENUM_BUDGET = 9

FAMILY_ALIASES = {
    "avoiders": "avoiders", "perm": "avoiders", "perms": "avoiders",
    "sequences": "sequences", "seq": "sequences", "seqs": "sequences",
    "matrices": "matrices", "matrix": "matrices",
}
FAMILY_KIND = {"avoiders": "perm", "sequences": "seq", "matrices": "matrix"}
ENUMERATORS = {
    "avoiders": enumerate_avoiders,
    "sequences": enumerate_ascent_sequences,
    "matrices": enumerate_fishburn_matrices,
}


class UsageError(FishburnError):
    pass


def _family(name: str) -> str:
    try:
        return FAMILY_ALIASES[name]
    except KeyError:
        raise UsageError(f"unknown family {name!r}; choose from avoiders, "
                         f"sequences, matrices") from None


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data))
    else:
        print(text)


# -- commands -----------------------------------------------------------------

def cmd_enumerate(args) -> int:
    family = _family(args.family)
    if args.n < 1:
        raise UsageError("n must be >= 1")
    if args.n > ENUM_BUDGET:
        raise UsageError(f"n = {args.n} exceeds the listing budget {ENUM_BUDGET}; "
                         f"use `numbers {args.n}` for counts only")
    kind = FAMILY_KIND[family]
    objs = list(ENUMERATORS[family](args.n))
    _emit(args, "\n".join(format_text(kind, o) for o in objs),
          [to_json(kind, o) for o in objs])
    return 0


def _seq_str(x) -> str:
    return " ".join(map(str, x))


def _theta_chain_lines(x) -> list[str]:
    chain = bj.theta_chain(x)
    lines = [str(chain[0])]
    for k, lab in enumerate(chain[1:], 2):
        lines.append(f"--x_{k}={x[k - 1]}--> {lab}")
    return lines


def _matrix_chain_lines(chain) -> list[str]:
    return [f"A^({k}) [index {index(m)}]: {format_text('matrix', m)}"
            for k, m in enumerate(chain, 1)]


def cmd_map(args) -> int:
    src, tgt = args.source, args.target
    obj = parse(src, args.object)
    chain: list[str] = []
    via = args.via

    if (src, tgt) == ("perm", "seq"):
        out = bj.theta(obj)
        chain = _theta_chain_lines(out)
    elif (src, tgt) == ("seq", "perm"):
        out = bj.theta_inv(obj)
        chain = _theta_chain_lines(obj)
    elif (src, tgt) == ("seq", "matrix"):
        out = bj.phi(obj)
        chain = _matrix_chain_lines(bj.phi_chain(obj))
    elif (src, tgt) == ("matrix", "seq"):
        out = bj.psi(obj)
        chain = _matrix_chain_lines(bj.psi_chain(obj))
    elif (src, tgt) == ("matrix", "matrix"):
        out = bj.flip(obj)
    elif (src, tgt) == ("perm", "matrix"):
        x = bj.theta(obj)
        m = bj.phi(x)
        out = bj.flip(m) if via == "alpha" else m
        chain = (_theta_chain_lines(x) + _matrix_chain_lines(bj.phi_chain(x)))
        if via == "alpha":
            chain.append(f"flip: {format_text('matrix', out)}")
    elif (src, tgt) == ("matrix", "perm"):
        m = bj.flip(obj) if via == "alpha" else obj
        x = bj.psi(m)
        out = bj.theta_inv(x)
        chain = _matrix_chain_lines(bj.psi_chain(m)) + _theta_chain_lines(x)
    else:
        raise UsageError(f"no map from {src} to {tgt}")

    text = format_text(tgt, out)
    data = {"source": src, "target": tgt, "input": to_json(src, obj),
            "output": to_json(tgt, out)}
    if args.chain:
        text = "\n".join(chain + [text]) if chain else text
        data["chain"] = chain
    _emit(args, text, data)
    return 0


def _poly_lines(d: dict, polys: dict) -> list[str]:
    lines = []
    for k, v in d.items():
        if k in polys:
            lines.append(f"{k}: {polys[k]}")
        elif isinstance(v, list):
            lines.append(f"{k}: " + (" ".join(
                "(" + ",".join(map(str, c)) + ")" if isinstance(c, list) else str(c)
                for c in v) or "-"))
        else:
            lines.append(f"{k}: {v}")
    return lines


def cmd_stats(args) -> int:
    kind = args.kind
    obj = parse(kind, args.object)
    if kind == "perm":
        st = perm_stats(obj)
        d = st.to_dict()
        d["sites"] = str(active_sites(obj))
        lines = _poly_lines(d, {"delta": st.delta})
    elif kind == "seq":
        st = seq_stats(obj)
        hat = modified_sequence(obj)
        hs = seq_stats(hat)
        d = st.to_dict()
        d.pop("chi")
        d["modified"] = list(hat)
        d["Rmax_hat"] = hs.Rmax
        d["chi_hat"] = hs.chi.to_json()
        lines = _poly_lines(d, {"chi_hat": hs.chi})
    else:
        st = matrix_stats(obj)
        d = st.to_dict()
        lines = _poly_lines(d, {"lambda": st.lam})
    _emit(args, "\n".join(lines), {"kind": kind, "object": to_json(kind, obj), "stats": d})
    return 0


def cmd_table(args) -> int:
    family = _family(args.family)
    if args.n > ENUM_BUDGET:
        raise UsageError(f"n = {args.n} exceeds the budget {ENUM_BUDGET}")
    t = joint_table(family, args.stat_a, args.stat_b, args.n)
    sym = check_symmetry(t)
    _emit(args, f"{t.grid()}\ntotal: {t.total}\nsymmetric: {sym}",
          {**t.to_dict(), "symmetric": sym})
    return 0


def cmd_verify(args) -> int:
    report = run_verification(args.profile, args.only)
    _emit(args, report.text(), report.to_dict())
    return 0 if report.passed else 1


def cmd_numbers(args) -> int:
    F = fishburn_numbers(args.N)
    _emit(args, "\n".join(f"{n} {f}" for n, f in enumerate(F)), F)
    return 0


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    ap = argparse.ArgumentParser(
        prog="fishburn",
        description="Avoiders, ascent sequences and Fishburn matrices.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[fmt], help="list a family")
    p.add_argument("family")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", parents=[fmt], help="apply a bijection")
    p.add_argument("source", choices=("perm", "seq", "matrix"))
    p.add_argument("target", choices=("perm", "seq", "matrix"))
    p.add_argument("object")
    p.add_argument("--via", choices=("alpha", "phi"), default="alpha",
                   help="perm<->matrix: with the flip (alpha) or without (phi)")
    p.add_argument("--chain", action="store_true",
                   help="also print intermediate steps")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("stats", parents=[fmt], help="statistics of one object")
    p.add_argument("kind", choices=("perm", "seq", "matrix"))
    p.add_argument("object")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("table", parents=[fmt], help="joint distribution table")
    p.add_argument("family")
    p.add_argument("stat_a")
    p.add_argument("stat_b")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[fmt], help="run the exhaustive checks")
    p.add_argument("profile", choices=tuple(PROFILES), nargs="?", default="ci")
    p.add_argument("--only", action="append", choices=CHECKS,
                   help="restrict to one check (repeatable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("numbers", parents=[fmt], help="Fishburn numbers F_0..F_N")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_numbers)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FishburnError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
