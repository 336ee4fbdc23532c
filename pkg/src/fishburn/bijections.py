"""Bijections between avoiders, ascent sequences and Fishburn matrices.

``theta`` encodes an avoider by the labels of the active sites its maxima
were inserted into.  ``phi`` builds a matrix from an ascent sequence by
repeated ``addition_g``; ``psi`` peels it back with ``removal_f``.
``alpha`` is ``flip . phi . theta``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .objects import (
    FishburnError,
    Matrix,
    check_ascent_sequence,
    check_fishburn_matrix,
    check_permutation,
    dim,
    index,
    weight,
)
from .patterns import ActiveSiteLabeling, active_sites, require_avoider


# -- avoiders <-> ascent sequences ------------------------------------------

def _restrict(p: Sequence[int], k: int) -> tuple[int, ...]:
    return tuple(v for v in p if v <= k)


def theta(p: Sequence[int]) -> tuple[int, ...]:
    p = check_permutation(p)
    if not p:
        raise FishburnError("theta needs n >= 1")
    require_avoider(p)
    xs = [0]
    for k in range(2, len(p) + 1):
        prev = _restrict(p, k - 1)
        gap = _restrict(p, k).index(k)
        xs.append(active_sites(prev).labels[gap])
    return tuple(xs)


def theta_chain(x: Sequence[int]) -> list[ActiveSiteLabeling]:
    """Labelled permutations met while decoding ``x``, one per prefix."""
    x = check_ascent_sequence(x)
    chain = [active_sites((1,))]
    for label in x[1:]:
        lab = chain[-1]
        p = lab.perm
        g = lab.gap_of(label)
        chain.append(active_sites((*p[:g], len(p) + 1, *p[g:])))
    return chain


def theta_inv(x: Sequence[int]) -> tuple[int, ...]:
    return theta_chain(x)[-1].perm


# -- removal and addition on matrices ---------------------------------------

@dataclass(frozen=True)
class Step:
    """One application of ``removal_f`` or ``addition_g``.

    ``columns`` is the 1-based set S (removal, rule R3) or T (addition,
    rule A3), empty for the other rules.
    """

    rule: str
    matrix: Matrix
    columns: tuple[int, ...] = ()


def _freeze(rows: list[list[int]]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def removal_step(a: Matrix) -> Step:
    a = check_fishburn_matrix(a)
    if weight(a) < 2:
        raise FishburnError("weight-1 matrix has no predecessor under f")
    k = dim(a)
    r = index(a) - 1  # 0-based row
    rows = [list(row) for row in a]

    if sum(a[r]) > 1:
        rows[r][k - 1] -= 1
        return Step("R1", _freeze(rows))

    if r == k - 1:
        return Step("R2", _freeze([row[:-1] for row in rows[:-1]]))

    s = [j for j in range(r, k) if any(a[i][j] for i in range(r))]
    targets = s[1:] + [k - 1]
    for i in range(r):
        for src in s:
            rows[i][src] = 0
        for src, dst in zip(s, targets):
            rows[i][dst] = a[i][src]
    out = [row[:r] + row[r + 1:] for idx, row in enumerate(rows) if idx != r]
    return Step("R3", _freeze(out), tuple(j + 1 for j in s))


def removal_f(a: Matrix) -> Matrix:
    return removal_step(a).matrix


def addition_step(a: Matrix, i: int) -> Step:
    a = check_fishburn_matrix(a)
    k = dim(a)
    if not 0 <= i <= k:
        raise FishburnError(f"i = {i} out of range [0, dim(A)] = [0, {k}]")
    rows = [list(row) for row in a]

    if i <= index(a) - 1:
        rows[i][k - 1] += 1
        return Step("A1", _freeze(rows))

    if i == k:
        rows = [row + [0] for row in rows]
        rows.append([0] * k + [1])
        return Step("A2", _freeze(rows))

    # widen: new row/column sit at 0-based position i
    wide = [row[:i] + [0] + row[i:] for row in rows]
    new_row = [0] * (k + 1)
    new_row[k] = 1
    wide.insert(i, new_row)
    t = [j for j in range(i + 1, k + 1) if any(wide[a_][j] for a_ in range(i))]
    targets = [i] + t[:-1]
    out = [row[:] for row in wide]
    for a_ in range(i):
        for src in t:
            out[a_][src] = 0
        for src, dst in zip(t, targets):
            out[a_][dst] = wide[a_][src]
        out[a_][k] = 0
    return Step("A3", _freeze(out), tuple(j + 1 for j in t))


def addition_g(a: Matrix, i: int) -> Matrix:
    return addition_step(a, i).matrix


# -- ascent sequences <-> matrices ------------------------------------------

def phi_chain(x: Sequence[int]) -> list[Matrix]:
    """The matrices A^(1), ..., A^(n) built from ``x``."""
    x = check_ascent_sequence(x)
    chain: list[Matrix] = [((1,),)]
    for xk in x[1:]:
        chain.append(addition_g(chain[-1], xk))
    return chain


def phi(x: Sequence[int]) -> Matrix:
    return phi_chain(x)[-1]


def psi_chain(a: Matrix) -> list[Matrix]:
    """The matrices A^(1), ..., A^(n) with A^(n) = ``a`` and each one the
    image of the next under ``removal_f``."""
    a = check_fishburn_matrix(a)
    chain = [a]
    while weight(chain[-1]) > 1:
        chain.append(removal_f(chain[-1]))
    chain.reverse()
    return chain


def psi(a: Matrix) -> tuple[int, ...]:
    return tuple(index(m) - 1 for m in psi_chain(a))


def flip(a: Matrix) -> Matrix:
    """Transpose along the anti-diagonal."""
    k = dim(a)
    return tuple(tuple(a[k - 1 - j][k - 1 - i] for j in range(k))
                 for i in range(k))


def alpha(p: Sequence[int]) -> Matrix:
    return flip(phi(theta(p)))


def alpha_inv(a: Matrix) -> tuple[int, ...]:
    return theta_inv(psi(flip(check_fishburn_matrix(a))))
