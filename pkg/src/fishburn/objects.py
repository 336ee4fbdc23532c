"""Permutations, ascent sequences and Fishburn matrices.

Objects are plain immutable Python values:

* a permutation is a tuple of the integers ``1..n``;
* an ascent sequence is a tuple of nonnegative integers;
* a Fishburn matrix is a square tuple of row tuples (dense, 0-based
  internally; all user-facing positions are 1-based).
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence


class FishburnError(ValueError):
    """Base class for invalid input to any routine of this package."""


class InvalidObjectError(FishburnError):
    pass


def ascents(xs: Sequence[int]) -> list[int]:
    """1-based ascent positions ``i`` with ``xs[i] < xs[i+1]``."""
    return [i + 1 for i in range(len(xs) - 1) if xs[i] < xs[i + 1]]


def asc(xs: Sequence[int]) -> int:
    return sum(1 for i in range(len(xs) - 1) if xs[i] < xs[i + 1])


# -- permutations -----------------------------------------------------------

def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def check_permutation(p: Sequence[int]) -> tuple[int, ...]:
    p = tuple(p)
    if not is_permutation(p):
        raise InvalidObjectError(f"not a permutation of 1..{len(p)}: {list(p)}")
    return p


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p, 1):
        inv[v - 1] = i
    return tuple(inv)


# -- ascent sequences -------------------------------------------------------

def first_ascent_violation(xs: Sequence[int]) -> int | None:
    """Return the 1-based index of the first entry breaking the ascent
    bound, or None if ``xs`` is an ascent sequence."""
    if len(xs) == 0:
        return 0
    if xs[0] != 0:
        return 1
    n_asc = 0
    for i in range(1, len(xs)):
        x = xs[i]
        if not isinstance(x, int) or x < 0 or x > n_asc + 1:
            return i + 1
        if xs[i - 1] < x:
            n_asc += 1
    return None


def validate_ascent_sequence(xs: Sequence[int]) -> bool:
    return first_ascent_violation(xs) is None


def check_ascent_sequence(xs: Sequence[int]) -> tuple[int, ...]:
    xs = tuple(xs)
    bad = first_ascent_violation(xs)
    if bad is not None:
        if bad == 0:
            raise InvalidObjectError("ascent sequence must be nonempty")
        if bad == 1:
            raise InvalidObjectError(
                f"not an ascent sequence: entry 1 is {xs[0]}, must be 0")
        raise InvalidObjectError(
            f"not an ascent sequence: entry {bad} ({xs[bad - 1]}) exceeds "
            f"asc(x_1..x_{bad - 1})+1")
    return xs


def enumerate_ascent_sequences(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every ascent sequence of length ``n`` in lexicographic order."""
    if n < 1:
        raise FishburnError(f"n must be >= 1, got {n}")
    seq = [0] * n

    def rec(k: int, n_asc: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(seq)
            return
        prev = seq[k - 1]
        for v in range(n_asc + 2):
            seq[k] = v
            yield from rec(k + 1, n_asc + (prev < v))

    yield from rec(1, 0)


# -- Fishburn matrices ------------------------------------------------------

Matrix = tuple[tuple[int, ...], ...]


def validate_fishburn_matrix(grid) -> bool:
    """Square, upper triangular, nonnegative, no zero row or column."""
    try:
        rows = [list(r) for r in grid]
    except TypeError:
        return False
    k = len(rows)
    if k == 0 or any(len(r) != k for r in rows):
        return False
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                return False
            if i > j and v != 0:
                return False
    if any(sum(r) == 0 for r in rows):
        return False
    return all(any(rows[i][j] for i in range(k)) for j in range(k))


def check_fishburn_matrix(grid) -> Matrix:
    if not validate_fishburn_matrix(grid):
        raise InvalidObjectError(f"not a Fishburn matrix: {grid!r}")
    return tuple(tuple(r) for r in grid)


def weight(a: Matrix) -> int:
    return sum(map(sum, a))


def dim(a: Matrix) -> int:
    return len(a)


def index(a: Matrix) -> int:
    """Smallest 1-based row with a nonzero entry in the last column."""
    k = len(a)
    for i in range(k):
        if a[i][k - 1]:
            return i + 1
    raise InvalidObjectError("last column is zero")


def enumerate_fishburn_matrices(n: int) -> Iterator[Matrix]:
    """Yield every Fishburn matrix of weight ``n``, ordered by dimension and
    then lexicographically on the row-major entries.

    Brute force over upper-triangular fillings; rows and columns are checked
    as soon as they are complete, which keeps the search small.
    """
    if n < 1:
        raise FishburnError(f"n must be >= 1, got {n}")
    for k in range(1, n + 1):
        yield from _fillings(n, k)


def _fillings(n: int, k: int) -> Iterator[Matrix]:
    grid = [[0] * k for _ in range(k)]
    colsum = [0] * k
    cells = [(i, j) for i in range(k) for j in range(i, k)]

    def rec(c: int, left: int, rowsum: int) -> Iterator[Matrix]:
        if c == len(cells):
            if left == 0:
                yield tuple(tuple(r) for r in grid)
            return
        i, j = cells[c]
        last_in_row = j == k - 1
        # rows i+1..k-1 still need at least one unit each
        budget = left - (k - 1 - i)
        for v in range(budget + 1):
            grid[i][j] = v
            colsum[j] += v
            # column i is complete once row i is, since lower rows are zero
            if not last_in_row or (rowsum + v > 0 and colsum[i] > 0):
                yield from rec(c + 1, left - v, 0 if last_in_row else rowsum + v)
            colsum[j] -= v
        grid[i][j] = 0

    yield from rec(0, n, 0)


# -- polynomials in q -------------------------------------------------------

class StatPolynomial:
    """Sparse polynomial in ``q`` with positive integer coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        self._coeffs = {int(e): int(c) for e, c in dict(coeffs).items() if c}
        if any(e < 0 or c < 0 for e, c in self._coeffs.items()):
            raise FishburnError(f"negative exponent or coefficient: {coeffs!r}")

    @classmethod
    def from_exponents(cls, exps) -> "StatPolynomial":
        """Sum of ``q**e`` over ``exps``, repeats counted."""
        out: dict[int, int] = {}
        for e in exps:
            out[e] = out.get(e, 0) + 1
        return cls(out)

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(sorted(self._coeffs.items()))

    def __call__(self, q):
        return sum(c * q ** e for e, c in self._coeffs.items())

    def __eq__(self, other):
        if isinstance(other, StatPolynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self):
        return f"StatPolynomial({self.coeffs})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        terms = []
        for e, c in sorted(self._coeffs.items()):
            if e == 0:
                terms.append(str(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms)

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in sorted(self._coeffs.items())}

    @classmethod
    def from_json(cls, obj) -> "StatPolynomial":
        return cls({int(e): c for e, c in obj.items()})
