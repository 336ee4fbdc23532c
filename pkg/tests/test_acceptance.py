"""Exit criteria, one test per criterion.

Each test prints a ``criterion N: PASS|FAIL`` line (also collected into the
terminal summary).  All comparisons are exact.
"""

import time

import pytest

from fishburn.bijections import (
    addition_step,
    alpha,
    flip,
    phi,
    psi,
    removal_f,
    removal_step,
    theta,
    theta_chain,
    theta_inv,
)
from fishburn.objects import StatPolynomial, ascents, dim, inverse
from fishburn.oracle import fishburn_numbers
from fishburn.stats import matrix_stats, modified_sequence, perm_stats, seq_stats
from fishburn.verify import check_symmetry, joint_table, run_verification

from conftest import ACCEPTANCE_LINES, avoiders, matrices, sequences

N_MAX = 8
LONG_PROFILE_SECONDS = 60.0


@pytest.fixture
def criterion(request):
    num = request.node.get_closest_marker("criterion").args[0]
    state = {"detail": ""}
    yield state
    rep = getattr(request.node, "rep_call", None)
    failed = rep is None or rep.failed
    line = f"criterion {num}: {'FAIL' if failed else 'PASS'} {state['detail']}".rstrip()
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.mark.criterion(1)
def test_counts(criterion):
    F = fishburn_numbers(N_MAX)
    assert F[3] == 5
    assert F[8] == 5335
    assert sequences(3) == ((0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2))
    assert set(matrices(3)) == {
        ((3,),), ((2, 0), (0, 1)), ((1, 1), (0, 1)), ((1, 0), (0, 2)),
        ((1, 0, 0), (0, 1, 0), (0, 0, 1))}
    for n in range(1, N_MAX + 1):
        assert len(sequences(n)) == len(matrices(n)) == len(avoiders(n)) == F[n], n

    start = time.perf_counter()
    report = run_verification("long")
    elapsed = time.perf_counter() - start
    assert report.passed, report.text()
    assert elapsed < LONG_PROFILE_SECONDS
    criterion["detail"] = f"(F_1..F_8 = {F[1:]}, long profile {elapsed:.1f}s)"


@pytest.mark.criterion(2)
def test_theta_golden(criterion):
    p = (8, 5, 2, 3, 1, 6, 4, 7)
    x = (0, 1, 1, 0, 2, 1, 0, 3)
    assert theta(p) == x
    assert theta_inv(x) == p
    chain = theta_chain(x)
    # each step inserts k at the stated label of the previous labelling
    for k in range(2, 9):
        prev, cur = chain[k - 2], chain[k - 1]
        assert cur.perm.index(k) == prev.gap_of(x[k - 1])
    assert [str(c) for c in chain] == [
        "_1 1 _0",
        "_2 2 _1 1 _0",
        "_2 2 3 _1 1 _0",
        "_2 2 3 1 _1 4 _0",
        "_3 5 _2 2 3 1 _1 4 _0",
        "_3 5 2 3 1 _2 6 _1 4 _0",
        "_3 5 2 3 1 _2 6 4 _1 7 _0",
        "_4 8 _3 5 2 3 1 _2 6 4 _1 7 _0",
    ]
    assert list(x[1:]) == [1, 1, 0, 2, 1, 0, 3]


@pytest.mark.criterion(3)
def test_removal_addition_golden(criterion):
    A = ((1, 2, 0, 0), (0, 2, 1, 0), (0, 0, 2, 1), (0, 0, 0, 2))
    B = ((1, 0, 2, 0), (0, 3, 0, 0), (0, 0, 2, 0), (0, 0, 0, 1))
    C = ((2, 4, 1, 3, 0), (0, 5, 2, 2, 0), (0, 0, 0, 0, 1), (0, 0, 0, 1, 3),
         (0, 0, 0, 0, 2))
    fa, fb, fc = removal_step(A), removal_step(B), removal_step(C)
    assert (fa.rule, fa.matrix) == ("R1", ((1, 2, 0, 0), (0, 2, 1, 0), (0, 0, 2, 0),
                                           (0, 0, 0, 2)))
    assert (fb.rule, fb.matrix) == ("R2", ((1, 0, 2), (0, 3, 0), (0, 0, 2)))
    assert (fc.rule, fc.matrix, fc.columns) == (
        "R3", ((2, 4, 1, 3), (0, 5, 2, 2), (0, 0, 1, 3), (0, 0, 0, 2)), (3, 4))

    G = ((2, 4, 0, 3), (0, 5, 0, 2), (0, 0, 1, 3), (0, 0, 0, 2))
    g0, g4, g1 = addition_step(G, 0), addition_step(G, 4), addition_step(G, 1)
    assert (g0.rule, g0.matrix) == ("A1", ((2, 4, 0, 4), (0, 5, 0, 2), (0, 0, 1, 3),
                                           (0, 0, 0, 2)))
    assert (g4.rule, g4.matrix) == ("A2", ((2, 4, 0, 3, 0), (0, 5, 0, 2, 0),
                                           (0, 0, 1, 3, 0), (0, 0, 0, 2, 0),
                                           (0, 0, 0, 0, 1)))
    assert (g1.rule, g1.matrix, g1.columns) == (
        "A3", ((2, 4, 3, 0, 0), (0, 0, 0, 0, 1), (0, 0, 5, 0, 2), (0, 0, 0, 1, 3),
               (0, 0, 0, 0, 2)), (3, 5))


@pytest.mark.criterion(4)
def test_roundtrips(criterion):
    from fishburn.bijections import addition_g
    n_fg = 0
    for n in range(1, N_MAX + 1):
        for p in avoiders(n):
            assert theta_inv(theta(p)) == p
        for x in sequences(n):
            assert theta(theta_inv(x)) == x
            assert psi(phi(x)) == x
        for a in matrices(n):
            assert phi(psi(a)) == a
            if n <= 7:
                for i in range(dim(a) + 1):
                    assert removal_f(addition_g(a, i)) == a
                    n_fg += 1
    criterion["detail"] = f"(f.g checked on {n_fg} pairs)"


@pytest.mark.criterion(5)
def test_theta_transport(criterion):
    count = 0
    for n in range(1, N_MAX + 1):
        for p in avoiders(n):
            x = theta(p)
            ps, xs = perm_stats(p), seq_stats(x)
            xh = seq_stats(modified_sequence(x))
            assert (ps.RLmin, ps.LRmin, ps.RLmax) == (xs.zero, xs.maxstat, xs.Rmin), p
            assert ps.LRmax == xh.Rmax, p
            assert ps.delta == xh.chi, p
            count += 1
    criterion["detail"] = f"({count} avoiders)"


@pytest.mark.criterion(6)
def test_phi_transport(criterion):
    count = 0
    for n in range(1, N_MAX + 1):
        for x in sequences(n):
            a = phi(x)
            xs, ms = seq_stats(x), matrix_stats(a)
            xh = seq_stats(modified_sequence(x))
            assert (xs.zero, xs.maxstat, xs.Rmin) == (ms.rsum1, ms.tr, ms.ne), x
            assert xh.Rmax == ms.csum_dim, x
            assert xs.rmin_values == ms.ne_rows, x
            assert xh.chi == ms.lam, x
            count += 1
    criterion["detail"] = f"({count} ascent sequences)"


@pytest.mark.criterion(7)
def test_alpha_bullets(criterion):
    for n in range(1, N_MAX + 1):
        for p in avoiders(n):
            ps = perm_stats(p)
            m = matrix_stats(flip(phi(theta(p))))
            assert ps.LRmax == m.rsum1, p
            assert ps.RLmin == m.csum_dim, p
            assert ps.RLmax == m.ne, p
            assert ps.LRmin == m.tr, p
            assert alpha(p) == flip(phi(theta(p)))


@pytest.mark.criterion(8)
def test_symmetry_tables(criterion):
    for n in range(1, N_MAX + 1):
        for family, a, b in (("matrices", "rsum1", "ne"),
                             ("sequences", "zero", "Rmin"),
                             ("avoiders", "LRmax", "RLmax")):
            t = joint_table(family, a, b, n)
            assert check_symmetry(t), (family, n)
            assert t.total == fishburn_numbers(n)[n]


@pytest.mark.criterion(9)
def test_remark(criterion):
    p = (8, 5, 2, 3, 1, 6, 4, 7)
    q = inverse(p)
    assert q == (5, 3, 4, 7, 2, 6, 8, 1)
    x, y = theta(p), theta(q)
    assert x == (0, 1, 1, 0, 2, 1, 0, 3)
    assert y == (0, 1, 2, 2, 3, 1, 3, 1)
    assert (len(ascents(x)), len(ascents(y))) == (3, 4)
    assert (dim(phi(x)), dim(phi(y))) == (4, 5)
    assert alpha(q) != flip(alpha(p))


@pytest.mark.criterion(10)
def test_worked_statistics(criterion):
    st = perm_stats((4, 2, 1, 7, 8, 5, 3, 6))
    assert set(st.rmaxl) == {0, 2}
    assert st.lmaxl == (2, 2, 3)
    assert st.delta == StatPolynomial({2: 2, 3: 1})
    assert str(st.delta) == "2q^2 + q^3"
    x = (0, 1, 0, 1, 2, 2, 1, 3)
    assert ascents(x) == [1, 3, 4, 7]
    assert modified_sequence(x) == (0, 4, 0, 1, 2, 2, 1, 3)
