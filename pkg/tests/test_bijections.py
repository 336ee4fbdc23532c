import pytest
from hypothesis import given, strategies as st

from fishburn.bijections import (
    addition_g,
    addition_step,
    alpha,
    alpha_inv,
    flip,
    phi,
    phi_chain,
    psi,
    removal_f,
    removal_step,
    theta,
    theta_chain,
    theta_inv,
)
from fishburn.objects import (
    FishburnError,
    asc,
    dim,
    index,
    validate_ascent_sequence,
    validate_fishburn_matrix,
    weight,
)
from fishburn.patterns import PatternError

from conftest import avoiders, matrices, sequences

A_R1 = ((1, 2, 0, 0), (0, 2, 1, 0), (0, 0, 2, 1), (0, 0, 0, 2))
B_R2 = ((1, 0, 2, 0), (0, 3, 0, 0), (0, 0, 2, 0), (0, 0, 0, 1))
C_R3 = ((2, 4, 1, 3, 0), (0, 5, 2, 2, 0), (0, 0, 0, 0, 1),
        (0, 0, 0, 1, 3), (0, 0, 0, 0, 2))
A_ADD = ((2, 4, 0, 3), (0, 5, 0, 2), (0, 0, 1, 3), (0, 0, 0, 2))


class TestTheta:
    @pytest.mark.parametrize("p, x", [
        ((8, 5, 2, 3, 1, 6, 4, 7), (0, 1, 1, 0, 2, 1, 0, 3)),
        ((1,), (0,)),
        ((5, 3, 4, 7, 2, 6, 8, 1), (0, 1, 2, 2, 3, 1, 3, 1)),
        ((1, 2, 3), (0, 0, 0)),
    ])
    def test_golden(self, p, x):
        assert theta(p) == x
        assert theta_inv(x) == p

    def test_chain_matches_insertion_display(self):
        steps = [str(lab) for lab in theta_chain((0, 1, 1, 0, 2, 1, 0, 3))]
        assert steps == [
            "_1 1 _0",
            "_2 2 _1 1 _0",
            "_2 2 3 _1 1 _0",
            "_2 2 3 1 _1 4 _0",
            "_3 5 _2 2 3 1 _1 4 _0",
            "_3 5 2 3 1 _2 6 _1 4 _0",
            "_3 5 2 3 1 _2 6 4 _1 7 _0",
            "_4 8 _3 5 2 3 1 _2 6 4 _1 7 _0",
        ]

    def test_rejects_containing(self):
        with pytest.raises(PatternError):
            theta((4, 2, 5, 1, 3))

    def test_theta_inv_rejects_bad_sequence(self):
        with pytest.raises(FishburnError, match="entry 2"):
            theta_inv((0, 2))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_roundtrips(self, n):
        for p in avoiders(n):
            assert theta_inv(theta(p)) == p
        images = {theta(p) for p in avoiders(n)}
        assert images == set(sequences(n))

    @given(st.integers(1, 12).flatmap(
        lambda n: st.lists(st.integers(0, n), min_size=n, max_size=n)))
    def test_theta_of_theta_inv_random(self, xs):
        xs[0] = 0
        for i in range(1, len(xs)):
            xs[i] = min(xs[i], asc(xs[:i]) + 1)
        assert theta(theta_inv(xs)) == tuple(xs)


class TestRemoval:
    def test_r1(self):
        st_ = removal_step(A_R1)
        assert st_.rule == "R1"
        assert st_.matrix == ((1, 2, 0, 0), (0, 2, 1, 0), (0, 0, 2, 0), (0, 0, 0, 2))

    def test_r2(self):
        st_ = removal_step(B_R2)
        assert st_.rule == "R2"
        assert st_.matrix == ((1, 0, 2), (0, 3, 0), (0, 0, 2))

    def test_r3(self):
        st_ = removal_step(C_R3)
        assert st_.rule == "R3"
        assert st_.columns == (3, 4)
        assert st_.matrix == ((2, 4, 1, 3), (0, 5, 2, 2), (0, 0, 1, 3), (0, 0, 0, 2))

    def test_weight_one(self):
        with pytest.raises(FishburnError, match="no predecessor"):
            removal_f(((1,),))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_lands_in_smaller_family(self, n):
        smaller = set(matrices(n - 1))
        for a in matrices(n):
            assert removal_f(a) in smaller


class TestAddition:
    def test_a1(self):
        st_ = addition_step(A_ADD, 0)
        assert st_.rule == "A1"
        assert st_.matrix == ((2, 4, 0, 4), (0, 5, 0, 2), (0, 0, 1, 3), (0, 0, 0, 2))

    def test_a2(self):
        st_ = addition_step(A_ADD, 4)
        assert st_.rule == "A2"
        assert st_.matrix == ((2, 4, 0, 3, 0), (0, 5, 0, 2, 0), (0, 0, 1, 3, 0),
                              (0, 0, 0, 2, 0), (0, 0, 0, 0, 1))

    def test_a3(self):
        st_ = addition_step(A_ADD, 1)
        assert st_.rule == "A3"
        assert st_.columns == (3, 5)
        assert st_.matrix == ((2, 4, 3, 0, 0), (0, 0, 0, 0, 1), (0, 0, 5, 0, 2),
                              (0, 0, 0, 1, 3), (0, 0, 0, 0, 2))

    @pytest.mark.parametrize("i", [-1, 5])
    def test_out_of_range(self, i):
        with pytest.raises(FishburnError, match=r"\[0, 4\]"):
            addition_g(A_ADD, i)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_f_inverts_g(self, n):
        for a in matrices(n):
            for i in range(dim(a) + 1):
                g = addition_g(a, i)
                assert validate_fishburn_matrix(g)
                assert weight(g) == n + 1
                assert index(g) == i + 1
                assert removal_f(g) == a


class TestPhiPsi:
    @pytest.mark.parametrize("x, a", [
        ((0, 0, 0), ((3,),)),
        ((0, 1, 2), ((1, 0, 0), (0, 1, 0), (0, 0, 1))),
        ((0, 1, 0), ((1, 1), (0, 1))),
        ((0,), ((1,),)),
    ])
    def test_small(self, x, a):
        assert phi(x) == a
        assert psi(a) == x

    def test_psi_of_phi_worked_sequence(self):
        x = (0, 1, 1, 0, 2, 1, 0, 3)
        assert psi(phi(x)) == x
        assert len(phi_chain(x)) == 8

    @pytest.mark.parametrize("n", range(1, 9))
    def test_roundtrips(self, n):
        for x in sequences(n):
            a = phi(x)
            assert dim(a) == asc(x) + 1
            assert index(a) == x[-1] + 1
            assert psi(a) == x
        for a in matrices(n):
            x = psi(a)
            assert validate_ascent_sequence(x)
            assert phi(x) == a


class TestFlipAlpha:
    @pytest.mark.parametrize("a, b", [
        (((1, 1), (0, 1)), ((1, 1), (0, 1))),
        (((2, 0), (0, 1)), ((1, 0), (0, 2))),
        (((1, 2, 0), (0, 1, 0), (0, 0, 1)), ((1, 0, 0), (0, 1, 2), (0, 0, 1))),
    ])
    def test_flip(self, a, b):
        assert flip(a) == b
        assert flip(b) == a

    @pytest.mark.parametrize("n", range(1, 8))
    def test_flip_involution_on_family(self, n):
        fam = set(matrices(n))
        for a in fam:
            assert flip(a) in fam
            assert flip(flip(a)) == a

    def test_alpha_examples(self):
        assert alpha((1,)) == ((1,),)
        a = alpha((8, 5, 2, 3, 1, 6, 4, 7))
        assert a == flip(phi((0, 1, 1, 0, 2, 1, 0, 3)))
        assert dim(a) == 4
        assert dim(alpha((5, 3, 4, 7, 2, 6, 8, 1))) == 5

    @pytest.mark.parametrize("n", range(1, 8))
    def test_alpha_bijective(self, n):
        images = [alpha(p) for p in avoiders(n)]
        assert set(images) == set(matrices(n))
        for p, a in zip(avoiders(n), images):
            assert alpha_inv(a) == p
