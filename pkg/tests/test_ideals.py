import random
from itertools import combinations_with_replacement

import pytest

from glicci.algebra import Monomial, ONE, Variable
from glicci.ideals import (
    KPolynomial,
    MonomialIdeal,
    NotUnmixedError,
    UnitIdealError,
    depolarize,
    k_polynomial,
    minimal_covers,
    polarize,
    rebase,
    _pivot_numerator,
)

x, y, z = Variable(1), Variable(2), Variable(3)
x1, x2, x3, x4 = (Variable(i) for i in range(1, 5))


def M(pairs):
    return Monomial(dict(pairs))


def ideal(gens, universe):
    return MonomialIdeal.from_gens([M(g) for g in gens], universe)


def running_example():
    """I = (x1x2, x1x3, x3x4) from the pure 1-dimensional complex."""
    return ideal([[(x1, 1), (x2, 1)], [(x1, 1), (x3, 1)], [(x3, 1), (x4, 1)]],
                 [x1, x2, x3, x4])


def hilbert_count_oracle(I: MonomialIdeal, degree: int) -> list[int]:
    """Count standard monomials degree by degree (brute force)."""
    n = len(I.universe)
    out = []
    for d in range(degree + 1):
        cnt = 0
        for combo in combinations_with_replacement(range(n), d):
            m = Monomial({I.universe[i]: combo.count(i) for i in set(combo)})
            if not I.contains(m):
                cnt += 1
        out.append(cnt)
    return out


class TestBasics:
    def test_minimal_generators(self):
        I = ideal([[(x, 2)], [(x, 3)], [(x, 1), (y, 1)]], [x, y])
        assert I.gens == frozenset({M([(x, 2)]), M([(x, 1), (y, 1)])})
        J = ideal([[(x1, 1), (x2, 1)], [(x1, 1), (x2, 1), (y, 1)]], [x1, x2, y])
        assert J.gens == frozenset({M([(x1, 1), (x2, 1)])})
        K = ideal([[(x, 2)], [(x, 1), (y, 1)], [(y, 2)]], [x, y])
        assert len(K.gens) == 3

    def test_colon(self):
        I = running_example()
        assert I.colon(M([(x1, 1)])).gens == frozenset({M([(x2, 1)]), M([(x3, 1)])})
        assert I.colon(ONE) == I
        sq = ideal([[(x, 2)], [(x, 1), (y, 1)], [(y, 2)]], [x, y])
        assert sq.colon(M([(x, 1)])).gens == frozenset({M([(x, 1)]), M([(y, 1)])})

    def test_minimal_primes_running(self):
        primes = set(map(frozenset, running_example().minimal_primes()))
        assert primes == {frozenset({x2, x3}), frozenset({x1, x4}), frozenset({x1, x3})}

    def test_minimal_primes_simple(self):
        assert ideal([[(x, 1)]], [x, y]).minimal_primes() == [frozenset({x})]
        sq = ideal([[(y, 2)], [(y, 1), (z, 1)], [(z, 2)]], [y, z])
        assert sq.minimal_primes() == [frozenset({y, z})]
        with pytest.raises(UnitIdealError):
            MonomialIdeal.unit([x]).minimal_primes()

    def test_heights(self):
        assert ideal([[(x, 2)], [(x, 1), (y, 1)], [(y, 2)]], [x, y]).height() == 2
        assert running_example().height() == 2
        assert ideal([[(x3, 1), (x4, 1)]], [x1, x2, x3, x4]).height() == 1
        assert MonomialIdeal.zero([x, y]).height() == 0
        assert running_example().dimension() == 2

    def test_unmixed(self):
        assert running_example().is_unmixed()
        # deletion of vertex 4 in the running example: facets {2,3}, {1}
        not_pure = ideal([[(x1, 1), (x2, 1)], [(x1, 1), (x3, 1)]], [x1, x2, x3])
        assert not not_pure.is_unmixed()
        assert ideal([[(x, 1), (y, 2)]], [x, y, z]).is_unmixed()


class TestPolarization:
    def test_display_2_1(self):
        I = ideal([[(x, 2), (y, 3)], [(y, 2), (z, 1)], [(x, 1), (z, 1)]], [x, y, z])
        P = polarize(I)
        x_1, x_2 = Variable(1, 1), Variable(1, 2)
        y_1, y_2, y_3 = Variable(2, 1), Variable(2, 2), Variable(2, 3)
        z_1 = Variable(3, 1)
        assert P.gens == frozenset({
            M([(x_1, 1), (x_2, 1), (y_1, 1), (y_2, 1), (y_3, 1)]),
            M([(y_1, 1), (y_2, 1), (z_1, 1)]),
            M([(x_1, 1), (z_1, 1)]),
        })
        assert P.universe == (x_1, x_2, y_1, y_2, y_3, z_1)

    def test_partial_b_2_2_3(self):
        I = ideal([[(x, 2), (y, 3)], [(y, 2), (z, 1)], [(x, 1), (z, 1)]], [x, y, z])
        P = polarize(I, {1: 2, 2: 2, 3: 3})
        x_1, x_2 = Variable(1, 1), Variable(1, 2)
        y_1, y_2 = Variable(2, 1), Variable(2, 2)
        z_1 = Variable(3, 1)
        assert P.gens == frozenset({
            M([(x_1, 1), (x_2, 1), (y_1, 1), (y_2, 2)]),
            M([(y_1, 1), (y_2, 1), (z_1, 1)]),
            M([(x_1, 1), (z_1, 1)]),
        })

    def test_squarefree_fixed(self):
        I = running_example()
        assert polarize(I).gens == I.gens

    def test_depolarize_examples(self):
        y_1, y_2, z_1, z_2 = Variable(2, 1), Variable(2, 2), Variable(3, 1), Variable(3, 2)
        A = MonomialIdeal.from_gens([M([(y_1, 1), (y_2, 1)])], [y_1, y_2])
        assert depolarize(A).gens == frozenset({M([(y, 2)])})
        B = MonomialIdeal.from_gens(
            [M([(y_1, 1), (y_2, 1)]), M([(y_1, 1), (z_1, 1)]), M([(z_1, 1), (z_2, 1)])],
            [y_1, y_2, z_1, z_2])
        assert depolarize(B).gens == frozenset({M([(y, 2)]), M([(y, 1), (z, 1)]), M([(z, 2)])})

    def test_roundtrip_random(self, rng):
        for _ in range(60):
            n = rng.randint(1, 4)
            uni = [Variable(i + 1) for i in range(n)]
            gens = []
            for _ in range(rng.randint(1, 5)):
                m = Monomial({v: rng.randrange(5) for v in uni})
                if not m.is_one():
                    gens.append(m)
            if not gens:
                continue
            I = MonomialIdeal.from_gens(gens, uni)
            b = {i + 1: rng.randint(1, 4) for i in range(n)}
            assert depolarize(polarize(I, b)).gens == I.gens
            assert depolarize(polarize(I)).gens == I.gens

    def test_height_preserved(self, rng):
        for _ in range(40):
            n = rng.randint(1, 4)
            uni = [Variable(i + 1) for i in range(n)]
            gens = [Monomial({v: rng.randrange(4) for v in uni}) for _ in range(rng.randint(1, 4))]
            gens = [g for g in gens if not g.is_one()]
            if not gens:
                continue
            I = MonomialIdeal.from_gens(gens, uni)
            b = {i + 1: rng.randint(1, 3) for i in range(n)}
            assert I.height() == polarize(I, b).height()

    def test_rebase(self):
        y_1, y_2 = Variable(2, 1), Variable(2, 2)
        A = MonomialIdeal.from_gens([M([(y_1, 1), (y_2, 2)])], [y_1, y_2])
        R, back = rebase(A)
        assert all(v.layer == 1 for v in R.universe)
        assert sorted(back.values()) == [y_1, y_2]


class TestPredicates:
    def test_strongly_stable(self):
        I = ideal([[(x, 2)], [(x, 1), (y, 1)], [(y, 2)]], [x, y])
        assert I.is_strongly_stable()
        assert I.is_stable()

    def test_not_stable(self):
        I = ideal([[(y, 2)]], [x, y])
        assert not I.is_stable()
        assert ideal([[(x, 1)]], [x, y]).is_stable()

    def test_artinian(self):
        assert ideal([[(x, 2)], [(x, 1), (y, 1)], [(y, 2)]], [x, y]).is_artinian()
        assert not ideal([[(x3, 1), (x4, 1)]], [x1, x2, x3, x4]).is_artinian()
        sq2 = [[(x, 2)], [(x, 1), (y, 1)], [(x, 1), (z, 1)], [(y, 2)], [(y, 1), (z, 1)], [(z, 2)]]
        assert ideal(sq2, [x, y, z]).is_artinian()


class TestKPolynomial:
    def test_x2_xy(self):
        I = ideal([[(x, 2)], [(x, 1), (y, 1)]], [x, y])
        K = k_polynomial(I)
        assert K.numerator == (1, 0, -2, 1)
        assert K.series(10) == hilbert_count_oracle(I, 10)

    def test_trivial(self):
        assert k_polynomial(MonomialIdeal.zero([x, y])).numerator == (1,)
        assert k_polynomial(ideal([[(x, 1)]], [x])).numerator == (1, -1)
        assert k_polynomial(MonomialIdeal.unit([x])).numerator == ()

    def test_oracle_random(self, rng):
        for _ in range(25):
            n = rng.randint(1, 3)
            uni = [Variable(i + 1) for i in range(n)]
            gens = [Monomial({v: rng.randrange(4) for v in uni}) for _ in range(rng.randint(1, 4))]
            gens = [g for g in gens if not g.is_one()]
            if not gens:
                continue
            I = MonomialIdeal.from_gens(gens, uni)
            assert k_polynomial(I).series(8) == hilbert_count_oracle(I, 8)

    def test_pivot_matches_taylor(self, rng):
        for _ in range(25):
            uni = [Variable(i + 1) for i in range(3)]
            gens = [Monomial({v: rng.randrange(3) for v in uni}) for _ in range(4)]
            gens = [g for g in gens if not g.is_one()]
            if not gens:
                continue
            I = MonomialIdeal.from_gens(gens, uni)
            a = k_polynomial(I, taylor_limit=15)
            b = k_polynomial(I, taylor_limit=0)
            assert a == b

    def test_polarization_series_transfer(self, rng):
        for _ in range(25):
            n = rng.randint(1, 3)
            uni = [Variable(i + 1) for i in range(n)]
            gens = [Monomial({v: rng.randrange(4) for v in uni}) for _ in range(rng.randint(1, 3))]
            gens = [g for g in gens if not g.is_one()]
            if not gens:
                continue
            I = MonomialIdeal.from_gens(gens, uni)
            b = {i + 1: rng.randint(1, 3) for i in range(n)}
            P = polarize(I, b)
            k = len(P.universe) - len(I.universe)
            assert k >= 0
            # HS_{R/I} = (1-t)^k HS_{S/P}: equal numerators, ambients differ by k
            KI, KP = k_polynomial(I), k_polynomial(P)
            assert KI.numerator == KP.numerator
            assert KI.series(12) == KPolynomial(KP.numerator, KP.ambient - k).series(12)

    def test_divide_one_minus_t(self):
        K = KPolynomial((1, 0, -2, 1), 2)  # = (1-t)(1+t-t^2)
        assert K.divide_one_minus_t() == (1, 1, -1)
        with pytest.raises(ValueError):
            KPolynomial((1, 1), 1).divide_one_minus_t()


class TestCohenMacaulayAndG0:
    def test_cm_examples(self):
        assert ideal([[(x, 2)], [(x, 1), (y, 1)], [(y, 2)]], [x, y]).is_cohen_macaulay()
        assert ideal([[(x, 2)], [(y, 3)]], [x, y]).is_cohen_macaulay()
        not_pure = ideal([[(x1, 1), (x2, 1)], [(x1, 1), (x3, 1)]], [x1, x2, x3])
        assert not not_pure.is_cohen_macaulay()

    def test_cm_polarization_invariance(self, rng):
        for _ in range(15):
            n = rng.randint(1, 3)
            uni = [Variable(i + 1) for i in range(n)]
            gens = [Monomial({v: rng.randrange(3) for v in uni}) for _ in range(rng.randint(1, 3))]
            gens = [g for g in gens if not g.is_one()]
            if not gens:
                continue
            I = MonomialIdeal.from_gens(gens, uni)
            b = {i + 1: rng.randint(1, 2) for i in range(n)}
            P = polarize(I, b)
            assert I.is_cohen_macaulay() == rebase(P)[0].is_cohen_macaulay()

    def test_g0_examples(self):
        A = ideal([[(y, 2)], [(y, 1), (z, 1)], [(z, 2)]], [x, y, z])
        assert not A.is_G0()
        y_1, y_2 = Variable(2, 1), Variable(2, 2)
        B = MonomialIdeal.from_gens([M([(y_1, 1), (y_2, 1)])], [y_1, y_2])
        assert B.is_G0()
        ci = ideal([[(x, 2)], [(y, 3)]], [x, y, z])
        assert ci.is_G0()

    def test_g0_requires_unmixed(self):
        mixed = ideal([[(x1, 1), (x2, 1)], [(x1, 1), (x3, 1)]], [x1, x2, x3])
        with pytest.raises(NotUnmixedError):
            mixed.is_G0()

    def test_g0_polarization_invariance(self, rng):
        checked = 0
        while checked < 12:
            n = rng.randint(1, 3)
            uni = [Variable(i + 1) for i in range(n)]
            gens = [Monomial({v: rng.randrange(3) for v in uni}) for _ in range(rng.randint(1, 3))]
            gens = [g for g in gens if not g.is_one()]
            if not gens:
                continue
            I = MonomialIdeal.from_gens(gens, uni)
            if not I.is_unmixed():
                continue
            b = {i + 1: rng.randint(1, 3) for i in range(n)}
            P, _ = rebase(polarize(I, b))
            assert I.is_G0() == P.is_G0()
            checked += 1


def test_minimal_covers_small():
    s = [frozenset({1, 2}), frozenset({1, 3}), frozenset({3, 4})]
    covers = set(minimal_covers(s))
    assert covers == {frozenset({1, 3}), frozenset({1, 4}), frozenset({2, 3})}
    assert minimal_covers([]) == [frozenset()]
