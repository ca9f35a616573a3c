"""Shared generators for the randomized suites (fixed seeds in callers)."""

import random

from glicci.algebra import Monomial, Variable
from glicci.ideals import MonomialIdeal


def random_monomial(rng: random.Random, universe, max_deg=3):
    d = rng.randint(1, max_deg)
    picks = [rng.choice(universe) for _ in range(d)]
    return Monomial({v: picks.count(v) for v in set(picks)})


def random_monomial_ideal(rng: random.Random, max_vars=4, max_exp=3, max_gens=4):
    n = rng.randint(1, max_vars)
    uni = [Variable(i + 1) for i in range(n)]
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        m = Monomial({v: rng.randrange(max_exp + 1) for v in uni})
        if not m.is_one():
            gens.append(m)
    if not gens:
        gens = [Monomial({uni[0]: 1})]
    return MonomialIdeal.from_gens(gens, uni)


def stable_closure(gens, universe) -> MonomialIdeal:
    """Smallest stable ideal containing the generators (exchange moves
    preserve total degree, so this terminates)."""
    I = MonomialIdeal.from_gens(gens, universe)
    uni = I.universe
    while True:
        added = []
        for u in I.gens:
            if u.is_one():
                continue
            m_u = max(uni.index(v) for v in u.support)
            xm = Monomial({uni[m_u]: 1})
            for i in range(m_u):
                cand = (u / xm) * Monomial({uni[i]: 1})
                if not I.contains(cand):
                    added.append(cand)
        if not added:
            return I
        I = MonomialIdeal.from_gens(list(I.gens) + added, uni)


def random_stable_cm_ideal(rng: random.Random, max_vars=4, max_deg=3) -> MonomialIdeal:
    """Stable + Cohen-Macaulay sample; exponents stay <= max_deg because
    exchanges preserve degree.  Occasionally pads a free variable so the
    suite is not purely artinian."""
    while True:
        c = rng.randint(1, max_vars)
        uni = [Variable(i + 1) for i in range(c)]
        seeds = [random_monomial(rng, uni, max_deg) for _ in range(rng.randint(1, 3))]
        I = stable_closure(seeds, uni)
        if I.is_unit():
            continue
        if c < max_vars and rng.random() < 0.3:
            I = I.with_universe(list(I.universe) + [Variable(c + 1)])
        if I.is_cohen_macaulay():
            return I


def random_artinian_ideal(rng: random.Random, max_vars=4, max_exp=3) -> MonomialIdeal:
    n = rng.randint(1, max_vars)
    uni = [Variable(i + 1) for i in range(n)]
    gens = [Monomial({v: rng.randint(1, max_exp)}) for v in uni]
    for _ in range(rng.randint(0, 3)):
        m = Monomial({v: rng.randrange(max_exp + 1) for v in uni})
        if not m.is_one():
            gens.append(m)
    return MonomialIdeal.from_gens(gens, uni)
