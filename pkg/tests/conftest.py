import random

import pytest

from glicci.algebra import Monomial, Polynomial, Variable


@pytest.fixture
def rng():
    return random.Random(20240811)


def vars_named(*names):
    """Fresh bases 1..n; returns Variables in the given display order."""
    return tuple(Variable(i + 1) for i in range(len(names)))


def mono(pairs):
    return Monomial({v: e for v, e in pairs})


def poly(*terms):
    """terms: (coefficient, [(var, exp), ...])"""
    return Polynomial([(mono(m), c) for c, m in terms])
