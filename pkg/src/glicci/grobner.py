"""Division with standard expressions, Buchberger's algorithm, reduced
Groebner bases, initial ideals, y-compatibility, and Hilbert series of
homogeneous ideals through their initial ideals.

Computations are deterministic given (generators, order): generators are
canonicalized up front and the s-pair queue is ordered by lcm degree with
a fixed tie-break.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra import Monomial, ONE, Polynomial, TermOrder, Variable, in_y
from .ideals import KPolynomial, MonomialIdeal, UnitIdealError, k_polynomial


@dataclass(frozen=True)
class StandardExpression:
    """f = sum(quotients[i] * divisors[i]) + remainder, with no remainder
    monomial in the initial ideal of the divisors and in(f) >= in(q_i g_i)."""

    quotients: tuple[Polynomial, ...]
    remainder: Polynomial


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder) -> StandardExpression:
    """Multivariate division; ties go to the first listed divisor."""
    divisors = list(divisors)
    if any(g.is_zero() for g in divisors):
        raise ValueError("zero divisor in division")
    lead = [(g.leading_monomial(order), g.leading_coefficient(order)) for g in divisors]
    quotients = [Polynomial.zero() for _ in divisors]
    remainder_terms: dict[Monomial, Fraction] = {}
    p = f
    while not p.is_zero():
        m = p.leading_monomial(order)
        c = p.terms[m]
        for i, (lm, lc) in enumerate(lead):
            if lm.divides(m):
                q = Polynomial.from_monomial(m / lm, c / lc)
                quotients[i] = quotients[i] + q
                p = p - q * divisors[i]
                break
        else:
            remainder_terms[m] = c
            p = p - Polynomial.from_monomial(m, c)
    return StandardExpression(tuple(quotients), Polynomial(remainder_terms))


def s_polynomial(g: Polynomial, h: Polynomial, order: TermOrder) -> Polynomial:
    """Leading terms cancel: (lcm/in(g))g - (lcm/in(h))h on monic inputs."""
    if g.is_zero() or h.is_zero():
        raise ValueError("s-polynomial of the zero polynomial")
    g, h = g.monic(order), h.monic(order)
    mg, mh = g.leading_monomial(order), h.leading_monomial(order)
    lcm = mg.lcm(mh)
    return g.mul_term(lcm / mg) - h.mul_term(lcm / mh)


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Polynomial, ...]
    order: TermOrder
    reduced: bool = False

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.elements]

    def is_unit(self) -> bool:
        return any(g.leading_monomial(self.order).is_one() for g in self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)


def _canonical_gens(generators: Iterable[Polynomial], order: TermOrder) -> list[Polynomial]:
    gens = [g.monic(order) for g in generators if not g.is_zero()]
    seen = set()
    out = []
    for g in sorted(gens, key=lambda g: (order.key(g.leading_monomial(order)),
                                         sorted(order.key(m) for m in g.terms))):
        if g not in seen:
            seen.add(g)
            out.append(g)
    return out


def buchberger(generators: Iterable[Polynomial], order: TermOrder) -> GroebnerBasis:
    """Normal strategy (smallest lcm degree first) with the coprimality
    criterion; accepts inhomogeneous input."""
    G = _canonical_gens(generators, order)
    if not G:
        return GroebnerBasis((), order)
    lms = [g.leading_monomial(order) for g in G]
    counter = 0
    queue: list[tuple[int, int, int, int]] = []

    def push(i: int, j: int):
        nonlocal counter
        lcm = lms[i].lcm(lms[j])
        counter += 1
        heapq.heappush(queue, (lcm.degree, counter, i, j))

    for j in range(len(G)):
        for i in range(j):
            push(i, j)
    while queue:
        _, _, i, j = heapq.heappop(queue)
        if lms[i].coprime(lms[j]):
            continue
        s = s_polynomial(G[i], G[j], order)
        r = divide(s, G, order).remainder
        if r.is_zero():
            continue
        G.append(r.monic(order))
        lms.append(G[-1].leading_monomial(order))
        for k in range(len(G) - 1):
            push(k, len(G) - 1)
    return GroebnerBasis(tuple(G), order)


def reduce_gb(gb: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced Groebner basis: minimal, monic, tails in normal
    form, elements sorted by ascending leading monomial.

    The input must already be a Groebner basis; tails are then replaced by
    their (unique) normal forms against the full basis in one pass.
    """
    order = gb.order
    elems = [g.monic(order) for g in gb.elements if not g.is_zero()]
    if not elems:
        return GroebnerBasis((), order, reduced=True)
    elems.sort(key=lambda g: order.key(g.leading_monomial(order)))
    minimal: list[Polynomial] = []
    for g in elems:
        lm = g.leading_monomial(order)
        if not any(h.leading_monomial(order).divides(lm) for h in minimal):
            minimal.append(g)
    full = list(elems)
    reduced: list[Polynomial] = []
    for g in minimal:
        lm = g.leading_monomial(order)
        head = Polynomial.from_monomial(lm)
        tail = g - head
        nf = divide(tail, full, order).remainder if not tail.is_zero() else tail
        reduced.append(head + nf)
    return GroebnerBasis(tuple(reduced), order, reduced=True)


def reduced_groebner(generators: Iterable[Polynomial], order: TermOrder) -> GroebnerBasis:
    return reduce_gb(buchberger(generators, order))


def audit_groebner(gb: GroebnerBasis) -> bool:
    """Post-hoc check: every s-pair reduces to zero against the basis."""
    els = gb.elements
    for j in range(len(els)):
        for i in range(j):
            s = s_polynomial(els[i], els[j], gb.order)
            if not s.is_zero() and not divide(s, list(els), gb.order).remainder.is_zero():
                return False
    return True


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    if not gb.elements:
        return MonomialIdeal.zero(gb.order.variables)
    return MonomialIdeal.from_gens(gb.leading_monomials(), gb.order.variables)


def membership(f: Polynomial, gb: GroebnerBasis) -> bool:
    if f.is_zero():
        return True
    if not gb.elements:
        return False
    return divide(f, list(gb.elements), gb.order).remainder.is_zero()


def ideals_equal(a: GroebnerBasis, b: GroebnerBasis) -> bool:
    """Mutual membership; the bases may live under different orders."""
    return all(membership(f, b) for f in a.elements) and all(membership(g, a) for g in b.elements)


def is_y_compatible(order: TermOrder, gb: GroebnerBasis, y: Variable) -> bool:
    """in(g) = in(in_y(g)) for every basis element (Definition-level check)."""
    for g in gb.elements:
        if g.is_zero():
            continue
        if g.leading_monomial(order) != in_y(g, y).leading_monomial(order):
            return False
    return True


def is_y_compatible_global(order: TermOrder, y: Variable) -> bool:
    """Orders that compare the y-exponent first are y-compatible for all
    polynomials: lex with y largest, or a product order with y in front."""
    from .algebra import Lex, ProductOrder

    if isinstance(order, Lex):
        return bool(order.variables) and order.variables[0] == y
    if isinstance(order, ProductOrder):
        return bool(order.front) and order.front[0] == y
    return False


def require_homogeneous(generators: Iterable[Polynomial]):
    for g in generators:
        if not g.is_homogeneous():
            raise ValueError(f"non-homogeneous generator: {g}")


def hilbert_series_quotient(generators: Iterable[Polynomial], order: TermOrder) -> KPolynomial:
    """K-polynomial of R/I for homogeneous I, via the initial ideal."""
    gens = list(generators)
    require_homogeneous(gens)
    return k_polynomial(initial_ideal(reduced_groebner(gens, order)))


def height_of(generators: Iterable[Polynomial], order: TermOrder) -> int:
    gb = reduced_groebner(list(generators), order)
    if gb.is_unit():
        raise UnitIdealError("height of the unit ideal")
    return initial_ideal(gb).height()


def dimension_of(generators: Iterable[Polynomial], order: TermOrder) -> int:
    return len(order.variables) - height_of(generators, order)


# ---------------------------------------------------------------------------
# Exact Cohen-Macaulay test for homogeneous ideals
#
# Cut down by a linear system of parameters and compare the length of the
# artinian reduction with the multiplicity: equality holds iff the quotient
# is Cohen-Macaulay.  Both numbers come from Hilbert-series numerators.

def _linear_form(coeffs: dict[Variable, int]) -> Polynomial:
    return Polynomial([(Monomial({v: 1}), Fraction(c)) for v, c in coeffs.items() if c])


def _sop_candidates(variables: Sequence[Variable], seed: int):
    for v in variables:
        yield _linear_form({v: 1})
    rng = random.Random(seed)
    while True:
        yield _linear_form({v: rng.randint(-5, 5) for v in variables})


def is_cm_homogeneous(generators: Iterable[Polynomial], order: TermOrder,
                      max_attempts: int = 300) -> bool:
    """Exact graded Cohen-Macaulay decision via a linear system of parameters."""
    gens = [g for g in generators if not g.is_zero()]
    require_homogeneous(gens)
    n = len(order.variables)
    gb = reduced_groebner(gens, order)
    if gb.is_unit():
        raise UnitIdealError("Cohen-Macaulayness of the unit ideal")
    init = initial_ideal(gb)
    d = n - init.height() if not init.is_zero() else n
    num = k_polynomial(init)
    multiplicity = sum(KPolynomial(num.numerator, n).divide_one_minus_t(n - d))
    if d == 0:
        return True
    current = list(gb.elements)
    dim = d
    attempts = 0
    for theta in _sop_candidates(order.variables, seed=90021):
        if dim == 0:
            break
        attempts += 1
        if attempts > max_attempts:
            raise RuntimeError("no linear system of parameters found")
        trial = reduced_groebner(current + [theta], order)
        if trial.is_unit():
            continue
        trial_init = initial_ideal(trial)
        trial_dim = n - trial_init.height()
        if trial_dim == dim - 1:
            current = list(trial.elements)
            dim = trial_dim
    final_num = k_polynomial(initial_ideal(reduced_groebner(current, order)))
    length = sum(KPolynomial(final_num.numerator, n).divide_one_minus_t(n))
    return length == multiplicity
