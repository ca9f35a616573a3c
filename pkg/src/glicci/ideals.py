"""Monomial ideal combinatorics.

Minimal generators, colons, minimal primes via vertex covers of the
support hypergraph, polarization and depolarization, stability and
artinian predicates, Hilbert-series numerators, and the Cohen-Macaulay
and generically-Gorenstein tests used by basic double G-links.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional

from .algebra import Monomial, ONE, Variable


class UnitIdealError(ValueError):
    """Raised where a proper ideal is required."""


class NotUnmixedError(ValueError):
    """Raised by checks that are only defined for unmixed ideals."""


def _minimalize(monomials: Iterable[Monomial]) -> frozenset[Monomial]:
    ms = set(monomials)
    if ONE in ms:
        return frozenset({ONE})
    by_deg = sorted(ms, key=lambda m: (m.degree, m.exps))
    kept: list[Monomial] = []
    for m in by_deg:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return frozenset(kept)


def inclusion_minimal(sets: Iterable[frozenset]) -> list[frozenset]:
    out: list[frozenset] = []
    for s in sorted(set(sets), key=lambda s: (len(s), sorted(s))):
        if not any(k <= s for k in out):
            out.append(s)
    return out


def minimal_covers(supports: Iterable[frozenset]) -> list[frozenset]:
    """All inclusion-minimal hitting sets of the given set family (Berge)."""
    covers: list[frozenset] = [frozenset()]
    for s in sorted(set(supports), key=lambda s: (len(s), sorted(s))):
        new: list[frozenset] = []
        for c in covers:
            if c & s:
                new.append(c)
            else:
                new.extend(c | {v} for v in s)
        covers = inclusion_minimal(new)
    return covers


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators and its universe."""

    gens: frozenset[Monomial]
    universe: tuple[Variable, ...]

    @classmethod
    def from_gens(cls, monomials: Iterable[Monomial], universe: Iterable[Variable]) -> "MonomialIdeal":
        uni = tuple(sorted(set(universe)))
        gens = _minimalize(monomials)
        for g in gens:
            if not g.support <= set(uni):
                raise ValueError(f"generator {g} outside universe")
        return cls(gens, uni)

    @classmethod
    def zero(cls, universe: Iterable[Variable]) -> "MonomialIdeal":
        return cls.from_gens([], universe)

    @classmethod
    def unit(cls, universe: Iterable[Variable]) -> "MonomialIdeal":
        return cls.from_gens([ONE], universe)

    def gens_sorted(self) -> list[Monomial]:
        return sorted(self.gens, key=lambda m: (m.degree, m.exps))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return ONE in self.gens

    def is_proper(self) -> bool:
        return not self.is_unit()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.gens)

    def is_variable_generated(self) -> bool:
        return all(g.is_variable() for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def same_ideal(self, other: "MonomialIdeal") -> bool:
        return self.gens == other.gens

    def with_universe(self, universe: Iterable[Variable]) -> "MonomialIdeal":
        return MonomialIdeal.from_gens(self.gens, universe)

    def colon(self, m: Monomial) -> "MonomialIdeal":
        """(I : m) for a monomial m."""
        if m.is_one():
            return self
        return MonomialIdeal.from_gens([g / g.gcd(m) for g in self.gens], self.universe)

    def add(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal.from_gens(self.gens | other.gens, set(self.universe) | set(other.universe))

    def times_variable(self, v: Variable) -> "MonomialIdeal":
        vm = Monomial({v: 1})
        return MonomialIdeal.from_gens([vm * g for g in self.gens], self.universe)

    def minimal_primes(self) -> list[frozenset[Variable]]:
        """Minimal vertex covers of the support hypergraph of G(I)."""
        if self.is_unit():
            raise UnitIdealError("minimal primes of the unit ideal")
        return minimal_covers([g.support for g in self.gens])

    def height(self) -> int:
        return min(len(p) for p in self.minimal_primes())

    def dimension(self) -> int:
        return len(self.universe) - self.height()

    def max_exponent(self, base: int) -> int:
        e = 0
        for g in self.gens:
            for v, k in g.exps:
                if v.base == base:
                    e = max(e, k)
        return e

    def is_unmixed(self, p: Optional[int] = None) -> bool:
        """True iff the Stanley-Reisner complex of the full polarization is pure."""
        from .simplicial import sr_complex

        if self.is_unit():
            raise UnitIdealError("unmixedness of the unit ideal")
        return sr_complex(polarize(rebase(self)[0])).is_pure()

    def is_cohen_macaulay(self, p: Optional[int] = None) -> bool:
        """Reisner's criterion on the complex of the full polarization."""
        from .simplicial import is_cm_reisner, sr_complex

        if self.is_unit():
            raise UnitIdealError("Cohen-Macaulayness of the unit ideal")
        return is_cm_reisner(sr_complex(polarize(rebase(self)[0])), p)

    def is_G0(self) -> bool:
        """Locally Gorenstein at every minimal prime (unmixed inputs only).

        At a monomial minimal prime the localization is artinian, where
        Gorenstein forces a complete intersection; so the test is that the
        localized minimal generators have pairwise disjoint supports.
        """
        if self.is_unit():
            raise UnitIdealError("G0 of the unit ideal")
        if self.is_zero():
            return True
        if not self.is_unmixed():
            raise NotUnmixedError("G0 is only tested for unmixed monomial ideals")
        for prime in self.minimal_primes():
            outside = set(self.universe) - prime
            local = _minimalize(g.drop(outside) for g in self.gens)
            seen: set[Variable] = set()
            for g in local:
                if g.support & seen:
                    return False
                seen |= g.support
        return True

    def is_stable(self) -> bool:
        return self._stability(strongly=False)

    def is_strongly_stable(self) -> bool:
        return self._stability(strongly=True)

    def _stability(self, strongly: bool) -> bool:
        uni = self.universe
        pos = {v: i for i, v in enumerate(uni)}
        for u in self.gens:
            if u.is_one():
                continue
            js = [pos[v] for v in u.support]
            targets = js if strongly else [max(js)]
            for j in targets:
                xj = Monomial({uni[j]: 1})
                for i in range(j):
                    moved = (u / xj) * Monomial({uni[i]: 1})
                    if not self.contains(moved):
                        return False
        return True

    def is_artinian(self) -> bool:
        """Some pure power of every universe variable lies in the ideal."""
        return all(any(g.support == {v} for g in self.gens) for v in self.universe)

    def k_polynomial(self) -> "KPolynomial":
        return k_polynomial(self)

    def __str__(self):
        if self.is_zero():
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens_sorted()) + ")"


def minimal_generators(monomials: Iterable[Monomial], universe: Iterable[Variable]) -> MonomialIdeal:
    return MonomialIdeal.from_gens(monomials, universe)


def rebase(ideal: MonomialIdeal) -> tuple[MonomialIdeal, dict[Variable, Variable]]:
    """Reindex the universe to base variables 1..n (layer 1 each).

    Returns the reindexed ideal and the backward map new -> old.
    """
    fwd = {v: Variable(i + 1) for i, v in enumerate(ideal.universe)}
    back = {w: v for v, w in fwd.items()}
    gens = [g.remap(fwd) for g in ideal.gens]
    return MonomialIdeal.from_gens(gens, fwd.values()), back


def _full_vector(ideal: MonomialIdeal) -> dict[int, int]:
    return {v.base: max(1, ideal.max_exponent(v.base)) for v in ideal.universe}


def polarize(ideal: MonomialIdeal, b: Optional[Mapping[int, int]] = None) -> MonomialIdeal:
    """Partial polarization with respect to b; full polarization if b is None.

    An exponent a of x_i becomes x_{i,1}...x_{i,min(a,b_i)} with the excess
    a-b_i piled onto the last layer.  Universe variables absent from every
    generator keep their layer-1 representative.
    """
    for v in ideal.universe:
        if v.layer != 1:
            raise ValueError("polarize expects a layer-1 universe; rebase first")
    full = _full_vector(ideal)
    vec = dict(full) if b is None else {i: b.get(i, full[i]) for i in full}
    for i, bi in vec.items():
        if bi < 1:
            raise ValueError(f"polarization vector must be >= 1, got b_{i} = {bi}")
    universe = []
    for v in ideal.universe:
        layers = max(1, min(ideal.max_exponent(v.base), vec[v.base]))
        universe.extend(Variable(v.base, j) for j in range(1, layers + 1))
    gens = []
    for g in ideal.gens:
        d: dict[Variable, int] = {}
        for v, a in g.exps:
            bi = vec[v.base]
            for j in range(1, min(a, bi) + 1):
                d[Variable(v.base, j)] = 1
            if a > bi:
                d[Variable(v.base, bi)] += a - bi
        gens.append(Monomial(d))
    return MonomialIdeal.from_gens(gens, universe)


def depolarize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Substitute x_{i,j} -> x_i and minimalize."""
    mapping = {v: Variable(v.base, 1) for v in ideal.universe}
    universe = sorted(set(mapping.values()))
    return MonomialIdeal.from_gens([g.remap(mapping) for g in ideal.gens], universe)


# ---------------------------------------------------------------------------
# Hilbert series numerators (K-polynomials)

def _strip(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _padd(a, b, sign=1) -> tuple[int, ...]:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) + sign * (b[i] if i < len(b) else 0) for i in range(n)]
    return _strip(out)


def _pmul(a, b) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _strip(out)


def one_minus_t_pow(k: int) -> tuple[int, ...]:
    out = (1,)
    for _ in range(k):
        out = _pmul(out, (1, -1))
    return out


@dataclass(frozen=True)
class KPolynomial:
    """Numerator of the Hilbert series of a quotient over (1-t)^ambient."""

    numerator: tuple[int, ...]
    ambient: int

    def series(self, degree: int) -> list[int]:
        """Hilbert function values in degrees 0..degree."""
        s = [self.numerator[i] if i < len(self.numerator) else 0 for i in range(degree + 1)]
        for _ in range(self.ambient):
            for i in range(1, degree + 1):
                s[i] += s[i - 1]
        return s

    def series_equal(self, other: "KPolynomial") -> bool:
        """Exact equality of the represented series."""
        left = _pmul(self.numerator, one_minus_t_pow(other.ambient))
        right = _pmul(other.numerator, one_minus_t_pow(self.ambient))
        return left == right

    def shift_ambient(self, k: int) -> "KPolynomial":
        """Same series written over (1-t)^(ambient+k)."""
        if k < 0:
            raise ValueError("use divide_one_minus_t to lower the ambient")
        return KPolynomial(_pmul(self.numerator, one_minus_t_pow(k)), self.ambient + k)

    def divide_one_minus_t(self, k: int = 1) -> tuple[int, ...]:
        """Exact division of the numerator by (1-t)^k; raises if inexact."""
        num = list(self.numerator)
        for _ in range(k):
            if not num:
                return ()
            q = [0] * (len(num) - 1)
            carry = 0
            for i in range(len(num) - 1):
                carry = num[i] + carry
                q[i] = carry
            if num[-1] + (q[-1] if q else 0) != 0:
                raise ValueError("numerator not divisible by (1-t)")
            num = q or [0]
        return _strip(list(num))

    def __str__(self):
        if not self.numerator:
            return "0"
        parts = []
        for i, c in enumerate(self.numerator):
            if c == 0:
                continue
            term = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if i > 0 and abs(c) != 1:
                term = f"{abs(c)}*{term}"
            elif i == 0:
                term = str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + term)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]


def _taylor_numerator(gens: list[Monomial]) -> dict[int, int]:
    coeffs: dict[int, int] = {}

    def rec(i: int, acc: Monomial, sign: int):
        if i == len(gens):
            d = acc.degree
            coeffs[d] = coeffs.get(d, 0) + sign
            return
        rec(i + 1, acc, sign)
        rec(i + 1, acc.lcm(gens[i]), -sign)

    rec(0, ONE, 1)
    return coeffs


def _pivot_numerator(gens: frozenset[Monomial]) -> dict[int, int]:
    if not gens:
        return {0: 1}
    if ONE in gens:
        return {}
    ordered = sorted(gens, key=lambda m: (m.degree, m.exps))
    m = ordered[-1]
    rest = ordered[:-1]
    left = _pivot_numerator(_minimalize(rest))
    colon = _minimalize(g / g.gcd(m) for g in rest)
    right = _pivot_numerator(colon)
    out = dict(left)
    d = m.degree
    for i, c in right.items():
        out[i + d] = out.get(i + d, 0) - c
    return {i: c for i, c in out.items() if c}


def k_polynomial(ideal: MonomialIdeal, taylor_limit: int = 15) -> KPolynomial:
    """Hilbert series numerator of R/I over (1-t)^(#universe).

    Inclusion-exclusion over lcms of generator subsets (Taylor complex) up
    to ``taylor_limit`` generators, pivot recursion beyond that.
    """
    gens = ideal.gens_sorted()
    if ideal.is_unit():
        return KPolynomial((), len(ideal.universe))
    if len(gens) <= taylor_limit:
        coeffs = _taylor_numerator(gens)
    else:
        coeffs = _pivot_numerator(ideal.gens)
    if not coeffs:
        return KPolynomial((), len(ideal.universe))
    out = [0] * (max(coeffs) + 1)
    for i, c in coeffs.items():
        out[i] = c
    return KPolynomial(_strip(out), len(ideal.universe))
