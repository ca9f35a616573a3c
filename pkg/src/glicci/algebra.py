"""Exact multivariate polynomial arithmetic over the rationals.

Variables are (base, layer) pairs: layer 1 is an original ring variable,
higher layers are the split copies introduced by polarization (the primed
variable of a one-step geometric polarization is layer 2 of its base).
Coefficients are exact rationals throughout; there is no floating point.

Term orders are key-based comparators.  ``InducedOrder`` wraps any base
order: it compares the depolarized images of two monomials first and
breaks ties by the exponent of the distinguished variable (larger wins).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

NEG_INF = float("-inf")  # value of deg_y on the zero polynomial


@dataclass(frozen=True, order=True)
class Variable:
    """An indexed variable x_{base,layer}; layer 1 prints as x_base."""

    base: int
    layer: int = 1

    def __post_init__(self):
        if self.base < 1 or self.layer < 1:
            raise ValueError(f"variable indices must be >= 1: {self.base},{self.layer}")

    def at_layer(self, layer: int) -> "Variable":
        return Variable(self.base, layer)

    def __str__(self):
        if self.layer == 1:
            return f"x{self.base}"
        return f"x{self.base}_{self.layer}"


class Monomial:
    """Product of variables with positive integer exponents (1 = empty)."""

    __slots__ = ("exps", "_hash")

    def __init__(self, exps: Mapping[Variable, int] | Iterable[tuple[Variable, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        cleaned = []
        for v, e in items:
            if e < 0:
                raise ValueError(f"negative exponent for {v}")
            if e > 0:
                cleaned.append((v, e))
        cleaned.sort(key=lambda p: p[0])
        object.__setattr__(self, "exps", tuple(cleaned))
        object.__setattr__(self, "_hash", hash(self.exps))

    def __setattr__(self, *a):
        raise AttributeError("Monomial is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def deg(self, v: Variable) -> int:
        for w, e in self.exps:
            if w == v:
                return e
        return 0

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def support(self) -> frozenset[Variable]:
        return frozenset(v for v, _ in self.exps)

    def is_one(self) -> bool:
        return not self.exps

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def is_variable(self) -> bool:
        return len(self.exps) == 1 and self.exps[0][1] == 1

    def __mul__(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = d.get(v, 0) + e
        return Monomial(d)

    def __pow__(self, n: int) -> "Monomial":
        if n < 0:
            raise ValueError("negative power")
        return Monomial({v: e * n for v, e in self.exps})

    def divides(self, other: "Monomial") -> bool:
        it = dict(other.exps)
        return all(it.get(v, 0) >= e for v, e in self.exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            ne = d.get(v, 0) - e
            if ne < 0:
                raise ValueError(f"{other} does not divide {self}")
            d[v] = ne
        return Monomial(d)

    def lcm(self, other: "Monomial") -> "Monomial":
        d = dict(self.exps)
        for v, e in other.exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial(d)

    def gcd(self, other: "Monomial") -> "Monomial":
        it = dict(other.exps)
        return Monomial({v: min(e, it.get(v, 0)) for v, e in self.exps})

    def coprime(self, other: "Monomial") -> bool:
        return self.gcd(other).is_one()

    def remap(self, mapping: Mapping[Variable, Variable]) -> "Monomial":
        d: dict[Variable, int] = {}
        for v, e in self.exps:
            w = mapping.get(v, v)
            d[w] = d.get(w, 0) + e
        return Monomial(d)

    def drop(self, vars_to_one: Iterable[Variable]) -> "Monomial":
        """Set the given variables to 1 (localization at a monomial prime)."""
        gone = set(vars_to_one)
        return Monomial({v: e for v, e in self.exps if v not in gone})

    def __str__(self):
        if not self.exps:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.exps)

    def __repr__(self):
        return f"Monomial({self})"


ONE = Monomial()


def monomial(*pairs: tuple[Variable, int]) -> Monomial:
    return Monomial(pairs)


def depol_monomial(m: Monomial, y: Variable, y_primed: Variable) -> Monomial:
    """Replace each y' in m with a y (Notation-style depolarization)."""
    return m.remap({y_primed: y})


class TermOrder:
    """Base class; subclasses provide a sort key monotone for the order."""

    variables: tuple[Variable, ...]

    def key(self, m: Monomial):
        raise NotImplementedError

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def max(self, monomials: Iterable[Monomial]) -> Monomial:
        return max(monomials, key=self.key)

    def sort_desc(self, monomials: Iterable[Monomial]) -> list[Monomial]:
        return sorted(monomials, key=self.key, reverse=True)

    def _check_universe(self, m: Monomial):
        for v, _ in m.exps:
            if v not in self._varset:
                raise ValueError(f"variable {v} outside the order's universe")


class Lex(TermOrder):
    """Lexicographic order; variables listed largest first."""

    def __init__(self, variables: Iterable[Variable]):
        self.variables = tuple(variables)
        self._varset = frozenset(self.variables)

    def key(self, m: Monomial):
        self._check_universe(m)
        return tuple(m.deg(v) for v in self.variables)

    def __repr__(self):
        return f"Lex({'>'.join(map(str, self.variables))})"


class GrevLex(TermOrder):
    """Graded reverse lexicographic order; variables listed largest first."""

    def __init__(self, variables: Iterable[Variable]):
        self.variables = tuple(variables)
        self._varset = frozenset(self.variables)

    def key(self, m: Monomial):
        self._check_universe(m)
        return (m.degree, tuple(-m.deg(v) for v in reversed(self.variables)))

    def __repr__(self):
        return f"GrevLex({'>'.join(map(str, self.variables))})"


class ProductOrder(TermOrder):
    """Block order: compare exponents of the front block, then the tail."""

    def __init__(self, front: Iterable[Variable], tail: TermOrder):
        self.front = tuple(front)
        self.tail = tail
        self.variables = self.front + tail.variables
        self._varset = frozenset(self.variables)

    def key(self, m: Monomial):
        self._check_universe(m)
        rest = Monomial({v: e for v, e in m.exps if v not in self.front})
        return (tuple(m.deg(v) for v in self.front), self.tail.key(rest))

    def __repr__(self):
        return f"Product([{','.join(map(str, self.front))}]; {self.tail!r})"


class InducedOrder(TermOrder):
    """Compare depol images under the base order, tie-break by deg_y.

    Restricted to monomials without y' this coincides with the base order.
    """

    def __init__(self, base: TermOrder, y: Variable, y_primed: Variable):
        if y not in base.variables:
            raise ValueError("y must belong to the base order's universe")
        if y_primed in base.variables:
            raise ValueError("y' must be fresh for the base order")
        self.base = base
        self.y = y
        self.y_primed = y_primed
        i = base.variables.index(y)
        self.variables = base.variables[: i + 1] + (y_primed,) + base.variables[i + 1 :]
        self._varset = frozenset(self.variables)

    def key(self, m: Monomial):
        self._check_universe(m)
        return (self.base.key(depol_monomial(m, self.y, self.y_primed)), m.deg(self.y))

    def __repr__(self):
        return f"Induced({self.base!r}; {self.y}, {self.y_primed})"


def y_first_order(variables: Iterable[Variable], y: Variable, kind: str = "grevlex") -> ProductOrder:
    """Product order with y alone in front: y-compatible for all polynomials."""
    rest = [v for v in variables if v != y]
    tail: TermOrder = GrevLex(rest) if kind == "grevlex" else Lex(rest)
    return ProductOrder([y], tail)


class Polynomial:
    """Sparse polynomial: Monomial -> nonzero Fraction."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable[tuple[Monomial, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[Monomial, Fraction] = {}
        for m, c in items:
            c = Fraction(c)
            if c == 0:
                continue
            nc = d.get(m, Fraction(0)) + c
            if nc == 0:
                d.pop(m, None)
            else:
                d[m] = nc
        # drop exact zeros produced by merging
        d = {m: c for m, c in d.items() if c != 0}
        object.__setattr__(self, "terms", d)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({ONE: Fraction(c)})

    @classmethod
    def from_monomial(cls, m: Monomial, c=1) -> "Polynomial":
        return cls({m: Fraction(c)})

    @classmethod
    def variable(cls, v: Variable) -> "Polynomial":
        return cls({Monomial({v: 1}): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(frozenset(self.terms.items())))
        return self._hash

    def __add__(self, other: "Polynomial") -> "Polynomial":
        d = dict(self.terms)
        for m, c in other.terms.items():
            nc = d.get(m, Fraction(0)) + c
            if nc == 0:
                d.pop(m, None)
            else:
                d[m] = nc
        return Polynomial(d)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        d: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                nc = d.get(m, Fraction(0)) + c1 * c2
                if nc == 0:
                    d.pop(m, None)
                else:
                    d[m] = nc
        return Polynomial(d)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial()
        return Polynomial({m: cc * c for m, cc in self.terms.items()})

    def mul_term(self, m: Monomial, c=1) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial()
        return Polynomial({mm * m: cc * c for mm, cc in self.terms.items()})

    @property
    def support(self) -> frozenset[Variable]:
        s: set[Variable] = set()
        for m in self.terms:
            s |= m.support
        return frozenset(s)

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(m.degree for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {m.degree for m in self.terms}
        return len(degs) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self, order: TermOrder) -> list[tuple[Monomial, Fraction]]:
        return [(m, self.terms[m]) for m in order.sort_desc(self.terms)]

    def leading_monomial(self, order: TermOrder) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return order.max(self.terms)

    def leading_coefficient(self, order: TermOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: TermOrder) -> "Polynomial":
        lc = self.leading_coefficient(order)
        return self if lc == 1 else self.scale(Fraction(1) / lc)

    def remap(self, mapping: Mapping[Variable, Variable]) -> "Polynomial":
        return Polynomial([(m.remap(mapping), c) for m, c in self.terms.items()])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda mm: (mm.degree, mm.exps), reverse=True):
            c = self.terms[m]
            s = str(m) if abs(c) == 1 and not m.is_one() else (
                f"{abs(c)}" if m.is_one() else f"{abs(c)}*{m}")
            parts.append(("- " if c < 0 else "+ ") + s)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def __repr__(self):
        return f"Polynomial({self})"


def deg_y(f: Polynomial, y: Variable):
    """Greatest power of y dividing at least one term; -inf on 0."""
    if f.is_zero():
        return NEG_INF
    return max(m.deg(y) for m in f.terms)


def in_y(f: Polynomial, y: Variable) -> Polynomial:
    """Sum of the terms of f whose y-exponent equals deg_y(f)."""
    if f.is_zero():
        raise ValueError("in_y of the zero polynomial")
    t = deg_y(f, y)
    return Polynomial({m: c for m, c in f.terms.items() if m.deg(y) == t})


def y_split(f: Polynomial, y: Variable) -> tuple[Polynomial, Polynomial]:
    """Write f = y*d + r with r the y-free part (d may still involve y)."""
    r = Polynomial({m: c for m, c in f.terms.items() if m.deg(y) == 0})
    ym = Monomial({y: 1})
    d = Polynomial({m / ym: c for m, c in f.terms.items() if m.deg(y) > 0})
    return d, r


def depol(f: Polynomial, y: Variable, y_primed: Variable) -> Polynomial:
    """Apply y' -> y to every monomial of f, merging coefficients."""
    return f.remap({y_primed: y})
