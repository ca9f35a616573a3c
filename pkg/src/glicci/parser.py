"""Input language for rings and ideals.

    ring x > y > z lex;
    I = (x^2*y^3, y^2*z, x*z);
    J = (1/2*x^2 - y*z);

Multiplication is always explicit (*), ^ is the only power operator, and
coefficients are integer or rational literals.  Layered variables write
the layer after an underscore: y_2 is the second copy of y (y_1 = y).
Order specs: lex, grevlex, or product(y; <order>).  Errors carry
line/column positions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .algebra import (
    GrevLex,
    Lex,
    Monomial,
    Polynomial,
    ProductOrder,
    TermOrder,
    Variable,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Ring:
    """Declared base variable names, priority order = declaration order."""

    names: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names in ring declaration")

    def base_of(self, name: str) -> Optional[int]:
        try:
            return self.names.index(name) + 1
        except ValueError:
            return None

    def resolve(self, token: str) -> Optional[Variable]:
        base = self.base_of(token)
        if base is not None:
            return Variable(base, 1)
        if "_" in token:
            head, _, tail = token.rpartition("_")
            base = self.base_of(head)
            if base is not None and tail.isdigit() and int(tail) >= 1:
                return Variable(base, int(tail))
        return None

    def display(self, v: Variable) -> str:
        name = self.names[v.base - 1]
        return name if v.layer == 1 else f"{name}_{v.layer}"

    def format_monomial(self, m: Monomial) -> str:
        if m.is_one():
            return "1"
        parts = []
        for v, e in m.exps:
            parts.append(self.display(v) if e == 1 else f"{self.display(v)}^{e}")
        return "*".join(parts)

    def format_polynomial(self, f: Polynomial, order: TermOrder) -> str:
        if f.is_zero():
            return "0"
        out = []
        for m, c in f.sorted_terms(order):
            mag = abs(c)
            if m.is_one():
                body = str(mag)
            elif mag == 1:
                body = self.format_monomial(m)
            else:
                body = f"{mag}*{self.format_monomial(m)}"
            out.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


@dataclass
class SourceDocument:
    ring: Ring
    order_spec: str
    ideals: dict[str, tuple[Polynomial, ...]] = field(default_factory=dict)
    names_in_order: tuple[str, ...] = ()

    def universe(self) -> tuple[Variable, ...]:
        """Declared layer-1 variables plus every layered variable used."""
        vs = {Variable(i + 1, 1) for i in range(len(self.ring.names))}
        for gens in self.ideals.values():
            for g in gens:
                vs |= g.support
        return tuple(sorted(vs))

    def order(self) -> TermOrder:
        return order_from_spec(self.order_spec, self.ring, self.universe())

    def ideal(self, name: Optional[str] = None) -> tuple[Polynomial, ...]:
        if name is None:
            if len(self.ideals) == 1:
                return next(iter(self.ideals.values()))
            if "I" in self.ideals:
                return self.ideals["I"]
            raise KeyError("several ideals defined; pick one with --ideal")
        if name not in self.ideals:
            raise KeyError(f"no ideal named {name!r}")
        return self.ideals[name]


def order_from_spec(spec: str, ring: Ring, universe) -> TermOrder:
    spec = spec.strip()
    if spec == "lex":
        return Lex(sorted(universe))
    if spec == "grevlex":
        return GrevLex(sorted(universe))
    if spec.startswith("product(") and spec.endswith(")"):
        inner = spec[len("product("):-1]
        front_name, _, rest = inner.partition(";")
        v = ring.resolve(front_name.strip())
        if v is None:
            raise ValueError(f"unknown variable in order spec: {front_name!r}")
        tail = order_from_spec(rest, ring, [u for u in universe if u != v])
        return ProductOrder([v], tail)
    raise ValueError(f"unknown order spec: {spec!r}")


_SYMBOLS = (">", "=", "(", ")", ";", ",", "+", "-", "*", "^", "/")


@dataclass(frozen=True)
class _Token:
    kind: str  # ident | int | symbol | end
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    out = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < len(text) and text[i] != "\n":
                i += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(_Token("ident", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(_Token("int", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            out.append(_Token("symbol", ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    out.append(_Token("end", "", line, col))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def next(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, text: Optional[str] = None) -> _Token:
        tok = self.next()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text or kind
            raise ParseError(f"expected {want!r}, found {tok.text or 'end of input'!r}",
                             tok.line, tok.column)
        return tok

    def at_symbol(self, text: str) -> bool:
        tok = self.peek()
        return tok.kind == "symbol" and tok.text == text

    # grammar ---------------------------------------------------------------

    def document(self) -> SourceDocument:
        ring: Optional[Ring] = None
        order_spec = "lex"
        names: tuple[str, ...] = ()
        ideals: dict[str, tuple[Polynomial, ...]] = {}
        order_names: list[str] = []
        while self.peek().kind != "end":
            tok = self.peek()
            if tok.kind == "ident" and tok.text == "ring":
                if ring is not None:
                    raise ParseError("ring already declared", tok.line, tok.column)
                ring, order_spec = self.ring_decl()
                names = ring.names
            elif tok.kind == "ident":
                if ring is None:
                    raise ParseError("ring declaration must come first", tok.line, tok.column)
                name, gens = self.ideal_def(ring)
                if name in ideals:
                    raise ParseError(f"ideal {name!r} redefined", tok.line, tok.column)
                ideals[name] = gens
                order_names.append(name)
            else:
                raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.column)
        if ring is None:
            raise ParseError("missing ring declaration", 1, 1)
        return SourceDocument(ring, order_spec, ideals, tuple(order_names))

    def ring_decl(self) -> tuple[Ring, str]:
        self.expect("ident", "ring")
        names = [self.expect("ident").text]
        while self.at_symbol(">"):
            self.next()
            names.append(self.expect("ident").text)
        spec = "lex"
        if self.peek().kind == "ident":
            spec = self.order_spec()
        self.expect("symbol", ";")
        tok = self.peek()
        try:
            return Ring(tuple(names)), spec
        except ValueError as e:
            raise ParseError(str(e), tok.line, tok.column)

    def order_spec(self) -> str:
        tok = self.expect("ident")
        if tok.text in ("lex", "grevlex"):
            return tok.text
        if tok.text == "product":
            self.expect("symbol", "(")
            front = self.expect("ident").text
            self.expect("symbol", ";")
            tail = self.order_spec()
            self.expect("symbol", ")")
            return f"product({front}; {tail})"
        raise ParseError(f"unknown order {tok.text!r}", tok.line, tok.column)

    def ideal_def(self, ring: Ring) -> tuple[str, tuple[Polynomial, ...]]:
        name = self.expect("ident").text
        self.expect("symbol", "=")
        self.expect("symbol", "(")
        gens: list[Polynomial] = []
        if not self.at_symbol(")"):
            gens.append(self.polynomial(ring))
            while self.at_symbol(","):
                self.next()
                gens.append(self.polynomial(ring))
        self.expect("symbol", ")")
        self.expect("symbol", ";")
        return name, tuple(g for g in gens if not g.is_zero())

    def polynomial(self, ring: Ring) -> Polynomial:
        terms = []
        sign = Fraction(1)
        if self.at_symbol("-"):
            self.next()
            sign = Fraction(-1)
        elif self.at_symbol("+"):
            self.next()
        terms.append(self.term(ring, sign))
        while self.at_symbol("+") or self.at_symbol("-"):
            sign = Fraction(1) if self.next().text == "+" else Fraction(-1)
            terms.append(self.term(ring, sign))
        return Polynomial(terms)

    def term(self, ring: Ring, sign: Fraction) -> tuple[Monomial, Fraction]:
        coeff = sign
        exps: dict[Variable, int] = {}
        saw_factor = False
        while True:
            tok = self.peek()
            if tok.kind == "int":
                self.next()
                value = Fraction(int(tok.text))
                if self.at_symbol("/"):
                    slash = self.next()
                    den = self.expect("int")
                    if int(den.text) == 0:
                        raise ParseError("zero denominator", den.line, den.column)
                    value /= int(den.text)
                coeff *= value
                saw_factor = True
            elif tok.kind == "ident":
                self.next()
                v = ring.resolve(tok.text)
                if v is None:
                    raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.column)
                e = 1
                if self.at_symbol("^"):
                    self.next()
                    e = int(self.expect("int").text)
                exps[v] = exps.get(v, 0) + e
                saw_factor = True
            else:
                raise ParseError(f"expected a factor, found {tok.text or 'end of input'!r}",
                                 tok.line, tok.column)
            if self.at_symbol("*"):
                self.next()
                continue
            break
        if not saw_factor:
            tok = self.peek()
            raise ParseError("empty term", tok.line, tok.column)
        return Monomial(exps), coeff


def parse(text: str) -> SourceDocument:
    return _Parser(text).document()


def print_document(doc: SourceDocument) -> str:
    order = doc.order()
    lines = ["ring " + " > ".join(doc.ring.names) + " " + doc.order_spec + ";"]
    for name in doc.names_in_order or doc.ideals:
        gens = doc.ideals[name]
        body = ", ".join(doc.ring.format_polynomial(g, order) for g in gens)
        lines.append(f"{name} = ({body});")
    return "\n".join(lines) + "\n"
