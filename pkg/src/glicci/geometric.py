"""Geometric polarization of Groebner bases and elementary G-biliaison.

One-step geometric polarization replaces y^n by y*(y')^(n-1) in every
basis element.  Whether the polarized set is again a Groebner basis under
the induced order is decided two ways (recomputation of the initial ideal
against the partial polarization, and the Hilbert-series identity), which
the nonzerodivisor theorem forces to agree.  Geometric vertex
decompositions split a y-linear basis into link and deletion ideals; the
induced biliaison carries a witness fraction, and verified biliaisons on
a polarization descend to the original ideal by depolarizing the witness.

Ring-theoretic side conditions on non-monomial ideals are certified
through a status ladder: "verified" (exact), "sufficient" (implied by a
checkable stronger fact), "asserted" (caller-supplied), "failed",
"unknown".  Statuses propagate into certificates and are never silently
upgraded.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra import (
    GrevLex,
    InducedOrder,
    Monomial,
    Polynomial,
    TermOrder,
    Variable,
    deg_y,
    depol,
    in_y,
    y_first_order,
    y_split,
)
from .grobner import (
    GroebnerBasis,
    divide,
    ideals_equal,
    initial_ideal,
    is_cm_homogeneous,
    is_y_compatible,
    membership,
    reduce_gb,
    reduced_groebner,
    require_homogeneous,
)
from .ideals import KPolynomial, MonomialIdeal, NotUnmixedError, k_polynomial

VERIFIED = "verified"
SUFFICIENT = "sufficient"
ASSERTED = "asserted"
FAILED = "failed"
UNKNOWN = "unknown"
PASSING = (VERIFIED, SUFFICIENT, ASSERTED)

IS_GB = "is_gb"
NOT_GB = "not_gb"
NZD = "nzd"
ZERODIVISOR = "zerodivisor"
STATUS_UNKNOWN = "unknown"

RADICAL_POWER_BUDGET = 6


def _as_monomial_ideal(gb: GroebnerBasis) -> Optional[MonomialIdeal]:
    if any(len(g.terms) != 1 for g in gb.elements):
        return None
    gens = [next(iter(g.terms)) for g in gb.elements]
    return MonomialIdeal.from_gens(gens, gb.order.variables)


def _candidate_orders(universe: Sequence[Variable], first: TermOrder):
    yield first
    yield GrevLex(universe)
    for v in universe:
        rest = [u for u in universe if u != v]
        yield GrevLex(rest + [v])


def _initial_ideals(gens: Sequence[Polynomial], universe, first: TermOrder):
    seen = set()
    for order in _candidate_orders(universe, first):
        key = tuple(order.variables), type(order).__name__
        if key in seen:
            continue
        seen.add(key)
        yield initial_ideal(reduced_groebner(gens, order))


def unmixed_status(gb: GroebnerBasis) -> tuple[str, str]:
    """Ladder: exact for monomial ideals; CM(in(I)) => CM(I) => unmixed;
    exact graded CM via a linear system of parameters as the last rung."""
    if not gb.elements:
        return VERIFIED, "zero ideal"
    mi = _as_monomial_ideal(gb)
    if mi is not None:
        return (VERIFIED, "monomial") if mi.is_unmixed() else (FAILED, "monomial, mixed heights")
    gens = list(gb.elements)
    for init in _initial_ideals(gens, gb.order.variables, gb.order):
        from .ideals import rebase
        if rebase(init)[0].is_cohen_macaulay():
            return SUFFICIENT, "an initial ideal is Cohen-Macaulay"
    try:
        if is_cm_homogeneous(gens, gb.order):
            return VERIFIED, "Cohen-Macaulay by system-of-parameters test"
    except ValueError:
        pass
    return UNKNOWN, "no certificate found"


def cm_status(gb: GroebnerBasis, gen_count: Optional[int] = None) -> tuple[str, str]:
    if not gb.elements:
        return VERIFIED, "zero ideal"
    mi = _as_monomial_ideal(gb)
    if mi is not None:
        return (VERIFIED, "monomial (Reisner)") if mi.is_cohen_macaulay() \
            else (FAILED, "monomial, not CM")
    gens = list(gb.elements)
    counts = [len(gb.elements)] + ([gen_count] if gen_count else [])
    ht = initial_ideal(gb).height()
    if any(c == ht for c in counts):
        return SUFFICIENT, "complete intersection"
    for init in _initial_ideals(gens, gb.order.variables, gb.order):
        from .ideals import rebase
        if rebase(init)[0].is_cohen_macaulay():
            return SUFFICIENT, "an initial ideal is Cohen-Macaulay"
    try:
        ok = is_cm_homogeneous(gens, gb.order)
        return (VERIFIED, "system-of-parameters test") if ok \
            else (FAILED, "system-of-parameters test")
    except ValueError:
        return UNKNOWN, "no certificate found"


def radical_status(gb: GroebnerBasis) -> tuple[str, str]:
    if not gb.elements:
        return VERIFIED, "zero ideal"
    mi = _as_monomial_ideal(gb)
    if mi is not None:
        return (VERIFIED, "monomial, squarefree generators") if mi.is_squarefree() \
            else (FAILED, "monomial, non-squarefree generator")
    gens = list(gb.elements)
    for init in _initial_ideals(gens, gb.order.variables, gb.order):
        if init.is_squarefree():
            return SUFFICIENT, "a squarefree initial ideal"
    return UNKNOWN, "no certificate found"


def g0_status(gb: GroebnerBasis, gen_count: Optional[int] = None) -> tuple[str, str]:
    if not gb.elements:
        return VERIFIED, "zero ideal"
    mi = _as_monomial_ideal(gb)
    if mi is not None:
        try:
            return (VERIFIED, "monomial, locally CI") if mi.is_G0() \
                else (FAILED, "monomial, not locally Gorenstein")
        except NotUnmixedError:
            return FAILED, "monomial, not unmixed"
    counts = [len(gb.elements)] + ([gen_count] if gen_count else [])
    ht = initial_ideal(gb).height()
    if any(c == ht for c in counts):
        return SUFFICIENT, "complete intersection => Gorenstein"
    status, why = radical_status(gb)
    if status in PASSING:
        return SUFFICIENT, f"radical ({why}) => generically reduced"
    return UNKNOWN, "no certificate found"


# ---------------------------------------------------------------------------
# Geometric polarization

@dataclass(frozen=True)
class GeoPolarization:
    source: GroebnerBasis
    y: Variable
    y_primed: Variable
    polarized: tuple[Polynomial, ...]
    induced_order: InducedOrder
    gb_status: str = STATUS_UNKNOWN
    nzd_status: str = STATUS_UNKNOWN
    polarized_gb: Optional[GroebnerBasis] = None
    witness: Optional[Polynomial] = None


def geo_polarize_poly(g: Polynomial, y: Variable, y_primed: Variable) -> Polynomial:
    """r_0 + y r_1 + sum_{i>=2} y (y')^(i-1) r_i for g = sum y^i r_i."""
    if y_primed in g.support:
        raise ValueError(f"{y_primed} is not fresh in {g}")
    out = {}
    for m, c in g.terms.items():
        e = m.deg(y)
        if e >= 2:
            exps = {v: k for v, k in m.exps if v != y}
            exps[y] = 1
            exps[y_primed] = e - 1
            m = Monomial(exps)
        out[m] = c
    return Polynomial(out)


def fresh_prime(gb_order: TermOrder, y: Variable) -> Variable:
    layer = y.layer + 1
    taken = set(gb_order.variables)
    while Variable(y.base, layer) in taken:
        layer += 1
    return Variable(y.base, layer)


def geo_polarize_gb(gb: GroebnerBasis, y: Variable) -> GeoPolarization:
    """Polarize every element of a y-compatible Groebner basis."""
    if y not in gb.order.variables:
        raise ValueError(f"{y} is not a variable of the basis ring")
    if not is_y_compatible(gb.order, gb, y):
        raise ValueError("term order is not y-compatible with respect to the basis")
    yp = fresh_prime(gb.order, y)
    for g in gb.elements:
        if yp in g.support:
            raise ValueError(f"{yp} already occurs in {g}")
    polarized = tuple(geo_polarize_poly(g, y, yp) for g in gb.elements)
    return GeoPolarization(gb, y, yp, polarized, InducedOrder(gb.order, y, yp))


def uniform_y_degree(gb: GroebnerBasis, y: Variable) -> bool:
    """Some single t has deg_y(g) in {0, t} for every basis element; then
    the polarized set is guaranteed to be a Groebner basis."""
    degs = {deg_y(g, y) for g in gb.elements if not g.is_zero()} - {0}
    return len(degs) <= 1


def _polarized_leading_ideal(gp: GeoPolarization) -> MonomialIdeal:
    order = gp.induced_order
    return MonomialIdeal.from_gens(
        [g.leading_monomial(order) for g in gp.polarized], order.variables)


def _find_zerodivisor_witness(gp: GeoPolarization, upstairs: GroebnerBasis,
                              jprime: MonomialIdeal) -> Optional[Polynomial]:
    """Hunt for w with w*(y-y') in the polarized ideal but w outside it.

    For a basis element h whose leading monomial escapes the polarized
    leading terms, u = P_y(depol(h)) often lies in the ideal; u - h is
    divisible by y - y' and the quotient is a candidate witness.
    """
    order = gp.induced_order
    y_minus = Polynomial.variable(gp.y) - Polynomial.variable(gp.y_primed)
    for h in upstairs.elements:
        if jprime.contains(h.leading_monomial(order)):
            continue
        down = depol(h, gp.y, gp.y_primed)
        try:
            up = geo_polarize_poly(down, gp.y, gp.y_primed)
        except ValueError:
            continue
        if not membership(up, upstairs):
            continue
        diff = up - h
        if diff.is_zero():
            continue
        expr = divide(diff, [y_minus], order)
        if not expr.remainder.is_zero():
            continue
        w = expr.quotients[0]
        if not w.is_zero() and not membership(w, upstairs):
            return w
    return None


def decide_gb_status(gp: GeoPolarization) -> GeoPolarization:
    """Method A recomputes the reduced basis under the induced order and
    compares initial ideals with the partial polarization of in(I);
    method B checks HS_{R/I}(t) = (1-t) HS_{R'/I'}(t) to degree 12.  The
    nonzerodivisor status is the same thing by the induced-basis theorem.
    """
    require_homogeneous(gp.source.elements)
    upstairs = reduced_groebner(list(gp.polarized), gp.induced_order)
    jprime = _polarized_leading_ideal(gp)
    method_a = initial_ideal(upstairs).gens == jprime.gens

    n = len(gp.source.order.variables)
    k_down = k_polynomial(initial_ideal(reduce_gb(gp.source)))
    k_up = k_polynomial(initial_ideal(upstairs))
    down_series = KPolynomial(k_down.numerator, n).series(12)
    up_series = KPolynomial(k_up.numerator, n + 1).series(12)
    damped = [up_series[0]] + [up_series[i] - up_series[i - 1] for i in range(1, 13)]
    method_b = down_series == damped
    if method_a != method_b:
        raise AssertionError("initial-ideal and Hilbert-series methods disagree")

    witness = None
    if not method_a:
        witness = _find_zerodivisor_witness(gp, upstairs, jprime)
    return replace(
        gp,
        gb_status=IS_GB if method_a else NOT_GB,
        nzd_status=NZD if method_a else ZERODIVISOR,
        polarized_gb=upstairs,
        witness=witness,
    )


def reduced_polarization(gb: GroebnerBasis, y: Variable) -> GeoPolarization:
    """Polarization of the reduced basis of (gb)'s ideal.

    Valid only when the polarization of the GIVEN basis is a Groebner
    basis; the reduced basis's polarization is then itself reduced and
    generates the same ideal, both of which are re-checked here.
    """
    given = decide_gb_status(geo_polarize_gb(gb, y))
    if given.gb_status != IS_GB:
        raise ValueError("polarization of the given basis is not a Groebner basis")
    red = gb if gb.reduced else reduce_gb(gb)
    gp = given if gb.reduced else decide_gb_status(geo_polarize_gb(red, y))
    if gp.gb_status != IS_GB:
        raise AssertionError("reduced basis's polarization should inherit is_gb")
    assert gp.polarized_gb is not None
    if set(gp.polarized_gb.elements) != set(gp.polarized):
        raise AssertionError("polarized reduced basis should equal its own reduction")
    if not ideals_equal(gp.polarized_gb, reduced_groebner(list(given.polarized), given.induced_order)):
        raise AssertionError("(P_y(G_red)) should equal (P_y(G)) in the is_gb case")
    return replace(gp, polarized_gb=replace(gp.polarized_gb, reduced=True))


# ---------------------------------------------------------------------------
# Geometric vertex decomposition

@dataclass(frozen=True)
class GVD:
    """in_y(I) = y*C + N = C  intersect (N + (y)), from a y-linear basis."""

    basis: GroebnerBasis
    y: Variable
    pairs: tuple[tuple[Polynomial, Polynomial], ...]  # (d_i, r_i) per linear element
    in_y_gens: tuple[Polynomial, ...]
    C_gens: tuple[Polynomial, ...]
    N_gens: tuple[Polynomial, ...]
    C_gb: GroebnerBasis
    N_gb: GroebnerBasis
    nondegenerate: Optional[bool]
    degeneracy_note: str = ""


def gvd(generators: Iterable[Polynomial], y: Variable, order: TermOrder) -> GVD:
    """Split the reduced basis (which must be linear in y) into the
    geometric link C and geometric deletion N."""
    gb = reduced_groebner(list(generators), order)
    if not is_y_compatible(order, gb, y):
        raise ValueError("term order is not y-compatible with respect to the ideal's basis")
    if any(deg_y(g, y) > 1 for g in gb.elements):
        raise ValueError("basis is nonlinear in y: apply geometric polarization first")
    pairs = []
    hs = []
    for g in gb.elements:
        if deg_y(g, y) == 0:
            hs.append(g)
        else:
            d, r = y_split(g, y)
            pairs.append((d, r))
    ypoly = Polynomial.variable(y)
    in_y_gens = tuple(ypoly * d for d, _ in pairs) + tuple(hs)
    C_gens = tuple(d for d, _ in pairs) + tuple(hs)
    N_gens = tuple(hs)
    C_gb = reduced_groebner(list(C_gens), order)
    N_gb = reduced_groebner(list(N_gens), order)
    nondeg: Optional[bool]
    note = ""
    if C_gb.is_unit():
        nondeg, note = False, "C is the unit ideal"
    else:
        ht_c = initial_ideal(C_gb).height() if C_gb.elements else 0
        ht_n = initial_ideal(N_gb).height() if N_gb.elements else 0
        if ht_c != ht_n:
            nondeg, note = True, f"heights differ ({ht_c} vs {ht_n})"
        else:
            nondeg, note = _radicals_equal(C_gens, N_gb)
    return GVD(gb, y, tuple(pairs), in_y_gens, C_gens, N_gens, C_gb, N_gb, nondeg, note)


def _radicals_equal(C_gens, N_gb) -> tuple[Optional[bool], str]:
    """N <= C always holds here, so rad(C) = rad(N) iff every generator of
    C has a power in N; powers are tried up to a fixed budget and running
    out yields 'unknown', never a silent answer."""
    for c in C_gens:
        if c.is_zero():
            continue
        power = c
        for _ in range(RADICAL_POWER_BUDGET):
            if membership(power, N_gb):
                break
            power = power * c
        else:
            return None, f"power budget {RADICAL_POWER_BUDGET} exhausted on {c}"
    return False, "equal radicals: every C generator has a power in N"


# ---------------------------------------------------------------------------
# Geometric vertex decomposability

@dataclass(frozen=True)
class GVDNode:
    gens: tuple[Polynomial, ...]
    universe: tuple[Variable, ...]
    status: str  # decomposable | failed | unknown
    weak: bool
    unmixed: tuple[str, str]
    leaf: Optional[str] = None  # unit | variables
    y: Optional[Variable] = None
    link_child: Optional["GVDNode"] = None       # recursion into C
    deletion_child: Optional["GVDNode"] = None   # recursion into N (plain mode)
    n_radical: Optional[tuple[str, str]] = None  # weak mode
    n_cm: Optional[tuple[str, str]] = None
    note: str = ""

    @property
    def decomposable(self) -> bool:
        return self.status == "decomposable"


_gvd_cache: dict = {}
_gvd_lock = threading.Lock()


def is_geometrically_vertex_decomposable(generators: Iterable[Polynomial],
                                         universe: Sequence[Variable],
                                         mode: str = "plain",
                                         assume_unmixed: bool = False) -> GVDNode:
    """Recursive search over candidate variables; failure and unknown are
    returned as node statuses, never raised."""
    if mode not in ("plain", "weak"):
        raise ValueError("mode must be 'plain' or 'weak'")
    gens = tuple(g for g in generators if not g.is_zero())
    uni = tuple(sorted(universe))
    return _gvd_search(gens, uni, mode == "weak", assume_unmixed)


def _gvd_search(gens: tuple[Polynomial, ...], universe: tuple[Variable, ...],
                weak: bool, assume_unmixed: bool) -> GVDNode:
    base = reduced_groebner(list(gens), GrevLex(universe))
    key = (frozenset(base.elements), universe, weak, assume_unmixed)
    with _gvd_lock:
        if key in _gvd_cache:
            return _gvd_cache[key]
    node = _gvd_search_uncached(base, gens, universe, weak, assume_unmixed)
    with _gvd_lock:
        _gvd_cache[key] = node
    return node


def _gvd_search_uncached(base: GroebnerBasis, gens, universe, weak, assume_unmixed) -> GVDNode:
    if base.is_unit():
        return GVDNode(gens, universe, "decomposable", weak,
                       (VERIFIED, "unit ideal"), leaf="unit")
    if all(g.is_monomial() and next(iter(g.terms)).is_variable() for g in base.elements):
        return GVDNode(gens, universe, "decomposable", weak,
                       (VERIFIED, "generated by variables"), leaf="variables")
    unm = (ASSERTED, "caller assumption") if assume_unmixed else unmixed_status(base)
    if unm[0] == FAILED:
        return GVDNode(gens, universe, "failed", weak, unm, note="not unmixed")
    if unm[0] not in PASSING:
        return GVDNode(gens, universe, "unknown", weak, unm, note="unmixedness unknown")
    saw_unknown = False
    for y in universe:
        order = y_first_order(universe, y)
        gby = reduced_groebner(list(gens), order)
        if any(deg_y(g, y) > 1 for g in gby.elements):
            continue
        decomposition = gvd(list(gens), y, order)
        sub_universe = tuple(v for v in universe if v != y)
        link = _gvd_search(decomposition.C_gens, sub_universe, weak, assume_unmixed)
        if link.status == "unknown":
            saw_unknown = True
        if not link.decomposable:
            continue
        if weak:
            rad = radical_status(decomposition.N_gb)
            ncm = cm_status(decomposition.N_gb, gen_count=len(decomposition.N_gens))
            if rad[0] not in PASSING or ncm[0] not in PASSING:
                if UNKNOWN in (rad[0], ncm[0]):
                    saw_unknown = True
                continue
            return GVDNode(gens, universe, "decomposable", True, unm, y=y,
                           link_child=link, n_radical=rad, n_cm=ncm)
        deletion = _gvd_search(decomposition.N_gens, sub_universe, weak, assume_unmixed)
        if deletion.status == "unknown":
            saw_unknown = True
        if not deletion.decomposable:
            continue
        return GVDNode(gens, universe, "decomposable", False, unm, y=y,
                       link_child=link, deletion_child=deletion)
    status = "unknown" if saw_unknown else "failed"
    return GVDNode(gens, universe, status, weak, unm,
                   note="no variable admits a decomposition with decomposable pieces")


# ---------------------------------------------------------------------------
# Elementary G-biliaison

@dataclass(frozen=True)
class BiliaisonStep:
    """I/N and D/N(-shift) are linked by multiplication by witness v/d."""

    I_gens: tuple[Polynomial, ...]
    D_gens: tuple[Polynomial, ...]
    N_gens: tuple[Polynomial, ...]
    y: Variable
    order: TermOrder
    witness: tuple[Polynomial, Polynomial]
    shift: int = 1
    checks: tuple[tuple[str, str], ...] = ()

    @property
    def checks_dict(self) -> dict[str, str]:
        return dict(self.checks)

    @property
    def verified(self) -> bool:
        d = self.checks_dict
        return bool(d) and all(v in PASSING for v in d.values())


def _split_basis(gb: GroebnerBasis, y: Variable):
    """(d_i, r_i) with g = y*d_i + r_i (r_i the y-free part), plus h's."""
    pairs, hs = [], []
    for g in gb.elements:
        if deg_y(g, y) == 0:
            hs.append(g)
        else:
            pairs.append(y_split(g, y))
    return pairs, hs


def _step_checks(step: BiliaisonStep) -> dict[str, str]:
    order = step.order
    y = step.y
    gb = reduced_groebner(list(step.I_gens), order)
    pairs, hs = _split_basis(gb, y)
    n_gb = reduced_groebner(list(step.N_gens), order)
    d_gb = reduced_groebner(list(step.D_gens), order)
    checks: dict[str, str] = {}

    n_recomputed = reduced_groebner(list(hs), order)
    wiring_ok = ideals_equal(n_gb, n_recomputed)
    d_expected = reduced_groebner([d for d, _ in pairs] + hs, order)
    wiring_ok = wiring_ok and ideals_equal(d_gb, d_expected)
    checks["wiring"] = VERIFIED if wiring_ok else FAILED

    try:
        ht_i = initial_ideal(gb).height()
        ht_d = initial_ideal(d_gb).height()
        ht_n = initial_ideal(n_gb).height() if n_gb.elements else 0
        heights_ok = ht_d == ht_i and ht_n == ht_i - 1
    except ValueError:
        heights_ok = False
    checks["heights"] = VERIFIED if heights_ok else FAILED

    cross_ok = True
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            di, ri = pairs[i]
            dj, rj = pairs[j]
            if not membership(ri * dj - rj * di, n_gb):
                cross_ok = False
    v, d = step.witness
    ypoly = Polynomial.variable(y)
    for di, ri in pairs:
        if not membership(v * di - d * (ypoly * di + ri), n_gb):
            cross_ok = False
    checks["cross_relations"] = VERIFIED if cross_ok else FAILED

    checks["N_cm"] = cm_status(n_gb, gen_count=len(step.N_gens))[0]
    checks["N_g0"] = g0_status(n_gb, gen_count=len(step.N_gens))[0]
    unm_i = unmixed_status(gb)[0]
    unm_d = unmixed_status(d_gb)[0]
    ranking = {VERIFIED: 0, SUFFICIENT: 1, ASSERTED: 2, UNKNOWN: 3, FAILED: 4}
    checks["unmixed"] = max(unm_i, unm_d, key=lambda s: ranking[s])
    return checks


def biliaison_from_gvd(g: GVD) -> BiliaisonStep:
    """The elementary G-biliaison induced by a nondegenerate geometric
    vertex decomposition: I/N and C/N(-1), witness (y d_1 + r_1) / d_1."""
    if g.nondegenerate is not True:
        raise ValueError(f"geometric vertex decomposition not certified nondegenerate: {g.degeneracy_note}")
    if not g.pairs:
        raise ValueError("no y-linear basis element to build a witness from")
    d1, r1 = g.pairs[0]
    v = Polynomial.variable(g.y) * d1 + r1
    step = BiliaisonStep(
        I_gens=tuple(g.basis.elements),
        D_gens=g.C_gens,
        N_gens=g.N_gens,
        y=g.y,
        order=g.basis.order,
        witness=(v, d1),
    )
    checks = _step_checks(step)
    bad = {k: s for k, s in checks.items() if s not in PASSING}
    if bad:
        raise ValueError(f"biliaison side conditions failed: {bad}")
    return replace(step, checks=tuple(checks.items()))


def descend_biliaison(step: BiliaisonStep, gp: GeoPolarization) -> BiliaisonStep:
    """Push a verified biliaison on (P_y(G)) down to (G) by depolarizing
    the witness; all checks are re-run downstairs."""
    if gp.gb_status != IS_GB:
        raise ValueError("descent needs gb_status = is_gb on the polarization")
    if not step.verified:
        raise ValueError("descent needs a verified upstairs step")
    y, yp = gp.y, gp.y_primed
    source = gp.source
    pairs, hs = _split_basis(source, y)
    down = BiliaisonStep(
        I_gens=tuple(source.elements),
        D_gens=tuple(d for d, _ in pairs) + tuple(hs),
        N_gens=tuple(hs),
        y=y,
        order=source.order,
        witness=(depol(step.witness[0], y, yp), depol(step.witness[1], y, yp)),
    )
    checks = _step_checks(down)
    bad = {k: s for k, s in checks.items() if s not in PASSING}
    if bad:
        raise ValueError(f"descended step failed downstairs checks: {bad}")
    return replace(down, checks=tuple(checks.items()))


@dataclass(frozen=True)
class BiliaisonChain:
    steps: tuple[BiliaisonStep, ...]
    terminal_gens: tuple[Polynomial, ...]
    order: TermOrder


@dataclass(frozen=True)
class ChainReport:
    step_checks: tuple[dict, ...]
    linked: bool
    terminal_ci: bool
    overall: str

    @property
    def verified(self) -> bool:
        return self.overall in PASSING and self.linked and self.terminal_ci


def is_complete_intersection(gens: Sequence[Polynomial], order: TermOrder) -> bool:
    gb = reduced_groebner(list(gens), order)
    if gb.is_unit() or not gb.elements:
        return False
    ht = initial_ideal(gb).height()
    return len(gens) == ht or len(gb.elements) == ht


def verify_biliaison_chain(chain: BiliaisonChain) -> ChainReport:
    """Replay every step from its stored data; overall status is the worst
    individual status seen."""
    ranking = {VERIFIED: 0, SUFFICIENT: 1, ASSERTED: 2, UNKNOWN: 3, FAILED: 4}
    worst = VERIFIED
    reports = []
    linked = True
    prev_next: Optional[GroebnerBasis] = None
    for step in chain.steps:
        checks = _step_checks(step)
        reports.append(checks)
        for s in checks.values():
            if ranking[s] > ranking[worst]:
                worst = s
        gb_i = reduced_groebner(list(step.I_gens), step.order)
        if prev_next is not None and not ideals_equal(prev_next, gb_i):
            linked = False
        prev_next = reduced_groebner(list(step.D_gens), step.order)
    if prev_next is not None:
        terminal = reduced_groebner(list(chain.terminal_gens), chain.order)
        if not ideals_equal(prev_next, terminal):
            linked = False
    terminal_ci = is_complete_intersection(list(chain.terminal_gens), chain.order)
    return ChainReport(tuple(reports), linked, terminal_ci, worst)


def biliaison_step_at(generators: Iterable[Polynomial], y: Variable,
                      order: TermOrder) -> tuple[BiliaisonStep, GeoPolarization]:
    """One chain move at y: polarize (trivially when the basis is already
    linear in y), decompose upstairs, build the biliaison, descend."""
    gb = reduced_groebner(list(generators), order)
    gp = decide_gb_status(geo_polarize_gb(gb, y))
    if gp.gb_status != IS_GB:
        raise ValueError("geometric polarization is not a Groebner basis at " + str(y))
    decomposition = gvd(list(gp.polarized), gp.y, gp.induced_order)
    up = biliaison_from_gvd(decomposition)
    down = descend_biliaison(up, gp)
    return down, gp


def biliaison_chain_search(generators: Iterable[Polynomial], order: TermOrder,
                           variables: Optional[Sequence[Variable]] = None,
                           max_steps: int = 12) -> BiliaisonChain:
    """Iterate biliaison steps until a complete intersection; either follow
    the given variable list or try universe variables in ascending order."""
    current = [g for g in generators]
    steps: list[BiliaisonStep] = []
    forced = list(variables) if variables is not None else None
    for k in range(max_steps):
        if is_complete_intersection(current, order):
            break
        candidates = [forced[len(steps)]] if forced and len(steps) < len(forced) else order.variables
        made = None
        for y in candidates:
            yo = y_first_order(order.variables, y)
            try:
                made, _ = biliaison_step_at(current, y, yo)
                break
            except (ValueError, AssertionError):
                continue
        if made is None:
            raise ValueError("no variable admits a verified biliaison step")
        steps.append(made)
        current = list(made.D_gens)
    if not is_complete_intersection(current, order):
        raise ValueError(f"chain did not reach a complete intersection in {max_steps} steps")
    return BiliaisonChain(tuple(steps), tuple(current), order)
