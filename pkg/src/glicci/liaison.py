"""Monomial basic double G-links.

Extraction in the normal form C = zB + A (B = C:z, A the generators not
divisible by z), full verification of the link conditions, lifting from
and pushing to partial polarizations, the layer guard that confines
multipliers to first-layer variables, depth-first glicci-chain search,
and the constructive chains for stable Cohen-Macaulay and artinian
ideals through the vertex decomposition of their polarizations.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping, Optional

from .algebra import Monomial, Variable
from .ideals import (
    MonomialIdeal,
    NotUnmixedError,
    depolarize,
    polarize,
)
from .simplicial import SheddingNode, is_vertex_decomposable, sr_complex, sr_ideal

VERIFIED = "verified"
FAILED = "failed"

CHECK_KEYS = ("decomposition_ok", "containment_ok", "colon_ok", "heights_ok",
              "unmixed_ok", "A_cm", "A_g0")


class BudgetExceededError(RuntimeError):
    """Search budget ran out; not a proof that no chain exists."""


@dataclass(frozen=True)
class BDLStep:
    """C = z*B + A with A the deletion-side ideal and B = C:z."""

    C: MonomialIdeal
    z: Variable
    A: MonomialIdeal
    B: MonomialIdeal
    checks: tuple[tuple[str, str], ...] = ()
    relabel: tuple[tuple[Variable, Variable], ...] = ()

    @property
    def checks_dict(self) -> dict[str, str]:
        return dict(self.checks)

    @property
    def verified(self) -> bool:
        d = self.checks_dict
        return bool(d) and all(d.get(k) == VERIFIED for k in CHECK_KEYS)

    @property
    def z_absent(self) -> bool:
        zm = Monomial({self.z: 1})
        return not any(zm.divides(g) for g in self.C.gens)


def bdl_decompose(C: MonomialIdeal, z: Variable) -> tuple[MonomialIdeal, MonomialIdeal]:
    """The unique pair (A, B) with C = zB + A, A:z = A, A inside B."""
    if C.is_unit():
        raise ValueError("basic double links need a proper ideal")
    zm = Monomial({z: 1})
    A = MonomialIdeal.from_gens([g for g in C.gens if not zm.divides(g)], C.universe)
    B = C.colon(zm)
    return A, B


def make_step(C: MonomialIdeal, z: Variable) -> BDLStep:
    A, B = bdl_decompose(C, z)
    return BDLStep(C, z, A, B)


def verify_bdl(step: BDLStep) -> BDLStep:
    """Fill in every check; the step is a basic double G-link iff all pass."""
    C, z, A, B = step.C, step.z, step.A, step.B
    checks: dict[str, str] = {}
    zm = Monomial({z: 1})

    A0, B0 = bdl_decompose(C, z)
    recombined = B.times_variable(z).add(A)
    ok = A0.gens == A.gens and B0.gens == B.gens and recombined.gens == C.gens
    checks["decomposition_ok"] = VERIFIED if ok else FAILED

    checks["containment_ok"] = VERIFIED if all(B.contains(g) for g in A.gens) else FAILED
    checks["colon_ok"] = VERIFIED if A.colon(zm).gens == A.gens else FAILED

    proper = A.is_proper() and B.is_proper()
    if proper and A.height() == B.height() - 1:
        checks["heights_ok"] = VERIFIED
    else:
        checks["heights_ok"] = FAILED

    try:
        unmixed = proper and A.is_unmixed() and B.is_unmixed()
    except ValueError:
        unmixed = False
    checks["unmixed_ok"] = VERIFIED if unmixed else FAILED

    try:
        checks["A_cm"] = VERIFIED if A.is_proper() and A.is_cohen_macaulay() else FAILED
    except ValueError:
        checks["A_cm"] = FAILED
    try:
        checks["A_g0"] = VERIFIED if A.is_proper() and A.is_G0() else FAILED
    except (NotUnmixedError, ValueError):
        checks["A_g0"] = FAILED

    return replace(step, checks=tuple(checks.items()))


def guard_no_bad_polarization(I: MonomialIdeal, i: int, a: int,
                              b: Optional[Mapping[int, int]] = None) -> bool:
    """Layer guard: with the witness present, the decomposition of P_b(I)
    at x_{i,a} (a > 1) is never a basic double G-link, so searches may
    restrict to first-layer multipliers."""
    k = I.max_exponent(i)
    bi = k if b is None else b.get(i, k)
    if not (1 < a <= bi <= k):
        raise ValueError(f"need 1 < a <= b_i <= {k}, got a={a}, b_i={bi}")
    xi = Monomial({Variable(i, 1): 1})
    xia = Monomial({Variable(i, 1): a})
    witness = any(xi.divides(g) and not xia.divides(g) for g in I.gens)
    if not witness:
        raise ValueError(
            f"no witness: x_{i}^{a} divides every generator divisible by x_{i}")
    return True


def lift_bdl(polar_step: BDLStep) -> BDLStep:
    """Lift a verified step on a partial polarization down to the original
    ideal.  The result is a basic double G-link iff the depolarized
    deletion ideal is generically Gorenstein; the returned checks say."""
    if polar_step.z.layer != 1:
        raise ValueError("lifting needs a first-layer multiplier")
    if not polar_step.checks:
        polar_step = verify_bdl(polar_step)
    if not polar_step.verified:
        raise ValueError("lift_bdl expects a verified polarized step")
    I = depolarize(polar_step.C)
    A = depolarize(polar_step.A)
    x_r = Variable(polar_step.z.base, 1)
    A0, B = bdl_decompose(I, x_r)
    if A0.gens != A.gens:
        raise AssertionError("depolarized deletion ideal mismatch in lift")
    return verify_bdl(BDLStep(I, x_r, A, B))


def push_bdl(step: BDLStep, b: Optional[Mapping[int, int]] = None) -> BDLStep:
    """Transform a verified step on I into one on P_b(I) at x_{i,1}."""
    if not step.checks:
        step = verify_bdl(step)
    if not step.verified:
        raise ValueError("push_bdl expects a verified step")
    I, z = step.C, step.z
    if any(v.layer != 1 for v in I.universe):
        raise ValueError("push_bdl expects a layer-1 universe")
    P = polarize(I, b)
    z1 = Variable(z.base, 1)
    calA, calB = bdl_decompose(P, z1)
    full = {v.base: max(1, I.max_exponent(v.base)) for v in I.universe}
    vec = dict(full) if b is None else {i: b.get(i, full[i]) for i in full}

    # Deletion side polarizes directly (its generators avoid z).
    expectA = polarize(step.A, vec)
    if expectA.gens != calA.gens:
        raise AssertionError("polarized deletion ideal mismatch in push")

    # Link side: P_b(x_i B) : x_{i,1} is a relabeled partial polarization of B.
    relabel: tuple[tuple[Variable, Variable], ...] = ()
    bi = vec[z.base]
    if bi == 1:
        expectB = polarize(step.B, vec)
    else:
        tilde = dict(vec)
        tilde[z.base] = bi - 1
        PB = polarize(step.B, tilde)
        mapping = {v: Variable(v.base, v.layer + 1) for v in PB.universe if v.base == z.base}
        relabel = tuple(sorted(mapping.items()))
        expectB = MonomialIdeal.from_gens(
            [g.remap(mapping) for g in PB.gens],
            [mapping.get(v, v) for v in PB.universe])
    if expectB.gens != calB.gens:
        raise AssertionError("Lemma-style relabeled polarization mismatch in push")

    out = verify_bdl(BDLStep(P, z1, calA, calB, relabel=relabel))
    if not out.verified:
        raise AssertionError("pushed step failed verification")
    return out


# ---------------------------------------------------------------------------
# Chains

@dataclass(frozen=True)
class GlicciChain:
    steps: tuple[BDLStep, ...]
    terminal: MonomialIdeal

    def __len__(self):
        return len(self.steps)

    @property
    def direct_g_links(self) -> int:
        return 2 * len(self.steps)


def verify_glicci_chain(chain: GlicciChain, start: Optional[MonomialIdeal] = None) -> bool:
    """Re-audit every step from scratch and check the chain wiring."""
    current = start
    for step in chain.steps:
        if current is not None and step.C.gens != current.gens:
            return False
        if not verify_bdl(replace(step, checks=())).verified:
            return False
        current = step.B
    if current is not None and chain.terminal.gens != current.gens:
        return False
    return chain.terminal.is_variable_generated()


def glicci_chain_search(I: MonomialIdeal, budget: int = 2000) -> Optional[GlicciChain]:
    """Depth-first search for a chain of verified shift-1 monomial basic
    double G-links from I down to an ideal generated by variables.

    Multipliers run over first-layer variables in ascending order.  Raises
    BudgetExceededError when the verification budget runs out; returns None
    when the space is exhausted (neither outcome proves non-glicci).
    """
    if I.is_unit() or I.is_zero():
        raise ValueError("glicci search needs a proper nonzero ideal")
    if not I.is_unmixed():
        raise NotUnmixedError("glicci search needs an unmixed ideal")
    if not I.is_cohen_macaulay():
        raise ValueError("glicci search needs a Cohen-Macaulay ideal")
    counter = [budget]

    def search(C: MonomialIdeal) -> Optional[list[BDLStep]]:
        if C.is_variable_generated():
            return []
        for v in C.universe:
            if v.layer != 1:
                continue
            vm = Monomial({v: 1})
            if not any(vm.divides(g) for g in C.gens):
                continue
            counter[0] -= 1
            if counter[0] < 0:
                raise BudgetExceededError(f"budget {budget} exhausted")
            step = verify_bdl(make_step(C, v))
            if not step.verified:
                continue
            rest = search(step.B)
            if rest is not None:
                return [step] + rest
        return None

    steps = search(I)
    if steps is None:
        return None
    terminal = steps[-1].B if steps else I
    return GlicciChain(tuple(steps), terminal)


# ---------------------------------------------------------------------------
# Constructive chains for stable CM and artinian ideals

@dataclass(frozen=True)
class PolarizationChain:
    """Vertex decomposition of the polarization plus the induced chain."""

    polarization: MonomialIdeal
    shedding: SheddingNode
    chain: GlicciChain


def _ideal_in_ambient(cx, ambient) -> MonomialIdeal:
    return sr_ideal(cx).with_universe(ambient)


def chain_from_certificate(cert: SheddingNode, ambient) -> GlicciChain:
    """Walk the link spine of a shedding certificate, emitting one verified
    basic double G-link per genuine shed; cone-apex sheds leave the ideal
    unchanged and emit nothing."""
    steps: list[BDLStep] = []
    node = cert
    C = _ideal_in_ambient(node.complex, ambient)
    while node.vertex is not None:
        v = node.vertex
        vm = Monomial({v: 1})
        if any(vm.divides(g) for g in C.gens):
            A = _ideal_in_ambient(node.deletion_child.complex, ambient)
            B = _ideal_in_ambient(node.link_child.complex, ambient)
            step = verify_bdl(BDLStep(C, v, A, B))
            if not step.verified:
                raise AssertionError(f"induced step at {v} failed: {step.checks_dict}")
            steps.append(step)
            C = B
        node = node.link_child
        if _ideal_in_ambient(node.complex, ambient).gens != C.gens:
            raise AssertionError("link spine does not match the running ideal")
    if not C.is_variable_generated():
        raise AssertionError("chain did not terminate at a variable-generated ideal")
    return GlicciChain(tuple(steps), C)


def _chain_via_polarization(I: MonomialIdeal) -> PolarizationChain:
    P = polarize(I)
    cx = sr_complex(P)
    cert = is_vertex_decomposable(cx)
    if cert is None:
        raise AssertionError("polarization unexpectedly not vertex decomposable")
    chain = chain_from_certificate(cert, P.universe)
    return PolarizationChain(P, cert, chain)


def stable_chain(I: MonomialIdeal) -> PolarizationChain:
    """For stable Cohen-Macaulay ideals: glicci chain on the polarization,
    together with the vertex decomposition driving it."""
    if not I.is_stable():
        raise ValueError("stable_chain needs a stable ideal")
    if not I.is_cohen_macaulay():
        raise ValueError("stable_chain needs a Cohen-Macaulay ideal")
    return _chain_via_polarization(I)


def artinian_chain(I: MonomialIdeal) -> PolarizationChain:
    """For artinian ideals: glicci chain on the polarization."""
    if not I.is_artinian():
        raise ValueError("artinian_chain needs an artinian ideal")
    return _chain_via_polarization(I)
