"""Simplicial complexes and the Stanley-Reisner dictionary.

Complexes are stored by their facets; faces are enumerated on demand.
Reduced homology ranks come from boundary-matrix ranks over an exact
field (the rationals or a prime field), which drives Reisner's criterion.
Vertex decomposability searches vertices in ascending label order and
memoizes on the facet set, so certificates are deterministic.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional

from .algebra import Monomial, Variable
from .ideals import MonomialIdeal, minimal_covers


def _antichain(sets: Iterable[frozenset]) -> frozenset[frozenset]:
    sets = set(sets)
    return frozenset(s for s in sets if not any(s < t for t in sets))


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet-stored complex.  {()} (only the empty face) and the void
    complex (no faces at all) are distinct values."""

    universe: tuple
    facets: frozenset[frozenset]

    @classmethod
    def from_facets(cls, universe: Iterable, facets: Iterable[Iterable]) -> "SimplicialComplex":
        uni = tuple(sorted(set(universe)))
        fs = _antichain(frozenset(f) for f in facets)
        for f in fs:
            if not f <= set(uni):
                raise ValueError(f"facet {set(f)} outside the vertex universe")
        return cls(uni, fs)

    @classmethod
    def void(cls, universe: Iterable) -> "SimplicialComplex":
        return cls.from_facets(universe, [])

    @classmethod
    def empty_face_only(cls, universe: Iterable) -> "SimplicialComplex":
        return cls.from_facets(universe, [frozenset()])

    def is_void(self) -> bool:
        return not self.facets

    def dim(self) -> int:
        if self.is_void():
            raise ValueError("the void complex has no dimension")
        return max(len(f) for f in self.facets) - 1

    def vertices(self) -> list:
        vs: set = set()
        for f in self.facets:
            vs |= f
        return sorted(vs)

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def is_simplex(self) -> bool:
        """At most one facet: a simplex, {()} included."""
        return len(self.facets) == 1

    def has_face(self, face: Iterable) -> bool:
        f = frozenset(face)
        return any(f <= g for g in self.facets)

    def faces(self) -> set[frozenset]:
        out: set[frozenset] = set()
        for f in self.facets:
            fl = sorted(f)
            for k in range(len(fl) + 1):
                out.update(map(frozenset, combinations(fl, k)))
        return out

    def cone_apexes(self) -> list:
        """Vertices contained in every facet."""
        if self.is_void():
            return []
        common = frozenset.intersection(*self.facets)
        return sorted(common)

    def __str__(self):
        if self.is_void():
            return "{}"
        names = ["{" + ",".join(str(v) for v in sorted(f)) + "}" for f in
                 sorted(self.facets, key=lambda f: sorted(f))]
        return "<" + ", ".join(names) + ">"


def link(cx: SimplicialComplex, v) -> SimplicialComplex:
    if v not in cx.universe:
        raise ValueError(f"vertex {v} not in the universe")
    uni = tuple(u for u in cx.universe if u != v)
    facets = [f - {v} for f in cx.facets if v in f]
    return SimplicialComplex.from_facets(uni, facets)


def deletion(cx: SimplicialComplex, v) -> SimplicialComplex:
    if v not in cx.universe:
        raise ValueError(f"vertex {v} not in the universe")
    uni = tuple(u for u in cx.universe if u != v)
    facets = [f - {v} for f in cx.facets]
    return SimplicialComplex.from_facets(uni, facets)


def cone(cx: SimplicialComplex, apex) -> SimplicialComplex:
    if apex in cx.universe:
        raise ValueError(f"apex {apex} already in the universe")
    uni = cx.universe + (apex,)
    facets = [f | {apex} for f in cx.facets]
    return SimplicialComplex.from_facets(uni, facets)


def link_of_face(cx: SimplicialComplex, face: Iterable) -> SimplicialComplex:
    f = frozenset(face)
    uni = tuple(u for u in cx.universe if u not in f)
    facets = [g - f for g in cx.facets if f <= g]
    return SimplicialComplex.from_facets(uni, facets)


# ---------------------------------------------------------------------------
# Stanley-Reisner dictionary

def sr_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Complex whose Stanley-Reisner ideal is the given squarefree ideal."""
    if not ideal.is_squarefree():
        raise ValueError("Stanley-Reisner complexes need squarefree ideals")
    if ideal.is_unit():
        return SimplicialComplex.void(ideal.universe)
    covers = ideal.minimal_primes()
    uni = set(ideal.universe)
    return SimplicialComplex.from_facets(ideal.universe, [frozenset(uni - p) for p in covers])


def sr_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """Minimal non-faces, i.e. minimal transversals of facet complements."""
    if cx.is_void():
        return MonomialIdeal.unit(cx.universe)
    uni = set(cx.universe)
    complements = [frozenset(uni - f) for f in cx.facets]
    gens = [Monomial({v: 1 for v in t}) for t in minimal_covers(complements)]
    return MonomialIdeal.from_gens(gens, cx.universe)


from_ideal = sr_complex
to_ideal = sr_ideal


# ---------------------------------------------------------------------------
# Homology over an exact field and Reisner's criterion

def _rank(rows: list[dict[int, int]], p: Optional[int]) -> int:
    """Rank of a sparse integer matrix over Q (p=None) or F_p."""
    pivots: dict[int, dict] = {}
    rank = 0
    for row in rows:
        if p is None:
            r = {j: Fraction(c) for j, c in row.items() if c}
        else:
            r = {j: c % p for j, c in row.items() if c % p}
        while r:
            j = min(r)
            if j not in pivots:
                pivots[j] = r
                rank += 1
                break
            piv = pivots[j]
            if p is None:
                factor = r[j] / piv[j]
            else:
                factor = (r[j] * pow(piv[j], p - 2, p)) % p
            for k, c in piv.items():
                nv = r.get(k, 0) - factor * c
                if p is not None:
                    nv %= p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return rank


_hom_cache: dict = {}
_hom_lock = threading.Lock()


def reduced_homology_ranks(cx: SimplicialComplex, p: Optional[int] = None) -> list[int]:
    """Ranks of reduced homology in dimensions -1..dim(cx)."""
    if cx.is_void():
        raise ValueError("homology of the void complex")
    key = (cx.facets, p)
    with _hom_lock:
        if key in _hom_cache:
            return list(_hom_cache[key])
    d = cx.dim()
    faces_by_size: list[list[frozenset]] = [[] for _ in range(d + 2)]
    for f in cx.faces():
        faces_by_size[len(f)].append(f)
    for fl in faces_by_size:
        fl.sort(key=sorted)
    index = [{f: i for i, f in enumerate(fl)} for fl in faces_by_size]

    def boundary(k: int) -> list[dict[int, int]]:
        rows = []
        for f in faces_by_size[k]:
            fl = sorted(f)
            row: dict[int, int] = {}
            for i, v in enumerate(fl):
                row[index[k - 1][frozenset(f - {v})]] = -1 if i % 2 else 1
            rows.append(row)
        return rows

    ranks_d = [0] * (d + 3)
    for k in range(1, d + 2):
        ranks_d[k] = _rank(boundary(k), p)
    out = [len(faces_by_size[k]) - ranks_d[k] - ranks_d[k + 1] for k in range(d + 2)]
    with _hom_lock:
        _hom_cache[key] = tuple(out)
    return out


_cm_cache: dict = {}
_cm_lock = threading.Lock()


def is_cm_reisner(cx: SimplicialComplex, p: Optional[int] = None) -> bool:
    """Reisner: every face link has vanishing reduced homology below its dim.

    Links that are simplices or cones are contractible and skipped.
    """
    if cx.is_void():
        return True
    key = (cx.facets, p)
    with _cm_lock:
        if key in _cm_cache:
            return _cm_cache[key]
    result = True
    for face in sorted(cx.faces(), key=lambda f: (len(f), sorted(f))):
        lk = link_of_face(cx, face)
        if lk.is_simplex() or lk.cone_apexes():
            continue
        dl = lk.dim()
        ranks = reduced_homology_ranks(lk, p)
        if any(ranks[i] != 0 for i in range(dl + 1)):  # entries cover dims -1..dl-1
            result = False
            break
    with _cm_lock:
        _cm_cache[key] = result
    return result


def is_cm_complex(cx: SimplicialComplex, p: Optional[int] = None) -> bool:
    """Cohen-Macaulayness of a complex, with cheap screens before Reisner.

    Cone directions are stripped (a cone is CM iff its base is), impurity
    refutes immediately, and a budgeted vertex-decomposability search can
    confirm positively (vertex decomposable => shellable => CM over every
    field).  Anything left is decided by Reisner's criterion.
    """
    while True:
        if cx.is_void() or cx.is_simplex():
            return True
        apexes = cx.cone_apexes()
        if not apexes:
            break
        cx = link(cx, apexes[0])
    if not cx.is_pure():
        return False
    try:
        if _plain_vd(cx, [4000]) is not None:
            return True
    except _Budget:
        pass
    return is_cm_reisner(cx, p)


# ---------------------------------------------------------------------------
# Vertex decomposability

LEAF_EMPTY = "empty"
LEAF_SIMPLEX = "simplex"
LEAF_CM = "cohen_macaulay"


@dataclass(frozen=True)
class SheddingNode:
    """One node of a shedding certificate; replaying links/deletions from
    the stored complex must reproduce the stored children."""

    complex: SimplicialComplex
    vertex: Optional[object] = None
    leaf_reason: Optional[str] = None
    link_child: Optional["SheddingNode"] = None
    deletion_child: Optional["SheddingNode"] = None
    weak: bool = False

    def shedding_sequence(self) -> list:
        """Vertices along the deletion spine (the order facets are shed)."""
        out = []
        node = self
        while node is not None and node.vertex is not None:
            out.append(node.vertex)
            node = node.deletion_child
        return out


def _leaf_reason(cx: SimplicialComplex) -> Optional[str]:
    if cx.is_void() or cx.facets == frozenset({frozenset()}):
        return LEAF_EMPTY
    if cx.is_simplex():
        return LEAF_SIMPLEX
    return None


class _Budget(Exception):
    pass


_MISSING = object()
_vd_cache: dict[frozenset, Optional[SheddingNode]] = {}
_vd_lock = threading.Lock()


def _reroot(node: SheddingNode, cx: SimplicialComplex) -> SheddingNode:
    """Rebuild a cached certificate over a different vertex universe."""
    if node.complex.universe == cx.universe:
        return node
    if node.vertex is None:
        return SheddingNode(cx, leaf_reason=node.leaf_reason, weak=node.weak)
    return SheddingNode(
        cx,
        vertex=node.vertex,
        link_child=_reroot(node.link_child, link(cx, node.vertex)),
        deletion_child=_reroot(node.deletion_child, deletion(cx, node.vertex)),
    )


def _plain_vd(cx: SimplicialComplex, counter: Optional[list] = None) -> Optional[SheddingNode]:
    key = cx.facets
    with _vd_lock:
        cached = _vd_cache.get(key, _MISSING)
    if cached is not _MISSING:
        return None if cached is None else _reroot(cached, cx)
    if counter is not None:
        counter[0] -= 1
        if counter[0] < 0:
            raise _Budget
    reason = _leaf_reason(cx)
    if reason is not None:
        node: Optional[SheddingNode] = SheddingNode(cx, leaf_reason=reason)
    elif not cx.is_pure():
        node = None
    else:
        node = None
        for v in cx.vertices():
            lnode = _plain_vd(link(cx, v), counter)
            if lnode is None:
                continue
            dnode = _plain_vd(deletion(cx, v), counter)
            if dnode is None:
                continue
            node = SheddingNode(cx, vertex=v, link_child=lnode, deletion_child=dnode)
            break
    with _vd_lock:
        _vd_cache[key] = node
    return node


def is_vertex_decomposable(cx: SimplicialComplex) -> Optional[SheddingNode]:
    """Shedding certificate, or None.  Vertices are tried in ascending order."""
    return _plain_vd(cx)


def is_weakly_vertex_decomposable(cx: SimplicialComplex, p: Optional[int] = None) -> Optional[SheddingNode]:
    """Links must be vertex decomposable, deletions merely Cohen-Macaulay."""
    reason = _leaf_reason(cx)
    if reason is not None:
        return SheddingNode(cx, leaf_reason=reason, weak=True)
    if not cx.is_pure():
        return None
    for v in cx.vertices():
        node, _ = try_shed(cx, v, weak=True, p=p)
        if node is not None:
            return node
    return None


def try_shed(cx: SimplicialComplex, v, weak: bool = False,
             p: Optional[int] = None) -> tuple[Optional[SheddingNode], str]:
    """Attempt the decomposition at one prescribed vertex.

    Returns (node, reason); node is None when v is not a valid step.
    """
    if not cx.is_pure():
        return None, "complex is not pure"
    if not cx.has_face([v]):
        return None, f"{v} is not a vertex of the complex"
    lk, dl = link(cx, v), deletion(cx, v)
    lnode = _plain_vd(lk)
    if lnode is None:
        reason = "link is not pure" if not lk.is_pure() else "link is not vertex decomposable"
        return None, reason
    if weak:
        if not is_cm_complex(dl, p):
            return None, "deletion is not Cohen-Macaulay"
        return SheddingNode(cx, vertex=v, link_child=lnode,
                            deletion_child=SheddingNode(dl, leaf_reason=LEAF_CM, weak=True),
                            weak=True), "ok"
    dnode = _plain_vd(dl)
    if dnode is None:
        reason = "deletion is not pure" if not dl.is_pure() else "deletion is not vertex decomposable"
        return None, reason
    return SheddingNode(cx, vertex=v, link_child=lnode, deletion_child=dnode), "ok"


def replay_certificate(node: SheddingNode, p: Optional[int] = None) -> bool:
    """Re-derive every child via link/deletion and re-check all leaves."""
    cx = node.complex
    if not cx.is_pure():
        return False
    if node.vertex is None:
        if node.leaf_reason == LEAF_EMPTY:
            return cx.is_void() or cx.facets == frozenset({frozenset()})
        if node.leaf_reason == LEAF_SIMPLEX:
            return cx.is_simplex()
        if node.leaf_reason == LEAF_CM:
            return node.weak and is_cm_complex(cx, p)
        return False
    if not cx.has_face([node.vertex]):
        return False
    if node.link_child is None or node.deletion_child is None:
        return False
    if node.link_child.complex != link(cx, node.vertex):
        return False
    if node.deletion_child.complex != deletion(cx, node.vertex):
        return False
    return replay_certificate(node.link_child, p) and replay_certificate(node.deletion_child, p)


# ---------------------------------------------------------------------------
# Shellability (brute force)

def is_shellable(cx: SimplicialComplex, max_facets: int = 10) -> Optional[list[frozenset]]:
    """Backtracking search for a shelling order of a pure complex."""
    if cx.is_void():
        raise ValueError("shellability of the void complex")
    if not cx.is_pure():
        raise ValueError("shellability is defined for pure complexes here")
    facets = sorted(cx.facets, key=sorted)
    if len(facets) > max_facets:
        raise ValueError(f"facet budget exceeded ({len(facets)} > {max_facets})")
    if len(facets) <= 1:
        return facets

    def ok_next(prefix: list[frozenset], f: frozenset) -> bool:
        inter = _antichain(g & f for g in prefix)
        return all(len(s) == len(f) - 1 for s in inter)

    order: list[frozenset] = []
    used = [False] * len(facets)

    def rec() -> bool:
        if len(order) == len(facets):
            return True
        for i, f in enumerate(facets):
            if used[i]:
                continue
            if order and not ok_next(order, f):
                continue
            used[i] = True
            order.append(f)
            if rec():
                return True
            order.pop()
            used[i] = False
        return False

    return order if rec() else None
