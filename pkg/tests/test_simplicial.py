import random

import pytest

from glicci.algebra import Monomial, Variable
from glicci.ideals import MonomialIdeal
from glicci.simplicial import (
    SimplicialComplex,
    cone,
    deletion,
    is_cm_complex,
    is_cm_reisner,
    is_shellable,
    is_vertex_decomposable,
    is_weakly_vertex_decomposable,
    link,
    link_of_face,
    reduced_homology_ranks,
    replay_certificate,
    sr_complex,
    sr_ideal,
    try_shed,
)

x1, x2, x3, x4 = (Variable(i) for i in range(1, 5))


def cx(universe, facets):
    return SimplicialComplex.from_facets(universe, facets)


def running_delta():
    """Facets {1,4}, {2,3}, {2,4} on vertex set [4]."""
    return cx([1, 2, 3, 4], [{1, 4}, {2, 3}, {2, 4}])


def running_ideal():
    gens = [Monomial({x1: 1, x2: 1}), Monomial({x1: 1, x3: 1}), Monomial({x3: 1, x4: 1})]
    return MonomialIdeal.from_gens(gens, [x1, x2, x3, x4])


class TestDictionary:
    def test_from_ideal_running(self):
        d = sr_complex(running_ideal())
        assert d.facets == frozenset({frozenset({x1, x4}), frozenset({x2, x3}), frozenset({x2, x4})})

    def test_full_simplex(self):
        full = cx([x1, x2, x3], [{x1, x2, x3}])
        assert sr_ideal(full).is_zero()
        assert sr_complex(MonomialIdeal.zero([x1, x2])).facets == frozenset({frozenset({x1, x2})})

    def test_roundtrip(self):
        I = running_ideal()
        assert sr_ideal(sr_complex(I)) == I
        d = running_delta()
        assert sr_complex(sr_ideal(d)) == d

    def test_roundtrip_random(self, rng):
        uni = [Variable(i + 1) for i in range(4)]
        for _ in range(40):
            gens = []
            for _ in range(rng.randint(1, 4)):
                sup = rng.sample(uni, rng.randint(1, 3))
                gens.append(Monomial({v: 1 for v in sup}))
            I = MonomialIdeal.from_gens(gens, uni)
            assert sr_ideal(sr_complex(I)) == I

    def test_void_and_empty(self):
        assert sr_complex(MonomialIdeal.unit([x1, x2])).is_void()
        only_empty = SimplicialComplex.empty_face_only([x1, x2])
        assert sr_ideal(only_empty).gens == frozenset({Monomial({x1: 1}), Monomial({x2: 1})})


class TestLinkDeletionCone:
    def test_running_link_deletion(self):
        d = running_delta()
        assert link(d, 1).facets == frozenset({frozenset({4})})
        assert deletion(d, 1).facets == frozenset({frozenset({2, 3}), frozenset({2, 4})})

    def test_cone_link_deletion(self):
        d = running_delta()
        c = cone(d, 9)
        assert link(c, 9) == d
        assert deletion(c, 9) == d

    def test_sr_identity_random(self, rng):
        # I_Delta = I_del + x_v * I_lk  (computed in the same ambient ring)
        uni = [Variable(i + 1) for i in range(4)]
        for _ in range(30):
            gens = []
            for _ in range(rng.randint(1, 4)):
                sup = rng.sample(uni, rng.randint(1, 3))
                gens.append(Monomial({v: 1 for v in sup}))
            I = MonomialIdeal.from_gens(gens, uni)
            d = sr_complex(I)
            verts = d.vertices()
            if not verts:
                continue
            v = rng.choice(verts)
            lk, dl = link(d, v), deletion(d, v)
            lk_gens = [g for g in sr_ideal(lk).gens]
            dl_gens = [g for g in sr_ideal(dl).gens]
            vm = Monomial({v: 1})
            combined = MonomialIdeal.from_gens(dl_gens + [vm * g for g in lk_gens], uni)
            assert combined.gens == I.gens

    def test_link_of_face(self):
        d = running_delta()
        lk = link_of_face(d, {2, 4})
        assert lk.facets == frozenset({frozenset()})


class TestPurityHomologyReisner:
    def test_purity(self):
        assert running_delta().is_pure()
        assert not deletion(running_delta(), 4).is_pure()
        assert cx([1, 2, 3], [{1, 2, 3}]).is_pure()

    def test_hollow_triangle(self):
        h = cx([1, 2, 3], [{1, 2}, {2, 3}, {1, 3}])
        ranks = reduced_homology_ranks(h)
        assert ranks == [0, 0, 1]  # dims -1, 0, 1

    def test_simplex_contractible(self):
        s = cx([1, 2, 3], [{1, 2, 3}])
        assert reduced_homology_ranks(s) == [0, 0, 0, 0]

    def test_two_points(self):
        two = cx([1, 2], [{1}, {2}])
        assert reduced_homology_ranks(two) == [0, 1]

    def test_empty_face_only_homology(self):
        e = SimplicialComplex.empty_face_only([1])
        assert reduced_homology_ranks(e) == [1]

    def test_mod_p_rank(self):
        # Real projective plane: minimal 6-vertex triangulation; H_1 has
        # 2-torsion, so Reisner's criterion is field dependent.
        rp2 = cx(range(1, 7), [
            {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 4, 6},
            {2, 3, 4}, {2, 3, 6}, {2, 4, 5}, {3, 5, 6}, {4, 5, 6}])
        assert len(rp2.facets) == 10
        ranks_q = reduced_homology_ranks(rp2, None)
        ranks_2 = reduced_homology_ranks(rp2, 2)
        assert ranks_q[2] == 0 and ranks_2[2] == 1
        assert is_cm_reisner(rp2, None) and not is_cm_reisner(rp2, 2)

    def test_reisner_examples(self):
        assert is_cm_reisner(running_delta())
        two_edges = cx([1, 2, 3, 4], [{1, 2}, {3, 4}])
        assert not is_cm_reisner(two_edges)
        assert is_cm_reisner(cx([1, 2, 3], [{1}, {2}, {3}]))
        assert is_cm_complex(two_edges) is False
        assert is_cm_complex(running_delta()) is True


class TestVertexDecomposability:
    def test_running_certificate(self):
        d = running_delta()
        node = is_vertex_decomposable(d)
        assert node is not None
        assert replay_certificate(node)
        assert node.vertex == 1

    def test_forced_sequence_1_4(self):
        d = running_delta()
        step1, why1 = try_shed(d, 1)
        assert step1 is not None, why1
        d2 = step1.deletion_child.complex
        step2, why2 = try_shed(d2, 4)
        assert step2 is not None, why2
        assert replay_certificate(step1)
        assert replay_certificate(step2)

    def test_shed_at_4_rejected(self):
        node, reason = try_shed(running_delta(), 4)
        assert node is None
        assert "deletion is not pure" in reason

    def test_simplex_leaf(self):
        s = cx([1, 2], [{1, 2}])
        node = is_vertex_decomposable(s)
        assert node is not None and node.leaf_reason == "simplex"

    def test_non_pure_failure(self):
        bad = cx([1, 2, 3], [{1, 2}, {3}])
        assert is_vertex_decomposable(bad) is None
        assert is_weakly_vertex_decomposable(bad) is None

    def test_weak_follows_plain(self):
        d = running_delta()
        weak = is_weakly_vertex_decomposable(d)
        assert weak is not None and weak.weak
        assert replay_certificate(weak)

    def test_certificate_replay_tamper(self):
        d = running_delta()
        node = is_vertex_decomposable(d)
        from dataclasses import replace
        tampered = replace(node, vertex=3)
        assert not replay_certificate(tampered)


class TestShellability:
    def test_running_shellable(self):
        order = is_shellable(running_delta())
        assert order is not None and len(order) == 3

    def test_simplex(self):
        assert is_shellable(cx([1, 2], [{1, 2}])) is not None

    def test_two_disjoint_edges_fail(self):
        assert is_shellable(cx([1, 2, 3, 4], [{1, 2}, {3, 4}])) is None

    def test_budget(self):
        big = cx(range(30), [{i, i + 1} for i in range(0, 28, 2)])
        with pytest.raises(ValueError):
            is_shellable(big, max_facets=5)


def test_implication_chain_random(rng):
    # vertex decomposable => shellable => CM, as one-directional checks
    for _ in range(25):
        uni = list(range(1, rng.randint(4, 6)))
        facets = []
        for _ in range(rng.randint(1, 4)):
            facets.append(set(rng.sample(uni, rng.randint(1, 3))))
        d = cx(uni, facets)
        if d.is_void() or not d.is_pure():
            continue
        node = is_vertex_decomposable(d)
        if node is not None and len(d.facets) <= 8:
            assert is_shellable(d) is not None
        if len(d.facets) <= 8 and is_shellable(d) is not None:
            assert is_cm_reisner(d)
