import pytest

from pathidem.algebra import AlgElem, edge_element, vertex_idempotent
from pathidem.classify import strongly_orthogonal
from pathidem.oracle import OracleBudget, enumerate_reps
from pathidem.quivers import Path, Quiver
from pathidem.reps import (
    RawModule,
    RepError,
    Representation,
    Submodule,
    corner_algebra,
    corner_intertwiners,
    corner_module,
    e_fixed,
    gamma,
    hom_space,
    in_category_e,
    left_ideal_representation,
    morita_surrogate_check,
    nu,
    quotient,
    rep_to_raw,
    restrict_to_corner,
    sub_representation,
    submodule_from_local,
    tensor_identity_holds,
    zero_representation,
)
from pathidem.rings import Ring
from pathidem.sweep import q_arrow


def arrow_rep(ring, scalar=1):
    return Representation(
        q_arrow(), ring, {"v1": 1, "v2": 1}, {"a": ((scalar,),)}
    )


class TestRepresentation:
    def test_validation(self, arrow, f5):
        with pytest.raises(RepError):
            Representation(arrow, f5, {"v1": 1}, {})
        with pytest.raises(RepError):
            Representation(arrow, f5, {"v1": 1, "v2": -1}, {})
        with pytest.raises(RepError):
            Representation(arrow, f5, {"v1": 1, "v2": 1}, {"a": ((1, 1),)})
        with pytest.raises(RepError):
            Representation(arrow, f5, {"v1": 1, "v2": 1}, {"zz": ((1,),)})

    def test_missing_edge_defaults_to_zero(self, arrow, f5):
        m = Representation(arrow, f5, {"v1": 1, "v2": 1}, {})
        assert m.edge_maps["a"] == ((0,),)

    def test_layout(self, f5):
        m = arrow_rep(f5)
        assert m.total_dim == 2
        assert m.offset("v2") == 1
        assert m.block((7, 8), "v2") == (8,)
        assert m.embed((3,), "v2") == (0, 3)

    def test_path_matrix(self, a3, f3):
        m = Representation(
            a3, f3, {"v1": 1, "v2": 1, "v3": 1}, {"a": ((1,),), "b": ((2,),)}
        )
        pm = m.path_matrix(Path(edges=("a", "b")))
        # composite v1 -> v3 acts by 2*1 in the (v3, v1) block
        assert pm[2][0] == 2
        assert m.path_matrix(Path(vertex="v2"))[1][1] == 1

    def test_action_matrix(self, arrow, f5):
        m = arrow_rep(f5)
        e = vertex_idempotent(arrow, f5, {"v2"}) + edge_element(arrow, f5, "a")
        assert m.action_matrix(e) == ((0, 0), (1, 1))

    def test_json_round_trip(self, f5):
        m = arrow_rep(f5, scalar=3)
        assert Representation.from_json(m.quiver, f5, m.to_json()) == m
        assert m.to_json()["edges"]["a"] == [["3"]]

    def test_zero_representation(self, arrow, f5):
        z = zero_representation(arrow, f5)
        assert z.total_dim == 0


class TestFixedVectorsAndGamma:
    def test_e_fixed_projection(self, arrow, f5):
        m = arrow_rep(f5)
        e = vertex_idempotent(arrow, f5, {"v2"}) + edge_element(arrow, f5, "a")
        # e sends (x1, x2) to (0, x1 + x2); the image is the v2 axis
        assert e_fixed(e, m) == [(0, 1)]
        assert e_fixed(vertex_idempotent(arrow, f5, {"v1"}), m) == [(1, 0)]

    def test_e_fixed_requires_idempotent(self, arrow, f5):
        with pytest.raises(RepError):
            e_fixed(edge_element(arrow, f5, "a").scale(2), arrow_rep(f5))

    def test_gamma(self, arrow, f5):
        m = arrow_rep(f5)
        e1 = vertex_idempotent(arrow, f5, {"v1"})
        # v1 generates everything: the edge pushes it onto v2
        assert gamma(e1, m).dims == {"v1": 1, "v2": 1}
        e2 = vertex_idempotent(arrow, f5, {"v2"})
        assert gamma(e2, m).dims == {"v1": 0, "v2": 1}
        assert in_category_e(e1, m)
        assert not in_category_e(e2, m)

    def test_gamma_idempotent(self, arrow, f5):
        m = arrow_rep(f5)
        e = vertex_idempotent(arrow, f5, {"v2"})
        g = gamma(e, m)
        sub_rep, _ = sub_representation(g)
        assert gamma(e, sub_rep).dims == sub_rep.dims


class TestSubquotient:
    def test_submodule_closure(self, arrow, f5):
        m = arrow_rep(f5)
        sub = submodule_from_local(m, {"v1": [(1,)]})
        assert sub.dims == {"v1": 1, "v2": 1}
        assert sub.is_edge_closed()
        open_sub = submodule_from_local(m, {"v1": [(1,)]}, close=False)
        assert not open_sub.is_edge_closed()

    def test_sub_representation(self, arrow, f5):
        m = arrow_rep(f5, scalar=2)
        sub = submodule_from_local(m, {"v1": [(1,)]})
        rep, bases = sub_representation(sub)
        assert rep.dims == {"v1": 1, "v2": 1}
        assert rep.edge_maps["a"] == ((2,),)
        assert bases["v2"] == [(1,)]

    def test_quotient(self, arrow, f5):
        m = arrow_rep(f5)
        sub = submodule_from_local(m, {"v2": [(1,)]})
        q = quotient(m, sub)
        assert q.dims == {"v1": 1, "v2": 0}
        with pytest.raises(RepError):
            quotient(arrow_rep(f5, scalar=2), sub)

    def test_submodule_json(self, arrow, f5):
        m = arrow_rep(f5)
        sub = submodule_from_local(m, {"v2": [(1,)]})
        assert sub.to_json() == {"v1": [], "v2": [["1"]]}


class TestHom:
    def test_endomorphisms(self, f5):
        m = arrow_rep(f5)
        homs = hom_space(m, m)
        # f_v1 must equal f_v2, leaving one degree of freedom
        assert len(homs) == 1

    def test_hom_to_zero_edge(self, arrow, f5):
        m = arrow_rep(f5)
        n = Representation(arrow, f5, {"v1": 1, "v2": 1}, {})
        # f_v2 * 1 == 0 * f_v1 forces f_v2 = 0; f_v1 stays free
        assert len(hom_space(m, n)) == 1
        # the other direction forces f_v1 = 0 instead
        assert hom_space(n, m) == [{"v1": ((0,),), "v2": ((1,),)}]

    def test_hom_zn_exhaustive(self, arrow, z6):
        m = Representation(arrow, z6, {"v1": 1, "v2": 1}, {"a": ((1,),)})
        homs = hom_space(m, m)
        assert len(homs) == 1
        with pytest.raises(RepError):
            hom_space(
                m, Representation(arrow, z6, {"v1": 3, "v2": 3}, {}), zn_dim_cap=6
            )

    def test_incompatible(self, f5, f3):
        with pytest.raises(RepError):
            hom_space(arrow_rep(f5), arrow_rep(f3))

    def test_orthogonal_supports_have_no_homs(self, two_isolated, f2):
        e1 = vertex_idempotent(two_isolated, f2, {"v1"})
        e2 = vertex_idempotent(two_isolated, f2, {"v2"})
        assert strongly_orthogonal(e1, e2)
        budget = OracleBudget(max_total_dim=2)
        reps = list(enumerate_reps(two_isolated, f2, budget))
        m_side = [m for m in reps if m.total_dim and in_category_e(e1, m)]
        n_side = [n for n in reps if n.total_dim and in_category_e(e2, n)]
        assert m_side and n_side
        for m in m_side:
            for n in n_side:
                assert hom_space(m, n) == []


class TestCorner:
    def test_corner_algebra_dims(self, arrow, f5):
        assert corner_algebra(vertex_idempotent(arrow, f5, {"v2"})).dim == 1
        assert corner_algebra(vertex_idempotent(arrow, f5, arrow.vertices)).dim == 3

    def test_corner_requires_acyclic(self, f5):
        loop = Quiver(("v1",), (("a", "v1", "v1"),))
        with pytest.raises(RepError):
            corner_algebra(vertex_idempotent(loop, f5, {"v1"}))

    def test_corner_module_actions(self, arrow, f5):
        e = vertex_idempotent(arrow, f5, arrow.vertices)
        m = arrow_rep(f5)
        cm = corner_module(e, m)
        assert cm.dim == 2
        assert len(cm.actions) == cm.corner.dim

    def test_restriction_of_identity(self, arrow, f5):
        e = vertex_idempotent(arrow, f5, arrow.vertices)
        m = arrow_rep(f5)
        ident = {"v1": ((1,),), "v2": ((1,),)}
        r = restrict_to_corner(e, m, m, ident)
        assert r == ((1, 0), (0, 1))

    def test_corner_intertwiners_match_homs(self, arrow, f5):
        e = vertex_idempotent(arrow, f5, arrow.vertices)
        m, n = arrow_rep(f5), arrow_rep(f5, scalar=2)
        cm, cn = corner_module(e, m), corner_module(e, n)
        assert len(corner_intertwiners(cm, cn)) == len(hom_space(m, n))

    def test_restriction_bijective(self, arrow, f2, f5):
        # full idempotent: restriction is an isomorphism on every pair
        e = vertex_idempotent(arrow, f5, arrow.vertices)
        for m in [arrow_rep(f5), arrow_rep(f5, scalar=0), arrow_rep(f5, scalar=3)]:
            for n in [arrow_rep(f5), arrow_rep(f5, scalar=2)]:
                res = morita_surrogate_check(e, m, n)
                assert res["bijective"], res

    def test_restriction_bijective_on_generated_reps(self, arrow, f2):
        e = vertex_idempotent(arrow, f2, {"v2"})
        budget = OracleBudget(max_total_dim=2)
        reps = [
            m
            for m in enumerate_reps(arrow, f2, budget)
            if in_category_e(e, m)
        ]
        assert reps
        for m in reps:
            for n in reps:
                assert morita_surrogate_check(e, m, n)["bijective"]


class TestRawModules:
    def raw_arrow(self, ring):
        return RawModule(
            q_arrow(),
            ring,
            2,
            {"v1": ((1, 0), (0, 0)), "v2": ((0, 0), (0, 1))},
            {"a": ((0, 0), (1, 0))},
        )

    def test_nu(self, f5):
        rep = nu(self.raw_arrow(f5))
        assert rep == arrow_rep(f5)

    def test_nu_drops_degenerate_part(self, arrow, f5):
        # rank 3 but the projections only cover a 2-dimensional subspace
        raw = RawModule(
            arrow,
            f5,
            3,
            {
                "v1": ((1, 0, 0), (0, 0, 0), (0, 0, 0)),
                "v2": ((0, 0, 0), (0, 1, 0), (0, 0, 0)),
            },
            {},
        )
        assert nu(raw).dims == {"v1": 1, "v2": 1}

    def test_validation(self, arrow, f5):
        with pytest.raises(RepError):
            RawModule(arrow, f5, 1, {"v1": ((2,),), "v2": ((0,),)}, {})
        with pytest.raises(RepError):
            RawModule(arrow, f5, 1, {"v1": ((1,),), "v2": ((1,),)}, {})
        with pytest.raises(RepError):
            RawModule(
                arrow,
                f5,
                2,
                {"v1": ((1, 0), (0, 0)), "v2": ((0, 0), (0, 1))},
                {"a": ((1, 0), (0, 0))},
            )

    def test_round_trip(self, f5, z6):
        for ring in (f5,):
            for scalar in (0, 1, 3):
                m = arrow_rep(ring, scalar)
                assert nu(rep_to_raw(m)) == m

    def test_round_trip_a3(self, a3, f3):
        m = Representation(
            a3, f3, {"v1": 2, "v2": 1, "v3": 1}, {"a": ((1, 2),), "b": ((2,),)}
        )
        assert nu(rep_to_raw(m)) == m


class TestProjectives:
    def test_left_ideal_representation(self, arrow, f5):
        e1 = vertex_idempotent(arrow, f5, {"v1"})
        p1 = left_ideal_representation(e1)
        # A*e_v1 has basis {e_v1, a}, graded v1 and v2, with a acting by 1
        assert p1.dims == {"v1": 1, "v2": 1}
        assert p1.edge_maps["a"] == ((1,),)
        p2 = left_ideal_representation(vertex_idempotent(arrow, f5, {"v2"}))
        assert p2.dims == {"v1": 0, "v2": 1}

    def test_left_ideal_requires_acyclic(self, f5):
        loop = Quiver(("v1",), (("a", "v1", "v1"),))
        with pytest.raises(RepError):
            left_ideal_representation(vertex_idempotent(loop, f5, {"v1"}))

    def test_hom_from_projective_counts_fixed_vectors(self, arrow, f2):
        # maps out of A*e are determined by where e goes: one dimension per
        # e-fixed basis vector of the target
        budget = OracleBudget(max_total_dim=2)
        for v in arrow.vertices:
            e = vertex_idempotent(arrow, f2, {v})
            p = left_ideal_representation(e)
            for m in enumerate_reps(arrow, f2, budget):
                assert len(hom_space(p, m)) == len(e_fixed(e, m))

    def test_tensor_identity(self, arrow, a3, f5, f3):
        assert tensor_identity_holds(arrow_rep(f5))
        assert tensor_identity_holds(arrow_rep(f5, scalar=0))
        m = Representation(
            a3, f3, {"v1": 1, "v2": 2, "v3": 1}, {"a": ((1,), (0,)), "b": ((1, 2),)}
        )
        assert tensor_identity_holds(m)

    def test_tensor_identity_guards(self, z6):
        with pytest.raises(RepError):
            tensor_identity_holds(
                Representation(q_arrow(), z6, {"v1": 1, "v2": 1}, {})
            )
        loop = Quiver(("v1",), (("a", "v1", "v1"),))
        f5 = Ring("Fp", 5)
        with pytest.raises(RepError):
            tensor_identity_holds(Representation(loop, f5, {"v1": 1}, {}))
