from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import complexes
from augmental import catalog
from augmental.abelian import GF, QQ, ZERO, Z, cyclic, free
from augmental.complex import EMPTY_SIMPLEX, VOID, ComplexPair, closure, from_facets
from augmental.constructions import product
from augmental.errors import PreconditionError
from augmental.homology import homology
from augmental.kunneth import (
    kunneth_join_rhs, kunneth_product_rhs, product_case, verify_degree_shift, verify_join,
    verify_link_kunneth, verify_product,
)

S0 = catalog.points(2, "x")
S0b = catalog.points(2, "y")


def sub_of(sigma, data):
    if sigma.is_void or data.draw(st.booleans()):
        return VOID
    picks = data.draw(st.lists(st.sampled_from(sorted(sigma.faces)), max_size=3))
    return from_facets(picks) if picks else EMPTY_SIMPLEX


class TestJoinFormula:
    def test_two_zero_spheres(self):
        assert kunneth_join_rhs(S0, S0b, 0) == Z
        rep = verify_join(S0, S0b)
        assert rep.ok and [(r.degree, r.lhs) for r in rep.rows] == [(1, Z)]

    def test_unit_factor_is_identity(self):
        y = catalog.torus_7()
        for q in range(-1, 3):
            assert kunneth_join_rhs(EMPTY_SIMPLEX, y, q) == homology(y)[q + 1]

    def test_projective_plane_squared(self):
        # [DERIVED] oracles.homology of the join: {3: Z_2, 4: Z_2}
        rp = catalog.rp2_6()
        assert kunneth_join_rhs(rp, rp, 2) == cyclic(2)
        assert kunneth_join_rhs(rp, rp, 3) == cyclic(2)
        rep = verify_join(rp, rp)
        assert rep.ok and {r.degree for r in rep.rows} == {3, 4}

    def test_acyclic_factor(self):
        rep = verify_join(catalog.rp2_6(), catalog.point())
        assert rep.ok and rep.rows == []
        assert all(kunneth_join_rhs(catalog.rp2_6(), catalog.point(), q).is_zero() for q in range(-1, 5))

    def test_render(self):
        text = verify_join(S0, S0b).render()
        assert text.splitlines() == ["# join", "q | LHS | RHS | ok", "1 | Z | Z | true"]


class TestProductFormula:
    def test_case_selection(self):
        a, b = ComplexPair(S0), ComplexPair(S0b)
        assert product_case(a, b) == "C1"
        assert product_case(a, ComplexPair(S0b, EMPTY_SIMPLEX)) == "C2"
        assert product_case(ComplexPair(S0, EMPTY_SIMPLEX), b) == "C3"
        assert product_case(ComplexPair(S0, EMPTY_SIMPLEX), ComplexPair(S0b, EMPTY_SIMPLEX)) == "C4"

    def test_four_points(self):
        assert kunneth_product_rhs(S0, S0b, 0) == free(3)
        assert homology(product(S0, S0b).complex)[0] == free(3)

    def test_torus_from_circles(self):
        c1, c2 = catalog.cycle(3, "a"), catalog.cycle(3, "b")
        assert kunneth_product_rhs(c1, c2, 1) == free(2)
        assert kunneth_product_rhs(c1, c2, 2) == Z
        rep = verify_product(c1, c2)
        assert rep.ok and rep.case == "C1"

    def test_relative_case(self):
        x = (closure("ab"), from_facets([["a"], ["b"]]))
        y = (closure("xy"), from_facets([["x"], ["y"]]))
        rep = verify_product(x, y)
        assert rep.ok and rep.case == "C4"
        assert [(r.degree, r.lhs) for r in rep.rows] == [(2, Z)]

    def test_degenerate(self):
        rep = verify_product(EMPTY_SIMPLEX, closure("ab"))
        assert rep.degenerate and rep.ok


class TestDegreeShift:
    def test_zero_spheres(self):
        rep = verify_degree_shift(S0, S0b)
        assert rep.ok and rep.case == "C1"
        assert [(r.degree, r.lhs) for r in rep.rows] == [(0, free(3))]

    def test_relative(self):
        sphere = catalog.sphere(2, "s")
        star_pair = (sphere, from_facets([["s1", "s2", "s3"]]))
        assert verify_degree_shift(star_pair, (closure("xy"), from_facets([["x"]]))).ok

    def test_excluded_shapes(self):
        with pytest.raises(PreconditionError):
            verify_degree_shift(VOID, S0)
        with pytest.raises(PreconditionError):
            verify_degree_shift(EMPTY_SIMPLEX, S0)


class TestLinkFormula:
    def test_edge_times_edge(self):
        rep = verify_link_kunneth(closure("ab"), closure("xy"), "ab", "xy")
        assert rep.ok and len({r.label for r in rep.rows}) >= 2

    def test_vertex_faces(self):
        sq = catalog.cycle(4, "c")
        assert verify_link_kunneth(sq, catalog.cycle(3, "d"), ["c0"], ["d1"]).ok

    def test_maximal_face(self):
        rep = verify_link_kunneth(closure("ab"), closure("x"), "ab", "x")
        assert rep.ok
        assert all(r.lhs == (Z if r.degree == -1 else ZERO) for r in rep.rows)

    def test_empty_faces_rejected(self):
        with pytest.raises(PreconditionError):
            verify_link_kunneth(closure("ab"), closure("xy"), (), "x")


@given(complexes(max_vertices=4, labels="abcd"), complexes(max_vertices=4, labels="wxyz"), st.data())
def test_join_formula_on_random_pairs(a, b, data):
    pa, pb = (a, sub_of(a, data)), (b, sub_of(b, data))
    assert verify_join(pa, pb).ok
    assert verify_join(pa, pb, GF(2)).ok


@given(complexes(max_vertices=4, labels="abcd"), complexes(max_vertices=4, labels="wxyz"), st.data())
def test_product_formula_on_random_pairs(a, b, data):
    pa, pb = (a, sub_of(a, data)), (b, sub_of(b, data))
    assert verify_product(pa, pb).ok
    assert verify_product(pa, pb, coeff=data.draw(st.sampled_from([GF(2), GF(3), QQ]))).ok


@given(complexes(max_vertices=4, labels="abcd"), complexes(max_vertices=4, labels="wxyz"))
def test_absolute_join_formula(a, b):
    # both subs void: the non-relative join formula
    rep = verify_join(a, b)
    assert rep.ok
