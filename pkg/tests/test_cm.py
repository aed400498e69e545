from __future__ import annotations

import warnings
from itertools import combinations

import pytest
from hypothesis import given

from strategies import complexes
from augmental import catalog
from augmental.abelian import GF, ZZ
from augmental.cm import (
    beta_depth, cm_report, cm_witnesses, gorenstein_join_transfer, gorenstein_product_conditions,
    is_2cm, is_bbm, is_cm, is_gorenstein, is_kcm, skeleton_criterion_sides, contrastar_criterion_sides, verify_hibi, verify_skeleton_contrastar_criteria,
)
from augmental.complex import (
    EMPTY_SIMPLEX, VOID, closure, cone_points_and_core, contrastar, from_facets, skeleton,
    simplex_boundary,
)
from augmental.constructions import join, ordered
from augmental.errors import ClassificationError, PreconditionError
from augmental.homology import homology

SPHERE2 = simplex_boundary("abcd")
TRIANGLE = closure("abc")
SQUARE = catalog.cycle(4, "c")


def F(*words):
    return from_facets([list(s) for s in words])


class TestCM:
    def test_sphere(self):
        assert is_cm(SPHERE2)

    def test_not_pure(self):
        assert not is_cm(F("a", "bc"))

    def test_projective_plane_characteristic(self):
        rp = catalog.rp2_6()
        assert not is_cm(rp, GF(2)) and is_bbm(rp, GF(2))
        assert is_cm(rp, GF(3))

    def test_methods_agree_on_landmarks(self):
        for sigma in (SPHERE2, TRIANGLE, catalog.rp2_6(), catalog.torus_7(), F("a", "bc")):
            assert cm_witnesses(sigma, method="link") == cm_witnesses(sigma, method="contrastar")

    def test_void_is_not_classified(self):
        with pytest.raises(ClassificationError):
            is_cm(VOID)

    def test_witness_at_empty_face(self):
        assert cm_witnesses(catalog.torus_7()) == [()]


class TestTwoCM:
    def test_examples(self):
        assert is_2cm(SPHERE2)
        assert not is_2cm(TRIANGLE)
        assert not is_2cm(catalog.point())

    def test_k_equals_one_is_cm(self):
        for sigma in (SPHERE2, TRIANGLE, catalog.rp2_6(), F("a", "bc")):
            assert is_kcm(sigma, 1) == is_cm(sigma)

    def test_higher_k(self):
        assert is_kcm(SPHERE2, 2)
        assert not is_kcm(SPHERE2, 3)  # two deletions leave an edge
        skel = skeleton(closure("abcdef"), 2)
        assert is_kcm(skel, 3)

    def test_k_validation(self):
        with pytest.raises(ValueError):
            is_kcm(SPHERE2, 0)
        with pytest.warns(UserWarning):
            assert is_kcm(closure("ab"), 5)
        big = catalog.cycle(15)
        with pytest.raises(PreconditionError):
            is_kcm(big, 2)


class TestGorenstein:
    def test_examples(self):
        assert is_gorenstein(EMPTY_SIMPLEX)
        assert is_gorenstein(TRIANGLE)
        assert is_gorenstein(SPHERE2)
        assert not is_gorenstein(VOID)

    def test_projective_plane(self):
        # core is RP^2 itself; H_1(RP^2; Z_2) != 0 so it is not a Z_2 homology sphere
        assert not is_gorenstein(catalog.rp2_6(), GF(2))
        assert not is_gorenstein(catalog.rp2_6(), GF(3))

    def test_join_transfer(self):
        assert gorenstein_join_transfer(EMPTY_SIMPLEX, SPHERE2)
        assert gorenstein_join_transfer(catalog.point(), catalog.rp2_6(), GF(2))
        assert gorenstein_join_transfer(catalog.points(2, "x"), SQUARE)

    def test_product_condition_one(self):
        a = ordered(join(F("a", "b"), F("z")), ["a", "b", "z"])
        b = ordered(join(F("x", "y"), F("w")), ["x", "y", "w"])
        agree, label = gorenstein_product_conditions(a, b)
        assert agree and label == "I"

    def test_product_condition_none(self):
        agree, label = gorenstein_product_conditions(ordered(SQUARE), ordered(catalog.cycle(3, "d")))
        assert agree and label == "none"

    def test_product_condition_two(self):
        a = ordered(closure("ab"), ["a", "b"])
        b = ordered(closure("xy"), ["x", "y"])
        agree, label = gorenstein_product_conditions(a, b)
        assert agree and label == "II"

    def test_product_needs_orders(self):
        with pytest.raises(PreconditionError):
            gorenstein_product_conditions(SQUARE, SQUARE)


class TestBeta:
    def test_examples(self):
        assert beta_depth(SPHERE2) == (2, 3)
        assert beta_depth(catalog.points(2)) == (0, 1)
        assert beta_depth(VOID) == (None, None)

    def test_cm_beta_is_dimension(self):
        for sigma in (SPHERE2, TRIANGLE, catalog.cycle(5)):
            assert is_cm(sigma) and beta_depth(sigma)[0] == sigma.dim


class TestCriteria:
    def test_skeleton_criterion_on_sphere(self):
        assert skeleton_criterion_sides(SPHERE2)["cm"] == (True, True)

    def test_skeleton_criterion_on_non_cm(self):
        assert skeleton_criterion_sides(catalog.torus_7())["cm"] == (False, False)

    def test_contrastar_criterion(self):
        assert all(l == r for l, r in contrastar_criterion_sides(SPHERE2).values())

    def test_hibi(self):
        assert verify_hibi(SQUARE, [["c0"], ["c2"]]) is True
        assert verify_hibi(TRIANGLE, [["a"], ["b"]]) is None
        assert verify_hibi(F("a", "bc"), [["a"], ["b"]]) is None


class TestReport:
    def test_render(self):
        text = cm_report(SPHERE2, ZZ, k=3).render()
        assert text.splitlines()[:8] == [
            "coefficients: Z", "bbm: true", "cm: true", "2-cm: true", "gorenstein: true",
            "beta: 2", "depth: 3", "k-cm-max: 2"]

    def test_witnesses_listed(self):
        text = cm_report(catalog.torus_7()).render()
        assert "witnesses-cm: [[]]" in text


@given(complexes(max_vertices=6, max_facet=4))
def test_flags_are_monotone(sigma):
    if sigma.is_void:
        return
    if is_2cm(sigma):
        assert is_cm(sigma)
    if is_cm(sigma):
        assert is_bbm(sigma)


@given(complexes(max_vertices=6, max_facet=4))
def test_link_and_contrastar_forms_agree(sigma):
    if sigma.is_void:
        return
    for coeff in (ZZ, GF(2)):
        assert cm_witnesses(sigma, coeff, "link") == cm_witnesses(sigma, coeff, "contrastar")


@given(complexes(max_vertices=6, max_facet=4))
def test_cm_contrastar_vanishing(sigma):
    if sigma.is_void or not is_cm(sigma):
        return
    n = sigma.dim
    for f in sigma.faces:
        h = homology(contrastar(sigma, f))
        assert all(i > n - 2 for i in h.groups)
        hr = homology((sigma, contrastar(sigma, f)))
        assert all(i > n - 1 for i in hr.groups)


@given(complexes(max_vertices=6, max_facet=4))
def test_two_cm_consequences(sigma):
    if sigma.is_void:
        return
    two = is_2cm(sigma)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert two == is_kcm(sigma, 2)
    if two:
        assert not homology(sigma)[sigma.dim].is_zero()
        assert not cone_points_and_core(sigma)[0]


@given(complexes(max_vertices=6, max_facet=4))
def test_gorenstein_core_is_two_cm(sigma):
    if sigma.is_void or not is_gorenstein(sigma):
        return
    core = cone_points_and_core(sigma)[1]
    assert core == EMPTY_SIMPLEX or is_2cm(core)


@given(complexes(max_vertices=6, max_facet=4))
def test_skeleton_and_contrastar_criteria(sigma):
    if sigma.is_void:
        return
    assert verify_skeleton_contrastar_criteria(sigma)


@given(complexes(max_vertices=6, max_facet=3))
def test_hibi_on_random(sigma):
    if sigma.is_void:
        return
    verts = sigma.vertices
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for x, y in combinations(verts, 2):
            res = verify_hibi(sigma, [[x], [y]])
            assert res is None or res
