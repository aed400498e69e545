"""Verification suites shared by the command line and the acceptance tests.

Each suite returns a :class:`SuiteResult`; a case passes when every identity
checked for it holds exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import catalog
from .abelian import GF, QQ, ZZ
from .cm import is_bbm, is_cm, verify_hibi, verify_skeleton_contrastar_criteria
from .complex import EMPTY_SIMPLEX, VOID, ComplexPair, is_pure
from .constructions import ordered
from .errors import PreconditionError
from .homology import homology, local_homology, uct_prediction
from .kunneth import verify_degree_shift, verify_join, verify_product
from .manifolds import (
    boundary, boundary_components, boundary_formula_sides, is_homology_manifold,
    is_pseudomanifold, is_quasi_manifold, orientable, pseudo_boundary,
)
from .stanley_reisner import product_groebner_set, segre_check, sr_ideal


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, ok: bool, case=None):
        self.total += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < 20:
            self.failures.append(case)

    def summary(self) -> str:
        return f"{self.passed}/{self.total} ok"


def _facets_of(c) -> list:
    return "void" if c.is_void else [list(f) for f in c.facets]


def random_pairs(seed: int, n: int, max_vertices: int = 6) -> list:
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        x = catalog.random_pair(rng, max_vertices=max_vertices)
        y = catalog.random_pair(rng, max_vertices=max_vertices)
        out.append((ComplexPair(*x), ComplexPair(*y)))
    return out


def random_complexes(seed: int, n: int, **kw) -> list:
    rng = random.Random(seed)
    return [catalog.random_complex(rng, **kw) for _ in range(n)]


def _shift_ok(x, y) -> bool:
    try:
        return verify_degree_shift(x, y).ok
    except PreconditionError:
        return True


def bottom_suite() -> SuiteResult:
    res = SuiteResult("bottom")
    h = homology(EMPTY_SIMPLEX)
    res.record(list(h.groups) == [-1] and h.is_coefficient_group(-1), "{()}")
    res.record(homology(VOID).is_zero(), "void")
    res.record(homology(catalog.point()).is_zero(), "point")
    return res


def kunneth_join_suite(seed: int = 0, n: int = 200, exhaustive: bool = False) -> SuiteResult:
    res = SuiteResult("kunneth-join")
    if exhaustive:
        corpus = catalog.all_complexes(4)
        for x in corpus:
            for y in corpus:
                res.record(verify_join(x, y).ok, (_facets_of(x), _facets_of(y)))
    for px, py in random_pairs(seed, n):
        res.record(verify_join(px, py).ok, (px, py))
    return res


def kunneth_product_suite(seed: int = 0, n: int = 200, exhaustive: bool = False) -> SuiteResult:
    res = SuiteResult("kunneth-product")
    if exhaustive:
        corpus = catalog.all_complexes(4)
        for x in corpus:
            for y in corpus:
                res.record(verify_product(x, y).ok and _shift_ok(x, y), (_facets_of(x), _facets_of(y)))
    for px, py in random_pairs(seed, n):
        res.record(verify_product(px, py).ok and _shift_ok(px, py), (px, py))
    return res


def kunneth_suite(seed: int = 0, n: int = 200, exhaustive: bool = False) -> SuiteResult:
    """Join, product and degree shift on each random pair (and optionally every small pair)."""
    res = SuiteResult("kunneth")
    if exhaustive:
        corpus = catalog.all_complexes(4)
        for x in corpus:
            for y in corpus:
                ok = verify_join(x, y).ok and verify_product(x, y).ok and _shift_ok(x, y)
                res.record(ok, (_facets_of(x), _facets_of(y)))
    for px, py in random_pairs(seed, n):
        ok = verify_join(px, py).ok and verify_product(px, py).ok and _shift_ok(px, py)
        res.record(ok, (px, py))
    return res


def local_homology_suite(seed: int = 0, n: int = 100) -> SuiteResult:
    """Contrastar and link routes to local homology agree at every face."""
    res = SuiteResult("local-homology")
    for sigma in random_complexes(seed, n, max_vertices=7, max_facet=4):
        for f in sorted(sigma.faces):
            try:
                local_homology(sigma, f)
                res.record(True)
            except AssertionError:
                res.record(False, (_facets_of(sigma), f))
    return res


UCT_FIELDS = (GF(2), GF(3), GF(5), QQ)


def uct_suite(seed: int = 0, n: int = 100) -> SuiteResult:
    res = SuiteResult("uct")
    for sigma in random_complexes(seed, n, max_vertices=7, max_facet=4):
        hz = homology(sigma)
        for k in UCT_FIELDS:
            res.record(uct_prediction(hz, k) == homology(sigma, k), (_facets_of(sigma), str(k)))
    return res


def cm_equivalence_suite(seed: int = 0, n: int = 100) -> SuiteResult:
    """Contrastar and link forms of the CM condition agree."""
    res = SuiteResult("cm-equivalence")
    for sigma in random_complexes(seed, n, max_vertices=6, max_facet=4):
        for k in (ZZ, GF(2)):
            try:
                is_cm(sigma, k, method="both")
                res.record(True)
            except AssertionError:
                res.record(False, (_facets_of(sigma), str(k)))
    return res


def cm_theorems_suite(seed: int = 0, n: int = 100) -> SuiteResult:
    """Skeleton and contrastar criteria, plus the intersection criterion on non-face pairs."""
    res = SuiteResult("cm-theorems")
    corpus = random_complexes(seed, n, max_vertices=6, max_facet=4) + catalog.manifold_seeds()
    for sigma in corpus:
        res.record(verify_skeleton_contrastar_criteria(sigma), _facets_of(sigma))
        if not is_pure(sigma) or len(sigma.vertices) < 2:
            continue
        vs = sigma.vertices
        # a pair of vertices spanning no edge, when there is one
        for i, a in enumerate(vs):
            b = next((w for w in vs[i + 1:] if (a, w) not in sigma.faces), None)
            if b is not None:
                r = verify_hibi(sigma, [[a], [b]])
                if r is not None:
                    res.record(r, (_facets_of(sigma), a, b))
                break
    return res


def _boundary_matrix() -> list:
    s1, s2 = catalog.sphere(1, "s"), catalog.sphere(2, "t")
    b1, b2 = catalog.simplex(1, "e"), catalog.simplex(2, "f")
    mob, rp2 = catalog.mobius_5(), catalog.rp2_6()
    pt, pts = catalog.point("o"), catalog.points(2, "q")
    return [
        ("sphere1", s1, "sphere2", s2), ("sphere1", s1, "ball1", b1), ("ball1", b1, "ball2", b2),
        ("mobius", mob, "point", pt), ("mobius", mob, "sphere1", s1), ("mobius", mob, "ball1", b1),
        ("rp2", rp2, "point", pt), ("rp2", rp2, "ball1", b1), ("rp2", rp2, "two-points", pts),
        ("point", pt, "ball2", b2), ("two-points", pts, "ball1", b1), ("sphere1", s1, "two-points", pts),
    ]


def boundary_formula_suite() -> SuiteResult:
    res = SuiteResult("boundary-formula")
    for na, a, nb, b in _boundary_matrix():
        for op in ("join", "product"):
            for k in (ZZ, GF(2)):
                sides = boundary_formula_sides(a, b, op, k)
                if sides is None:
                    continue
                res.record(sides[0] == sides[1], (na, nb, op, str(k)))
    return res


def manifold_laws_suite(corpus: list | None = None) -> SuiteResult:
    """No boundary component of codimension two; relative top homology free of rank <= 1."""
    res = SuiteResult("manifold-laws")
    corpus = corpus if corpus is not None else catalog.fuzz_manifolds()
    for s in corpus:
        n = s.dim
        if is_quasi_manifold(s):
            comps = boundary_components(s)
            res.record(all(c.dim < n - 2 or c.dim == n - 1 for c in comps), ("boundary-codim", _facets_of(s)))
        if is_pseudomanifold(s):
            h = homology((s, pseudo_boundary(s)))
            top_ok = not h[n].torsion and h[n].rank <= 1
            tors_ok = all(t == 2 for t in h[n - 1].torsion) and len(h[n - 1].torsion) <= 1
            res.record(top_ok and tors_ok, ("top-homology", _facets_of(s)))
    return res


def orientability_suite(corpus: list | None = None) -> SuiteResult:
    """Möbius landmarks, then CM homology manifolds are orientable and bound Gorenstein spheres."""
    from .cm import is_gorenstein

    res = SuiteResult("orientability")
    mob = catalog.mobius_5()
    res.record(not orientable(mob, ZZ), "mobius/Z")
    res.record(orientable(mob, GF(2)), "mobius/Z2")
    corpus = corpus if corpus is not None else catalog.fuzz_manifolds()
    for s in corpus:
        if not is_homology_manifold(s) or not is_cm(s, method="link"):
            continue
        ori = orientable(s)
        res.record(ori, ("cm-orientable", _facets_of(s)))
        bd = boundary(s)
        if ori and not bd.is_void and bd.vertices:
            ok = (is_homology_manifold(bd) and boundary(bd).is_void and is_gorenstein(bd))
            res.record(ok, ("gorenstein-boundary", _facets_of(s)))
    return res


def stanley_reisner_suite(m_max: int = 6, exhaustive_vertices: int = 4) -> SuiteResult:
    res = SuiteResult("stanley-reisner")
    res.record(sr_ideal(VOID, ["x", "y"]).trivial_ring, "void")
    res.record(sr_ideal(EMPTY_SIMPLEX, ["x", "y"]).whole_ring_quotient, "empty simplex")
    corpus = [c for c in catalog.all_complexes(exhaustive_vertices) if not c.is_void and c.vertices]
    for x in corpus:
        for y in corpus:
            try:
                product_groebner_set(ordered(x), ordered(y))
                res.record(True)
            except AssertionError:
                res.record(False, (_facets_of(x), _facets_of(y)))
    seg = [c for c in catalog.all_complexes(3) if not c.is_void]
    seg += [catalog.sphere(1, "s"), catalog.mobius_5(), catalog.simplex(2, "f")]
    for x in seg:
        for y in seg:
            res.record(segre_check(x, y, m_max), ("segre", _facets_of(x), _facets_of(y)))
    return res


def cm_landmarks_suite() -> SuiteResult:
    res = SuiteResult("cm-landmarks")
    rp2 = catalog.rp2_6()
    res.record(is_bbm(rp2, GF(2)), "rp2 bbm Z2")
    res.record(not is_cm(rp2, GF(2)), "rp2 not cm Z2")
    res.record(is_cm(rp2, GF(3)), "rp2 cm Z3")
    return res


def boundary_landmarks_suite() -> SuiteResult:
    from .constructions import join

    res = SuiteResult("boundary-landmarks")
    res.record(boundary(catalog.rp2_6()) == EMPTY_SIMPLEX, "rp2")
    bm = boundary(join(catalog.mobius_5(), catalog.point("o")))
    h = homology(bm)
    res.record(h.groups == homology(catalog.rp2_6()).groups and str(h[1]) == "Z_2", "mobius cone")
    pinched = boundary(join(catalog.cylinder(), catalog.point("o")))
    res.record(is_pseudomanifold(pinched) and not is_quasi_manifold(pinched), "pinched torus")
    return res


SUITES: dict[str, Callable] = {
    "bottom": lambda seed, n, exhaustive: bottom_suite(),
    "kunneth": kunneth_suite,
    "kunneth-join": kunneth_join_suite,
    "kunneth-product": kunneth_product_suite,
    "local-homology": lambda seed, n, exhaustive: local_homology_suite(seed, n),
    "uct": lambda seed, n, exhaustive: uct_suite(seed, n),
    "cm-equivalence": lambda seed, n, exhaustive: cm_equivalence_suite(seed, n),
    "cm-theorems": lambda seed, n, exhaustive: cm_theorems_suite(seed, n),
    "cm-landmarks": lambda seed, n, exhaustive: cm_landmarks_suite(),
    "boundary-landmarks": lambda seed, n, exhaustive: boundary_landmarks_suite(),
    "boundary-formula": lambda seed, n, exhaustive: boundary_formula_suite(),
    "manifold-laws": lambda seed, n, exhaustive: manifold_laws_suite(),
    "orientability": lambda seed, n, exhaustive: orientability_suite(),
    "stanley-reisner": lambda seed, n, exhaustive: stanley_reisner_suite(),
}


def run_suite(name: str, seed: int = 0, n: int = 200, exhaustive: bool = False) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    return SUITES[name](seed, n, exhaustive)
