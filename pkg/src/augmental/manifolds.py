"""Pseudo-, quasi- and homology manifolds, their boundary and orientability.

The boundary over ``G`` of an ``n``-dimensional complex is the set of faces
whose link has zero homology in degree ``n - #face``.  The empty face belongs
to it exactly when ``H_n(complex; G) = 0``, so the projective plane over Z has
boundary ``{()}`` while a sphere has boundary ``VOID``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abelian import Coefficients, ZZ
from .complex import (
    EMPTY_SIMPLEX, VOID, SimplicialComplex, _DSU, from_faces, from_facets, is_pure, link,
    relabel, strong_components, union,
)
from .constructions import OrderedComplex, _join_raw, ordered, product
from .errors import ClassificationError, MalformedFaceError
from .homology import build_chain, homology
from .snf import rank_mod_p, snf_sparse


def _ridge_counts(sigma: SimplicialComplex) -> dict:
    counts: dict = {}
    for f in sigma.facets:
        for i in range(len(f)):
            r = f[:i] + f[i + 1:]
            counts[r] = counts.get(r, 0) + 1
    return counts


def _is_two_points(sigma: SimplicialComplex) -> bool:
    return len(sigma.facets) == 2 and all(len(f) == 1 for f in sigma.facets)


def _connected(sigma: SimplicialComplex) -> bool:
    """Whether reduced ``H_0`` vanishes, i.e. at most one path component."""
    if sigma.is_void or not sigma.vertices:
        return True
    dsu = _DSU(sigma.vertices)
    for f in sigma.facets:
        for v in f[1:]:
            dsu.union(f[0], v)
    return len({dsu.find(v) for v in sigma.vertices}) == 1


def pseudo_boundary(sigma: SimplicialComplex) -> SimplicialComplex:
    """Subcomplex generated by ridges lying in exactly one facet."""
    return from_facets([r for r, c in _ridge_counts(sigma).items() if c == 1])


def is_pseudomanifold(sigma: SimplicialComplex) -> bool:
    if sigma.is_void or not is_pure(sigma):
        return False
    if any(c > 2 for c in _ridge_counts(sigma).values()):
        return False
    return len(strong_components(sigma)) == 1


def is_quasi_manifold(sigma: SimplicialComplex) -> bool:
    if sigma.is_void:
        return False
    if _is_two_points(sigma):
        return True
    if not is_pure(sigma) or any(c > 2 for c in _ridge_counts(sigma).values()):
        return False
    n = sigma.dim
    return all(_connected(link(sigma, f)) for f in sigma.faces if len(f) - 1 < n - 1)


def _is_coeff(g, coeff: Coefficients) -> bool:
    return g.rank == 1 and not g.torsion if coeff.kind == "Z" else g == 1


def is_homology_manifold(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> bool:
    if sigma.is_void:
        return False
    if _is_two_points(sigma):
        return True
    if not _connected(sigma):
        return False
    n = sigma.dim
    for f in sigma.faces:
        if not f:
            continue
        h = homology(link(sigma, f), coeff)
        top = n - len(f)
        if any(d != top for d in h.groups):
            return False
        if top in h.groups and not _is_coeff(h[top], coeff):
            return False
    return True


def top_homology_vanishes(sigma: SimplicialComplex, d: int, coeff: Coefficients = ZZ) -> bool:
    """Whether ``H_d(sigma; coeff) = 0`` for ``d >= dim sigma`` (no boundaries come from above)."""
    if sigma.is_void or sigma.dim < d:
        return True
    if sigma.dim > d:
        return d not in homology(sigma, coeff).groups
    cc = build_chain(sigma)
    rows = cc.rows(d)
    n = len(cc.basis[d])
    r = rank_mod_p(rows, coeff.p) if coeff.kind == "Zp" else snf_sparse(rows).rank
    return r == n


def _require_manifold(sigma: SimplicialComplex, coeff: Coefficients):
    if not (is_quasi_manifold(sigma) or is_homology_manifold(sigma, coeff)):
        raise ClassificationError("boundary is defined for quasi- and homology manifolds")


def boundary_faces(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> frozenset:
    """Faces whose link has vanishing homology in degree ``n - #face``."""
    n = sigma.dim
    return frozenset(
        f for f in sigma.faces if top_homology_vanishes(link(sigma, f), n - len(f), coeff))


def boundary(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> SimplicialComplex:
    _require_manifold(sigma, coeff)
    faces = boundary_faces(sigma, coeff)
    try:
        return from_faces(faces)
    except MalformedFaceError:
        raise ClassificationError("boundary face set is not a subcomplex") from None


def boundary_components(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> list:
    """Strong components of the boundary; empty when the boundary is ``VOID`` or ``{()}``."""
    bd = boundary(sigma, coeff)
    if bd.is_void or bd == EMPTY_SIMPLEX:
        return []
    return strong_components(bd)


def orientable(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> bool:
    """Whether ``H_n(sigma, Bd sigma; G)`` is the coefficient group."""
    bd = boundary(sigma, coeff)
    h = homology((sigma, bd), coeff)
    ok = _is_coeff(h[sigma.dim], coeff)
    if coeff.kind == "Zp" and coeff.p == 2 and not ok:
        raise AssertionError("a manifold failed to be orientable over Z_2")
    return ok


def hip_set(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> frozenset:
    """Faces at which all local homology vanishes."""
    return frozenset(f for f in sigma.faces if homology(link(sigma, f), coeff).is_zero())


@dataclass
class ManifoldReport:
    coeff: Coefficients
    dimension: object
    pseudo: bool
    quasi: bool
    homology: bool
    boundary: SimplicialComplex | None = None
    boundary_components: list = field(default_factory=list)
    orientable: bool | None = None
    hip: frozenset = frozenset()

    def render(self) -> str:
        def flag(b):
            return "-" if b is None else str(b).lower()

        if self.boundary is None:
            bd = "-"
        elif self.boundary.is_void:
            bd = "void"
        else:
            bd = str([list(f) for f in self.boundary.facets])
        hip = sorted(self.hip, key=lambda f: (len(f), f))
        lines = [
            f"coefficients: {self.coeff}",
            f"dimension: {self.dimension}",
            f"pseudomanifold: {flag(self.pseudo)}",
            f"quasi-manifold: {flag(self.quasi)}",
            f"homology-manifold: {flag(self.homology)}",
            f"boundary: {bd}",
            f"boundary-components: {len(self.boundary_components)}",
            f"orientable: {flag(self.orientable)}",
            f"hip: {[list(f) for f in hip]}",
        ]
        return "\n".join(lines)


def classify(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> ManifoldReport:
    if sigma.is_void:
        raise ClassificationError("the void complex is not classified")
    rep = ManifoldReport(coeff, sigma.dim, is_pseudomanifold(sigma), is_quasi_manifold(sigma),
                         is_homology_manifold(sigma, coeff), hip=hip_set(sigma, coeff))
    if rep.quasi or rep.homology:
        rep.boundary = boundary(sigma, coeff)
        rep.boundary_components = boundary_components(sigma, coeff)
        rep.orientable = orientable(sigma, coeff)
    return rep


def is_manifold_like(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> bool:
    return is_quasi_manifold(sigma) or is_homology_manifold(sigma, coeff)


def _is_point(sigma: SimplicialComplex) -> bool:
    return len(sigma.facets) == 1 and len(sigma.facets[0]) == 1


def boundary_formula_sides(a, b, op: str, coeff: Coefficients = ZZ):
    """Both sides of ``Bd(A op B) = (Bd A op B) u (A op Bd B)``, or ``None`` if out of scope.

    Products need factors with vertices other than two isolated points; a
    one-point factor uses ``Bd(pt x X) = pt x Bd X``.
    """
    ca = a.complex if isinstance(a, OrderedComplex) else a
    cb = b.complex if isinstance(b, OrderedComplex) else b
    if ca.is_void or cb.is_void:
        return None
    if not (is_manifold_like(ca, coeff) and is_manifold_like(cb, coeff)):
        return None
    bda, bdb = boundary(ca, coeff), boundary(cb, coeff)
    if op == "join":
        if set(ca.vertices) & set(cb.vertices):
            ca, bda = relabel(ca, lambda v: "L:" + v), relabel(bda, lambda v: "L:" + v)
            cb, bdb = relabel(cb, lambda v: "R:" + v), relabel(bdb, lambda v: "R:" + v)
        whole = _join_raw(ca, cb)
        formula = union(_join_raw(bda, cb), _join_raw(ca, bdb))
    elif op == "product":
        for c in (ca, cb):
            if not c.vertices or _is_two_points(c):
                return None
        oa, ob = ordered(a), ordered(b)
        if not is_manifold_like(product(oa, ob).complex, coeff):
            return None
        whole = product(oa, ob).complex
        if _is_point(ca):
            formula = product(oa, ob.restrict(bdb)).complex if not bdb.is_void else VOID
        elif _is_point(cb):
            formula = product(oa.restrict(bda), ob).complex if not bda.is_void else VOID
        else:
            left = product(oa.restrict(bda), ob).complex if not bda.is_void else VOID
            right = product(oa, ob.restrict(bdb)).complex if not bdb.is_void else VOID
            formula = union(left, right)
    else:
        raise ValueError(f"unknown operation {op!r}")
    return boundary(whole, coeff), formula


def verify_boundary_formula(a, b, op: str, coeff: Coefficients = ZZ):
    """``True``/``False``, or ``None`` when the factors are out of scope."""
    sides = boundary_formula_sides(a, b, op, coeff)
    if sides is None:
        return None
    return sides[0] == sides[1]


def strongly_connected_outside(sigma: SimplicialComplex, delta: SimplicialComplex) -> bool:
    """Top faces not in ``delta`` linked through ridges not in ``delta``."""
    n = sigma.dim
    tops = [f for f in sigma.faces_of_dim(n) if f not in delta.faces]
    if not tops:
        return True
    dsu = _DSU(tops)
    seen: dict = {}
    for f in tops:
        for i in range(len(f)):
            r = f[:i] + f[i + 1:]
            if r in delta.faces:
                continue
            if r in seen:
                dsu.union(seen[r], f)
            else:
                seen[r] = f
    return len({dsu.find(f) for f in tops}) == 1


def top_map_injective(sigma: SimplicialComplex, delta: SimplicialComplex, gamma: SimplicialComplex,
                      coeff: Coefficients = ZZ) -> bool:
    """Injectivity of ``H_n(sigma, delta) -> H_n(sigma, gamma)`` induced by the chain quotient.

    Both groups are top-degree cycle groups, so the kernel is the group of
    relative cycles of ``(sigma, delta)`` supported on top faces of ``gamma``:
    the boundary matrix restricted to those columns (rows outside ``delta``)
    must have trivial kernel.
    """
    n = sigma.dim
    cols = [f for f in sigma.faces_of_dim(n) if f in gamma.faces and f not in delta.faces]
    if not cols:
        return True
    row_faces = [f for f in sigma.faces_of_dim(n - 1) if f not in delta.faces]
    index = {f: i for i, f in enumerate(row_faces)}
    rows: dict = {}
    for j, f in enumerate(cols):
        for i in range(len(f)):
            r = index.get(f[:i] + f[i + 1:])
            if r is not None:
                rows.setdefault(r, {})[j] = -1 if i % 2 else 1
    rank = rank_mod_p(rows, coeff.p) if coeff.kind == "Zp" else snf_sparse(rows).rank
    return rank == len(cols)


def strong_connect_injection_sides(sigma, delta, gamma, coeff: Coefficients = ZZ):
    """``(strongly connected outside delta, top map injective)``, or ``None`` if out of scope.

    Strong connectivity always forces injectivity.  The converse can fail
    when ``sigma`` outside ``delta`` carries no relative top cycle, e.g. a disk
    cut along an interior edge, where ``H_n(sigma, delta)`` is already zero.
    """
    if not is_pseudomanifold(sigma):
        return None
    if not (delta.faces < gamma.faces < sigma.faces) or gamma.dim != sigma.dim:
        return None
    return strongly_connected_outside(sigma, delta), top_map_injective(sigma, delta, gamma, coeff)


def verify_strong_connect_injection(sigma, delta, gamma, coeff: Coefficients = ZZ):
    """Whether strong connectivity outside ``delta`` matches injectivity; ``None`` if out of scope."""
    sides = strong_connect_injection_sides(sigma, delta, gamma, coeff)
    return None if sides is None else sides[0] == sides[1]
