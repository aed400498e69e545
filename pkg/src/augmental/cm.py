"""Cohen-Macaulay type conditions phrased through local homology.

Every quantification over faces includes the empty face, whose contrastar is
``VOID``; there the conditions become conditions on absolute homology.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from itertools import combinations

from .abelian import Coefficients, ZZ
from .complex import (
    SimplicialComplex, closed_star, cone_points_and_core, contrastar, deletion, from_faces,
    is_pure, link, skeleton,
)
from .constructions import OrderedComplex, join, product
from .errors import ClassificationError, PreconditionError
from .homology import HomologyTable, homology

MAX_KCM_VERTICES = 14


def _faces(sigma: SimplicialComplex) -> list:
    return sorted(sigma.faces, key=lambda f: (len(f), f))


def _vanishes_below(h: HomologyTable, bound: int) -> bool:
    """``H_i = 0`` for all ``i <= bound``."""
    return all(d > bound for d in h.groups)


def _require_present(sigma: SimplicialComplex):
    if sigma.is_void:
        raise ClassificationError("the void complex is not classified")


def cm_witnesses(sigma: SimplicialComplex, coeff: Coefficients = ZZ, method: str = "both") -> list:
    """Faces at which local homology is nonzero below the top degree.

    ``method`` is ``"contrastar"`` (relative homology of the contrastar pair),
    ``"link"`` (reduced homology of the link below its expected dimension) or
    ``"both"``, which runs both and raises ``AssertionError`` if they disagree.
    """
    _require_present(sigma)
    if method not in ("both", "link", "contrastar"):
        raise ValueError(f"unknown method {method!r}")
    n = sigma.dim
    out = []
    for f in _faces(sigma):
        via_cost = via_link = None
        if method in ("both", "contrastar"):
            via_cost = _vanishes_below(homology((sigma, contrastar(sigma, f)), coeff), n - 1)
        if method in ("both", "link"):
            via_link = _vanishes_below(homology(link(sigma, f), coeff), n - len(f) - 1)
        if method == "both" and via_cost != via_link:
            raise AssertionError(f"contrastar and link criteria disagree at {f}")
        ok = via_cost if via_cost is not None else via_link
        if not ok:
            out.append(f)
    return out


def is_cm(sigma: SimplicialComplex, coeff: Coefficients = ZZ, method: str = "both") -> bool:
    return not cm_witnesses(sigma, coeff, method)


def bbm_witnesses(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> list:
    _require_present(sigma)
    if not is_pure(sigma):
        return [f for f in sigma.facets if len(f) - 1 < sigma.dim]
    n = sigma.dim
    return [f for f in _faces(sigma) if f
            and not _vanishes_below(homology(link(sigma, f), coeff), n - len(f) - 1)]


def is_bbm(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> bool:
    """Pure with every vertex link CM (equivalently, local CM away from the empty face)."""
    return not bbm_witnesses(sigma, coeff)


def two_cm_witnesses(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> list:
    """Faces whose contrastar has homology in degrees ``<= n - 1``.

    Non-faces have the whole complex as contrastar, which is covered by the
    empty face entry of the CM condition.
    """
    _require_present(sigma)
    bad = cm_witnesses(sigma, coeff, method="link")
    n = sigma.dim
    for f in _faces(sigma):
        if f and not _vanishes_below(homology(contrastar(sigma, f), coeff), n - 1):
            bad.append(f)
    return sorted(set(bad), key=lambda f: (len(f), f))


def is_2cm(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> bool:
    return not two_cm_witnesses(sigma, coeff)


def is_kcm(sigma: SimplicialComplex, k: int, coeff: Coefficients = ZZ) -> bool:
    """CM after deleting any ``k - 1`` vertices, with the dimension unchanged."""
    _require_present(sigma)
    if k < 1:
        raise ValueError("k must be at least 1")
    vs = sigma.vertices
    if len(vs) > MAX_KCM_VERTICES:
        raise PreconditionError(f"k-CM search refused beyond {MAX_KCM_VERTICES} vertices")
    if k - 1 > len(vs):
        warnings.warn("k exceeds the vertex count; the condition is vacuous", stacklevel=2)
        return True
    n = sigma.dim
    for t in combinations(vs, k - 1):
        d = deletion(sigma, t)
        if d.dim != n or not is_cm(d, coeff, method="link"):
            return False
    return True


def _is_homology_sphere(sigma: SimplicialComplex, coeff: Coefficients) -> bool:
    n = sigma.dim
    for f in _faces(sigma):
        h = homology(link(sigma, f), coeff)
        top = n - len(f)
        if set(h.groups) != {top} or not h.is_coefficient_group(top):
            return False
    return True


def is_gorenstein(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> bool:
    """Whether the core (cone points removed) is a homology sphere over ``coeff``."""
    if sigma.is_void:
        return False
    return _is_homology_sphere(cone_points_and_core(sigma)[1], coeff)


def gorenstein_join_transfer(a: SimplicialComplex, b: SimplicialComplex,
                             coeff: Coefficients = ZZ) -> bool:
    """Whether the join is Gorenstein exactly when both factors are."""
    return is_gorenstein(join(a, b), coeff) == (is_gorenstein(a, coeff) and is_gorenstein(b, coeff))


def product_condition(o1: OrderedComplex, o2: OrderedComplex) -> str:
    """``"I"``, ``"II"`` or ``"none"`` from the positions of the cone points in each order."""
    def positions(o):
        cps = cone_points_and_core(o.complex)[0]
        lo, hi = o.order[0], o.order[-1]
        return len(cps), lo in cps, hi in cps

    (n1, lo1, hi1), (n2, lo2, hi2) = positions(o1), positions(o2)
    if n1 == 1 and n2 == 1 and ((lo1 and lo2) or (hi1 and hi2)):
        return "I"
    if n1 == 2 and n2 == 2 and lo1 and hi1 and lo2 and hi2:
        return "II"
    return "none"


def gorenstein_product_conditions(o1, o2, coeff: Coefficients = ZZ) -> tuple:
    """Predicted against direct Gorensteinness of an ordered product.

    Returns ``(agree, label)`` where ``label`` names the cone-point condition met.
    """
    if not (isinstance(o1, OrderedComplex) and isinstance(o2, OrderedComplex)):
        raise PreconditionError("product conditions need factors with declared orders")
    if o1.complex.dim < 1 or o2.complex.dim < 1:
        raise PreconditionError("product conditions need factors of dimension at least 1")
    label = product_condition(o1, o2)
    predicted = (label != "none" and is_gorenstein(o1.complex, coeff)
                 and is_gorenstein(o2.complex, coeff))
    direct = is_gorenstein(product(o1, o2).complex, coeff)
    return predicted == direct, label


def beta_depth(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> tuple:
    """Least degree of nonzero local homology over all faces, and that plus one.

    ``(None, None)`` when all local homology vanishes (only ``VOID``).
    """
    if sigma.is_void:
        return None, None
    best = None
    for f in _faces(sigma):
        h = homology(link(sigma, f), coeff).shifted(len(f))
        if h.groups:
            j = min(h.groups)
            best = j if best is None else min(best, j)
    return (None, None) if best is None else (best, best + 1)


def _is_point_and_edge(sigma: SimplicialComplex) -> bool:
    # three vertices, one edge, one isolated vertex
    return len(sigma.vertices) == 3 and sorted(len(f) for f in sigma.facets) == [1, 2]


def skeleton_criterion_sides(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> dict:
    """Both sides of the skeleton criteria for CM and 2-CM."""
    _require_present(sigma)
    n = sigma.dim
    ridge = skeleton(sigma, n - 1) if n >= 0 else sigma
    ridge_2cm = is_2cm(ridge, coeff) if n >= 0 else True
    rel = all(
        (n - 1) not in homology((sigma, contrastar(sigma, f)), coeff).groups for f in sigma.faces)
    absolute = all(
        (n - 1) not in homology(contrastar(sigma, f), coeff).groups for f in sigma.faces if f
    ) and (n - 1) not in homology(sigma, coeff).groups
    return {
        "cm": (is_cm(sigma, coeff), ridge_2cm and rel),
        "2cm": (is_2cm(sigma, coeff), ridge_2cm and absolute),
    }


def contrastar_criterion_sides(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> dict:
    """Both sides of the contrastar criteria for 2-CM."""
    _require_present(sigma)
    n = sigma.dim
    two = is_2cm(sigma, coeff)
    nonempty = [f for f in sigma.faces if f]
    costs = {f: contrastar(sigma, f) for f in nonempty}
    a = all(not c.is_void and is_cm(c, coeff, method="link") for c in costs.values()) and all(
        c.dim == n for c in costs.values())
    out = {"a": (two, a)}
    if not _is_point_and_edge(sigma):
        vcost = [costs[(v,)] for v in sigma.vertices]
        cps = cone_points_and_core(sigma)[0]
        b = all(not c.is_void and is_cm(c, coeff, method="link") for c in vcost) and not cps
        out["b"] = (two, b)
    return out


def verify_skeleton_contrastar_criteria(sigma: SimplicialComplex, coeff: Coefficients = ZZ) -> bool:
    sides = {**{"skeleton-" + k: v for k, v in skeleton_criterion_sides(sigma, coeff).items()},
             **{"contrastar-" + k: v for k, v in contrastar_criterion_sides(sigma, coeff).items()}}
    return all(l == r for l, r in sides.values())


def verify_hibi(sigma: SimplicialComplex, faces, coeff: Coefficients = ZZ):
    """Both implications of the intersection-of-contrastars criterion.

    Returns ``None`` (skipped) unless the complex is pure, the faces are
    nonempty faces of it and no two of them lie in a common face.
    """
    if sigma.is_void or not is_pure(sigma):
        return None
    fs = [tuple(sorted(map(str, f))) for f in faces]
    if not fs or any(not f or f not in sigma.faces for f in fs):
        return None
    for x, y in combinations(fs, 2):
        if tuple(sorted(set(x) | set(y))) in sigma.faces:
            return None
    n = sigma.dim
    core_faces = set(sigma.faces)
    for f in fs:
        core_faces &= contrastar(sigma, f).faces
    inner = from_faces(core_faces)
    ok = True
    if is_cm(sigma, coeff, method="link") and inner.dim < n:
        ok = ok and inner.dim == n - 1 and is_cm(inner, coeff, method="link")
    stars_cm = all(is_cm(closed_star(sigma, f), coeff, method="link") for f in fs)
    if stars_cm and inner.dim == n and is_cm(inner, coeff, method="link"):
        ok = ok and is_cm(sigma, coeff, method="link")
    return ok


@dataclass
class CMReport:
    coeff: Coefficients
    bbm: bool
    cm: bool
    two_cm: bool
    gorenstein: bool
    beta: int | None
    depth: int | None
    k_cm_max: int | None = None
    witnesses: dict = field(default_factory=dict)

    def render(self) -> str:
        def fl(b):
            return str(b).lower()

        lines = [
            f"coefficients: {self.coeff}",
            f"bbm: {fl(self.bbm)}",
            f"cm: {fl(self.cm)}",
            f"2-cm: {fl(self.two_cm)}",
            f"gorenstein: {fl(self.gorenstein)}",
            f"beta: {self.beta}",
            f"depth: {self.depth}",
        ]
        if self.k_cm_max is not None:
            lines.append(f"k-cm-max: {self.k_cm_max}")
        for name, faces in self.witnesses.items():
            if faces:
                lines.append(f"witnesses-{name}: {[list(f) for f in faces]}")
        return "\n".join(lines)


def cm_report(sigma: SimplicialComplex, coeff: Coefficients = ZZ, k: int | None = None) -> CMReport:
    _require_present(sigma)
    wb, wc, w2 = bbm_witnesses(sigma, coeff), cm_witnesses(sigma, coeff), two_cm_witnesses(sigma, coeff)
    beta, depth = beta_depth(sigma, coeff)
    rep = CMReport(coeff, not wb, not wc, not w2, is_gorenstein(sigma, coeff), beta, depth,
                   witnesses={"bbm": wb, "cm": wc, "2-cm": w2})
    if k is not None:
        best = 0
        for j in range(1, k + 1):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                if not is_kcm(sigma, j, coeff):
                    break
            best = j
        rep.k_cm_max = best
    return rep
