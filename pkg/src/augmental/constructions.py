"""Join, ordered simplicial product, their pair versions, cone, suspension, double."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .complex import (
    EMPTY_SIMPLEX, VOID, ComplexPair, SimplicialComplex, as_pair, from_facets,
    relabel, union,
)
from .errors import PairError, PreconditionError


@dataclass(frozen=True)
class OrderedComplex:
    """A complex with a total order on its vertices."""

    complex: SimplicialComplex
    order: tuple

    def __post_init__(self):
        order = tuple(str(v) for v in self.order)
        object.__setattr__(self, "order", order)
        if len(set(order)) != len(order) or set(order) != set(self.complex.vertices):
            raise ValueError("order must list every vertex exactly once")

    def restrict(self, sub: SimplicialComplex) -> "OrderedComplex":
        vs = set(sub.vertices)
        return OrderedComplex(sub, tuple(v for v in self.order if v in vs))

    def rank(self, v) -> int:
        return self.order.index(v)


def ordered(x, order=None) -> OrderedComplex:
    """Wrap a complex with ``order`` (restricted to its vertices) or label order."""
    if isinstance(x, OrderedComplex):
        return x if order is None else ordered(x.complex, order)
    if order is None:
        return OrderedComplex(x, x.vertices)
    vs = set(x.vertices)
    return OrderedComplex(x, tuple(v for v in map(str, order) if v in vs))


def _plain(x) -> SimplicialComplex:
    return x.complex if isinstance(x, OrderedComplex) else x


def _prefix_if_needed(a: SimplicialComplex, b: SimplicialComplex):
    if set(a.vertices) & set(b.vertices):
        return (lambda v: "L:" + v), (lambda v: "R:" + v)
    return None


def _join_raw(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if a.is_void or b.is_void:
        return VOID
    return from_facets([tuple(sorted(f + g)) for f in a.facets for g in b.facets])


def join(a, b) -> SimplicialComplex:
    """All unions of a face of ``a`` with a face of ``b``.

    Shared labels are disambiguated with ``L:``/``R:`` prefixes.
    """
    a, b = _plain(a), _plain(b)
    pre = _prefix_if_needed(a, b)
    if pre:
        a, b = relabel(a, pre[0]), relabel(b, pre[1])
    return _join_raw(a, b)


def pair_join(p1, p2) -> ComplexPair:
    """``(X1*Y1, X1*Y2 u X2*Y1)``."""
    p1, p2 = as_pair(p1), as_pair(p2)
    x1, x2, y1, y2 = p1.total, p1.sub, p2.total, p2.sub
    pre = _prefix_if_needed(x1, y1)
    if pre:
        x1, x2 = relabel(x1, pre[0]), relabel(x2, pre[0])
        y1, y2 = relabel(y1, pre[1]), relabel(y2, pre[1])
    return ComplexPair(_join_raw(x1, y1), union(_join_raw(x1, y2), _join_raw(x2, y1)))


def pair_label(x: str, y: str) -> str:
    return f"({x},{y})"


def product(a, b) -> OrderedComplex:
    """Ordered simplicial product (staircase triangulation).

    Faces are chains of distinct vertices ``(x, y)`` increasing weakly in both
    coordinates whose coordinate sets are faces of the factors.  A ``VOID``
    factor gives ``VOID``; a factor without vertices gives ``{()}``.
    """
    a, b = ordered(a), ordered(b)
    ca, cb = a.complex, b.complex
    if ca.is_void or cb.is_void:
        return OrderedComplex(VOID, ())
    if not ca.vertices or not cb.vertices:
        return OrderedComplex(EMPTY_SIMPLEX, ())
    ra = {v: i for i, v in enumerate(a.order)}
    rb = {v: i for i, v in enumerate(b.order)}
    gens = set()
    for f in ca.facets:
        fa = sorted(f, key=ra.__getitem__)
        for g in cb.facets:
            gb = sorted(g, key=rb.__getitem__)
            m, n = len(fa) - 1, len(gb) - 1
            for steps in combinations(range(m + n), m):
                i = j = 0
                chain = [pair_label(fa[0], gb[0])]
                st = set(steps)
                for k in range(m + n):
                    if k in st:
                        i += 1
                    else:
                        j += 1
                    chain.append(pair_label(fa[i], gb[j]))
                gens.add(tuple(sorted(chain)))
    cplx = from_facets(gens)
    order = tuple(pair_label(x, y) for x in a.order for y in b.order)
    present = set(cplx.vertices)
    return OrderedComplex(cplx, tuple(v for v in order if v in present))


def pair_product(p1, p2, order1=None, order2=None) -> ComplexPair:
    """``(X1 x Y1, X1 x Y2 u X2 x Y1)`` with the totals' orders restricted to the subs."""
    p1, p2 = as_pair(p1), as_pair(p2)
    o1 = ordered(p1.total, order1)
    o2 = ordered(p2.total, order2)
    total = product(o1, o2).complex
    s1 = product(o1, o2.restrict(p2.sub)).complex if not p2.sub.is_void else VOID
    s2 = product(o1.restrict(p1.sub), o2).complex if not p1.sub.is_void else VOID
    return ComplexPair(total, union(s1, s2))


def _fresh(sigma: SimplicialComplex, base: str) -> str:
    used = set(sigma.vertices)
    label = base
    while label in used:
        label += "'"
    return label


def cone(sigma: SimplicialComplex, apex: str | None = None) -> SimplicialComplex:
    if sigma.is_void:
        raise PreconditionError("cone needs a non-void complex")
    apex = apex or _fresh(sigma, "apex")
    return join(sigma, from_facets([[apex]]))


def suspension(sigma: SimplicialComplex, poles: tuple | None = None) -> SimplicialComplex:
    if sigma.is_void:
        raise PreconditionError("suspension needs a non-void complex")
    n, s = poles or (_fresh(sigma, "N"), _fresh(sigma, "S"))
    return join(sigma, from_facets([[n], [s]]))


def _hat(face: tuple) -> str:
    return face[0] if len(face) == 1 else "[" + ",".join(face) + "]"


def derived_subdivision(sigma: SimplicialComplex, keep: SimplicialComplex = EMPTY_SIMPLEX) -> SimplicialComplex:
    """Barycentric subdivision of every face not in ``keep``; ``keep`` stays as is.

    A face of a simplex is replaced by a new vertex labelled ``[a,b,...]``;
    vertices keep their labels.  With the default ``keep = {()}`` this is the
    ordinary barycentric subdivision.
    """
    if sigma.is_void:
        return VOID
    kept = keep.faces
    gens = []
    for big in sigma.facets:
        if big in kept:
            gens.append(big)
            continue
        for k in range(1, len(big) + 1):
            for s1 in combinations(big, k):
                if s1 in kept:
                    continue
                betas = _kept_maximal(s1, kept)
                rest = [v for v in big if v not in s1]
                for perm in permutations(rest):
                    chain = [s1]
                    cur = set(s1)
                    for v in perm:
                        cur.add(v)
                        chain.append(tuple(sorted(cur)))
                    hats = tuple(_hat(c) for c in chain)
                    for beta in betas:
                        gens.append(tuple(sorted(set(beta + hats))))
    return from_facets(gens)


def _kept_maximal(s: tuple, kept) -> list:
    subs = [f for k in range(len(s)) for f in combinations(s, k) if f in kept]
    subs.sort(key=len, reverse=True)
    out = []
    for f in subs:
        if not any(set(f) <= set(g) for g in out):
            out.append(f)
    return out


def barycentric_subdivision(sigma: SimplicialComplex) -> SimplicialComplex:
    return derived_subdivision(sigma, EMPTY_SIMPLEX)


def double(sigma: SimplicialComplex, boundary: SimplicialComplex) -> SimplicialComplex:
    """Two copies of ``sigma`` glued along ``boundary``.

    The mirrored copy renames vertices off the boundary.  When some face off
    the boundary has all its vertices on it, plain gluing would identify
    distinct faces, so the mirrored copy is first subdivided away from the
    boundary.  Only the homeomorphism type of the result is meaningful.
    """
    if sigma.is_void:
        raise PreconditionError("double needs a non-void complex")
    if not boundary.faces <= sigma.faces:
        raise PairError("boundary is not a subcomplex")
    bverts = set(boundary.vertices)
    used = set(sigma.vertices)
    rename = {}
    for v in sigma.vertices:
        if v in bverts:
            rename[v] = v
        else:
            w = v + "'"
            while w in used:
                w += "'"
            used.add(w)
            rename[v] = w
    mirror = relabel(sigma, rename)
    clash = any(f not in boundary.faces and set(f) <= bverts for f in sigma.faces)
    if clash:
        mirror = derived_subdivision(mirror, boundary)
    return union(sigma, mirror)

