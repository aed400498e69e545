"""Face ideals as sets of squarefree monomials.

A monomial is a sorted tuple of variables (vertex labels); ``()`` is the
monomial 1.  The ideal of a complex is generated by its minimal non-faces, so
``VOID`` gives the unit ideal (the trivial ring) and ``{()}`` gives the ideal of
all variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb

from .complex import SimplicialComplex, minimal_non_faces
from .constructions import OrderedComplex, join, ordered, pair_label, product
from .errors import PreconditionError


def _key(m: tuple):
    return (len(m), m)


@dataclass(frozen=True)
class SRIdeal:
    universe: tuple
    generators: tuple

    @property
    def trivial_ring(self) -> bool:
        """Unit ideal: the quotient is the zero ring."""
        return self.generators == ((),)

    @property
    def whole_ring_quotient(self) -> bool:
        """All variables: the quotient is the coefficient ring itself."""
        return not self.trivial_ring and set(self.generators) == {(v,) for v in self.universe}

    def as_set(self) -> frozenset:
        return frozenset(self.generators)

    def export(self) -> str:
        """Generic computer-algebra input: a ring header, then one generator per line."""
        lines = ["ring " + ",".join(self.universe)]
        lines += ["*".join(m) if m else "1" for m in self.generators]
        return "\n".join(lines)


def _ideal(universe, gens) -> SRIdeal:
    return SRIdeal(tuple(universe), tuple(sorted(set(gens), key=_key)))


def sr_ideal(sigma: SimplicialComplex, universe=None) -> SRIdeal:
    """Minimal non-faces over ``universe`` (default: the vertex set), keeping its order."""
    w = list(dict.fromkeys(map(str, universe))) if universe is not None else list(sigma.vertices)
    return _ideal(w, minimal_non_faces(sigma, w))


def minimalize(monomials) -> frozenset:
    """Drop every monomial divisible by another one in the set."""
    ms = sorted(set(monomials), key=_key)
    out: list = []
    for m in ms:
        s = set(m)
        if not any(set(g) <= s for g in out):
            out.append(m)
    return frozenset(out)


def ideal_intersection(g1, g2) -> frozenset:
    """Generators of the intersection of two monomial ideals (minimal pairwise lcms)."""
    return minimalize(tuple(sorted(set(a) | set(b))) for a in g1 for b in g2)


def ideal_sum(g1, g2) -> frozenset:
    return minimalize(set(g1) | set(g2))


def join_ideal(a: SimplicialComplex, b: SimplicialComplex) -> SRIdeal:
    """Union of the factors' generators, checked against the ideal of the join."""
    if set(a.vertices) & set(b.vertices):
        raise PreconditionError("join_ideal needs disjoint vertex sets")
    if a.is_void or b.is_void:
        gens = {()}
    else:
        gens = set(minimal_non_faces(a)) | set(minimal_non_faces(b))
    universe = sorted(set(a.vertices) | set(b.vertices))
    direct = minimal_non_faces(join(a, b), universe)
    if frozenset(gens) != direct:
        raise AssertionError("join ideal differs from the minimal non-faces of the join")
    return _ideal(universe, gens)


@dataclass(frozen=True)
class GroebnerSet:
    incomparable: frozenset  # C'
    chains: frozenset  # D
    ideal: SRIdeal

    @property
    def generators(self) -> frozenset:
        return self.incomparable | self.chains


def _require_orders(o1, o2):
    if not (isinstance(o1, OrderedComplex) and isinstance(o2, OrderedComplex)):
        raise PreconditionError("product ideals need factors with declared orders")
    for o in (o1, o2):
        if o.complex.is_void or not o.complex.vertices:
            raise PreconditionError("product ideals need factors with vertices")


def _mono(pairs) -> tuple:
    return tuple(sorted(pair_label(x, y) for x, y in pairs))


def incomparable_pairs(o1: OrderedComplex, o2: OrderedComplex) -> frozenset:
    """Products of two grid variables ordered oppositely in the two coordinates."""
    out = set()
    for i, j in combinations(range(len(o1.order)), 2):
        for k, l in combinations(range(len(o2.order)), 2):
            out.add(_mono([(o1.order[i], o2.order[l]), (o1.order[j], o2.order[k])]))
    return frozenset(out)


def _sorted_by(order, face) -> list:
    rank = {v: i for i, v in enumerate(order)}
    return sorted(face, key=rank.__getitem__)


def chain_non_faces(o1: OrderedComplex, o2: OrderedComplex) -> frozenset:
    """Minimal non-faces that are chains in the grid order.

    Three kinds: the first projection is a minimal non-face traversed strictly
    while the second is a face traversed weakly; the mirror image; or both
    projections are minimal non-faces of equal size, both traversed strictly.
    """
    c1, c2 = o1.complex, o2.complex
    n1, n2 = minimal_non_faces(c1), minimal_non_faces(c2)
    out = set()
    for a in n1:
        xs = _sorted_by(o1.order, a)
        for ys in combinations_with_replacement(o2.order, len(xs)):
            if tuple(sorted(set(ys))) in c2.faces:
                out.add(_mono(zip(xs, ys)))
    for b in n2:
        ys = _sorted_by(o2.order, b)
        for xs in combinations_with_replacement(o1.order, len(ys)):
            if tuple(sorted(set(xs))) in c1.faces:
                out.add(_mono(zip(xs, ys)))
    for a in n1:
        for b in n2:
            if len(a) == len(b):
                out.add(_mono(zip(_sorted_by(o1.order, a), _sorted_by(o2.order, b))))
    return frozenset(out)


def product_groebner_set(o1, o2) -> GroebnerSet:
    """``C'`` and ``D`` for an ordered product, asserted equal to its minimal non-faces."""
    _require_orders(o1, o2)
    c = incomparable_pairs(o1, o2)
    d = chain_non_faces(o1, o2)
    prod = product(o1, o2)
    universe = [pair_label(x, y) for x in o1.order for y in o2.order]
    direct = minimal_non_faces(prod.complex, universe)
    if c | d != direct:
        raise AssertionError("C' u D differs from the minimal non-faces of the product")
    return GroebnerSet(c, d, SRIdeal(tuple(universe), tuple(sorted(c | d, key=_key))))


def _grid_chains(o1: OrderedComplex, o2: OrderedComplex):
    """Every nonempty chain of grid points in the weak product order."""
    pts = [(i, j) for i in range(len(o1.order)) for j in range(len(o2.order))]

    def extend(chain, start):
        yield chain
        for k in range(start, len(pts)):
            i, j = pts[k]
            if not chain or (i >= chain[-1][0] and j >= chain[-1][1]):
                yield from extend(chain + [pts[k]], k + 1)

    for ch in extend([], 0):
        if ch:
            yield [(o1.order[i], o2.order[j]) for i, j in ch]


def literal_branch_mismatches(o1, o2) -> dict:
    """Chain monomials selected by each branch read verbatim, minus the true ``D``.

    The verbatim branches test only membership of the projections and use
    weak/strict monotonicity as printed, which admits non-minimal chains.
    Returns ``{branch: sorted extra monomials}`` for the branches that differ.
    """
    _require_orders(o1, o2)
    c1, c2 = o1.complex, o2.complex
    d = chain_non_faces(o1, o2)
    branches: dict = {1: set(), 2: set(), 3: set()}
    for ch in _grid_chains(o1, o2):
        p1 = tuple(sorted({x for x, _ in ch}))
        p2 = tuple(sorted({y for _, y in ch}))
        in1, in2 = p1 in c1.faces, p2 in c2.faces
        strict2 = len(p2) == len(ch)
        m = _mono(ch)
        if not in1 and in2:
            branches[1].add(m)
        if in1 and not in2 and strict2:
            branches[2].add(m)
        if not in1 and not in2 and strict2:
            branches[3].add(m)
    return {b: sorted(s - d, key=_key) for b, s in branches.items() if s - d}


def f_vector(sigma: SimplicialComplex) -> tuple:
    """``(f_-1, f_0, ..., f_n)``; empty for ``VOID``."""
    return sigma.f_vector()


def hilbert_function(sigma: SimplicialComplex, m: int) -> int:
    """Number of degree-``m`` monomials supported on faces."""
    if m < 0:
        raise ValueError("degree must be non-negative")
    if sigma.is_void:
        return 0
    if m == 0:
        return 1
    f = sigma.f_vector()
    return sum(f[i] * comb(m - 1, i - 1) for i in range(1, len(f)))


def segre_check(o1, o2, m_max: int) -> bool:
    """Hilbert function of the product equals the product of the factors' up to ``m_max``."""
    a, b = ordered(o1), ordered(o2)
    prod = product(a, b).complex
    return all(
        hilbert_function(prod, m) == hilbert_function(a.complex, m) * hilbert_function(b.complex, m)
        for m in range(m_max + 1))
