"""Augmental simplicial complexes and the simplicial calculus on them.

A complex is either ``VOID`` (no faces at all) or a finite downward-closed
family of faces that always contains the empty face ``()``.  The complex
``EMPTY_SIMPLEX`` has ``()`` as its only face; it is not ``VOID``.

Faces are tuples of vertex labels (strings) in sorted order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import FaceNotPresentError, MalformedFaceError, PairError, VoidComplexError

Face = tuple
NEG_INF = -math.inf


def make_face(labels: Iterable) -> Face:
    """Canonical face from an iterable of labels; duplicates are an error."""
    vs = [str(v) for v in labels]
    face = tuple(sorted(set(vs)))
    if len(face) != len(vs):
        raise MalformedFaceError(f"duplicate vertex in face {vs}")
    return face


def _subfaces(face: Face) -> Iterator[Face]:
    for k in range(len(face) + 1):
        yield from combinations(face, k)


class SimplicialComplex:
    """Immutable augmental complex.  Build with :func:`from_facets`."""

    __slots__ = ("_faces", "_facets", "_vertices", "_by_dim", "_hash")

    def __init__(self, faces: frozenset | None, facets: tuple | None = None):
        self._faces = faces
        self._facets = facets
        self._vertices = None
        self._by_dim = None
        self._hash = None

    # -- basic accessors -------------------------------------------------
    @property
    def is_void(self) -> bool:
        return self._faces is None

    @property
    def faces(self) -> frozenset:
        return frozenset() if self._faces is None else self._faces

    @property
    def facets(self) -> tuple:
        if self._facets is None:
            self._facets = _maximal(self.faces)
        return self._facets

    @property
    def vertices(self) -> tuple:
        if self._vertices is None:
            self._vertices = tuple(sorted({v for f in self.facets for v in f}))
        return self._vertices

    @property
    def dim(self):
        """Largest face dimension; ``-inf`` for ``VOID``."""
        if self._faces is None:
            return NEG_INF
        return max(len(f) for f in self.facets) - 1

    def faces_of_dim(self, d: int) -> list:
        if self._by_dim is None:
            by_dim: dict[int, list] = {}
            for f in self.faces:
                by_dim.setdefault(len(f) - 1, []).append(f)
            for v in by_dim.values():
                v.sort()
            self._by_dim = by_dim
        return self._by_dim.get(d, [])

    def f_vector(self) -> tuple:
        if self.is_void:
            return ()
        return tuple(len(self.faces_of_dim(d)) for d in range(-1, self.dim + 1))

    def __contains__(self, face) -> bool:
        if self._faces is None:
            return False
        if not isinstance(face, tuple):
            face = make_face(face)
        return face in self._faces

    def __iter__(self):
        return iter(sorted(self.faces, key=lambda f: (len(f), f)))

    def __len__(self):
        return len(self.faces)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._faces == other._faces

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._faces)
        return self._hash

    def __repr__(self):
        if self.is_void:
            return "SimplicialComplex(VOID)"
        return f"SimplicialComplex(facets={[list(f) for f in self.facets]})"


def _maximal(faces) -> tuple:
    """Maximal members of a downward-closed face set."""
    fsets = {frozenset(f) for f in faces}
    verts = set().union(*fsets) if fsets else set()
    out = []
    for f in faces:
        fs = frozenset(f)
        if not any(v not in fs and fs | {v} in fsets for v in verts):
            out.append(f)
    return tuple(sorted(out))


def from_facets(facets: Iterable) -> SimplicialComplex:
    """Downward closure of ``facets``; ``[]`` gives ``VOID``, ``[[]]`` gives ``{()}``."""
    fs = {f if isinstance(f, tuple) and _sorted_unique(f) else make_face(f) for f in facets}
    if not fs:
        return VOID
    faces = set()
    for f in fs:
        if f not in faces:
            faces.update(_subfaces(f))
    return SimplicialComplex(frozenset(faces))


def _sorted_unique(f: tuple) -> bool:
    return all(isinstance(v, str) for v in f) and all(f[i] < f[i + 1] for i in range(len(f) - 1))


def from_faces(faces: Iterable) -> SimplicialComplex:
    """Complex from a face set that must already be downward closed."""
    fs = frozenset(f if isinstance(f, tuple) and _sorted_unique(f) else make_face(f) for f in faces)
    if not fs:
        return VOID
    for f in fs:
        for i in range(len(f)):
            if f[:i] + f[i + 1:] not in fs:
                raise MalformedFaceError(f"face set not downward closed at {f}")
    return SimplicialComplex(fs)


VOID = SimplicialComplex(None, ())
EMPTY_SIMPLEX = SimplicialComplex(frozenset({()}), ((),))


def closure(face) -> SimplicialComplex:
    """The full simplex on ``face`` (``closure(())`` is ``{()}``)."""
    return from_facets([face])


def simplex_boundary(face) -> SimplicialComplex:
    """All proper faces of ``face``; the boundary of a vertex is ``{()}``."""
    f = make_face(face)
    if not f:
        return VOID
    return from_facets([f[:i] + f[i + 1:] for i in range(len(f))])


def _require_present(sigma: SimplicialComplex, what: str = "operation"):
    if sigma.is_void:
        raise VoidComplexError(f"{what} needs a non-void complex")


def _containing(sigma: SimplicialComplex, face: Face) -> list:
    s = set(face)
    return [f for f in sigma.facets if s.issubset(f)]


def link(sigma: SimplicialComplex, face) -> SimplicialComplex:
    """Faces disjoint from ``face`` whose union with it lies in ``sigma``."""
    _require_present(sigma, "link")
    face = make_face(face)
    s = set(face)
    return from_facets([tuple(v for v in f if v not in s) for f in _containing(sigma, face)])


def closed_star(sigma: SimplicialComplex, face) -> SimplicialComplex:
    """Faces whose union with ``face`` lies in ``sigma``."""
    _require_present(sigma, "closed_star")
    return from_facets(_containing(sigma, make_face(face)))


def contrastar(sigma: SimplicialComplex, face) -> SimplicialComplex:
    """Faces not containing ``face``; the contrastar of ``()`` is ``VOID``."""
    _require_present(sigma, "contrastar")
    face = make_face(face)
    if face not in sigma:
        return sigma
    s = set(face)
    return from_faces(f for f in sigma.faces if not s.issubset(f))


def deletion(sigma: SimplicialComplex, vertices: Iterable) -> SimplicialComplex:
    """Faces disjoint from the vertex set ``vertices``."""
    _require_present(sigma, "deletion")
    t = {str(v) for v in vertices}
    return from_facets([tuple(v for v in f if v not in t) for f in sigma.facets])


def skeleton(sigma: SimplicialComplex, p: int) -> SimplicialComplex:
    if p < -1:
        raise ValueError("skeleton dimension must be >= -1")
    _require_present(sigma, "skeleton")
    return from_faces(f for f in sigma.faces if len(f) <= p + 1)


def induced(sigma: SimplicialComplex, vertices: Iterable) -> SimplicialComplex:
    """Full subcomplex on a vertex subset."""
    keep = {str(v) for v in vertices}
    if sigma.is_void:
        return VOID
    return from_facets([tuple(v for v in f if v in keep) for f in sigma.facets])


def cone_points_and_core(sigma: SimplicialComplex) -> tuple[tuple, SimplicialComplex]:
    """Vertices lying in every facet, and the subcomplex of faces avoiding them."""
    _require_present(sigma, "cone_points_and_core")
    common = set(sigma.facets[0])
    for f in sigma.facets[1:]:
        common &= set(f)
    cps = tuple(sorted(common))
    return cps, deletion(sigma, cps)


def minimal_non_faces(sigma: SimplicialComplex, universe: Iterable | None = None) -> frozenset:
    """Minimal subsets of the universe that are not faces.

    For ``VOID`` the answer is ``{()}``: even the empty set is missing.
    """
    if sigma.is_void:
        return frozenset({()})
    w = sorted({str(v) for v in universe}) if universe is not None else list(sigma.vertices)
    missing = set(sigma.vertices) - set(w)
    if missing:
        raise ValueError(f"universe lacks vertices {sorted(missing)}")
    faces = sigma.faces
    out = set()
    for f in faces:
        fs = set(f)
        for v in w:
            if v in fs:
                continue
            cand = tuple(sorted(f + (v,)))
            if cand in faces or cand in out:
                continue
            if all(cand[:i] + cand[i + 1:] in faces for i in range(len(cand))):
                out.add(cand)
    return frozenset(out)


def is_pure(sigma: SimplicialComplex) -> bool:
    _require_present(sigma, "is_pure")
    return len({len(f) for f in sigma.facets}) == 1


class _DSU:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def groups(self) -> list:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return [sorted(g) for g in sorted(out.values(), key=min)]


def strong_components(sigma: SimplicialComplex) -> list:
    """Classes of facets joined by chains of facets meeting in ridges.

    Along such a chain every facet has the same size ``k`` and consecutive
    facets share ``k - 1`` vertices, so facets of different sizes are never
    related.  Under this reading ``{a}, {b}`` form a single class.
    """
    if sigma.is_void:
        return []
    dsu = _DSU(sigma.facets)
    ridges: dict = {}
    for f in sigma.facets:
        for i in range(len(f)):
            r = (len(f), f[:i] + f[i + 1:])
            if r in ridges:
                dsu.union(ridges[r], f)
            else:
                ridges[r] = f
    return [from_facets(g) for g in dsu.groups()]


def is_strongly_connected(sigma: SimplicialComplex) -> bool:
    return len(strong_components(sigma)) == 1


def poset_connected(sigma: SimplicialComplex, sub: SimplicialComplex) -> bool:
    """Whether the faces of ``sigma`` outside ``sub`` form a connected poset."""
    if not is_subcomplex(sub, sigma):
        raise PairError("second argument is not a subcomplex")
    rest = sigma.faces - sub.faces
    if not rest:
        return True
    dsu = _DSU(rest)
    verts = sigma.vertices
    for f in rest:
        fs = set(f)
        for v in verts:
            if v not in fs:
                g = tuple(sorted(f + (v,)))
                if g in rest:
                    dsu.union(f, g)
    return len({dsu.find(x) for x in rest}) == 1


def euler_reduced(sigma: SimplicialComplex) -> int:
    """Sum of ``(-1)^dim`` over all faces, the empty face included."""
    return sum(-1 if len(f) % 2 == 0 else 1 for f in sigma.faces)


def is_subcomplex(sub: SimplicialComplex, sigma: SimplicialComplex) -> bool:
    return sub.faces <= sigma.faces


def union(*cs: SimplicialComplex) -> SimplicialComplex:
    present = [c for c in cs if not c.is_void]
    if not present:
        return VOID
    return from_facets([f for c in present for f in c.facets])


def intersection(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if a.is_void or b.is_void:
        return VOID
    return from_faces(a.faces & b.faces)


def relabel(sigma: SimplicialComplex, mapping) -> SimplicialComplex:
    """Apply a vertex renaming (dict or callable); must be injective on vertices."""
    if sigma.is_void:
        return VOID
    f = mapping if callable(mapping) else (lambda v: mapping[v])
    new = {v: str(f(v)) for v in sigma.vertices}
    if len(set(new.values())) != len(new):
        raise ValueError("relabeling is not injective")
    return from_facets([tuple(new[v] for v in face) for face in sigma.facets])


def is_full(gamma: SimplicialComplex, sigma: SimplicialComplex) -> bool:
    """Whether ``gamma`` is the full subcomplex of ``sigma`` on its own vertices."""
    if not is_subcomplex(gamma, sigma):
        return False
    if gamma.is_void:
        return True
    return induced(sigma, gamma.vertices) == gamma


@dataclass(frozen=True)
class ComplexPair:
    """A complex with a subcomplex (``VOID`` for absolute homology)."""

    total: SimplicialComplex
    sub: SimplicialComplex = VOID

    def __post_init__(self):
        if not is_subcomplex(self.sub, self.total):
            raise PairError("sub is not a subcomplex of total")


def as_pair(x) -> ComplexPair:
    if isinstance(x, ComplexPair):
        return x
    if isinstance(x, SimplicialComplex):
        return ComplexPair(x)
    if isinstance(x, tuple) and len(x) == 2:
        return ComplexPair(x[0], x[1])
    raise TypeError(f"cannot read {type(x).__name__} as a complex pair")


def require_face(sigma: SimplicialComplex, face) -> Face:
    face = make_face(face)
    if face not in sigma:
        raise FaceNotPresentError(face)
    return face


def faces_containing(sigma: SimplicialComplex, face: Sequence) -> list:
    s = set(face)
    return [f for f in sigma.faces if s.issubset(f)]
