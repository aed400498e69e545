"""Named complexes, exhaustive enumeration and seeded random generators."""

from __future__ import annotations

import random
from itertools import combinations

from .complex import (
    EMPTY_SIMPLEX, VOID, SimplicialComplex, closure, from_facets, relabel, simplex_boundary,
)
from .constructions import barycentric_subdivision, double, join, product


def _facets(text: str) -> SimplicialComplex:
    return from_facets([list(w) for w in text.split()])


def rp2_6() -> SimplicialComplex:
    """Six-vertex real projective plane."""
    return _facets("123 134 145 156 126 235 346 245 356 246")


def mobius_5() -> SimplicialComplex:
    """Five-vertex Möbius band."""
    return _facets("123 234 345 145 125")


def torus_7() -> SimplicialComplex:
    """Seven-vertex torus."""
    return from_facets([[str(i), str((i + 1) % 7), str((i + 3) % 7)] for i in range(7)]
                       + [[str(i), str((i + 2) % 7), str((i + 3) % 7)] for i in range(7)])


def cylinder(k: int = 3) -> SimplicialComplex:
    """Annulus between the cycles ``a0..a(k-1)`` and ``b0..b(k-1)``."""
    fs = []
    for i in range(k):
        j = (i + 1) % k
        fs += [[f"a{i}", f"a{j}", f"b{i}"], [f"a{j}", f"b{i}", f"b{j}"]]
    return from_facets(fs)


def point(label: str = "p") -> SimplicialComplex:
    return from_facets([[label]])


def points(k: int, prefix: str = "p") -> SimplicialComplex:
    return from_facets([[f"{prefix}{i}"] for i in range(k)])


def simplex(n: int, prefix: str = "v") -> SimplicialComplex:
    """Full ``n``-simplex; ``simplex(-1)`` is ``{()}``."""
    return closure([f"{prefix}{i}" for i in range(n + 1)])


def sphere(n: int, prefix: str = "v") -> SimplicialComplex:
    """Boundary of the ``(n+1)``-simplex; ``sphere(-1)`` is ``{()}``."""
    if n == -1:
        return EMPTY_SIMPLEX
    return simplex_boundary([f"{prefix}{i}" for i in range(n + 2)])


def cycle(k: int, prefix: str = "c") -> SimplicialComplex:
    return from_facets([[f"{prefix}{i}", f"{prefix}{(i + 1) % k}"] for i in range(k)])


def path(k: int, prefix: str = "e") -> SimplicialComplex:
    """A path with ``k`` edges."""
    return from_facets([[f"{prefix}{i}", f"{prefix}{i + 1}"] for i in range(k)])


def theta_graph() -> SimplicialComplex:
    """Two points joined with three points."""
    return join(points(2, "x"), points(3, "y"))


def mobius_cone() -> SimplicialComplex:
    return join(mobius_5(), point("o"))


def cylinder_cone() -> SimplicialComplex:
    return join(cylinder(), point("o"))


NAMED = {
    "rp2": rp2_6,
    "mobius": mobius_5,
    "torus": torus_7,
    "cylinder": cylinder,
    "mobius-cone": mobius_cone,
    "cylinder-cone": cylinder_cone,
    "theta": theta_graph,
}


def all_complexes(n: int, labels: str = "abcdefgh") -> list:
    """Every complex whose vertices lie in the first ``n`` labels, ``VOID`` and ``{()}`` included.

    These correspond to antichains of subsets; for ``n = 4`` there are 168.
    """
    universe = list(labels[:n])
    subsets = [c for k in range(n + 1) for c in combinations(universe, k)]
    out = []

    def grow(i, chosen):
        if i == len(subsets):
            out.append(from_facets([list(c) for c in chosen]))
            return
        grow(i + 1, chosen)
        s = set(subsets[i])
        if all(not (s <= set(c) or set(c) <= s) for c in chosen):
            grow(i + 1, chosen + [subsets[i]])

    grow(0, [])
    return sorted(set(out), key=lambda c: (c.is_void, len(c), [list(f) for f in c.facets]))


def random_complex(rng: random.Random, max_vertices: int = 6, max_facet: int = 3,
                   max_facets: int = 5, labels: str = "abcdefghij") -> SimplicialComplex:
    """A random present complex; facets have at most ``max_facet`` vertices."""
    nv = rng.randint(0, max_vertices)
    verts = list(labels[:nv])
    if not verts:
        return EMPTY_SIMPLEX
    k = rng.randint(1, max_facets)
    fs = [rng.sample(verts, rng.randint(1, min(max_facet, nv))) for _ in range(k)]
    return from_facets(fs)


def random_subcomplex(rng: random.Random, sigma: SimplicialComplex,
                      void_chance: float = 0.25) -> SimplicialComplex:
    """``VOID`` with probability ``void_chance``, else the closure of random faces."""
    if sigma.is_void or rng.random() < void_chance:
        return VOID
    faces = sorted(sigma.faces)
    picks = [f for f in faces if rng.random() < 0.3]
    return from_facets(picks) if picks else EMPTY_SIMPLEX


def random_pair(rng: random.Random, **kw):
    total = random_complex(rng, **kw)
    return total, random_subcomplex(rng, total)


def _tag(sigma: SimplicialComplex, prefix: str) -> SimplicialComplex:
    return relabel(sigma, lambda v: prefix + v)


def manifold_seeds() -> list:
    """Small pseudomanifolds of dimension at most 2, with and without boundary."""
    seeds = [point(), points(2)]
    seeds += [simplex(n) for n in (1, 2, 3)]
    seeds += [sphere(n) for n in (1, 2)]
    seeds += [cycle(k) for k in range(4, 8)]
    seeds += [path(k) for k in range(2, 6)]
    seeds += [mobius_5(), rp2_6(), torus_7(), cylinder(3), cylinder(4)]
    seeds += [join(cycle(k), point("o")) for k in (4, 5)]
    return seeds


def fuzz_manifolds(min_count: int = 500) -> list:
    """A deterministic corpus of distinct pseudomanifolds built from the seeds.

    Closed under cone and suspension, doubling along the pseudomanifold
    boundary, one round of barycentric subdivision of the small ones, and
    pairwise joins and products of low-dimensional pieces.
    """
    from .manifolds import is_pseudomanifold, pseudo_boundary

    seeds = manifold_seeds()
    corpus: dict = {}

    def add(c):
        if not c.is_void and c.vertices and c not in corpus and is_pseudomanifold(c):
            corpus[c] = None

    for s in seeds:
        add(s)
        add(join(s, point("o")))
        add(join(s, points(2, "s")))
        bd = pseudo_boundary(s)
        if not bd.is_void:
            add(double(s, bd))
        if len(s.facets) <= 6 and s.dim <= 2:
            add(barycentric_subdivision(s))
    low = [s for s in seeds if s.dim <= 1] + [cycle(3), path(1)]
    for i, a in enumerate(low):
        for j, b in enumerate(low):
            add(join(_tag(a, "x"), _tag(b, "y")))
            if j >= i and a.dim + b.dim <= 2 and len(a.vertices) * len(b.vertices) <= 30:
                add(product(a, b).complex)
    surfaces = [s for s in seeds if s.dim == 2]
    for a in surfaces:
        for b in low:
            if len(b.vertices) <= 4:
                add(join(_tag(a, "x"), _tag(b, "y")))
    for k in range(3, 40):
        if len(corpus) >= min_count:
            break
        add(cycle(k, "r"))
        add(join(cycle(k, "r"), points(2, "s")))
        add(join(path(k, "q"), point("o")))
    return list(corpus)
