"""Hypothesis strategies for complexes."""

from __future__ import annotations

from hypothesis import strategies as st

from augmental.complex import from_facets

LABELS = "abcdefg"


def complexes(max_vertices: int = 5, max_facet: int = 4, max_facets: int = 5, labels: str = LABELS):
    """Present complexes on at most ``max_vertices`` labels."""
    verts = list(labels[:max_vertices])
    facet = st.lists(st.sampled_from(verts), min_size=0, max_size=max_facet, unique=True)
    return st.lists(facet, min_size=1, max_size=max_facets).map(from_facets)


def nonempty_complexes(**kw):
    return complexes(**kw).filter(lambda c: bool(c.vertices))
