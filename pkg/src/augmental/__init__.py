"""Augmental simplicial complexes: homology with the empty simplex, joins and
products, manifold boundaries, Cohen-Macaulay conditions and face ideals."""

from .abelian import GF, QQ, ZZ, Coefficients, FgAbelianGroup, parse_coefficients
from .complex import (
    EMPTY_SIMPLEX, VOID, ComplexPair, SimplicialComplex, closed_star, closure, contrastar,
    deletion, from_faces, from_facets, link, minimal_non_faces, skeleton,
)
from .constructions import OrderedComplex, join, ordered, pair_join, pair_product, product
from .homology import HomologyTable, cohomology, homology, local_homology

__all__ = [
    "GF", "QQ", "ZZ", "Coefficients", "FgAbelianGroup", "parse_coefficients",
    "EMPTY_SIMPLEX", "VOID", "ComplexPair", "SimplicialComplex", "closed_star", "closure",
    "contrastar", "deletion", "from_faces", "from_facets", "link", "minimal_non_faces", "skeleton",
    "OrderedComplex", "join", "ordered", "pair_join", "pair_product", "product",
    "HomologyTable", "cohomology", "homology", "local_homology",
]
