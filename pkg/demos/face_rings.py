"""Face ideals and Hilbert functions for joins and ordered products.

Run: python3 demos/face_rings.py
"""

from augmental import catalog
from augmental.complex import EMPTY_SIMPLEX, VOID
from augmental.constructions import ordered, product
from augmental.stanley_reisner import (
    hilbert_function, join_ideal, literal_branch_mismatches, product_groebner_set, segre_check, sr_ideal,
)

print("void:        ", sr_ideal(VOID, ["x", "y"]).export().replace("\n", " | "))
print("empty simplex:", sr_ideal(EMPTY_SIMPLEX, ["x", "y"]).export().replace("\n", " | "))
print("4-cycle:     ", sr_ideal(catalog.cycle(4, "c")).export().replace("\n", " | "))
print("join of two point pairs:", sorted(join_ideal(catalog.points(2, "p"), catalog.points(2, "q")).as_set()))

tri = ordered(catalog.sphere(1, "t"))
edge = ordered(catalog.simplex(1, "e"))
g = product_groebner_set(tri, edge)
print("\ntriangle boundary x edge")
print("  incomparable pairs:", sorted(g.incomparable))
print("  chain non-faces:   ", sorted(g.chains))
print("  extra chains admitted by a verbatim reading:", literal_branch_mismatches(tri, edge))

prod = product(tri, edge).complex
print("\n m | H(product) | H(triangle)*H(edge)")
for m in range(6):
    print(f" {m} | {hilbert_function(prod, m):>10} | {hilbert_function(tri.complex, m) * hilbert_function(edge.complex, m)}")
print("segre check up to 6:", segre_check(tri, edge, 6))
