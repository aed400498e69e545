"""The six-vertex projective plane, seen through several coefficient rings.

Run: python3 demos/projective_plane.py
"""

from augmental import catalog
from augmental.abelian import GF, QQ, ZZ
from augmental.cm import is_bbm, is_cm
from augmental.constructions import join
from augmental.homology import homology, uct_prediction
from augmental.kunneth import verify_join
from augmental.manifolds import boundary, hip_set, orientable

rp = catalog.rp2_6()
print("facets:", len(rp.facets), "f-vector:", rp.f_vector())

for k in (ZZ, GF(2), GF(3), QQ):
    h = homology(rp, k)
    print(f"\nover {k}:")
    print("\n".join("  " + line for line in h.lines()) or "  (all zero)")
    if k is not ZZ:
        print("  matches universal coefficients:", uct_prediction(homology(rp), k) == h)
    print("  orientable:", orientable(rp, k), " boundary:", boundary(rp, k).facets or "void")
    print("  Buchsbaum:", is_bbm(rp, k), " Cohen-Macaulay:", is_cm(rp, k))
    print("  faces with sphere-like local homology at the empty face:", () in hip_set(rp, k))

# the join with itself: the tensor and Tor terms land in neighbouring degrees
print("\nRP2 * RP2 over Z:")
print(verify_join(rp, rp).render())
print("direct:", homology(join(rp, rp)).lines())
