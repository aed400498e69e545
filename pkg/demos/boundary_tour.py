"""Boundaries of small manifold-like complexes, including the two cone examples.

Run: python3 demos/boundary_tour.py
"""

from augmental import catalog
from augmental.abelian import GF, ZZ
from augmental.complex import EMPTY_SIMPLEX
from augmental.constructions import product
from augmental.homology import homology
from augmental.manifolds import boundary, boundary_components, classify, is_pseudomanifold, is_quasi_manifold


def show(name, sigma, coeff=ZZ):
    bd = boundary(sigma, coeff)
    if bd.is_void:
        kind = "void (closed)"
    elif bd == EMPTY_SIMPLEX:
        kind = "{()} (no vertices, but not void)"
    else:
        kind = f"{len(bd.facets)} facets, homology {homology(bd).lines() or 'trivial'}"
    print(f"{name:<28} over {coeff}: boundary {kind}")


show("sphere", catalog.sphere(2))
show("point", catalog.point())
show("projective plane", catalog.rp2_6())
show("projective plane", catalog.rp2_6(), GF(2))
show("Mobius band", catalog.mobius_5())
show("cone over Mobius band", catalog.mobius_cone())
show("cylinder x edge", product(catalog.cylinder(), catalog.simplex(1, "e")).complex)

pinched = boundary(catalog.cylinder_cone())
print("\nboundary of the cone over a cylinder:")
print("  pseudomanifold:", is_pseudomanifold(pinched), " quasi-manifold:", is_quasi_manifold(pinched))
print("  homology:", homology(pinched).lines())
print("  cylinder boundary components:", len(boundary_components(catalog.cylinder())))

print("\nclassification of the Mobius band:")
print(classify(catalog.mobius_5()).render())
