"""
Exact integer lattices
======================

Smith and Hermite normal forms, membership, index and quotient groups,
all in exact integer arithmetic.
"""

from sungauge.exact_linalg import (
    IntegerMatrix,
    hnf_rows,
    lattice_contains,
    lattice_index,
    minimal_multiplier,
    quotient_invariants,
    snf,
    standard_lattice,
)

# Smith normal form with its unimodular transforms
m = IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
d = snf(m)
print("invariant factors:", d.invariant_factors)
print("left @ M @ right == diag:", d.left @ m @ d.right == d.diag)
print("det(left), det(right):", d.left.determinant(), d.right.determinant())

# a lattice is stored by its canonical row-Hermite basis
lat = hnf_rows([(3, 3, 6), (6, 0, 0), (0, 6, 0)])
print("basis:", lat.rows())
print("(3, 3, 6) in lattice:", lattice_contains(lat, (3, 3, 6)))
print("(1, 0, 1) in lattice:", lattice_contains(lat, (1, 0, 1)))

# smallest m with m * v in the lattice
print("order of (1, 0, 1):", minimal_multiplier(lat, (1, 0, 1)))

# index in Z^3 and the structure of the quotient
print("index in Z^3:", lattice_index(lat, standard_lattice(3)))
q = quotient_invariants(lat.rows(), ambient_dim=3)
print("Z^3 / lattice = " + " + ".join(f"Z/{f}" for f in q.invariant_factors))
