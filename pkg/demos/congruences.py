"""Congruences of the antiortholattices M (+) K (+) M^d.

The count is compared with |Con_0(M)| * |Con_BI(K)| + 1, where Con_0(M)
holds the lattice congruences of M whose 0-class is {0}.
"""

from pbzlab import FiniteAlgebra, all_congruences, aol, catalog, con_0

cases = [("D:2", "D:2"), ("D:3", "D:2"), ("D:3", "MO:1"), ("D:2", "M3")]

for m, k in cases:
    M, K = catalog(m).lattice, catalog(k)
    A = aol(M, K)
    got = len(all_congruences(A, "BZ"))
    want = len(con_0(FiniteAlgebra(M), "LATTICE")) * len(all_congruences(K, "BI")) + 1
    print(f"{m} (+) {k} (+) {m}^d   n={A.n:2d}  |Con_BZ|={got}  predicted={want}")
