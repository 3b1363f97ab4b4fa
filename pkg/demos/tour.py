"""A short walk through the catalog: classify a few algebras and look at
their sharp, dense and non-sharp parts."""

from pbzlab import catalog, classify, dense_and_t, sharp_elements

for name in ["D:3", "MO:2", "M3", "B6", "GD:2", "CompAOL11"]:
    A = catalog(name)
    r = classify(A)
    kinds = [k for k in ("distributive", "modular", "ortholattice", "orthomodular",
                         "antiortholattice", "paraorthomodular") if getattr(r, k)]
    print(f"{name:10s} n={A.n:2d}  {', '.join(kinds)}")

A = catalog("GD:2")
dt = dense_and_t(A)
print("\nGD(2)")
print("  sharp:", [A.label(x) for x in sharp_elements(A)])
print("  dense:", [A.label(x) for x in sorted(dt['D'])])
print("  T:    ", [A.label(x) for x in sorted(dt['T'])])
