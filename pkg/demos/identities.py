"""Checking identities by brute force, and pushing one through the sandwich."""

from pbzlab import catalog, m_transform, named_identity, parse, satisfies

for name in ["D:3", "GD:1", "D:4", "GD:2"]:
    A = catalog(name)
    res = satisfies(A, named_identity("SK"))
    tag = "holds" if res else f"fails at {res.witness_labels(A)}"
    print(f"SK in {name}: {tag}")

# K satisfies a constant-free t = u exactly when D2 (+) K (+) D2 satisfies m(t,u) = m(u,t)
ident = parse("x ^ x' = y ^ y'")
m = m_transform(ident.lhs, ident.rhs).identity()
print(f"\n{ident}")
for k in ["D:3", "MO:1", "M3", "MO:2"]:
    K, S = catalog(k), catalog(f"SANDWICH:{k}")
    print(f"  {k:5s} {bool(satisfies(K, ident))!s:5s}   sandwich, plain: {bool(satisfies(S, ident))!s:5s}"
          f"  transformed: {bool(satisfies(S, m))}")
