"""Brute-force reference implementations used as test oracles.

Everything here is written from the definitions with plain Python loops and
shares no code with the package beyond reading its tables.
"""

import itertools

from pbzlab import terms as T


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def partition_labels(n, blocks):
    lab = [0] * n
    for i, b in enumerate(blocks):
        for x in b:
            lab[x] = i
    return lab


def canonical(lab):
    seen = {}
    return tuple(seen.setdefault(v, len(seen)) for v in lab)


def is_compatible(A, lab, flavor):
    n = A.n
    unary = []
    if flavor >= 1:
        unary.append(A.kleene)
    if flavor >= 2:
        unary.append(A.brouwer)
    for x in range(n):
        for y in range(n):
            if lab[x] != lab[y]:
                continue
            for u in unary:
                if lab[u[x]] != lab[u[y]]:
                    return False
            for z in range(n):
                if lab[A.meet[x, z]] != lab[A.meet[y, z]]:
                    return False
                if lab[A.join[x, z]] != lab[A.join[y, z]]:
                    return False
    return True


def brute_congruences(A, flavor):
    """Every congruence, by filtering all set partitions (Bell(n) of them)."""
    out = set()
    for blocks in set_partitions(range(A.n)):
        lab = partition_labels(A.n, blocks)
        if is_compatible(A, lab, int(flavor)):
            out.add(canonical(lab))
    return out


def lub(leq, a, b):
    n = len(leq)
    ups = [z for z in range(n) if leq[a][z] and leq[b][z]]
    least = [z for z in ups if all(leq[z][w] for w in ups)]
    return least[0] if least else None


def glb(leq, a, b):
    n = len(leq)
    downs = [z for z in range(n) if leq[z][a] and leq[z][b]]
    great = [z for z in downs if all(leq[w][z] for w in downs)]
    return great[0] if great else None


def eval_term(A, t, env):
    if isinstance(t, T.Var):
        return env[t.name]
    if isinstance(t, T.Const):
        return A.top if t.value else A.bottom
    if isinstance(t, T.Meet):
        return int(A.meet[eval_term(A, t.left, env), eval_term(A, t.right, env)])
    if isinstance(t, T.Join):
        return int(A.join[eval_term(A, t.left, env), eval_term(A, t.right, env)])
    if isinstance(t, T.Kleene):
        return int(A.kleene[eval_term(A, t.arg, env)])
    if isinstance(t, T.Brouwer):
        return int(A.brouwer[eval_term(A, t.arg, env)])
    raise TypeError(t)


def brute_satisfies(A, ident):
    names = ident.variables
    for vals in itertools.product(range(A.n), repeat=len(names)):
        env = dict(zip(names, vals))
        if eval_term(A, ident.lhs, env) != eval_term(A, ident.rhs, env):
            return False
    return True


def brute_isomorphic(A, B, flavor):
    """Try every bijection (only for tiny algebras)."""
    if A.n != B.n:
        return False
    for perm in itertools.permutations(range(B.n)):
        ok = all(A.leq[x, y] == B.leq[perm[x], perm[y]]
                 for x in range(A.n) for y in range(A.n))
        if ok and flavor >= 1:
            ok = all(perm[A.kleene[x]] == B.kleene[perm[x]] for x in range(A.n))
        if ok and flavor >= 2:
            ok = all(perm[A.brouwer[x]] == B.brouwer[perm[x]] for x in range(A.n))
        if ok:
            return True
    return False


def longest_chain(leq, subset):
    subset = sorted(subset)
    best = {}
    for x in sorted(subset, key=lambda x: sum(leq[y][x] for y in range(len(leq)))):
        below = [best[y] for y in best if y != x and leq[y][x]]
        best[x] = 1 + max(below, default=0)
    return max(best.values())


def idx(A, *labels):
    return [A.index(s) for s in labels]


def shuffled(A, seed=0):
    """A copy of ``A`` with its carrier renumbered by a random permutation."""
    import numpy as np
    from pbzlab import FiniteBoundedLattice, attach_brouwer, attach_involution
    from pbzlab.algebra import FiniteAlgebra
    perm = np.random.default_rng(seed).permutation(A.n)   # old -> new
    inv = np.argsort(perm)                                # new -> old
    L = FiniteBoundedLattice.from_order(A.leq[np.ix_(inv, inv)], int(perm[A.bottom]),
                                        int(perm[A.top]), [A.label(int(x)) for x in inv])
    B = FiniteAlgebra(L)
    if A.kleene is not None:
        B = attach_involution(L, perm[A.kleene[inv]])
    if A.brouwer is not None:
        B = attach_brouwer(B, perm[A.brouwer[inv]])
    return B
