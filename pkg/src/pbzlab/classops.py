"""Embeddings, subalgebras and the structural characterizations built on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .algebra import FiniteAlgebra, Flavor, classify, isomorphism, reduct, subalgebra
from .errors import NotAntiortholattice, ParamOutOfRange, SizeGuardExceeded
from .guards import guard


def _as_array(mapping, n: int) -> np.ndarray:
    if isinstance(mapping, Mapping):
        if sorted(mapping) != list(range(n)):
            raise ValueError("mapping must be defined on the whole carrier")
        return np.array([mapping[x] for x in range(n)], dtype=np.int64)
    arr = np.asarray(mapping, dtype=np.int64)
    if arr.shape != (n,):
        raise ValueError("mapping must be defined on the whole carrier")
    return arr


def is_embedding(A: FiniteAlgebra, B: FiniteAlgebra, mapping, flavor=None) -> bool:
    """Is ``mapping`` an injective homomorphism of the ``flavor`` reducts?"""
    flavor = Flavor.coerce(min(A.flavor, B.flavor) if flavor is None else flavor)
    h = _as_array(mapping, A.n)
    if len(set(h.tolist())) != A.n or h[A.bottom] != B.bottom or h[A.top] != B.top:
        return False
    if not (np.array_equal(h[A.meet], B.meet[np.ix_(h, h)])
            and np.array_equal(h[A.join], B.join[np.ix_(h, h)])):
        return False
    return all(np.array_equal(h[ua], ub[h])
               for ua, ub in zip(A.unary_tables(flavor), B.unary_tables(flavor)))


def embeds(A: FiniteAlgebra, B: FiniteAlgebra, flavor=None) -> dict[int, int] | None:
    """First embedding ``A -> B`` found, or ``None``.

    Elements of ``A`` are assigned in ascending index order, candidates in
    ascending index order of ``B``; each assignment propagates the images it
    forces through the operations.
    """
    flavor = Flavor.coerce(min(A.flavor, B.flavor) if flavor is None else flavor)
    if A.n > B.n:
        return None
    ua, ub = A.unary_tables(flavor), B.unary_tables(flavor)
    binops = [(A.meet, B.meet), (A.join, B.join)]

    def propagate(h: dict[int, int], x: int, y: int) -> dict[int, int] | None:
        h = dict(h)
        used = set(h.values())
        queue = [(x, y)]
        while queue:
            x, y = queue.pop()
            if x in h:
                if h[x] != y:
                    return None
                continue
            if y in used:
                return None
            for x2, y2 in h.items():
                if A.leq[x, x2] != B.leq[y, y2] or A.leq[x2, x] != B.leq[y2, y]:
                    return None
            h[x] = y
            used.add(y)
            for x2, y2 in list(h.items()):
                for opa, opb in binops:
                    queue.append((int(opa[x, x2]), int(opb[y, y2])))
            for ta, tb in zip(ua, ub):
                queue.append((int(ta[x]), int(tb[y])))
        return h

    start = propagate({}, A.bottom, B.bottom)
    start = start and propagate(start, A.top, B.top)
    if start is None:
        return None

    def search(h: dict[int, int]) -> dict[int, int] | None:
        free = [x for x in range(A.n) if x not in h]
        if not free:
            return h
        x = free[0]
        used = set(h.values())
        for y in range(B.n):
            if y in used:
                continue
            h2 = propagate(h, x, y)
            if h2 is not None:
                done = search(h2)
                if done is not None:
                    return done
        return None

    found = search(start)
    if found is None:
        return None
    found = dict(sorted(found.items()))
    if not is_embedding(A, B, found, flavor):
        raise AssertionError("embedding search returned a non-embedding")
    return found


def compose(f: Mapping[int, int], g: Mapping[int, int]) -> dict[int, int]:
    """``g o f``."""
    return {x: g[y] for x, y in f.items()}


# -- explicit embeddings ------------------------------------------------------

def distsets_embedding(n: int, m: int) -> dict[int, int]:
    """The embedding ``GDM(n) -> GD(m)`` induced by ``h : D2^n -> D2^m``.

    ``h`` sends the ``i``-th atom to the ``i``-th atom, lower ``x`` goes to
    lower ``h(x)`` and the upper copy ``x'`` goes to ``h(x)'``.
    """
    from .catalog import boolean, chain, gd, gdm
    from .constructions import sum_layout
    if not 1 <= n < m <= 5:
        raise ParamOutOfRange(f"need 1 <= n < m <= 5, got ({n}, {m})")
    src = sum_layout(boolean(n).lattice, reduct(chain(2), Flavor.BI))
    dst = sum_layout(boolean(m).lattice, reduct(chain(1), Flavor.BI))
    f: dict[int, int] = {}
    for x in range(1 << n):
        # bit masks: the first n coordinates of D2^m carry D2^n
        f[int(src.lower[x])] = int(dst.lower[x])
        f[int(src.upper[x])] = int(dst.upper[x])
    f = dict(sorted(f.items()))
    if not is_embedding(gdm(n), gd(m), f, Flavor.BZ):
        raise AssertionError(f"distsets map GDM({n}) -> GD({m}) is not a BZ embedding")
    return f


# -- sandwiches ---------------------------------------------------------------

def sandwich_decompose(A: FiniteAlgebra) -> FiniteAlgebra | None:
    """``K`` with ``A = D2 (+) K (+) D2``, or ``None`` if there is none."""
    L = A.lattice
    if A.kleene is None or A.n < 3:
        return None
    atoms, coatoms = L.upper_covers(L.bottom), L.lower_covers(L.top)
    if len(atoms) != 1 or len(coatoms) != 1:
        return None
    a, c = atoms[0], coatoms[0]
    if not L.leq[a, c] or A.kleene[a] != c:
        return None
    inner = L.interval(a, c)
    if len(inner) != A.n - 2:
        return None
    K = subalgebra(reduct(A, Flavor.BI), inner, Flavor.BI)
    if not classify(K).pseudo_kleene:
        return None
    from .constructions import sandwich
    if A.brouwer is None:
        target = reduct(sandwich(K), Flavor.BI)
    else:
        target = sandwich(K)
    if isomorphism(A, target, A.flavor) is None:
        return None
    return K


@dataclass(frozen=True)
class RReport:
    r_holds: bool
    rv_holds: bool
    small: bool
    interior: FiniteAlgebra | None
    interior_ortholattice: bool
    structural: bool

    @property
    def consistent(self) -> bool:
        return self.r_holds == self.rv_holds == self.structural


def r_characterization(A: FiniteAlgebra) -> RReport:
    """Compare ``A |= R``, ``A |= RV`` and the sandwich-of-an-ortholattice shape."""
    from .terms import named_identity, satisfies
    if A.brouwer is None or not classify(A).antiortholattice:
        raise NotAntiortholattice("r_characterization needs an antiortholattice")
    r = satisfies(A, named_identity("R")).holds
    rv = satisfies(A, named_identity("RV")).holds
    small = A.n <= 2
    K = None if small else sandwich_decompose(A)
    k_ol = K is not None and bool(classify(K).ortholattice)
    return RReport(r, rv, small, K, k_ol, small or k_ol)


# -- D3 / ortholattice dichotomy --------------------------------------------------

@dataclass(frozen=True)
class Dichotomy:
    kind: str                        # "ortholattice", "D3" or "D4"
    embedding: dict[int, int] | None  # chain element -> element of A

    @property
    def is_ortholattice(self) -> bool:
        return self.kind == "ortholattice"


def d3_ol_dichotomy(A: FiniteAlgebra) -> Dichotomy:
    """Either ``A`` is an ortholattice, or a BI embedding of ``D3`` or ``D4``.

    For the first non-sharp ``u``, ``x = u ^ u'`` is nonzero with ``x <= x'``;
    ``{0, x, 1}`` is a copy of ``D3`` when ``x = x'``, otherwise
    ``{0, x, x', 1}`` is a copy of ``D4``.
    """
    from .catalog import chain
    B = reduct(A, Flavor.BI)
    k = B.kleene
    nonsharp = [u for u in range(B.n) if B.join[u, k[u]] != B.top]
    if not nonsharp:
        return Dichotomy("ortholattice", None)
    u = nonsharp[0]
    x = int(B.meet[u, k[u]])
    if x == k[x]:
        kind, f = "D3", {0: B.bottom, 1: x, 2: B.top}
    else:
        kind, f = "D4", {0: B.bottom, 1: x, 2: int(k[x]), 3: B.top}
    if not is_embedding(reduct(chain(len(f)), Flavor.BI), B, f, Flavor.BI):
        raise AssertionError(f"{kind} witness is not an embedding")
    return Dichotomy(kind, f)


# -- subalgebras ----------------------------------------------------------------

def _close(A: FiniteAlgebra, mask: np.ndarray, flavor: Flavor) -> np.ndarray:
    unary = A.unary_tables(flavor)
    while True:
        idx = np.flatnonzero(mask)
        new = mask.copy()
        sub = np.ix_(idx, idx)
        new[A.meet[sub].ravel()] = True
        new[A.join[sub].ravel()] = True
        for t in unary:
            new[t[idx]] = True
        if (new == mask).all():
            return mask
        mask = new


def subuniverses(A: FiniteAlgebra, flavor=None, guard_limit: int | None = None
                 ) -> list[frozenset[int]]:
    """Every subset containing 0 and 1 closed under the ``flavor`` operations."""
    flavor = A.flavor if flavor is None else Flavor.coerce(flavor)
    g = guard("sub", guard_limit)
    if A.n > g:
        raise SizeGuardExceeded(f"subalgebra enumeration limited to {g} elements, got {A.n}")
    seed = np.zeros(A.n, dtype=bool)
    seed[[A.bottom, A.top]] = True
    first = _close(A, seed, flavor)
    found = {first.tobytes(): first}
    queue = [first]
    while queue:
        mask = queue.pop()
        for x in np.flatnonzero(~mask):
            grown = mask.copy()
            grown[x] = True
            grown = _close(A, grown, flavor)
            key = grown.tobytes()
            if key not in found:
                found[key] = grown
                queue.append(grown)
    out = [frozenset(int(x) for x in np.flatnonzero(m)) for m in found.values()]
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def all_subalgebras(A: FiniteAlgebra, flavor=None, up_to_iso: bool = False,
                    guard_limit: int | None = None) -> list[FiniteAlgebra]:
    flavor = A.flavor if flavor is None else Flavor.coerce(flavor)
    subs = [subalgebra(A, U, flavor) for U in subuniverses(A, flavor, guard_limit)]
    if not up_to_iso:
        return subs
    reps: list[FiniteAlgebra] = []
    for S in subs:
        if not any(R.n == S.n and isomorphism(R, S, flavor) is not None for R in reps):
            reps.append(S)
    return reps
