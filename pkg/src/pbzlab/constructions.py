"""Ordinal sums, horizontal sums and direct products.

Numbering convention: a sum lists the lower (or first) operand's elements in
their own order, then the remaining elements of the next operand in its
order; products are numbered lexicographically, first factor most
significant.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .algebra import (FiniteAlgebra, Flavor, TRIVIAL, attach_brouwer, attach_involution,
                      classify, reduct)
from .congruence import Congruence, is_congruence
from .errors import (MixedFlavors, NotACongruence, NotDualIso, NotPseudoKleene,
                     SideConditionViolated, TrivialLowerPart)
from .lattice import FiniteBoundedLattice, unique_labels


def _lat(X) -> FiniteBoundedLattice:
    return X.lattice if isinstance(X, FiniteAlgebra) else X


def _ordinal_maps(L: FiniteBoundedLattice, M: FiniteBoundedLattice):
    """Index maps of ``L`` and ``M`` into ``L (+) M``."""
    lmap = np.arange(L.n)
    mmap = np.empty(M.n, dtype=np.int64)
    nxt = L.n
    for y in range(M.n):
        if y == M.bottom:
            mmap[y] = L.top
        else:
            mmap[y] = nxt
            nxt += 1
    return lmap, mmap, nxt


def ordinal_sum(L, M) -> FiniteBoundedLattice:
    """Stack ``M`` on top of ``L``, glueing ``1_L`` to ``0_M``."""
    L, M = _lat(L), _lat(M)
    lmap, mmap, n = _ordinal_maps(L, M)
    leq = np.zeros((n, n), dtype=bool)
    leq[np.ix_(lmap, lmap)] = L.leq
    leq[np.ix_(mmap, mmap)] |= M.leq
    leq[np.ix_(lmap, mmap)] = True
    labels = [""] * n
    for x in range(L.n):
        labels[lmap[x]] = L.label(x)
    for y in range(M.n):
        if y != M.bottom:
            labels[mmap[y]] = M.label(y)
    return FiniteBoundedLattice.from_order(leq, L.bottom, int(mmap[M.top]), labels)


def _check_dual_iso(M: FiniteBoundedLattice, f) -> np.ndarray:
    f = np.asarray(f, dtype=np.int64)
    if f.shape != (M.n,) or sorted(f.tolist()) != list(range(M.n)):
        raise NotDualIso("map is not a bijection of the carrier")
    # f: M -> M^d reverses order, i.e. preserves the carrier order of M
    diff = M.leq != M.leq[np.ix_(f, f)]
    if diff.any():
        a, b = np.argwhere(diff)[0]
        raise NotDualIso((M.label(int(a)), M.label(int(b))))
    return f


class SumLayout:
    """Where the three blocks of ``M (+) K (+) M^d`` sit in the carrier."""

    def __init__(self, M: FiniteBoundedLattice, K: FiniteAlgebra, f: np.ndarray):
        self.M, self.K, self.f = M, K, f
        MK = ordinal_sum(M, K.lattice)
        self.lower, self.middle, _ = _ordinal_maps(M, K.lattice)
        _, self.upper, _ = _ordinal_maps(MK, M.dual())
        self.lattice = ordinal_sum(MK, M.dual())


def sum_layout(M, K: FiniteAlgebra, f=None) -> SumLayout:
    M = _lat(M)
    if K.kleene is None:
        raise ValueError("the middle summand must be a BI-lattice")
    f = np.arange(M.n) if f is None else _check_dual_iso(M, f)
    return SumLayout(M, K, f)


def ordinal_sum_bi(M, K: FiniteAlgebra, f=None) -> FiniteAlgebra:
    """The BI-lattice ``M (+) K (+) M^d``.

    The involution sends the lower copy of ``x`` to the upper copy of
    ``f(x)``, acts as ``'`` on ``K``, and as ``f^-1`` on the upper copy.
    ``f`` defaults to the identity carrier map.
    """
    lay = sum_layout(M, K, f)
    M, L = lay.M, lay.lattice
    inv = np.empty(L.n, dtype=np.int64)
    finv = np.argsort(lay.f)
    for x in range(M.n):
        inv[lay.lower[x]] = lay.upper[lay.f[x]]
        inv[lay.upper[x]] = lay.lower[finv[x]]
    for k in range(K.n):
        inv[lay.middle[k]] = lay.middle[K.kleene[k]]
    A = attach_involution(L.relabel(_sum_labels(lay, K, inv)), inv)
    if classify(K).pseudo_kleene and not classify(A).pseudo_kleene:
        raise AssertionError("M (+) K (+) M^d must be pseudo-Kleene when K is")
    return A


def _sum_labels(lay: SumLayout, K: FiniteAlgebra, inv: np.ndarray) -> list[str]:
    # lower copy keeps M's names, K's bounds become 0k/1k, upper copy is primed
    M, L = lay.M, lay.lattice
    labels = [""] * L.n
    for k in range(K.n):
        labels[lay.middle[k]] = K.label(k)
    if K.n == 1:
        labels[lay.middle[K.bottom]] = "k"
    else:
        labels[lay.middle[K.bottom]] = "0k"
        labels[lay.middle[K.top]] = "1k"
    for x in range(M.n):
        if x != M.top:
            labels[lay.lower[x]] = M.label(x)
            labels[inv[lay.lower[x]]] = M.label(x) + "'"
    labels[L.bottom], labels[L.top] = "0", "1"
    return list(unique_labels(labels))


def aol(M, K: FiniteAlgebra, f=None) -> FiniteAlgebra:
    """``M (+) K (+) M^d`` with the trivial Brouwer complement."""
    M = _lat(M)
    if M.n < 2:
        raise TrivialLowerPart()
    if K.kleene is None or not classify(reduct(K, Flavor.BI)).pseudo_kleene:
        raise NotPseudoKleene("middle summand")
    A = attach_brouwer(ordinal_sum_bi(M, reduct(K, Flavor.BI), f), TRIVIAL)
    if not classify(A).antiortholattice:
        raise AssertionError("M (+) K (+) M^d with trivial ~ must be an antiortholattice")
    return A


def sandwich(K: FiniteAlgebra) -> FiniteAlgebra:
    """``D2 (+) K (+) D2`` as an antiortholattice."""
    from .catalog import chain
    return aol(chain(2).lattice, K)


def sum_congruence(M, K: FiniteAlgebra, alpha: Congruence, beta: Congruence,
                   f=None) -> Congruence:
    """The partition ``alpha (+) beta (+) alpha'`` on ``M (+) K (+) M^d``."""
    lay = sum_layout(M, K, f)
    L = lay.lattice
    parent = list(range(L.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(int(a)), find(int(b))
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for block in alpha.blocks():
        for x in block[1:]:
            union(lay.lower[block[0]], lay.lower[x])
            union(lay.upper[lay.f[block[0]]], lay.upper[lay.f[x]])
    for block in beta.blocks():
        for k in block[1:]:
            union(lay.middle[block[0]], lay.middle[k])
    theta = Congruence.from_labels([find(x) for x in range(L.n)], Flavor.BI)
    A = ordinal_sum_bi(lay.M, K, f)
    if not is_congruence(A, theta.labels, Flavor.BI):
        raise NotACongruence("alpha (+) beta (+) alpha'")
    return theta


# -- horizontal sums ------------------------------------------------------------

_HS_FLAVORS = ("Lattice", "BI", "PK", "BZ", "PBZ")


def horizontal_sum(A: FiniteAlgebra, B: FiniteAlgebra, flavor: str = "BI") -> FiniteAlgebra:
    """Glue the bounds of ``A`` and ``B``; interiors become incomparable.

    ``flavor`` is one of Lattice, BI, PK (pseudo-Kleene), BZ, PBZ; the
    corresponding side condition is checked before the sum is built.
    """
    key = {f.upper(): f for f in _HS_FLAVORS}.get(flavor.upper())
    if key is None:
        raise ValueError(f"unknown horizontal-sum flavor {flavor!r}")
    if A.n < 2 or B.n < 2:
        raise SideConditionViolated(key, "both operands must be nontrivial")
    sig = {"Lattice": Flavor.LATTICE, "BI": Flavor.BI, "PK": Flavor.BI,
           "BZ": Flavor.BZ, "PBZ": Flavor.BZ}[key]
    if A.flavor < sig or B.flavor < sig:
        raise SideConditionViolated(key, f"both operands need {sig} operations")
    ra, rb = classify(A), classify(B)
    if key in ("PK", "BZ"):
        if not (ra.pseudo_kleene and rb.pseudo_kleene):
            raise SideConditionViolated(key, "both operands must be pseudo-Kleene")
        if not (ra.ortholattice or rb.ortholattice):
            raise SideConditionViolated(key, "neither operand is an ortholattice")
    if key == "PBZ":
        if not (ra.pbz and rb.pbz):
            raise SideConditionViolated(key, "both operands must be PBZ*-lattices")
        if not (ra.orthomodular or rb.orthomodular):
            raise SideConditionViolated(key, "neither operand is orthomodular")

    bmap = np.empty(B.n, dtype=np.int64)
    nxt = A.n
    for y in range(B.n):
        if y == B.bottom:
            bmap[y] = A.bottom
        elif y == B.top:
            bmap[y] = A.top
        else:
            bmap[y] = nxt
            nxt += 1
    n = nxt
    amap = np.arange(A.n)
    leq = np.zeros((n, n), dtype=bool)
    leq[np.ix_(amap, amap)] = A.leq
    leq[np.ix_(bmap, bmap)] |= B.leq
    leq[A.bottom, :] = True
    leq[:, A.top] = True
    labels = list(A.labels) + [""] * (n - A.n)
    for y in range(B.n):
        if bmap[y] >= A.n:
            labels[bmap[y]] = B.label(y)
    L = FiniteBoundedLattice.from_order(leq, A.bottom, A.top, labels)
    if sig == Flavor.LATTICE:
        return _check_operands(FiniteAlgebra(L), A, B, amap, bmap, sig)

    def glue(ta, tb):
        t = np.empty(n, dtype=np.int64)
        t[amap] = ta
        t[bmap] = bmap[tb]
        return t

    S = attach_involution(L, glue(A.kleene, B.kleene))
    if sig == Flavor.BZ:
        S = attach_brouwer(S, glue(A.brouwer, B.brouwer))
    r = classify(S)
    if key == "PK" and not r.pseudo_kleene:
        raise AssertionError("horizontal sum at PK flavor lost pseudo-Kleene")
    if key == "BZ" and not r.bz:
        raise AssertionError("horizontal sum at BZ flavor is not a BZ-lattice")
    if key == "PBZ" and not r.pbz:
        raise AssertionError("horizontal sum at PBZ flavor is not a PBZ*-lattice")
    return _check_operands(S, A, B, amap, bmap, sig)


def _check_operands(S, A, B, amap, bmap, sig):
    from .classops import is_embedding
    for X, mp in ((A, amap), (B, bmap)):
        if not is_embedding(X, S, mp, sig):
            raise AssertionError("operands of a horizontal sum must be subalgebras")
    return S


# -- products -----------------------------------------------------------------

def direct_product(algebras: Sequence[FiniteAlgebra], flavor: Flavor | str | None = None
                   ) -> FiniteAlgebra:
    """Componentwise product of the ``flavor`` reducts of ``algebras``."""
    algebras = [a if isinstance(a, FiniteAlgebra) else FiniteAlgebra(a) for a in algebras]
    if not algebras:
        raise ValueError("direct_product needs at least one factor")
    if flavor is None:
        flavor = algebras[0].flavor
    flavor = Flavor.coerce(flavor)
    if any(a.flavor < flavor for a in algebras):
        raise MixedFlavors(flavor)
    sizes = [a.n for a in algebras]
    tuples = list(itertools.product(*[range(s) for s in sizes]))
    idx = np.array(tuples, dtype=np.int64).reshape(len(tuples), len(sizes))
    n = len(tuples)
    leq = np.ones((n, n), dtype=bool)
    for i, a in enumerate(algebras):
        leq &= a.leq[np.ix_(idx[:, i], idx[:, i])]
    strides = np.cumprod([1] + sizes[::-1][:-1])[::-1]

    def encode(cols):
        return (np.stack(cols, axis=1) * strides).sum(axis=1)

    bottom = int(encode([np.array([a.bottom]) for a in algebras])[0])
    top = int(encode([np.array([a.top]) for a in algebras])[0])
    labels = ["(" + ",".join(a.label(c) for a, c in zip(algebras, t)) + ")" for t in tuples]
    L = FiniteBoundedLattice.from_order(leq, bottom, top, labels)
    if flavor == Flavor.LATTICE:
        return FiniteAlgebra(L)
    P = attach_involution(L, encode([a.kleene[idx[:, i]] for i, a in enumerate(algebras)]))
    if flavor == Flavor.BZ:
        P = attach_brouwer(P, encode([a.brouwer[idx[:, i]] for i, a in enumerate(algebras)]))
    return P


def power(A: FiniteAlgebra, k: int, flavor: Flavor | str | None = None) -> FiniteAlgebra:
    return direct_product([A] * k, flavor)


def product_element(algebras: Sequence[FiniteAlgebra], coords: Sequence[int]) -> int:
    """Index of the tuple ``coords`` in :func:`direct_product` numbering."""
    idx = 0
    for a, c in zip(algebras, coords):
        idx = idx * a.n + int(c)
    return idx
