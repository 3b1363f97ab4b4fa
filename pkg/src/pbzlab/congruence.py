"""Congruences of finite algebras at a chosen flavor.

Principal congruences come from a union-find closure under the basic
translations ``x ^ c``, ``x v c``, ``x'`` and ``x~``; the full congruence
set is the join-closure of the principal ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .algebra import FiniteAlgebra, Flavor, classify
from .errors import NotACongruence, SizeGuardExceeded
from .guards import guard
from .lattice import FiniteBoundedLattice


def _canonical(labels: Sequence[int]) -> tuple[int, ...]:
    seen: dict[int, int] = {}
    return tuple(seen.setdefault(int(v), len(seen)) for v in labels)


@dataclass(frozen=True)
class Congruence:
    """A partition stored as block ids numbered by first appearance."""

    labels: tuple[int, ...]
    flavor: Flavor

    @classmethod
    def from_labels(cls, labels: Sequence[int], flavor) -> "Congruence":
        return cls(_canonical(labels), Flavor.coerce(flavor))

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]], flavor) -> "Congruence":
        lab = list(range(n))
        for block in blocks:
            block = [int(x) for x in block]
            for x in block:
                lab[x] = block[0]
        return cls.from_labels(lab, flavor)

    @classmethod
    def delta(cls, n: int, flavor) -> "Congruence":
        return cls(tuple(range(n)), Flavor.coerce(flavor))

    @classmethod
    def nabla(cls, n: int, flavor) -> "Congruence":
        return cls((0,) * n, Flavor.coerce(flavor))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def num_blocks(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.num_blocks)]
        for x, b in enumerate(self.labels):
            out[b].append(x)
        return out

    def block_of(self, x: int) -> list[int]:
        return [y for y, b in enumerate(self.labels) if b == self.labels[x]]

    def related(self, x: int, y: int) -> bool:
        return self.labels[x] == self.labels[y]

    def is_delta(self) -> bool:
        return self.num_blocks == self.n

    def is_nabla(self) -> bool:
        return self.num_blocks <= 1

    def refines(self, other: "Congruence") -> bool:
        """``self <= other`` in the refinement order."""
        rep: dict[int, int] = {}
        for a, b in zip(self.labels, other.labels):
            if rep.setdefault(a, b) != b:
                return False
        return True

    def meet(self, other: "Congruence") -> "Congruence":
        return Congruence.from_labels(_pair_ids(self.labels, other.labels), self.flavor)

    def join(self, other: "Congruence") -> "Congruence":
        parent = list(self.labels)
        _union_blocks(parent, self.labels, other.labels)
        return Congruence.from_labels(parent, self.flavor)

    def sort_key(self) -> tuple:
        return (-self.num_blocks, self.labels)

    def describe(self, labels: Sequence[str] | None = None) -> str:
        name = (lambda x: labels[x]) if labels is not None else str
        return " | ".join("{" + ",".join(name(x) for x in b) + "}" for b in self.blocks())


def _pair_ids(a: Sequence[int], b: Sequence[int]) -> list[int]:
    ids: dict[tuple[int, int], int] = {}
    return [ids.setdefault((x, y), len(ids)) for x, y in zip(a, b)]


def _union_blocks(parent: list[int], la: Sequence[int], lb: Sequence[int]) -> None:
    """Write into ``parent`` the finest partition coarser than ``la`` and ``lb``."""
    n = len(la)
    uf = list(range(n))

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    first_a: dict[int, int] = {}
    first_b: dict[int, int] = {}
    for x in range(n):
        for first, lab in ((first_a, la), (first_b, lb)):
            r = first.setdefault(lab[x], x)
            ra, rb = find(r), find(x)
            if ra != rb:
                uf[max(ra, rb)] = min(ra, rb)
    for x in range(n):
        parent[x] = find(x)


# -- compatibility ------------------------------------------------------------

def _translations(A: FiniteAlgebra, flavor: Flavor) -> list[np.ndarray]:
    """Unary operations (as n-by-k tables) a congruence must respect."""
    ops = [A.meet, A.join]
    if flavor >= Flavor.BI:
        ops.append(A.kleene[:, None])
    if flavor >= Flavor.BZ:
        ops.append(A.brouwer[:, None])
    return ops


def congruence_failure(A: FiniteAlgebra, labels: Sequence[int], flavor=None):
    """First pair ``(x, y)`` of related elements whose images separate, else None."""
    flavor = A.flavor if flavor is None else Flavor.coerce(flavor)
    lab = np.asarray(labels, dtype=np.int64)
    if lab.shape != (A.n,):
        raise ValueError("partition must label every element")
    # comparing each element with its block representative suffices
    _, rep_idx, inv = np.unique(lab, return_index=True, return_inverse=True)
    rep = rep_idx[inv]
    for op in _translations(A, flavor):
        bad = (lab[op] != lab[op[rep]]).any(axis=1)
        if bad.any():
            x = int(np.flatnonzero(bad)[0])
            return (A.label(int(rep[x])), A.label(x))
    return None


def is_congruence(A: FiniteAlgebra, labels: Sequence[int], flavor=None) -> bool:
    return congruence_failure(A, labels, flavor) is None


def _check_flavor(A: FiniteAlgebra, flavor) -> Flavor:
    flavor = A.flavor if flavor is None else Flavor.coerce(flavor)
    if flavor > A.flavor:
        raise ValueError(f"a {A.flavor} algebra has no {flavor} congruences")
    return flavor


# -- generation ---------------------------------------------------------------

def _closure(A: FiniteAlgebra, flavor: Flavor, pairs: Iterable[tuple[int, int]]) -> list[int]:
    n = A.n
    uf = list(range(n))

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    ops = _translations(A, flavor)
    queue = list(pairs)
    while queue:
        u, v = queue.pop()
        ru, rv = find(u), find(v)
        if ru == rv:
            continue
        uf[max(ru, rv)] = min(ru, rv)
        for op in ops:
            for s, t in zip(op[u].tolist(), op[v].tolist()):
                if s != t:
                    queue.append((s, t))
    return [find(x) for x in range(n)]


def principal_congruence(A: FiniteAlgebra, a: int, b: int, flavor=None) -> Congruence:
    """The least ``flavor`` congruence identifying ``a`` and ``b``."""
    flavor = _check_flavor(A, flavor)
    return Congruence.from_labels(_closure(A, flavor, [(int(a), int(b))]), flavor)


def generated_congruence(A: FiniteAlgebra, pairs: Iterable[tuple[int, int]],
                         flavor=None) -> Congruence:
    flavor = _check_flavor(A, flavor)
    return Congruence.from_labels(_closure(A, flavor, [(int(a), int(b)) for a, b in pairs]),
                                  flavor)


def _size_guard(A: FiniteAlgebra, limit) -> None:
    g = guard("con", limit)
    if A.n > g:
        raise SizeGuardExceeded(f"congruence enumeration limited to {g} elements, got {A.n}")


def all_congruences(A: FiniteAlgebra, flavor=None, guard_limit: int | None = None
                    ) -> list[Congruence]:
    """Every ``flavor`` congruence, sorted from Delta (finest) to Nabla."""
    flavor = _check_flavor(A, flavor)
    _size_guard(A, guard_limit)
    principals: dict[tuple, Congruence] = {}
    for a in range(A.n):
        for b in range(a + 1, A.n):
            c = principal_congruence(A, a, b, flavor)
            principals.setdefault(c.labels, c)
    found = {Congruence.delta(A.n, flavor).labels: Congruence.delta(A.n, flavor)}
    for p in principals.values():
        for c in list(found.values()):
            j = c.join(p)
            found.setdefault(j.labels, j)
    return sorted(found.values(), key=Congruence.sort_key)


def con_01(A: FiniteAlgebra, flavor=None, guard_limit: int | None = None) -> list[Congruence]:
    """Congruences whose classes of 0 and 1 are singletons."""
    flavor = _check_flavor(A, flavor)
    cons = [c for c in all_congruences(A, flavor, guard_limit)
            if len(c.block_of(A.bottom)) == 1 and len(c.block_of(A.top)) == 1]
    if flavor == Flavor.BZ and A.n > 1 and classify(A).antiortholattice:
        full = {c.labels for c in all_congruences(A, Flavor.BZ, guard_limit)}
        bi01 = {c.labels for c in con_01(A, Flavor.BI, guard_limit)}
        if full != bi01 | {Congruence.nabla(A.n, flavor).labels}:
            raise AssertionError("an antiortholattice must have Con_BZ = Con_01(BI) + {Nabla}")
    return cons


def con_0(A: FiniteAlgebra, flavor=None, guard_limit: int | None = None) -> list[Congruence]:
    """Congruences whose class of 0 is a singleton."""
    flavor = _check_flavor(A, flavor)
    return [c for c in all_congruences(A, flavor, guard_limit)
            if len(c.block_of(A.bottom)) == 1]


def quotient(A: FiniteAlgebra, theta: Congruence) -> FiniteAlgebra:
    """``A / theta``; blocks are numbered as in ``theta`` and named by their
    least element."""
    bad = congruence_failure(A, theta.labels, A.flavor)
    if bad is not None:
        raise NotACongruence(bad)
    blocks = theta.blocks()
    reps = np.array([b[0] for b in blocks])
    lab = np.asarray(theta.labels)
    k = len(blocks)
    leq = lab[A.join[np.ix_(reps, reps)]] == np.arange(k)[None, :]
    L = FiniteBoundedLattice.from_order(leq, int(lab[A.bottom]), int(lab[A.top]),
                                        [A.label(int(r)) for r in reps])
    kl = None if A.kleene is None else lab[A.kleene[reps]]
    br = None if A.brouwer is None else lab[A.brouwer[reps]]
    from .algebra import attach_brouwer, attach_involution
    if kl is None:
        Q = FiniteAlgebra(L)
    else:
        Q = attach_involution(L, kl)
        if br is not None:
            Q = attach_brouwer(Q, br)
    if A.brouwer is not None and Q.n > 1 and classify(A).pbz and not classify(Q).pbz:
        raise AssertionError("homomorphic images of PBZ*-lattices must be PBZ*-lattices")
    return Q


# -- irreducibility -----------------------------------------------------------

@dataclass(frozen=True)
class Irreducibility:
    simple: bool
    subdirectly_irreducible: bool
    monolith: Congruence | None
    directly_irreducible: bool


def _permuting_complements(t: Congruence, p: Congruence) -> bool:
    if not t.meet(p).is_delta() or not t.join(p).is_nabla():
        return False
    # t o p = Nabla iff every t-block meets every p-block
    hit = {(a, b) for a, b in zip(t.labels, p.labels)}
    return len(hit) == t.num_blocks * p.num_blocks


def factor_pairs(cons: Sequence[Congruence]) -> list[tuple[Congruence, Congruence]]:
    proper = [c for c in cons if not c.is_delta() and not c.is_nabla()]
    return [(t, p) for i, t in enumerate(proper) for p in proper[i + 1:]
            if _permuting_complements(t, p)]


def irreducibility(A: FiniteAlgebra, flavor=None, guard_limit: int | None = None
                   ) -> Irreducibility:
    flavor = _check_flavor(A, flavor)
    cons = all_congruences(A, flavor, guard_limit)
    if A.n == 1:
        return Irreducibility(False, False, None, False)
    nontrivial = [c for c in cons if not c.is_delta()]
    minimal = [c for c in nontrivial
               if not any(d is not c and d.refines(c) and d != c for d in nontrivial)]
    si = len(minimal) == 1
    return Irreducibility(
        simple=len(cons) == 2,
        subdirectly_irreducible=si,
        monolith=minimal[0] if si else None,
        directly_irreducible=not factor_pairs(cons),
    )


def congruence_lattice(A: FiniteAlgebra, flavor=None, guard_limit: int | None = None
                       ) -> FiniteBoundedLattice:
    """Con(A) ordered by refinement; element ``i`` is ``all_congruences(A)[i]``."""
    return lattice_of(all_congruences(A, flavor, guard_limit), A.labels)


def lattice_of(cons: Sequence[Congruence], labels: Sequence[str] | None = None
               ) -> FiniteBoundedLattice:
    """A family of congruences ordered by refinement (it must form a lattice)."""
    k = len(cons)
    leq = np.array([[cons[i].refines(cons[j]) for j in range(k)] for i in range(k)],
                   dtype=bool).reshape(k, k)
    return FiniteBoundedLattice.from_order(leq, labels=[c.describe(labels) for c in cons])
