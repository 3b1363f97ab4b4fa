"""Finite bounded lattices stored as dense order/meet/join tables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptySubset, NotALattice, NotAPoset, NotBounded


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure of a boolean relation (Warshall)."""
    r = np.array(rel, dtype=bool)
    np.fill_diagonal(r, True)
    for k in range(r.shape[0]):
        r |= np.outer(r[:, k], r[k, :])
    return r


def unique_labels(labels: Sequence[str]) -> tuple[str, ...]:
    seen: dict[str, int] = {}
    out = []
    for lab in labels:
        lab = str(lab)
        if lab in seen:
            seen[lab] += 1
            lab = f"{lab}.{seen[lab]}"
            while lab in seen:
                lab += "_"
        seen.setdefault(lab, 1)
        out.append(lab)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class FiniteBoundedLattice:
    """A bounded lattice on the carrier ``0..n-1``.

    ``leq[a, b]`` is true iff ``a <= b``. ``meet`` and ``join`` are full
    ``n x n`` tables. ``bottom`` and ``top`` are element indices; they are not
    required to be ``0`` and ``n-1``.
    """

    n: int
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    bottom: int
    top: int
    labels: tuple[str, ...]

    # -- construction -----------------------------------------------------

    @classmethod
    def from_order(cls, leq, bottom: int | None = None, top: int | None = None,
                   labels: Sequence[str] | None = None) -> "FiniteBoundedLattice":
        """Validate a reflexive order relation and fill in meet/join tables."""
        leq = np.array(leq, dtype=bool)
        n = leq.shape[0]
        if n < 1 or leq.shape != (n, n):
            raise ValueError("order relation must be a non-empty square matrix")
        if not leq.diagonal().all():
            raise ValueError("order relation must be reflexive")
        anti = leq & leq.T & ~np.eye(n, dtype=bool)
        if anti.any():
            a, b = map(int, np.argwhere(anti)[0])
            raise NotAPoset(a, b)
        closed = leq.astype(np.int64) @ leq.astype(np.int64) > 0
        if (closed & ~leq).any():
            a, b = map(int, np.argwhere(closed & ~leq)[0])
            raise ValueError(f"order relation is not transitive at ({a}, {b})")

        mins = np.flatnonzero(leq.all(axis=1))
        maxs = np.flatnonzero(leq.all(axis=0))
        if bottom is None:
            if len(mins) != 1:
                raise NotBounded(0, 0)
            bottom = int(mins[0])
        if top is None:
            if len(maxs) != 1:
                raise NotBounded(n - 1, n - 1)
            top = int(maxs[0])
        for x in range(n):
            if not leq[bottom, x]:
                raise NotBounded(bottom, x)
            if not leq[x, top]:
                raise NotBounded(x, top)

        meet = _bound_table(leq, lower=True)
        join = _bound_table(leq, lower=False)
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise ValueError("labels must have one entry per element")
        return cls(n, _frozen(leq), _frozen(meet), _frozen(join),
                   int(bottom), int(top), unique_labels(labels))

    @classmethod
    def from_covers(cls, n: int, bottom: int, top: int,
                    covers: Iterable[tuple[int, int]],
                    labels: Sequence[str] | None = None) -> "FiniteBoundedLattice":
        rel = np.zeros((n, n), dtype=bool)
        for a, b in covers:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"cover pair ({a}, {b}) out of range")
            if a == b:
                raise NotAPoset(a, b)
            rel[a, b] = True
        return cls.from_order(transitive_closure(rel), bottom, top, labels)

    # -- basic queries ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, FiniteBoundedLattice):
            return NotImplemented
        return (self.n == other.n and self.bottom == other.bottom
                and self.top == other.top and np.array_equal(self.leq, other.leq))

    __hash__ = None

    def __repr__(self):
        return f"FiniteBoundedLattice(n={self.n}, bottom={self.bottom}, top={self.top})"

    def __len__(self):
        return self.n

    def label(self, x: int) -> str:
        return self.labels[x]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    @property
    def lt(self) -> np.ndarray:
        return self.leq & ~np.eye(self.n, dtype=bool)

    def covers(self) -> set[tuple[int, int]]:
        """The cover relation as a set of pairs ``(a, b)`` with ``a < b``."""
        lt = self.lt.astype(np.int64)
        cov = (lt > 0) & ~(lt @ lt > 0)
        return {(int(a), int(b)) for a, b in np.argwhere(cov)}

    def upper_covers(self, x: int) -> list[int]:
        return sorted(b for a, b in self.covers() if a == x)

    def lower_covers(self, x: int) -> list[int]:
        return sorted(a for a, b in self.covers() if b == x)

    def atoms(self) -> list[int]:
        return self.upper_covers(self.bottom) if self.n > 1 else []

    def interval(self, a: int, b: int) -> list[int]:
        return [x for x in range(self.n) if self.leq[a, x] and self.leq[x, b]]

    def linear_extension(self) -> list[int]:
        down = self.leq.sum(axis=0)
        return sorted(range(self.n), key=lambda x: (int(down[x]), x))

    def ranks(self) -> np.ndarray:
        """Longest-chain height of every element above the bottom."""
        lt = self.lt
        rank = np.zeros(self.n, dtype=np.int64)
        for x in self.linear_extension():
            below = np.flatnonzero(lt[:, x])
            if len(below):
                rank[x] = rank[below].max() + 1
        return rank

    def dual(self) -> "FiniteBoundedLattice":
        return FiniteBoundedLattice(self.n, _frozen(self.leq.T.copy()), self.join, self.meet,
                                    self.top, self.bottom, self.labels)

    def relabel(self, labels: Sequence[str]) -> "FiniteBoundedLattice":
        if len(labels) != self.n:
            raise ValueError("labels must have one entry per element")
        return FiniteBoundedLattice(self.n, self.leq, self.meet, self.join,
                                    self.bottom, self.top, unique_labels(labels))


def _bound_table(leq: np.ndarray, lower: bool) -> np.ndarray:
    # rel[c, a]: c is below a (for meets) or above a (for joins)
    rel = leq if lower else leq.T
    common = rel.T[:, None, :] & rel.T[None, :, :]          # [a, b, c]
    count = common.sum(axis=2)
    size = rel.sum(axis=0)                                   # |down(c)| or |up(c)|
    best = common & (size[None, None, :] == count[:, :, None])
    ok = best.any(axis=2)
    if not ok.all():
        a, b = map(int, np.argwhere(~ok)[0])
        raise NotALattice(a, b, "meet" if lower else "join")
    return best.argmax(axis=2).astype(np.int64)


# -- operations -------------------------------------------------------------

def lattice_laws(L: FiniteBoundedLattice) -> dict[str, bool]:
    """Check distributivity and modularity over all triples."""
    m, j = L.meet, L.join
    x = np.arange(L.n)[:, None, None]
    y = np.arange(L.n)[None, :, None]
    z = np.arange(L.n)[None, None, :]
    xz = j[x, z]
    modular = np.array_equal(j[x, m[y, xz]], m[j[x, y], xz])
    distributive = np.array_equal(j[x, m[y, z]], m[j[x, y], xz])
    return {"distributive": bool(distributive), "modular": bool(modular)}


def length_of(L: FiniteBoundedLattice, subset: Iterable[int]) -> int:
    """Cardinality of the longest chain inside ``subset``."""
    sub = sorted(set(int(s) for s in subset))
    if not sub:
        raise EmptySubset("length_of needs a non-empty subset")
    down = L.leq.sum(axis=0)
    sub.sort(key=lambda x: (int(down[x]), x))
    best: dict[int, int] = {}
    for x in sub:
        best[x] = 1 + max((best[y] for y in best if L.leq[y, x] and y != x), default=0)
    return max(best.values())


def is_splitting_pair(L: FiniteBoundedLattice, x: int, y: int) -> bool:
    if L.leq[y, x]:
        return False
    return bool((L.leq[:, x] | L.leq[y, :]).all())


def complemented_elements(L: FiniteBoundedLattice) -> frozenset[int]:
    comp = (L.meet == L.bottom) & (L.join == L.top)
    return frozenset(int(a) for a in np.flatnonzero(comp.any(axis=1)))


def zero_meet_irreducible(L: FiniteBoundedLattice) -> bool:
    """True iff ``a ^ b = 0`` forces ``a = 0`` or ``b = 0``."""
    nz = np.arange(L.n) != L.bottom
    return not (L.meet[np.ix_(nz, nz)] == L.bottom).any()


def sandwich_shape(L: FiniteBoundedLattice) -> bool:
    """0 has a unique upper cover, 1 a unique lower cover, and ``|L| >= 3``."""
    if L.n < 3:
        return False
    return len(L.upper_covers(L.bottom)) == 1 and len(L.lower_covers(L.top)) == 1


# -- isomorphism search -------------------------------------------------------

def _invariants(L: FiniteBoundedLattice, unary: Sequence[np.ndarray]) -> list[tuple]:
    rank = L.ranks()
    down = L.leq.sum(axis=0)
    up = L.leq.sum(axis=1)
    cov = L.covers()
    ucov = np.zeros(L.n, dtype=int)
    lcov = np.zeros(L.n, dtype=int)
    for a, b in cov:
        ucov[a] += 1
        lcov[b] += 1
    inv = []
    for x in range(L.n):
        extra = tuple((bool(L.leq[x, u[x]]), bool(L.leq[u[x], x])) for u in unary)
        inv.append((int(rank[x]), int(down[x]), int(up[x]), int(ucov[x]), int(lcov[x])) + extra)
    return inv


def find_isomorphism(L: FiniteBoundedLattice, M: FiniteBoundedLattice,
                     unary_l: Sequence[np.ndarray] = (),
                     unary_m: Sequence[np.ndarray] = ()) -> dict[int, int] | None:
    """Backtracking search for an order isomorphism that also commutes with
    the paired unary tables. Elements of ``L`` are visited by ascending
    (rank, degree); candidates in ``M`` by ascending index."""
    if L.n != M.n or len(unary_l) != len(unary_m):
        return None
    inv_l = _invariants(L, unary_l)
    inv_m = _invariants(M, unary_m)
    if sorted(inv_l) != sorted(inv_m):
        return None
    order = sorted(range(L.n), key=lambda x: (inv_l[x][0], -(inv_l[x][3] + inv_l[x][4]), x))
    cand = {x: [y for y in range(M.n) if inv_m[y] == inv_l[x]] for x in range(L.n)}
    fwd: dict[int, int] = {}
    used: set[int] = set()

    def consistent(x: int, y: int) -> bool:
        for x2, y2 in fwd.items():
            if L.leq[x, x2] != M.leq[y, y2] or L.leq[x2, x] != M.leq[y2, y]:
                return False
        for ul, um in zip(unary_l, unary_m):
            if ul[x] in fwd and fwd[ul[x]] != um[y]:
                return False
            if ul[x] == x and um[y] != y:
                return False
            for x2, y2 in fwd.items():
                if ul[x2] == x and um[y2] != y:
                    return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        x = order[i]
        for y in cand[x]:
            if y in used or not consistent(x, y):
                continue
            fwd[x] = y
            used.add(y)
            if extend(i + 1):
                return True
            del fwd[x]
            used.discard(y)
        return False

    if not extend(0):
        return None
    return dict(sorted(fwd.items()))


def lattice_isomorphic(L: FiniteBoundedLattice, M: FiniteBoundedLattice) -> dict[int, int] | None:
    """A lattice isomorphism ``L -> M`` as a dict, or ``None``."""
    return find_isomorphism(L, M)
