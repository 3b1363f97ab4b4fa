"""Kleene and Brouwer complements on finite bounded lattices, and the
classification of the resulting algebras."""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass, fields
from typing import Optional, Sequence, Union

import numpy as np

from . import lattice as lc
from .errors import BZAxiomFailure, NotAntitone, NotInvolutive, UnknownName
from .lattice import FiniteBoundedLattice, _frozen


class Flavor(enum.IntEnum):
    """Signature level: bounded lattice < BI-lattice < BZ-lattice."""

    LATTICE = 0
    BI = 1
    BZ = 2

    @classmethod
    def coerce(cls, value: Union["Flavor", str, int]) -> "Flavor":
        if isinstance(value, Flavor):
            return value
        if isinstance(value, str):
            key = value.strip().upper()
            if key in ("L", "LAT"):
                key = "LATTICE"
            if key not in cls.__members__:
                raise UnknownName(f"unknown flavor {value!r}; use Lattice, BI or BZ")
            return cls[key]
        return cls(value)

    def __str__(self):
        return {0: "Lattice", 1: "BI", 2: "BZ"}[int(self)]


TRIVIAL = "trivial"


@dataclass(frozen=True, eq=False)
class FiniteAlgebra:
    """A finite bounded lattice optionally carrying ``'`` and ``~`` tables."""

    lattice: FiniteBoundedLattice
    kleene: Optional[np.ndarray] = None
    brouwer: Optional[np.ndarray] = None

    @property
    def flavor(self) -> Flavor:
        if self.brouwer is not None:
            return Flavor.BZ
        if self.kleene is not None:
            return Flavor.BI
        return Flavor.LATTICE

    @property
    def n(self) -> int:
        return self.lattice.n

    @property
    def leq(self):
        return self.lattice.leq

    @property
    def meet(self):
        return self.lattice.meet

    @property
    def join(self):
        return self.lattice.join

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def labels(self) -> tuple[str, ...]:
        return self.lattice.labels

    def label(self, x: int) -> str:
        return self.lattice.labels[x]

    def index(self, label: str) -> int:
        return self.lattice.labels.index(label)

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (self.lattice == other.lattice
                and _same(self.kleene, other.kleene) and _same(self.brouwer, other.brouwer))

    __hash__ = None

    def __repr__(self):
        return f"FiniteAlgebra(n={self.n}, flavor={self.flavor})"

    def unary_tables(self, flavor: Flavor | str | None = None) -> list[np.ndarray]:
        flavor = self.flavor if flavor is None else Flavor.coerce(flavor)
        tables = []
        if flavor >= Flavor.BI:
            tables.append(self.kleene)
        if flavor >= Flavor.BZ:
            tables.append(self.brouwer)
        return tables

    def relabel(self, labels: Sequence[str]) -> "FiniteAlgebra":
        return FiniteAlgebra(self.lattice.relabel(labels), self.kleene, self.brouwer)


def _same(a, b) -> bool:
    if a is None or b is None:
        return a is None and b is None
    return np.array_equal(a, b)


def as_lattice(L: FiniteBoundedLattice) -> FiniteAlgebra:
    return FiniteAlgebra(L)


def reduct(A: FiniteAlgebra, flavor: Flavor | str) -> FiniteAlgebra:
    flavor = Flavor.coerce(flavor)
    if flavor > A.flavor:
        raise ValueError(f"a {A.flavor} algebra has no {flavor} reduct")
    return FiniteAlgebra(A.lattice,
                         A.kleene if flavor >= Flavor.BI else None,
                         A.brouwer if flavor >= Flavor.BZ else None)


def _unary(table, n: int) -> np.ndarray:
    arr = np.asarray(table, dtype=np.int64)
    if arr.shape != (n,) or (arr < 0).any() or (arr >= n).any():
        raise ValueError(f"unary table must list {n} elements of 0..{n - 1}")
    return _frozen(arr.copy())


def _first_antitone_failure(L: FiniteBoundedLattice, t: np.ndarray):
    # bad[a, b]: a <= b but not t[b] <= t[a]
    bad = L.leq & ~L.leq[t[None, :], t[:, None]]
    if bad.any():
        a, b = np.argwhere(bad)[0]
        return int(a), int(b)
    return None


def attach_involution(L: FiniteBoundedLattice | FiniteAlgebra, table) -> FiniteAlgebra:
    """Endow ``L`` with a Kleene complement ``'`` (an antitone involution)."""
    if isinstance(L, FiniteAlgebra):
        L = L.lattice
    t = _unary(table, L.n)
    for a in range(L.n):
        if t[t[a]] != a:
            raise NotInvolutive(L.label(a))
    bad = _first_antitone_failure(L, t)
    if bad is not None:
        raise NotAntitone(L.label(bad[0]), L.label(bad[1]))
    return FiniteAlgebra(L, t, None)


def trivial_brouwer(A: FiniteAlgebra | FiniteBoundedLattice) -> np.ndarray:
    L = A.lattice if isinstance(A, FiniteAlgebra) else A
    t = np.full(L.n, L.bottom, dtype=np.int64)
    t[L.bottom] = L.top
    return t


def attach_brouwer(A: FiniteAlgebra, table) -> FiniteAlgebra:
    """Endow a BI-lattice with a Brouwer complement ``~``.

    ``table`` may be the string ``"trivial"`` (``x~ = 0`` for ``x != 0``).
    The three defining axioms are checked, then the derived laws
    ``x~~~ = x~ <= x'``, ``(x v y)~ = x~ ^ y~`` and ``(x ^ y)~ >= x~ v y~``.
    """
    if A.kleene is None:
        raise ValueError("a Brouwer complement needs a Kleene complement first")
    L = A.lattice
    if isinstance(table, str):
        if table != TRIVIAL:
            raise ValueError(f"unknown Brouwer table keyword {table!r}")
        table = trivial_brouwer(L)
    b = _unary(table, L.n)
    k = A.kleene
    lab = L.label

    bad = _first_antitone_failure(L, b)
    if bad is not None:
        raise BZAxiomFailure("antitone", (lab(bad[0]), lab(bad[1])))
    xs = np.arange(L.n)
    checks = [
        ("x ^ x~ = 0", L.meet[xs, b] == L.bottom),
        ("x <= x~~", L.leq[xs, b[b]]),
        ("x~~ = x~'", b[b] == k[b]),
    ]
    for name, ok in checks:
        if not ok.all():
            raise BZAxiomFailure(name, lab(int(np.flatnonzero(~ok)[0])))

    derived = [
        ("x~~~ = x~", b[b[b]] == b),
        ("x~ <= x'", L.leq[b, k]),
    ]
    for name, ok in derived:
        if not ok.all():
            raise BZAxiomFailure(name, lab(int(np.flatnonzero(~ok)[0])))
    x, y = xs[:, None], xs[None, :]
    if not np.array_equal(b[L.join[x, y]], L.meet[b[x], b[y]]):
        raise BZAxiomFailure("(x v y)~ = x~ ^ y~", "some pair")
    if not L.leq[L.join[b[x], b[y]], b[L.meet[x, y]]].all():
        raise BZAxiomFailure("(x ^ y)~ >= x~ v y~", "some pair")
    return FiniteAlgebra(L, k, b)


# -- element sets ---------------------------------------------------------------

def sharp_elements(A: FiniteAlgebra) -> frozenset[int]:
    """Elements ``x`` with ``x v x' = 1``."""
    if A.kleene is None:
        raise ValueError("sharp elements need a Kleene complement")
    xs = np.arange(A.n)
    S = frozenset(int(x) for x in np.flatnonzero(A.join[xs, A.kleene] == A.top))
    if A.brouwer is not None and classify(A).pbz:
        fixed = frozenset(int(x) for x in np.flatnonzero(A.kleene == A.brouwer))
        images = frozenset(int(x) for x in A.brouwer)
        if not (S == fixed == images):
            raise AssertionError("sharp elements of a PBZ*-lattice must equal "
                                 "{x : x' = x~} and the image of ~")
    return S


def dense_and_t(A: FiniteAlgebra) -> dict[str, frozenset[int]]:
    """Dense elements ``D = {x : x~ = 0}`` and ``T = {x : x~ in {0, 1}}``."""
    if A.brouwer is None:
        raise ValueError("dense elements need a Brouwer complement")
    b = A.brouwer
    D = frozenset(int(x) for x in np.flatnonzero(b == A.bottom))
    T = frozenset(int(x) for x in np.flatnonzero((b == A.bottom) | (b == A.top)))
    if T != D | {A.bottom} or A.top not in T:
        raise AssertionError("T must be D together with 0")
    for x in T:
        for y in T:
            if int(A.join[x, y]) not in T:
                raise AssertionError("T must be closed under join")
    if A.n > 1 and classify(A).antiortholattice:
        if D != frozenset(range(A.n)) - {A.bottom}:
            raise AssertionError("an antiortholattice has D = L \\ {0}")
    return {"D": D, "T": T}


# -- classification -------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationReport:
    """Axiom-class flags; ``None`` marks a flag that does not apply because
    the algebra lacks the operation it needs."""

    pseudo_kleene: Optional[bool]
    ortholattice: Optional[bool]
    orthomodular: Optional[bool]
    paraorthomodular: Optional[bool]
    star: Optional[bool]
    bz: Optional[bool]
    pbz: Optional[bool]
    antiortholattice: Optional[bool]
    sdm: Optional[bool]
    sk: Optional[bool]
    j0: Optional[bool]
    distributive: bool
    modular: bool
    boolean_algebra: Optional[bool]
    zero_meet_irreducible: bool
    sandwich_shape: bool

    def as_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def field_names(cls) -> list[str]:
        return [f.name for f in fields(cls)]


def _kleene_flags(A: FiniteAlgebra) -> dict[str, bool]:
    L, k = A.lattice, A.kleene
    xs = np.arange(A.n)
    low = L.meet[xs, k]                     # x ^ x'
    high = L.join[xs, k]                    # x v x'
    pk = bool(L.leq[low[:, None], high[None, :]].all())
    ol = bool((high == A.top).all())
    a, b = xs[:, None], xs[None, :]
    le = L.leq
    # a <= b  =>  b = (b ^ a') v a
    om = bool((~le | (L.join[L.meet[b, k[a]], a] == b)).all())
    # a <= b and a' ^ b = 0  =>  a = b
    pom = bool((~(le & (L.meet[k[a], b] == A.bottom)) | (a == b)).all())
    return {"pseudo_kleene": pk, "ortholattice": ol, "orthomodular": om,
            "paraorthomodular": pom}


def _brouwer_flags(A: FiniteAlgebra) -> dict[str, bool]:
    L, k, br = A.lattice, A.kleene, A.brouwer
    xs = np.arange(A.n)
    x, y = xs[:, None], xs[None, :]
    m, j = L.meet, L.join
    star = bool(np.array_equal(br[m[xs, k]], j[br, br[k]]))
    sdm = bool(np.array_equal(br[m[x, y]], j[br[x], br[y]]))
    # x ^ y~~ <= x'~ v y
    sk = bool(L.leq[m[x, br[br[y]]], j[br[k[x]], y]].all())
    j0 = bool((j[m[x, br[y]], m[x, br[br[y]]]] == x).all())
    return {"star": star, "sdm": sdm, "sk": sk, "j0": j0}


def classify(A: FiniteAlgebra) -> ClassificationReport:
    """Compute every classification flag by exhaustive sweep."""
    L = A.lattice
    flags: dict = dict.fromkeys(ClassificationReport.field_names())
    flags.update(lc.lattice_laws(L))
    flags["zero_meet_irreducible"] = lc.zero_meet_irreducible(L)
    flags["sandwich_shape"] = lc.sandwich_shape(L)
    if A.kleene is not None:
        flags.update(_kleene_flags(A))
        flags["boolean_algebra"] = flags["ortholattice"] and flags["distributive"]
    if A.brouwer is not None:
        flags.update(_brouwer_flags(A))
        # the BZ axioms on ~ were verified by attach_brouwer
        flags["bz"] = flags["pseudo_kleene"]
        flags["pbz"] = flags["bz"] and flags["paraorthomodular"] and flags["star"]
        S = {int(x) for x in np.flatnonzero(L.join[np.arange(A.n), A.kleene] == A.top)}
        flags["antiortholattice"] = flags["pbz"] and S <= {A.bottom, A.top}
    report = ClassificationReport(**flags)
    _check_implications(report)
    return report


def _check_implications(r: ClassificationReport) -> None:
    if r.ortholattice is None:
        return
    if r.ortholattice and r.paraorthomodular and not r.orthomodular:
        raise AssertionError("paraorthomodular ortholattice must be orthomodular")
    if r.orthomodular and not r.paraorthomodular:
        raise AssertionError("orthomodular implies paraorthomodular")
    if r.pbz is not None:
        if r.pbz != (r.bz and r.paraorthomodular and r.star):
            raise AssertionError("pbz must equal bz & paraorthomodular & star")
        if r.antiortholattice and not r.pbz:
            raise AssertionError("antiortholattices are PBZ*-lattices")


def isomorphism(A: FiniteAlgebra, B: FiniteAlgebra,
                flavor: Flavor | str | None = None) -> dict[int, int] | None:
    """An isomorphism of the ``flavor`` reducts, or ``None``."""
    if flavor is None:
        flavor = min(A.flavor, B.flavor)
    flavor = Flavor.coerce(flavor)
    return lc.find_isomorphism(A.lattice, B.lattice,
                               A.unary_tables(flavor), B.unary_tables(flavor))


def subalgebra(A: FiniteAlgebra, universe, flavor: Flavor | str | None = None) -> FiniteAlgebra:
    """The algebra induced on a closed subset, renumbered in ascending order."""
    flavor = A.flavor if flavor is None else Flavor.coerce(flavor)
    U = sorted(set(int(u) for u in universe))
    pos = {u: i for i, u in enumerate(U)}
    sub = np.ix_(U, U)
    if not (np.isin(A.meet[sub], U).all() and np.isin(A.join[sub], U).all()):
        raise ValueError("subset is not closed under meet and join")
    # the bounds of an interval need not be those of A
    L = FiniteBoundedLattice.from_order(A.leq[sub], pos.get(A.bottom), pos.get(A.top),
                                        [A.label(u) for u in U])
    for t in A.unary_tables(flavor):
        if not np.isin(t[U], U).all():
            raise ValueError("subset is not closed under the unary operations")
    k = b = None
    if flavor >= Flavor.BI:
        k = _frozen(np.array([pos[int(A.kleene[u])] for u in U]))
    if flavor >= Flavor.BZ:
        b = _frozen(np.array([pos[int(A.brouwer[u])] for u in U]))
    return FiniteAlgebra(L, k, b)
