import itertools

import numpy as np
import pytest
from hypothesis import given

from oracles import glb, longest_chain, lub
from pbzlab import catalog, horizontal_sum, reduct
from pbzlab.errors import NotALattice, NotAPoset, NotBounded
from pbzlab.lattice import (FiniteBoundedLattice, complemented_elements, is_splitting_pair,
                            lattice_isomorphic, lattice_laws, length_of, zero_meet_irreducible)
from strategies import lattices


def chain(n):
    return FiniteBoundedLattice.from_covers(n, 0, n - 1, [(i, i + 1) for i in range(n - 1)])


def diamond():
    return FiniteBoundedLattice.from_covers(5, 0, 4, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4),
                                                      (3, 4)])


def test_from_covers_chain():
    L = chain(3)
    assert L.leq.tolist() == [[True, True, True], [False, True, True], [False, False, True]]
    assert L.meet[1, 2] == 1 and L.join[0, 1] == 1


def test_diamond_is_m3_reduct():
    assert lattice_isomorphic(diamond(), catalog("M3").lattice) is not None


def test_missing_join_rejected():
    # 0 < a, 0 < b, and 3 sits above nothing: no top
    with pytest.raises((NotALattice, NotBounded)):
        FiniteBoundedLattice.from_covers(4, 0, 3, [(0, 1), (0, 2)])


def test_two_upper_bounds_without_least_rejected():
    covers = [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)]
    with pytest.raises(NotALattice):
        FiniteBoundedLattice.from_covers(6, 0, 5, covers)


def test_cycle_rejected():
    with pytest.raises(NotAPoset):
        FiniteBoundedLattice.from_covers(3, 0, 2, [(0, 1), (1, 0), (1, 2)])


def test_laws():
    assert lattice_laws(diamond()) == {"distributive": False, "modular": True}
    assert lattice_laws(catalog("N5").lattice)["modular"] is False
    for n in range(1, 7):
        assert lattice_laws(chain(n)) == {"distributive": True, "modular": True}


def test_length():
    assert length_of(chain(1), [0]) == 1
    B6 = catalog("B6").lattice
    assert length_of(B6, range(6)) == 4


def test_splitting_pairs():
    assert is_splitting_pair(chain(2), 0, 1)
    assert not is_splitting_pair(chain(3), 0, 2)
    D22 = catalog("MO:1").lattice
    assert is_splitting_pair(D22, 1, 2)


def test_complemented():
    assert complemented_elements(chain(3)) == {0, 2}
    assert complemented_elements(catalog("MO:1").lattice) == {0, 1, 2, 3}
    A = catalog("CompAOL11")
    got = {A.label(x) for x in complemented_elements(A.lattice)}
    assert got == {"0", "1", "a", "a'", "b", "b'"}


def test_isomorphisms_from_horizontal_sums():
    D3 = reduct(catalog("D:3"), "BI")
    S = horizontal_sum(D3, D3, "BI")
    assert lattice_isomorphic(S.lattice, catalog("MO:1").lattice) is not None
    D4 = reduct(catalog("D:4"), "BI")
    assert lattice_isomorphic(catalog("B6").lattice, horizontal_sum(D4, D4, "BI").lattice)
    assert lattice_isomorphic(chain(3), catalog("MO:1").lattice) is None


def test_zero_meet_irreducible():
    assert zero_meet_irreducible(chain(4))
    assert not zero_meet_irreducible(catalog("MO:1").lattice)


def test_dual_swaps_bounds():
    L = catalog("N5").lattice
    D = L.dual()
    assert D.bottom == L.top and np.array_equal(D.leq, L.leq.T)


@given(lattices())
def test_meet_join_are_glb_lub(L):
    leq = L.leq.tolist()
    for a, b in itertools.product(range(L.n), repeat=2):
        assert L.meet[a, b] == glb(leq, a, b)
        assert L.join[a, b] == lub(leq, a, b)


@given(lattices())
def test_lattice_axioms(L):
    m, j = L.meet, L.join
    xs = np.arange(L.n)
    a, b = xs[:, None], xs[None, :]
    assert (m == m.T).all() and (j == j.T).all()
    assert (m[a, j[a, b]] == a).all() and (j[a, m[a, b]] == a).all()
    assert L.leq[L.bottom].all() and L.leq[:, L.top].all()
    for c in range(L.n):
        assert (m[m[a, b], c] == m[a, m[b, c]]).all()


@given(lattices())
def test_length_matches_longest_chain(L):
    assert length_of(L, range(L.n)) == longest_chain(L.leq.tolist(), range(L.n))


@given(lattices())
def test_relabeled_is_isomorphic(L):
    perm = np.random.default_rng(L.n).permutation(L.n)
    inv = np.argsort(perm)
    M = FiniteBoundedLattice.from_order(L.leq[np.ix_(inv, inv)])
    f = lattice_isomorphic(L, M)
    assert f is not None
    assert all(L.leq[x, y] == M.leq[f[x], f[y]] for x in range(L.n) for y in range(L.n))
