import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import brute_congruences, idx, is_compatible
from pbzlab import (Congruence, all_congruences, catalog, con_01, congruence_lattice,
                    horizontal_sum, irreducibility, isomorphism, lattice_isomorphic,
                    principal_congruence, quotient, reduct)
from pbzlab.algebra import Flavor
from pbzlab.congruence import con_0, generated_congruence, lattice_of
from pbzlab.errors import NotACongruence, SizeGuardExceeded
from strategies import catalog_bi, twisted_products

SMALL = ("D:2", "D:3", "D:4", "D:5", "MO:1", "M3", "N5", "B6", "GD:1", "GD:2", "GDM:1",
         "GDM:2", "SANDWICH:D:3", "SANDWICH:MO:1")


def labels_of(cons):
    return {c.labels for c in cons}


def test_principal_examples():
    A = catalog("D:5")
    a, c = idx(A, "a", "c")
    assert principal_congruence(A, a, a, "BZ").is_delta()
    assert principal_congruence(A, a, c, "BZ").describe(A.labels) == "{0} | {a,c,a'} | {1}"
    G = catalog("GD:2")
    for x in range(G.n):
        for y in range(x + 1, G.n):
            assert principal_congruence(G, x, y, "BZ").is_nabla()


def test_enumeration_examples():
    assert len(all_congruences(catalog("D:3"), "BI")) == 2
    cons = all_congruences(catalog("GDM:2"), "BZ")
    assert len(cons) == 3 and cons[0].is_delta() and cons[-1].is_nabla()
    assert len(all_congruences(catalog("D:5"), "BI")) == 4


def test_con_01_examples():
    A = catalog("D:5")
    got = [c.describe(A.labels) for c in con_01(A, "BI")]
    assert got == ["{0} | {a} | {c} | {a'} | {1}", "{0} | {a,c,a'} | {1}"]
    G = catalog("GD:2")
    assert [c.is_delta() for c in con_01(G, "BZ")] == [True]


def test_con_0_keeps_top_collapses():
    D3 = reduct(catalog("D:3"), "Lattice")
    assert len(con_01(D3, "Lattice")) == 1
    assert len(con_0(D3, "Lattice")) == 2


@pytest.mark.parametrize("inner", ["D:3", "M3", "MO:2", "D:4"])
def test_sandwich_con_01_matches_inner(inner):
    S = catalog(f"SANDWICH:{inner}")
    K = reduct(catalog(inner), "BI")
    A = lattice_of(con_01(S, "BZ"))
    B = congruence_lattice(K, "BI")
    assert lattice_isomorphic(A, B) is not None


def test_quotients():
    A = catalog("D:5")
    assert isomorphism(quotient(A, Congruence.delta(A.n, "BZ")), A, "BZ") is not None
    assert quotient(A, Congruence.nabla(A.n, "BZ")).n == 1
    D4 = reduct(catalog("D:4"), "BI")
    mid = [c for c in con_01(D4, "BI") if not c.is_delta()]
    assert len(mid) == 1
    assert isomorphism(quotient(D4, mid[0]), reduct(catalog("D:3"), "BI"), "BI") is not None
    with pytest.raises(NotACongruence):
        quotient(A, Congruence.from_blocks(A.n, [[0, 1]], "BZ"))


def test_irreducibility_examples():
    assert irreducibility(catalog("GD:2"), "BZ").simple
    D3 = reduct(catalog("D:3"), "BI")
    S = horizontal_sum(D3, D3, "BI")
    assert irreducibility(S, "BI").directly_irreducible
    assert not irreducibility(reduct(S, "Lattice"), "Lattice").directly_irreducible
    one = catalog("D:1")
    assert not irreducibility(one, "BZ").directly_irreducible


def test_monolith_of_gdm():
    A = catalog("GDM:2")
    irr = irreducibility(A, "BZ")
    assert irr.subdirectly_irreducible and not irr.simple
    assert irr.monolith.describe(A.labels).count("{0k,1k}") == 1


def test_simple_algebra_has_two_element_con():
    L = congruence_lattice(catalog("GD:3"), "BZ")
    assert L.n == 2


def test_size_guard(monkeypatch):
    with pytest.raises(SizeGuardExceeded):
        all_congruences(catalog("GD:3"), "BZ", guard_limit=10)
    monkeypatch.setenv("PBZLAB_GUARD", "con=4")
    with pytest.raises(SizeGuardExceeded):
        all_congruences(catalog("D:5"), "BZ")
    monkeypatch.setenv("PBZLAB_GUARD", "off")
    assert len(all_congruences(catalog("D:5"), "BZ")) == 3


def test_congruence_value_api():
    t = Congruence.from_blocks(4, [[1, 2]], "BI")
    u = Congruence.from_blocks(4, [[2, 3]], "BI")
    assert t.related(1, 2) and not t.related(0, 1)
    assert t.join(u).block_of(1) == [1, 2, 3]
    assert t.meet(u).is_delta()
    assert Congruence.delta(4, "BI").refines(t) and t.refines(Congruence.nabla(4, "BI"))


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("flavor", ["Lattice", "BI", "BZ"])
def test_enumeration_matches_brute_force(name, flavor):
    A = catalog(name)
    if Flavor.coerce(flavor) > A.flavor:
        pytest.skip("no operations of that flavor")
    if A.n > 8:
        pytest.skip("Bell number too large for the brute-force oracle")
    assert labels_of(all_congruences(A, flavor)) == brute_congruences(A, Flavor.coerce(flavor))


@given(twisted_products(max_atoms=2, max_sets=2))
def test_enumeration_matches_brute_force_random(A):
    if A.n > 8:
        return
    assert labels_of(all_congruences(A, "BI")) == brute_congruences(A, Flavor.BI)


@given(catalog_bi(("D:3", "D:4", "MO:1", "M3", "N5", "B6")), st.data())
def test_principal_is_least(A, data):
    a = data.draw(st.integers(0, A.n - 1))
    b = data.draw(st.integers(0, A.n - 1))
    cg = principal_congruence(A, a, b, "BI")
    assert cg.related(a, b) and is_compatible(A, cg.labels, 1)
    for labels in brute_congruences(A, Flavor.BI):
        if labels[a] == labels[b]:
            assert cg.refines(Congruence.from_labels(labels, "BI"))


@given(catalog_bi(("D:4", "D:5", "MO:1", "M3", "B6")), st.data())
def test_quotient_map_is_homomorphism(A, data):
    cons = all_congruences(A, "BI")
    theta = data.draw(st.sampled_from(cons))
    Q = quotient(A, theta)
    h = theta.labels
    for x in range(A.n):
        assert Q.kleene[h[x]] == h[A.kleene[x]]
        for y in range(A.n):
            assert Q.meet[h[x], h[y]] == h[A.meet[x, y]]
            assert Q.join[h[x], h[y]] == h[A.join[x, y]]


def test_generated_congruence_joins_principals():
    A = catalog("D:5")
    a, c, ap = idx(A, "a", "c", "a'")
    g = generated_congruence(A, [(0, a)], "BI")
    assert g.related(ap, A.top)
    assert generated_congruence(A, [(0, a), (a, c)], "BI").is_nabla()
