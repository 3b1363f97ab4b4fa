import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import idx
from pbzlab import (Congruence, aol, catalog, classify, dense_and_t, direct_product,
                    horizontal_sum, isomorphism, lattice_isomorphic, ordinal_sum, ordinal_sum_bi,
                    power, quotient, reduct, sandwich, sum_congruence)
from pbzlab.constructions import product_element, sum_layout
from pbzlab.errors import (MixedFlavors, NotDualIso, NotPseudoKleene, SideConditionViolated,
                           TrivialLowerPart)
from pbzlab.lattice import zero_meet_irreducible
from strategies import catalog_bi, catalog_pk, lattices


def bi(name):
    return reduct(catalog(name), "BI")


def lat(name):
    return catalog(name).lattice


def test_ordinal_sum_of_chains():
    assert lattice_isomorphic(ordinal_sum(lat("D:2"), lat("D:2")), lat("D:3"))
    assert ordinal_sum(lat("MO:1"), lat("MO:1")).n == 7
    M = lat("N5")
    assert lattice_isomorphic(ordinal_sum(lat("D:1"), M), M)


@pytest.mark.parametrize("m,k,target", [("D:2", "D:1", "D:3"), ("D:2", "D:3", "D:5"),
                                        ("D:2", "D:2", "D:4")])
def test_ordinal_sum_bi_of_chains(m, k, target):
    S = ordinal_sum_bi(lat(m), bi(k))
    assert isomorphism(S, bi(target), "BI") is not None


def test_gdm2_shape():
    S = ordinal_sum_bi(lat("MO:1"), bi("D:2"))
    assert S.n == 8 and isomorphism(S, bi("GDM:2"), "BI") is not None


def test_aol_examples():
    assert isomorphism(aol(lat("D:2"), bi("D:3")), catalog("D:5"), "BZ") is not None
    X = aol(lat("D:2"), bi("M3"))
    assert X.n == 7 and not classify(X).distributive and classify(X).antiortholattice
    with pytest.raises(TrivialLowerPart):
        aol(lat("D:1"), bi("D:3"))
    with pytest.raises(NotPseudoKleene):
        aol(lat("D:2"), bi("N5"))


def test_twisted_ordinal_sum():
    # a non-identity automorphism of D2^2 swaps the atoms
    M = lat("MO:1")
    S = ordinal_sum_bi(M, bi("D:1"), [0, 2, 1, 3])
    lay = sum_layout(M, bi("D:1"), [0, 2, 1, 3])
    assert S.kleene[lay.lower[1]] == lay.upper[2]
    assert classify(S).pseudo_kleene
    with pytest.raises(NotDualIso):
        ordinal_sum_bi(lat("D:3"), bi("D:1"), [0, 0, 2])


def test_horizontal_sums():
    B = catalog("MO:1")
    M3 = horizontal_sum(B, catalog("D:3"), "PBZ")
    assert isomorphism(M3, catalog("M3"), "BZ") is not None
    MO2 = horizontal_sum(B, B, "PBZ")
    assert isomorphism(MO2, catalog("MO:2"), "BZ") is not None
    with pytest.raises(SideConditionViolated):
        horizontal_sum(bi("D:3"), bi("D:3"), "PK")
    assert horizontal_sum(bi("D:3"), bi("D:3"), "BI").n == 4
    with pytest.raises(SideConditionViolated):
        horizontal_sum(bi("D:1"), bi("D:3"), "BI")


def test_products():
    P = direct_product([bi("D:2"), bi("D:2")], "BI")
    assert isomorphism(P, bi("MO:1"), "BI") is not None
    D33 = power(catalog("D:3"), 2, "BZ")
    assert D33.n == 9 and len(dense_and_t(D33)["T"]) == 5
    with pytest.raises(MixedFlavors):
        direct_product([catalog("D:2"), reduct(catalog("D:2"), "Lattice")], "BI")


def test_product_element_numbering():
    As = [bi("D:3"), bi("D:2")]
    P = direct_product(As, "BI")
    assert P.label(product_element(As, [1, 0])) == "(c,0)"


def test_sum_congruence_examples():
    K = bi("M3")
    S = sandwich(K)
    M2 = lat("D:2")
    theta = sum_congruence(M2, K, Congruence.nabla(2, "Lattice"), Congruence.delta(K.n, "BI"))
    blocks = sorted(sorted(S.label(x) for x in b) for b in theta.blocks() if len(b) > 1)
    assert blocks == [["0", "0k"], ["1", "1k"]]
    Q = quotient(reduct(S, "BI"), theta)
    assert isomorphism(Q, K, "BI") is not None
    d = sum_congruence(M2, K, Congruence.delta(2, "Lattice"), Congruence.delta(K.n, "BI"))
    assert d.is_delta()


@given(lattices(max_atoms=3, max_sets=4), catalog_pk())
def test_aol_is_antiortholattice(M, K):
    if M.n < 2:
        return
    X = aol(M, K)
    r = classify(X)
    assert r.antiortholattice and r.pbz
    assert r.sdm == zero_meet_irreducible(X.lattice)


@given(lattices(max_atoms=2, max_sets=3), catalog_bi())
def test_ordinal_sum_bi_is_pk_iff_k_is(M, K):
    S = ordinal_sum_bi(M, K)
    assert S.n == 2 * M.n + K.n - 2
    assert classify(S).pseudo_kleene == classify(K).pseudo_kleene


@given(catalog_bi(), catalog_bi())
def test_product_is_componentwise(A, B):
    P = direct_product([A, B], "BI")
    for a in range(A.n):
        for b in range(B.n):
            p = product_element([A, B], [a, b])
            assert P.kleene[p] == product_element([A, B], [A.kleene[a], B.kleene[b]])


@given(st.sampled_from(["D:3", "MO:1", "M3", "D:2"]), st.sampled_from(["D:3", "MO:1", "D:4"]))
def test_horizontal_sum_keeps_operands(a, b):
    A, B = bi(a), bi(b)
    try:
        S = horizontal_sum(A, B, "PK")
    except SideConditionViolated:
        assert not (classify(A).ortholattice or classify(B).ortholattice)
        return
    assert S.n == A.n + B.n - 2
    assert classify(S).pseudo_kleene


def test_labels_of_sums():
    A = catalog("GDM:2")
    assert set(A.labels) == {"0", "a1", "a2", "0k", "1k", "a1'", "a2'", "1"}
    x, y = idx(A, "a1", "a1'")
    assert A.kleene[x] == y
    assert np.all(A.brouwer[1:] == A.bottom)
