import itertools

import pytest
from hypothesis import given

from oracles import idx, shuffled
from pbzlab import (all_subalgebras, catalog, classify, d3_ol_dichotomy, distsets_embedding,
                    embeds, horizontal_sum, is_embedding, r_characterization, reduct, sandwich,
                    sandwich_decompose)
from pbzlab.classops import compose, subuniverses
from pbzlab.errors import NotAntiortholattice, ParamOutOfRange, SizeGuardExceeded
from pbzlab.lattice import zero_meet_irreducible
from strategies import catalog_bi


def brute_embeds(A, B, flavor):
    for image in itertools.permutations(range(B.n), A.n):
        if is_embedding(A, B, list(image), flavor):
            return True
    return False


def test_embeddings():
    D3, D5 = catalog("D:3"), catalog("D:5")
    f = embeds(D3, D5, "BZ")
    assert f == {0: 0, 1: 2, 2: 4}
    assert embeds(reduct(D3, "BI"), reduct(catalog("MO:1"), "BI"), "BI") is None
    assert not brute_embeds(reduct(D3, "BI"), reduct(catalog("MO:1"), "BI"), "BI")


@pytest.mark.parametrize("name", ["D:3", "D:4", "D:5", "SANDWICH:M3", "SANDWICH:MO:2", "GD:1"])
def test_aol_with_meet_irreducible_zero_embeds_in_its_sandwich(name):
    A = catalog(name)
    assert zero_meet_irreducible(A.lattice)
    assert embeds(A, sandwich(reduct(A, "BI")), "BZ") is not None


def test_distsets():
    f = distsets_embedding(1, 2)
    assert is_embedding(catalog("GDM:1"), catalog("GD:2"), f, "BZ")
    g = distsets_embedding(2, 3)
    assert len(g) == 8 and is_embedding(catalog("GDM:2"), catalog("GD:3"), g, "BZ")
    with pytest.raises(ParamOutOfRange):
        distsets_embedding(2, 2)


def test_sandwich_decompose():
    K = sandwich_decompose(catalog("D:5"))
    assert K is not None and K.n == 3 and not classify(K).ortholattice
    assert sandwich_decompose(catalog("GD:2")) is None
    K4 = sandwich_decompose(catalog("D:4"))
    assert K4 is not None and K4.n == 2


def test_r_characterization():
    rep = r_characterization(catalog("SANDWICH:MO:2"))
    assert rep.r_holds and rep.structural and rep.consistent
    rep = r_characterization(catalog("D:5"))
    assert not rep.r_holds and not rep.structural and rep.consistent
    rep = r_characterization(catalog("D:2"))
    assert rep.r_holds and rep.small and rep.consistent
    with pytest.raises(NotAntiortholattice):
        r_characterization(catalog("MO:2"))


def test_dichotomy():
    assert d3_ol_dichotomy(catalog("B6")).is_ortholattice
    M3 = catalog("M3")
    d = d3_ol_dichotomy(M3)
    assert d.kind == "D3" and d.embedding[1] == idx(M3, "b")[0]
    d = d3_ol_dichotomy(catalog("D:4"))
    assert d.kind == "D4" and d.embedding == {0: 0, 1: 1, 2: 2, 3: 3}


def test_subalgebras():
    D5 = catalog("D:5")
    subs = [sorted(D5.label(x) for x in U) for U in subuniverses(D5, "BZ")]
    assert subs == [["0", "1"], ["0", "1", "c"], ["0", "1", "a", "a'"],
                    ["0", "1", "a", "a'", "c"]]
    MO2 = catalog("MO:2")
    assert idx(MO2, "0", "a", "a'", "1") in [sorted(U) for U in subuniverses(MO2)]
    assert len(all_subalgebras(MO2)) == 4
    assert len(all_subalgebras(MO2, up_to_iso=True)) == 3
    with pytest.raises(SizeGuardExceeded):
        subuniverses(catalog("GD:3"), guard_limit=8)


def test_compose():
    assert compose({0: 1, 1: 0}, {0: 5, 1: 6}) == {0: 6, 1: 5}


@given(catalog_bi(("D:2", "D:3", "D:4", "MO:1", "M3")), catalog_bi(("D:3", "MO:2", "M3", "B6")))
def test_hsum_operands_embed(A, B):
    if not (classify(A).ortholattice or classify(B).ortholattice):
        return
    S = horizontal_sum(A, B, "PK")
    for X in (A, B):
        f = embeds(X, S, "BI")
        assert f is not None and is_embedding(X, S, f, "BI")


@given(catalog_bi(("D:3", "D:4", "MO:1", "M3", "N5", "B6")))
def test_embedding_search_matches_brute_force(A):
    for target in ("D:5", "MO:2", "B6"):
        B = reduct(catalog(target), "BI")
        assert (embeds(A, B, "BI") is not None) == brute_embeds(A, B, "BI")


@given(catalog_bi(("D:4", "MO:2", "M3", "B6", "SANDWICH:M3")))
def test_self_embedding_into_shuffled_copy(A):
    B = shuffled(A, seed=3)
    f = embeds(A, B, "BI")
    assert f is not None and is_embedding(A, B, f, "BI")


@given(catalog_bi(("D:2", "D:3", "D:4", "D:5", "MO:1", "MO:2", "M3", "N5", "B6", "OMLNM",
                   "GD:2", "GDM:2", "CompAOL11")))
def test_dichotomy_property(A):
    d = d3_ol_dichotomy(A)
    assert d.is_ortholattice == bool(classify(A).ortholattice)
    if not d.is_ortholattice:
        chain = reduct(catalog(f"D:{len(d.embedding)}"), "BI")
        assert is_embedding(chain, A, d.embedding, "BI")
