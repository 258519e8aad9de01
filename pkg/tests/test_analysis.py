import itertools

import pytest

from latsort import (
    Verdict,
    adjoin_bounds,
    canonical_m3,
    canonical_n5,
    chain,
    from_cover_relation,
    from_lattice,
    is_distributive_direct,
    pascal_identity_holds,
    sort_pascal,
    sort_spec,
)
from latsort.analysis import identity_mismatch, violates_distributive_law
from latsort.latfile import load_fixture

from conftest import DIV, POW16


def product(left, right):
    """Componentwise product of two finite lattices, built from its covers."""
    names = [f"{p}.{q}" for p in left.names for q in right.names]
    covers = [(f"{lo}.{q}", f"{hi}.{q}") for lo, hi in left.covers() for q in right.names]
    covers += [(f"{p}.{lo}", f"{p}.{hi}") for p in left.names for lo, hi in right.covers()]
    return from_cover_relation(names, covers, f"{left.name}x{right.name}")


def corpus():
    n5, m3 = canonical_n5(), canonical_m3()
    div360 = [d for d in range(1, 361) if 360 % d == 0]
    return {
        "n5": (n5, False),
        "m3": (m3, False),
        "chain5": (load_fixture("chain5"), True),
        "bool3": (load_fixture("bool3"), True),
        "div60": (load_fixture("div60"), True),
        "n5+bounds": (adjoin_bounds(n5), False),
        "m3+bounds": (adjoin_bounds(m3), False),
        "n5-alt-labels": (from_cover_relation("abcde", [("a", "c"), ("c", "d"), ("d", "e"), ("a", "b"), ("b", "e")]), False),
        "n5xchain2": (product(n5, chain(2)), False),
        "m3xchain2": (product(m3, chain(2)), False),
        "diamond": (from_cover_relation("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]), True),
        "singleton": (from_cover_relation(["x"], []), True),
        "chain2xchain3": (product(chain(2), chain(3)), True),
        "div360": (from_lattice(DIV, div360), True),
        "bool4": (from_lattice(POW16, list(range(16))), True),
    }


CORPUS = corpus()


@pytest.mark.parametrize("name", CORPUS)
def test_checks_agree(name):
    lat, distributive = CORPUS[name]
    direct = is_distributive_direct(lat)
    identity = pascal_identity_holds(lat)
    assert direct.verdict == identity.verdict
    assert direct.distributive == identity.distributive == distributive
    if distributive:
        assert direct.law_witness is None and identity.identity_witness is None
    else:
        assert violates_distributive_law(lat, *direct.law_witness)
        w = identity.identity_witness
        assert len(w.sequence) == 3
        assert tuple(sort_pascal(lat, w.sequence)) == w.pascal
        assert tuple(sort_spec(lat, w.sequence)) == w.spec
        assert w.pascal != w.spec


def test_n5_named_witness():
    n5 = canonical_n5()
    report = is_distributive_direct(n5)
    assert report.verdict is Verdict.NOT_DISTRIBUTIVE
    w = identity_mismatch(n5, [n5[v] for v in "cdb"])
    assert w.position == 2
    assert n5.format(w.pascal[1]) == "b" and n5.format(w.spec[1]) == "d"


def test_m3_named_witness():
    m3 = canonical_m3()
    report = pascal_identity_holds(m3)
    assert report.verdict is Verdict.NOT_DISTRIBUTIVE
    assert report.identity_witness.position == 2
    w = identity_mismatch(m3, [m3[v] for v in "bcd"])
    assert w.position == 2
    assert m3.format(w.pascal[1]) == "d" and m3.format(w.spec[1]) == "e"


def test_first_witness_is_deterministic():
    m3 = canonical_m3()
    first = pascal_identity_holds(m3).identity_witness
    expected = next(
        s for s in itertools.product(m3.elements, repeat=3) if sort_pascal(m3, s) != sort_spec(m3, s)
    )
    assert first.sequence == expected
    assert [m3.format(v) for v in first.sequence] == list("bcd")
    triple = is_distributive_direct(m3).law_witness
    assert [m3.format(v) for v in triple] == list("bcd")


def test_div60_no_mismatch_over_all_triples():
    div60 = load_fixture("div60")
    assert len(div60) == 12
    mismatches = [s for s in itertools.product(div60.elements, repeat=3) if identity_mismatch(div60, s)]
    assert mismatches == []
    assert pascal_identity_holds(div60).distributive


def test_longer_sequences():
    assert pascal_identity_holds(load_fixture("chain5"), max_len=4).distributive
    assert not pascal_identity_holds(canonical_n5(), max_len=4).distributive
    with pytest.raises(ValueError):
        pascal_identity_holds(canonical_n5(), max_len=2)
