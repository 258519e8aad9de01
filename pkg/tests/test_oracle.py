import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from latsort import OpCounter, canonical_m3, canonical_n5, k_subsets, sort3, sort_spec
from latsort.latfile import FIXTURES, load_fixture

from conftest import DIV, FAMILIES, ORDER, POW16, bitmask_sort, gcd_lcm_sort


def names(lat, seq):
    return tuple(lat.format(v) for v in seq)


def elems(lat, text):
    return [lat[c] for c in text]


class TestKSubsets:
    def test_examples(self):
        assert list(k_subsets(3, 2)) == [(1, 2), (1, 3), (2, 3)]
        assert list(k_subsets(4, 1)) == [(1,), (2,), (3,), (4,)]
        assert sum(1 for k in range(1, 11) for _ in k_subsets(10, k)) == 1023

    def test_zero_and_errors(self):
        assert list(k_subsets(5, 0)) == []
        assert list(k_subsets(0, 0)) == []
        with pytest.raises(ValueError):
            k_subsets(2, 3)
        with pytest.raises(ValueError):
            k_subsets(-1, 0)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_matches_bitmask_enumeration(self, n):
        for k in range(1, n + 1):
            expected = sorted(
                tuple(i + 1 for i in range(n) if mask >> i & 1)
                for mask in range(2**n)
                if bin(mask).count("1") == k
            )
            got = list(k_subsets(n, k))
            assert got == expected
            assert len(got) == math.comb(n, k)

    @pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 8) for k in range(1, n)])
    def test_disjoint_union_split(self, n, k):
        """Subsets of [1,n] split into those without n and those with n added to a (k-1)-subset."""
        without = set(k_subsets(n - 1, k))
        with_n = {(*b, n) for b in k_subsets(n - 1, k - 1)} if k > 1 else {(n,)}
        assert without.isdisjoint(with_n)
        assert without | with_n == set(k_subsets(n, k))


class TestSortSpec:
    def test_divisibility_example(self):
        # middle: gcd(lcm(2,3), lcm(2,4), lcm(3,4)) = gcd(6, 4, 12)
        assert sort_spec(DIV, [2, 3, 4]) == [1, 2, 12]
        assert gcd_lcm_sort([2, 3, 4]) == [1, 2, 12]

    def test_n5(self):
        n5 = canonical_n5()
        assert names(n5, sort_spec(n5, elems(n5, "cdb"))) == tuple("ade")
        assert names(n5, sort_spec(n5, elems(n5, "cd"))) == tuple("ae")

    def test_m3(self):
        m3 = canonical_m3()
        assert names(m3, sort_spec(m3, elems(m3, "bcd"))) == tuple("aee")
        assert names(m3, sort_spec(m3, elems(m3, "bc"))) == tuple("ae")

    def test_empty_and_single(self):
        assert sort_spec(DIV, []) == []
        assert sort_spec(DIV, [7]) == [7]

    def test_counts(self):
        counter = OpCounter()
        sort_spec(DIV, list(range(1, 11)), counter)
        assert counter.subsets == 1023
        # each k-subset costs k-1 joins; all but the first per k cost a meet
        assert counter.joins == sum(math.comb(10, k) * (k - 1) for k in range(1, 11))
        assert counter.meets == 1023 - 10

    @pytest.mark.parametrize("family", sorted(FAMILIES))
    def test_matches_bitmask_oracle(self, family):
        lat, _ = FAMILIES[family]
        rng = random.Random(family)
        gen = {"div": lambda: rng.randint(1, 1000), "order": lambda: rng.randint(-50, 50), "powerset16": lambda: rng.getrandbits(16)}[family]
        for n in range(0, 9):
            for _ in range(10):
                x = [gen() for _ in range(n)]
                assert sort_spec(lat, x) == bitmask_sort(lat.meet, lat.join, x)

    def test_finite_matches_bitmask_oracle(self, fixture_lattice):
        rng = random.Random(0)
        for n in range(1, 7):
            x = [rng.choice(fixture_lattice.elements) for _ in range(n)]
            assert sort_spec(fixture_lattice, x) == bitmask_sort(fixture_lattice.meet, fixture_lattice.join, x)


class TestSort3:
    def test_examples(self):
        m3 = canonical_m3()
        assert names(m3, sort3(m3, *elems(m3, "bcd"))) == tuple("aee")
        assert sort3(DIV, 2, 3, 4) == [1, 2, 12]
        for v in (0, 1, 12):
            assert sort3(DIV, v, v, v) == [v, v, v]
        assert sort3(ORDER, ORDER.top, 5, ORDER.bot) == [ORDER.bot, 5, ORDER.top]

    @pytest.mark.parametrize("fixture", FIXTURES)
    def test_equals_spec_exhaustively(self, fixture):
        lat = load_fixture(fixture)
        for x in itertools.product(lat.elements, repeat=3):
            assert sort3(lat, *x) == sort_spec(lat, x)

    @given(st.lists(st.integers(0, 2**16 - 1), min_size=3, max_size=3))
    def test_equals_spec_powerset(self, x):
        assert sort3(POW16, *x) == sort_spec(POW16, x)


seqs = st.lists(st.integers(1, 1000), max_size=7)


class TestProperties:
    @given(seqs)
    def test_nondecreasing(self, x):
        y = sort_spec(DIV, x)
        assert all(DIV.leq(a, b) for a, b in zip(y, y[1:]))

    @given(seqs)
    def test_idempotent(self, x):
        y = sort_spec(DIV, x)
        assert sort_spec(DIV, y) == y

    @given(seqs, st.randoms(use_true_random=False))
    def test_permutation_invariant(self, x, rnd):
        shuffled = list(x)
        rnd.shuffle(shuffled)
        assert sort_spec(DIV, shuffled) == sort_spec(DIV, x)

    @given(seqs.filter(bool))
    def test_first_and_last(self, x):
        y = sort_spec(DIV, x)
        assert y[0] == math.gcd(*x)
        assert y[-1] == math.lcm(*x)

    @settings(max_examples=50)
    @given(st.lists(st.integers(-(2**63), 2**63 - 1), max_size=8))
    def test_total_order_is_sorting(self, x):
        assert sort_spec(ORDER, x) == sorted(x)

    def test_non_distributive_still_nondecreasing(self):
        for lat in (canonical_n5(), canonical_m3()):
            for x in itertools.product(lat.elements, repeat=3):
                y = sort_spec(lat, x)
                assert all(lat.leq(a, b) for a, b in zip(y, y[1:]))
