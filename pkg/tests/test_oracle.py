"""The brute-force sieve and the gap-set enumerator."""
import pytest

from semigroup_forge.core import make_semigroup
from semigroup_forge.errors import EmptyInput, InvalidGenerator, NotNumerical, Uncertified
from semigroup_forge.oracle import BOUND_CAP, enumerate_by_genus, sieve


def mk(*gens):
    return make_semigroup(gens)


class TestSieve:
    def test_small(self):
        r = sieve({4, 5, 7})
        assert r.frobenius == 6
        assert r.genus == 4
        assert r.certified

    def test_naturals(self):
        r = sieve({1})
        assert (r.frobenius, r.genus) == (-1, 0)

    def test_classic_instance(self):
        r = sieve({6, 9, 20})
        assert (r.frobenius, r.genus) == (43, 22)

    def test_reachable_table_is_membership(self):
        r = sieve({5, 7, 9})
        S = mk(5, 7, 9)
        for n in range(r.bound + 1):
            assert bool(r.reachable[n]) == (n in S)

    def test_small_bound_doubles(self):
        r = sieve({6, 9, 20}, bound=10)
        assert (r.frobenius, r.genus) == (43, 22)
        assert r.bound > 10

    def test_uncertified_past_cap(self):
        with pytest.raises(Uncertified):
            sieve({2, BOUND_CAP + 1})

    def test_errors(self):
        with pytest.raises(NotNumerical):
            sieve({2, 4})
        with pytest.raises(EmptyInput):
            sieve(set())
        with pytest.raises(InvalidGenerator):
            sieve({0, 3})


class TestEnumerateByGenus:
    def test_multiplicity_four_through_genus_four(self):
        got = enumerate_by_genus(4, 4)
        assert got == {
            mk(4, 5, 6, 7),
            mk(4, 6, 7, 9),
            mk(4, 5, 7),
            mk(4, 5, 6),
        }

    def test_naturals_only(self):
        assert enumerate_by_genus(1, 0) == {mk(1)}
        assert enumerate_by_genus(1, 7) == {mk(1)}

    def test_genus_minimizers_present(self):
        pop = enumerate_by_genus(5, 6)
        assert mk(5, 6, 7) in pop
        assert mk(5, 6, 8) in pop

    def test_bound_below_multiplicity_gaps(self):
        assert enumerate_by_genus(5, 3) == frozenset()

    def test_members_have_stated_invariants(self):
        for S in enumerate_by_genus(6, 8):
            assert S.multiplicity == 6
            assert S.genus <= 8
            assert S.embedding_dim == len(S.min_gens) <= 6
            r = sieve(S.min_gens)
            assert (r.frobenius, r.genus) == (S.frobenius, S.genus)

    def test_agrees_with_fast_construction(self):
        for S in enumerate_by_genus(5, 7):
            C = make_semigroup(S.min_gens)
            assert C.min_gens == S.min_gens
            assert C.frobenius == S.frobenius
            assert C.genus == S.genus
            assert C.apery.entries == S.apery.entries

    def test_rejects_bad_multiplicity(self):
        with pytest.raises(InvalidGenerator):
            enumerate_by_genus(0, 3)
