"""Root, son rule, and level walks of the fixed-multiplicity tree."""
from itertools import islice

import pytest

from semigroup_forge.core import make_semigroup
from semigroup_forge.multiplicity_tree import bfs_levels, level, root, sons
from semigroup_forge.oracle import enumerate_by_genus


def mk(*gens):
    return make_semigroup(gens)


LEVELS_M4 = [
    {mk(4, 5, 6, 7)},
    {mk(4, 6, 7, 9), mk(4, 5, 7), mk(4, 5, 6)},
    {mk(4, 7, 9, 10), mk(4, 6, 9, 11), mk(4, 6, 7), mk(4, 5, 11)},
    {
        mk(4, 9, 10, 11),
        mk(4, 7, 10, 13),
        mk(4, 7, 9),
        mk(4, 6, 11, 13),
        mk(4, 6, 9),
        mk(4, 5),
    },
]


class TestRoot:
    def test_examples(self):
        assert root(4) == mk(4, 5, 6, 7)
        assert root(1) == mk(1)
        assert root(6) == mk(6, 7, 8, 9, 10, 11)

    def test_root_generators_are_minimal(self):
        for m in range(2, 10):
            assert root(m).min_gens == tuple(range(m, 2 * m))
            assert root(m).frobenius == m - 1
            assert root(m).genus == m - 1


class TestSons:
    def test_root_of_four(self):
        assert set(sons(root(4))) == {mk(4, 6, 7, 9), mk(4, 5, 7), mk(4, 5, 6)}

    def test_leaf(self):
        assert sons(mk(4, 5)) == ()

    def test_single_son(self):
        assert sons(mk(4, 5, 7)) == (mk(4, 5, 11),)

    def test_naturals_have_no_sons(self):
        assert sons(mk(1)) == ()

    def test_son_is_parent_minus_one_element(self):
        for parent in (root(5), mk(5, 6, 8), mk(6, 9, 20)):
            for son in sons(parent):
                removed = [n for n in range(0, parent.frobenius + 2 * parent.multiplicity + 1)
                           if n in parent and n not in son]
                assert len(removed) == 1
                x = removed[0]
                assert x in parent.min_gens
                assert x > parent.frobenius
                assert x != parent.multiplicity


class TestLevels:
    def test_frozen_levels_multiplicity_four(self):
        for k, expected in enumerate(LEVELS_M4):
            lv = level(4, k)
            assert set(lv.members) == expected
            assert lv.level_index == k
            assert list(lv.members) == sorted(expected)

    def test_stream_matches_level(self):
        stream = list(islice(bfs_levels(4), 4))
        assert [set(lv.members) for lv in stream] == LEVELS_M4

    def test_multiplicity_one_dries_up(self):
        first, second = islice(bfs_levels(1), 2)
        assert list(first.members) == [mk(1)]
        assert list(second.members) == []

    def test_negative_level_rejected(self):
        with pytest.raises(ValueError):
            level(4, -1)

    def test_genus_constant_on_level(self):
        for m in (3, 5):
            for lv in islice(bfs_levels(m), 5):
                for S in lv:
                    assert S.multiplicity == m
                    assert S.genus == (m - 1) + lv.level_index


class TestEdgeInvariants:
    def test_son_edges(self):
        for m in range(2, 8):
            for lv in islice(bfs_levels(m), 6):
                for parent in lv:
                    for son in sons(parent):
                        assert son.genus == parent.genus + 1
                        assert son.frobenius > parent.frobenius
                        assert son.embedding_dim <= parent.embedding_dim

    def test_no_duplicates_across_levels(self):
        seen = set()
        for lv in islice(bfs_levels(5), 6):
            members = set(lv.members)
            assert len(members) == len(lv.members)
            assert not (members & seen)
            seen |= members


class TestExhaustiveness:
    def test_levels_match_oracle_slices(self):
        for m in range(2, 7):
            by_genus = enumerate_by_genus(m, (m - 1) + 5)
            for k, lv in enumerate(islice(bfs_levels(m), 6)):
                expected = {S for S in by_genus if S.genus == (m - 1) + k}
                assert set(lv.members) == expected, (m, k)

    def test_union_of_levels_is_complete(self):
        for m in range(2, 7):
            bound = m + 5
            collected = set()
            for lv in islice(bfs_levels(m), bound - (m - 1) + 1):
                collected |= set(lv.members)
            assert collected == enumerate_by_genus(m, bound)
