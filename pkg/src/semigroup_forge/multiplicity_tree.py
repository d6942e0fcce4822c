"""The tree of all numerical semigroups sharing one multiplicity.

Rooted at the semigroup generated by m, m+1, ..., 2m-1, the tree hangs
every multiplicity-m semigroup at level g(S) - (m-1).  A node's sons
are obtained by deleting one minimal generator that exceeds the
Frobenius number (never the multiplicity itself); walking levels
breadth-first therefore enumerates by increasing genus.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ._threads import ordered_map
from .core import NumericalSemigroup, make_semigroup

__all__ = ["FrontierLevel", "root", "sons", "level", "bfs_levels"]


@dataclass(frozen=True)
class FrontierLevel:
    """One BFS level: all multiplicity-m semigroups of genus (m-1)+k."""

    level_index: int
    members: tuple[NumericalSemigroup, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[NumericalSemigroup]:
        return iter(self.members)


def root(m: int) -> NumericalSemigroup:
    """Largest multiplicity-m semigroup: 0 plus everything from m up."""
    return make_semigroup(range(m, 2 * m))


def sons(S: NumericalSemigroup) -> tuple[NumericalSemigroup, ...]:
    """Sons of S in the tree for its own multiplicity.

    Deleting a minimal generator x leaves a semigroup exactly when
    x > F(S) and x is not the multiplicity.  The result is generated by
    the remaining minimal generators plus x shifted by each of them
    (x + x included, covering double use of the deleted element).
    """
    out = []
    msg = S.min_gens
    m = S.multiplicity
    for x in msg:
        if x > S.frobenius and x != m:
            gens = [g for g in msg if g != x]
            gens.extend(x + g for g in msg)
            out.append(make_semigroup(gens))
    return tuple(sorted(out))


def bfs_levels(m: int) -> Iterator[FrontierLevel]:
    """Yield levels 0, 1, 2, ... of the multiplicity-m tree on demand.

    Only the current frontier is retained.  Distinct parents never share
    a son (each node's parent is recovered by re-adjoining its Frobenius
    number), so concatenating the per-parent son lists loses nothing;
    a set union guards the invariant anyway.
    """
    k = 0
    frontier = (root(m),)
    while True:
        yield FrontierLevel(level_index=k, members=frontier)
        expansions = ordered_map(sons, frontier)
        merged: set[NumericalSemigroup] = set()
        for batch in expansions:
            merged.update(batch)
        frontier = tuple(sorted(merged))
        k += 1


def level(m: int, k: int) -> FrontierLevel:
    """Level k of the multiplicity-m tree, computed by k expansions."""
    if k < 0:
        raise ValueError("level index must be non-negative")
    for lv in bfs_levels(m):
        if lv.level_index == k:
            return lv
    raise AssertionError("unreachable: bfs_levels is infinite")
