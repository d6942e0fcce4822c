"""Minimal genus and minimal Frobenius number at fixed (m, e).

Two independent routes exist for each minimum.  The tree route walks
the multiplicity-m tree: breadth-first by genus until the first level
containing dimension-e members (minimal genus), or pruned by a shrinking
Frobenius bound (minimal Frobenius).  The packed route reads the same
minima off the finite packed family, and recovers the full Frobenius
minimizer set by searching each minimizing packing class.  The routes
cross-check each other in the test suite.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ._threads import ordered_map
from .core import NumericalSemigroup, interval_frobenius, interval_genus
from .errors import BadDimension
from .multiplicity_tree import root, sons
from .packed import class_min_frobenius, enumerate_packed

__all__ = [
    "Existence",
    "SearchOutcome",
    "Incumbent",
    "WilfViolation",
    "existence",
    "min_genus",
    "min_genus_packed",
    "min_frobenius",
    "min_frobenius_value_packed",
    "min_frobenius_full_set",
    "wilf_audit",
]


class Existence(Enum):
    """Classification of the family with multiplicity m and dimension e."""

    EMPTY = "Empty"
    ONLY_NATURALS = "OnlyNaturals"
    NON_EMPTY = "NonEmpty"


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one minimization: the value and everything attaining it.

    `level` is set by genus searches only; it is the tree level where
    the minimizers live, so value = (m-1) + level.
    """

    kind: str
    m: int
    e: int
    value: int
    minimizers: tuple[NumericalSemigroup, ...]
    level: int | None = None


@dataclass(frozen=True)
class Incumbent:
    """A candidate minimizer paired with its Frobenius number."""

    semigroup: NumericalSemigroup
    frob: int


@dataclass(frozen=True)
class WilfViolation:
    """A semigroup breaking e(S)*g(S) <= (e(S)-1)*(F(S)+1)."""

    semigroup: NumericalSemigroup
    lhs: int
    rhs: int


def existence(m: int, e: int) -> Existence:
    """Whether any numerical semigroup has multiplicity m and dimension e.

    Empty when m < e (the dimension never exceeds the multiplicity) and
    when e = 1 < m (dimension one forces the naturals).  The pair (1, 1)
    is realized by the naturals alone; everything else with m >= e >= 2
    is realized, for instance by the interval semigroup.
    """
    if m < 1 or e < 1:
        return Existence.EMPTY
    if m == 1 and e == 1:
        return Existence.ONLY_NATURALS
    if e >= 2 and m >= e:
        return Existence.NON_EMPTY
    return Existence.EMPTY


def _require_dims(m: int, e: int) -> None:
    if not (m >= e >= 2):
        cls = existence(m, e)
        raise BadDimension(
            f"search needs m >= e >= 2, got m={m}, e={e} (family is {cls.value})",
            classification=cls,
        )


def min_genus(m: int, e: int, stats: dict | None = None) -> SearchOutcome:
    """Least genus among semigroups with multiplicity m and dimension e.

    Walks tree levels from the root; genus is constant on a level and
    grows by one per level, so the first level containing dimension-e
    members consists exactly of the minimizers.  The interval semigroup
    sits at a known level and has dimension e, which bounds the walk.
    """
    _require_dims(m, e)
    last_level = interval_genus(m, e) - (m - 1)
    frontier: tuple[NumericalSemigroup, ...] = (root(m),)
    visited = 0
    for k in range(last_level + 1):
        visited += len(frontier)
        hits = tuple(S for S in frontier if S.embedding_dim == e)
        if hits:
            if stats is not None:
                stats["nodes"] = visited
            return SearchOutcome(
                kind="genus",
                m=m,
                e=e,
                value=(m - 1) + k,
                minimizers=hits,
                level=k,
            )
        expansions = ordered_map(sons, frontier)
        merged: set[NumericalSemigroup] = set()
        for batch in expansions:
            merged.update(batch)
        frontier = tuple(sorted(merged))
    raise AssertionError("unreachable: the interval semigroup bounds the walk")


def min_genus_packed(m: int, e: int) -> SearchOutcome:
    """Same minimum as min_genus, read off the packed family.

    Packing never raises genus and is strict on unpacked input, so the
    packed members attaining the family minimum are all the minimizers.
    """
    _require_dims(m, e)
    family = enumerate_packed(m, e)
    best = min(S.genus for S in family)
    hits = tuple(S for S in family if S.genus == best)
    return SearchOutcome(
        kind="genus",
        m=m,
        e=e,
        value=best,
        minimizers=hits,
        level=best - (m - 1),
    )


def min_frobenius(m: int, e: int, stats: dict | None = None) -> SearchOutcome:
    """Least Frobenius number at (m, e), with every semigroup attaining it.

    Pruned walk of the multiplicity-m tree.  The Frobenius number grows
    strictly along edges, so nodes above the incumbent bound are dead;
    the dimension never grows along edges, so nodes below dimension e
    are dead too.  The bound starts at the interval-semigroup value and
    shrinks as dimension-e nodes appear.  The root itself is admitted as
    an incumbent when its dimension matches (e = m), which is the one
    case the son loop cannot see.
    """
    _require_dims(m, e)
    alpha = interval_frobenius(m, e)
    start = root(m)
    incumbents: list[Incumbent] = []
    if start.embedding_dim == e:
        alpha = min(alpha, start.frobenius)
        incumbents = [Incumbent(start, start.frobenius)]
    frontier = [start]
    visited = 1
    while True:
        expansions = ordered_map(sons, frontier)
        candidates = [T for batch in expansions for T in batch if T.frobenius <= alpha]
        keep = [T for T in candidates if T.embedding_dim >= e]
        visited += len(keep)
        if not keep:
            break
        frontier = keep
        hits = [T for T in keep if T.embedding_dim == e]
        if hits:
            alpha = min(alpha, min(T.frobenius for T in hits))
            incumbents.extend(Incumbent(T, T.frobenius) for T in hits)
            incumbents = [inc for inc in incumbents if inc.frob == alpha]
    if stats is not None:
        stats["nodes"] = visited
    assert incumbents, "a minimizer always survives the pruning"
    minimizers = tuple(sorted(inc.semigroup for inc in incumbents))
    return SearchOutcome(kind="frobenius", m=m, e=e, value=alpha, minimizers=minimizers)


def min_frobenius_value_packed(m: int, e: int) -> int:
    """Least Frobenius number at (m, e), read off the packed family."""
    _require_dims(m, e)
    return min(S.frobenius for S in enumerate_packed(m, e))


def min_frobenius_full_set(m: int, e: int) -> SearchOutcome:
    """Frobenius minimizers at (m, e) assembled class by class.

    Packing partitions the family into classes, one per packed member,
    and cannot raise the Frobenius number; so the minimizers are found
    inside the classes of the packed members attaining the minimum.
    """
    _require_dims(m, e)
    family = enumerate_packed(m, e)
    best = min(S.frobenius for S in family)
    heads = [S for S in family if S.frobenius == best]
    collected: set[NumericalSemigroup] = set()
    for batch in ordered_map(class_min_frobenius, heads):
        collected.update(batch)
    return SearchOutcome(
        kind="frobenius",
        m=m,
        e=e,
        value=best,
        minimizers=tuple(sorted(collected)),
    )


def wilf_audit(semigroups) -> tuple[WilfViolation, ...]:
    """Check e(S)*g(S) <= (e(S)-1)*(F(S)+1) on every input semigroup.

    The inequality is conjectured to always hold; any violation returned
    here is either an implementation bug or a publishable discovery, so
    callers must treat a non-empty report as fatal.
    """
    violations = []
    for S in sorted(semigroups):
        lhs = S.embedding_dim * S.genus
        rhs = (S.embedding_dim - 1) * (S.frobenius + 1)
        if lhs > rhs:
            violations.append(WilfViolation(semigroup=S, lhs=lhs, rhs=rhs))
    return tuple(violations)
