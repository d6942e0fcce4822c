"""Packed semigroups and their equivalence classes.

A semigroup is packed when all minimal generators fit in [m, 2m-1].
Packed semigroups with fixed multiplicity m and embedding dimension e
are few and easy to enumerate, and the packing map (reduce every
generator mod m, then add m) sends each member of L(m,e) to one of
them without ever raising genus or Frobenius number.  That makes the
packed family a complete set of class representatives on which both
minima can be read off, and each class can then be searched separately
for the full minimizing set.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator

from ._threads import ordered_map
from .core import NumericalSemigroup, frobenius_of, make_semigroup, monoid_contains
from .errors import BadDimension, Degenerate, NotPacked

__all__ = [
    "PackedFamily",
    "enumerate_packed",
    "pack",
    "is_packed",
    "class_sons",
    "class_min_frobenius",
]


@dataclass(frozen=True)
class PackedFamily:
    """All packed semigroups with the given multiplicity and dimension."""

    m: int
    e: int
    members: tuple[NumericalSemigroup, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[NumericalSemigroup]:
        return iter(self.members)


def enumerate_packed(m: int, e: int) -> PackedFamily:
    """Every packed semigroup with multiplicity m and embedding dimension e.

    Each one is determined by the e-1 nonzero residues of its larger
    generators, so the enumeration walks (e-1)-subsets of {1, ..., m-1}
    in lexicographic order, keeping those whose gcd together with m is 1.
    The subset {a1 < a2 < ...} yields generators {m, m+a1, m+a2, ...};
    distinct residues below 2m are automatically a minimal system.
    """
    if e < 2 or m < e:
        raise BadDimension(f"packed enumeration needs m >= e >= 2, got m={m}, e={e}")
    members: list[NumericalSemigroup] = []
    picked: list[int] = []

    def extend(start: int, g: int) -> None:
        if len(picked) == e - 1:
            if g == 1:
                members.append(make_semigroup([m, *(m + a for a in picked)]))
            return
        # Need e-1-len(picked) more residues from [start, m-1].
        last_start = m - (e - 1 - len(picked))
        for a in range(start, last_start + 1):
            picked.append(a)
            extend(a + 1, gcd(g, a))
            picked.pop()

    extend(1, m)
    return PackedFamily(m=m, e=e, members=tuple(members))


def is_packed(S: NumericalSemigroup) -> bool:
    """True iff every minimal generator lies in [m, 2m-1]."""
    return S.max_gen < 2 * S.multiplicity


def pack(S: NumericalSemigroup) -> NumericalSemigroup:
    """Packed representative of S: generators reduced mod m, shifted by m.

    Identity on packed input.  The naturals are rejected: their single
    generator has residue 0 and the map has nothing to act on.
    """
    if S.embedding_dim < 2:
        raise Degenerate("packing needs at least two minimal generators")
    m = S.multiplicity
    return make_semigroup({m + (x % m) for x in S.min_gens})


def class_sons(P: NumericalSemigroup) -> tuple[NumericalSemigroup, ...]:
    """Sons of P in the tree of its packing class.

    Replacing a non-multiplicity generator n_k by n_k + m stays in the
    class; it is a son exactly when the new value exceeds the current
    largest generator and is not already representable by the remaining
    generators.  Those generators may have gcd > 1, hence the bounded
    monoid check instead of semigroup membership.
    """
    m = P.multiplicity
    out = []
    for k in range(1, P.embedding_dim):
        lifted = P.min_gens[k] + m
        if lifted <= P.max_gen:
            continue
        rest = P.min_gens[:k] + P.min_gens[k + 1 :]
        if monoid_contains(rest, lifted):
            continue
        son = make_semigroup((*rest, lifted))
        # The replacement set is provably minimal; a shrunken msg here
        # would mean a membership bug upstream, not a bad input.
        assert son.min_gens == (*rest, lifted), son
        out.append(son)
    return tuple(sorted(out))


def class_min_frobenius(S: NumericalSemigroup) -> tuple[NumericalSemigroup, ...]:
    """All semigroups in the packing class of S with the same Frobenius number.

    S must be packed (it is then the class root, realizing the minimal
    Frobenius number of the class).  BFS over the class tree, keeping
    only sons whose Frobenius number still equals F(S); generator sums
    grow strictly along class edges, so the walk terminates.
    """
    if not is_packed(S):
        raise NotPacked(f"{S!r} has a minimal generator >= 2*m")
    if S.embedding_dim < 2:
        return (S,)
    target = frobenius_of(S)
    accepted = {S}
    frontier = [S]
    while frontier:
        expansions = ordered_map(class_sons, frontier)
        nxt = []
        for batch in expansions:
            for T in batch:
                if T.frobenius == target and T not in accepted:
                    accepted.add(T)
                    nxt.append(T)
        frontier = nxt
    return tuple(sorted(accepted))
