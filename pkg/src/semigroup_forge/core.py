"""Numerical-semigroup values and per-semigroup arithmetic.

A numerical semigroup is a subset of the non-negative integers that
contains 0, is closed under addition, and has finite complement.  The
value type here caches everything the rest of the library keeps asking
for: the minimal generating set, multiplicity, embedding dimension,
Apery table, Frobenius number, and genus.  Construction goes through
`make_semigroup`; all values are immutable and hashable.

The closed formulas for interval-generated semigroups (generators
m, m+1, ..., m+e-1) live here too, since they double as search bounds.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from ._backend import minimal_residues, residue_table
from .errors import (
    BadDimension,
    EmptyInput,
    InvalidGenerator,
    NotCoprime,
    NotMember,
    NotNumerical,
)

__all__ = [
    "AperyTable",
    "NumericalSemigroup",
    "make_semigroup",
    "contains",
    "apery_set",
    "frobenius_of",
    "genus_of",
    "sylvester_frobenius",
    "interval_apery",
    "interval_genus",
    "interval_frobenius",
    "monoid_contains",
]


@dataclass(frozen=True)
class AperyTable:
    """Least semigroup element per residue class.

    `entries[i]` is the least member congruent to i modulo `modulus`,
    and `coefficients[i]` is the k with entries[i] = k*modulus + i.
    Entry 0 is always 0.
    """

    modulus: int
    entries: tuple[int, ...]
    coefficients: tuple[int, ...]

    def __len__(self) -> int:
        return self.modulus

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True, eq=False, repr=False)
class NumericalSemigroup:
    """A numerical semigroup with its standard invariants precomputed.

    Identity, hashing, and ordering all go through `min_gens`, which is
    canonical (strictly increasing, minimal).  Membership testing is
    `n in S`; it reads the cached Apery table.
    """

    min_gens: tuple[int, ...]
    multiplicity: int
    embedding_dim: int
    max_gen: int
    apery: AperyTable
    frobenius: int
    genus: int

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.min_gens == other.min_gens

    def __hash__(self) -> int:
        return hash(self.min_gens)

    def __lt__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.min_gens < other.min_gens

    def __le__(self, other) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.min_gens <= other.min_gens

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        return n >= self.apery.entries[n % self.multiplicity]

    def __repr__(self) -> str:
        return "⟨" + ",".join(str(g) for g in self.min_gens) + "⟩"


def _check_generators(generators) -> list[int]:
    gens = set()
    for g in generators:
        if not isinstance(g, int) or isinstance(g, bool):
            raise InvalidGenerator(f"generator {g!r} is not an integer")
        if g < 1:
            raise InvalidGenerator(f"generator {g} is not positive")
        gens.add(g)
    if not gens:
        raise EmptyInput("at least one generator is required")
    return sorted(gens)


def make_semigroup(generators) -> NumericalSemigroup:
    """Build the canonical semigroup value for the given generators.

    Duplicates are dropped; redundant generators are removed, so
    `min_gens` is always the minimal system.  Raises EmptyInput on an
    empty collection, InvalidGenerator on a non-positive entry, and
    NotNumerical when the gcd of the generators exceeds 1 (the monoid
    then misses whole residue classes and is not a numerical semigroup).
    """
    gens = _check_generators(generators)
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise NotNumerical(f"gcd of generators is {g}, not 1")
    m = gens[0]
    coeffs = tuple(residue_table(m, gens))
    entries = tuple(k * m + i for i, k in enumerate(coeffs))
    frobenius = max(entries) - m
    genus = sum(coeffs)
    if m == 1:
        msg = (1,)
    else:
        msg = (m, *(entries[i] for i in minimal_residues(m, coeffs)))
        msg = tuple(sorted(msg))
    table = AperyTable(modulus=m, entries=entries, coefficients=coeffs)
    return NumericalSemigroup(
        min_gens=msg,
        multiplicity=m,
        embedding_dim=len(msg),
        max_gen=msg[-1],
        apery=table,
        frobenius=frobenius,
        genus=genus,
    )


def contains(S: NumericalSemigroup, n: int) -> bool:
    """Membership test: n is in S iff n >= 0 and n reaches its class minimum."""
    return n in S


def apery_set(S: NumericalSemigroup, n: int) -> AperyTable:
    """Apery table of S with respect to any nonzero member n."""
    if n == 0 or n not in S:
        raise NotMember(f"{n} is not a nonzero member of {S!r}")
    coeffs = tuple(residue_table(n, (*S.min_gens, n)))
    entries = tuple(k * n + i for i, k in enumerate(coeffs))
    return AperyTable(modulus=n, entries=entries, coefficients=coeffs)


def frobenius_of(S: NumericalSemigroup) -> int:
    """Largest integer outside S; -1 when S is all of the naturals."""
    return S.frobenius


def genus_of(S: NumericalSemigroup) -> int:
    """Number of positive integers outside S."""
    return S.genus


def sylvester_frobenius(n1: int, n2: int) -> int:
    """Frobenius number of a two-generator semigroup: n1*n2 - n1 - n2."""
    if n1 < 1 or n2 < 1:
        raise InvalidGenerator("generators must be positive")
    if gcd(n1, n2) != 1:
        raise NotCoprime(f"gcd({n1},{n2}) = {gcd(n1, n2)}")
    return n1 * n2 - n1 - n2


def _check_interval(m: int, e: int) -> None:
    if e < 2 or m < e:
        raise BadDimension(f"interval formulas need m >= e >= 2, got m={m}, e={e}")


def interval_apery(m: int, e: int) -> AperyTable:
    """Apery table of the interval semigroup with generators m..m+e-1.

    Built blockwise, no search: writing m-1 = q(e-1)+r, the nonzero
    entries are q full blocks of e-1 consecutive values plus a partial
    block of r values, block t sitting just above t*m.
    """
    _check_interval(m, e)
    q, r = divmod(m - 1, e - 1)
    entries = [0] * m
    for t in range(1, q + 1):
        base = t * m + (t - 1) * (e - 1)
        for j in range(1, e):
            x = base + j
            entries[x % m] = x
    base = (q + 1) * m + q * (e - 1)
    for j in range(1, r + 1):
        x = base + j
        entries[x % m] = x
    coeffs = tuple((entries[i] - i) // m for i in range(m))
    return AperyTable(modulus=m, entries=tuple(entries), coefficients=coeffs)


def interval_genus(m: int, e: int) -> int:
    """Genus of the interval semigroup with generators m..m+e-1."""
    _check_interval(m, e)
    q, r = divmod(m - 1, e - 1)
    return (q + 1) * q * (e - 1) // 2 + (q + 1) * r


def interval_frobenius(m: int, e: int) -> int:
    """Frobenius number of the interval semigroup: ceil((m-1)/(e-1))*m - 1."""
    _check_interval(m, e)
    return -((-(m - 1)) // (e - 1)) * m - 1


def monoid_contains(generators, n: int) -> bool:
    """Whether n is a non-negative integer combination of the generators.

    Works for any generator set, including gcd > 1, which rules out the
    Apery machinery; a bounded reachability table up to n is used instead.
    """
    if n < 0:
        return False
    if n == 0:
        return True
    gens = [g for g in set(generators) if 1 <= g <= n]
    reachable = bytearray(n + 1)
    reachable[0] = 1
    for g in sorted(gens):
        for i in range(g, n + 1):
            if reachable[i - g]:
                reachable[i] = 1
    return bool(reachable[n])
