"""Brute-force ground truth for the fast paths.

Everything here works straight from the definition (closure under
addition), on purpose: no Apery tables, no residue kernels, no son
rules.  The sieve recomputes Frobenius number and genus by plain
reachability, and the enumerator rebuilds the population of semigroups
with given multiplicity and bounded genus by gap-set backtracking.
Deliberately naive; desk scale only.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import AperyTable, NumericalSemigroup
from .errors import EmptyInput, InvalidGenerator, NotNumerical, Uncertified

__all__ = ["SieveResult", "sieve", "enumerate_by_genus", "BOUND_CAP"]

# Largest reachability table the sieve will allocate before giving up.
BOUND_CAP = 1 << 20


@dataclass(frozen=True)
class SieveResult:
    """Outcome of one reachability sieve.

    `reachable[i]` is 1 iff i is a member, exact for all i <= bound.
    `certified` records that min(generators) consecutive members were
    observed below the bound, which pins down frobenius and genus.
    """

    generators: tuple[int, ...]
    bound: int
    reachable: bytes
    frobenius: int
    genus: int
    certified: bool


def _sieve_once(gens: list[int], bound: int) -> bytes:
    table = bytearray(bound + 1)
    table[0] = 1
    for g in gens:
        if g > bound:
            continue
        for i in range(g, bound + 1):
            if table[i - g]:
                table[i] = 1
    return bytes(table)


def sieve(generators, bound: int | None = None) -> SieveResult:
    """Frobenius number and genus of <generators> by direct reachability.

    The default bound is the product of the two smallest generators plus
    the largest one.  Whenever the table ends less than min(generators)
    steps past its last hole, the answer is not yet pinned down and the
    bound doubles; past BOUND_CAP entries the sieve raises Uncertified.
    """
    gens = sorted(set(generators))
    if not gens:
        raise EmptyInput("at least one generator is required")
    if gens[0] < 1:
        raise InvalidGenerator(f"generator {gens[0]} is not positive")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise NotNumerical(f"gcd of generators is {g}, not 1")
    m = gens[0]
    if bound is None:
        second = gens[1] if len(gens) > 1 else gens[0]
        bound = gens[0] * second + gens[-1]
    bound = max(bound, m)
    while True:
        if bound + 1 > BOUND_CAP:
            raise Uncertified(
                f"no certifying run of {m} members below the {BOUND_CAP}-entry cap"
            )
        table = _sieve_once(gens, bound)
        frobenius = -1
        for i in range(bound, 0, -1):
            if not table[i]:
                frobenius = i
                break
        if frobenius + m <= bound:
            genus = sum(1 for i in range(1, bound + 1) if not table[i])
            return SieveResult(
                generators=tuple(gens),
                bound=bound,
                reachable=table,
                frobenius=frobenius,
                genus=genus,
                certified=True,
            )
        bound *= 2


def _finish(member: bytearray, m: int, horizon: int, gap_count: int) -> NumericalSemigroup:
    # Everything past the decision window is a member; extend far enough
    # to cover every residue class minimum and every minimal generator.
    full = bytearray(member)
    full.extend(b"\x01" * (horizon + m + 1 - len(full)))
    top = len(full) - 1
    frobenius = -1
    for i in range(horizon, 0, -1):
        if not full[i]:
            frobenius = i
            break
    entries = []
    for i in range(m):
        x = i
        while not full[x]:
            x += m
        entries.append(x)
    coeffs = tuple((entries[i] - i) // m for i in range(m))
    msg = []
    for x in range(m, top + 1):
        if not full[x]:
            continue
        if any(full[a] and full[x - a] for a in range(m, x - m + 1)):
            continue
        msg.append(x)
    table = AperyTable(modulus=m, entries=tuple(entries), coefficients=coeffs)
    return NumericalSemigroup(
        min_gens=tuple(msg),
        multiplicity=m,
        embedding_dim=len(msg),
        max_gen=msg[-1],
        apery=table,
        frobenius=frobenius,
        genus=gap_count,
    )


def enumerate_by_genus(m: int, genus_bound: int) -> frozenset[NumericalSemigroup]:
    """All numerical semigroups with multiplicity m and genus <= genus_bound.

    Backtracks over which integers in [1, 2*genus_bound] are gaps: each
    candidate position is forced to be a member when it is a sum of two
    already-chosen members, and otherwise branches both ways.  Every gap
    of such a semigroup is at most 2*genus - 1, so the window is complete.
    """
    if m < 1:
        raise InvalidGenerator(f"multiplicity {m} is not positive")
    if genus_bound < m - 1:
        return frozenset()
    horizon = max(2 * genus_bound, m)
    member = bytearray(horizon + 1)
    member[0] = 1
    member[m] = 1
    found: list[NumericalSemigroup] = []

    def walk(n: int, gap_count: int) -> None:
        if n > horizon:
            found.append(_finish(member, m, horizon, gap_count))
            return
        # Positions above n are scratch: every frame overwrites member[n]
        # before anything reads it, so no undo step is needed here.
        forced = any(member[a] and member[n - a] for a in range(m, n - m + 1))
        member[n] = 1
        walk(n + 1, gap_count)
        if not forced and gap_count < genus_bound:
            member[n] = 0
            walk(n + 1, gap_count + 1)

    walk(m + 1, m - 1)
    return frozenset(found)
