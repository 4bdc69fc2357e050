"""Structural predicates and characteristic subgroups.

Every function works on a subgroup of ``G`` given by ``within`` (default: all
of ``G``), using the subgroups of ``L`` below it as that subgroup's lattice.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import NamedTuple

from .groups import GroupTable
from .lattice import Subgroup, SubgroupLattice, generate


class EngineError(AssertionError):
    """An internal consistency check failed (engine bug or theory violation)."""


@dataclass(frozen=True)
class PrimeFactorization:
    pairs: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.pairs)

    def exponent(self, p: int) -> int:
        return dict(self.pairs).get(p, 0)


def factorize(n: int) -> PrimeFactorization:
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    pairs = []
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            pairs.append((p, e))
        p += 1
    if n > 1:
        pairs.append((n, 1))
    return PrimeFactorization(tuple(pairs))


def is_prime(n: int) -> bool:
    return n > 1 and factorize(n).pairs == ((n, 1),)


def radical(n: int) -> int:
    return prod(factorize(n).primes)


class BasicPredicates(NamedTuple):
    is_abelian: bool
    is_cyclic: bool


def basic_predicates(G: GroupTable, within: Subgroup | None = None) -> BasicPredicates:
    if within is None:
        elems = range(G.order)
        n = G.order
    else:
        elems = within.members
        n = within.order
    m = G.mul
    abelian = all(m[x][y] == m[y][x] for x in elems for y in elems if x < y)
    cyclic = any(G.elem_order[x] == n for x in elems)
    return BasicPredicates(abelian, cyclic)


def _w(L: SubgroupLattice, within) -> int:
    return L.idx(within)


class SylowInfo(NamedTuple):
    subgroup: Subgroup
    count: int


def sylow_index(L: SubgroupLattice, p: int, within: int) -> tuple[int, int]:
    key = ("sylow", p, within)
    hit = L.cache.get(key)
    if hit is None:
        n = L.order(within)
        if n % p:
            raise ValueError(f"{p} does not divide {n}")
        pa = p ** factorize(n).exponent(p)
        found = [j for j in L.below(within) if L.order(j) == pa]
        hit = L.cache[key] = (found[0], len(found))
    return hit


def sylow_subgroup(G: GroupTable, L: SubgroupLattice, p: int, within: Subgroup | None = None) -> SylowInfo:
    """First Sylow ``p``-subgroup in lattice order, with the number of them."""
    i, count = sylow_index(L, p, _w(L, within))
    return SylowInfo(L[i], count)


def nilpotent_index(L: SubgroupLattice, i: int) -> bool:
    key = ("nilpotent", i)
    hit = L.cache.get(key)
    if hit is None:
        hit = L.cache[key] = all(
            sylow_index(L, p, i)[1] == 1 for p in factorize(L.order(i)).primes
        )
    return hit


def is_nilpotent(G: GroupTable, L: SubgroupLattice, within: Subgroup | None = None) -> bool:
    """All Sylow subgroups normal."""
    return nilpotent_index(L, _w(L, within))


def supersoluble_index(L: SubgroupLattice, i: int) -> bool:
    key = ("supersoluble", i)
    hit = L.cache.get(key)
    if hit is not None:
        return hit
    # H is supersoluble iff some N normal of prime order has H/N supersoluble.
    # By correspondence this unrolls to a chain 1 = N_0 < ... < N_k = H of
    # subgroups normal in H with prime-order steps.
    normals = L.normal_subgroups(i)
    good: dict[int, bool] = {i: True}
    for n in reversed(normals):  # decreasing order, so supersets come first
        if n == i:
            continue
        good[n] = any(
            good[m]
            for m in normals
            if m in good and L.order(m) > L.order(n) and L.contains(m, n)
            and is_prime(L.order(m) // L.order(n))
        )
    hit = L.cache[key] = good[L.bottom] if i != L.bottom else True
    return hit


def is_supersoluble(G: GroupTable, L: SubgroupLattice, within: Subgroup | None = None) -> bool:
    return supersoluble_index(L, _w(L, within))


def derived_index(L: SubgroupLattice, i: int) -> int:
    key = ("derived", i)
    hit = L.cache.get(key)
    if hit is None:
        G = L.group
        elems = L.elements(i)
        comms = {G.commutator(x, y) for x in elems for y in elems if x < y}
        bits, _, _ = generate(G, sorted(comms))
        hit = L.cache[key] = L.index_of[bits]
    return hit


def derived_subgroup(G: GroupTable, L: SubgroupLattice, within: Subgroup | None = None) -> Subgroup:
    return L[derived_index(L, _w(L, within))]


def frattini_index(L: SubgroupLattice, i: int) -> int:
    b = L[i].bits
    for j in L.maximal_below(i):
        b &= L[j].bits
    return L.index_of[b]


def frattini_subgroup(G: GroupTable, L: SubgroupLattice, within: Subgroup | None = None) -> Subgroup:
    """Intersection of the maximal subgroups (the trivial group for trivial input)."""
    return L[frattini_index(L, _w(L, within))]


def fitting_index(L: SubgroupLattice, i: int) -> int:
    key = ("fitting", i)
    hit = L.cache.get(key)
    if hit is None:
        nil = [n for n in L.normal_subgroups(i) if nilpotent_index(L, n)]
        hit = nil[-1]
        for n in nil:
            if not L.contains(hit, n):
                raise EngineError(
                    f"normal nilpotent subgroup {L[n]!r} not inside candidate Fitting subgroup"
                )
        L.cache[key] = hit
    return hit


def fitting_subgroup(G: GroupTable, L: SubgroupLattice, within: Subgroup | None = None) -> Subgroup:
    """Largest normal nilpotent subgroup."""
    return L[fitting_index(L, _w(L, within))]


def quotient_in_a1(L: SubgroupLattice, i: int, n: int) -> bool:
    """``H_i / N_n`` is abelian with squarefree exponent (``N`` normal in ``H``)."""
    if not L.contains(n, derived_index(L, i)):
        return False
    G = L.group
    e = radical(L.order(i) // L.order(n))
    nb = L[n].bits
    return all(nb >> G.power(x, e) & 1 for x in L.elements(i))


def a1_residual_index(L: SubgroupLattice, i: int) -> int:
    key = ("a1", i)
    hit = L.cache.get(key)
    if hit is None:
        b = L[i].bits
        for n in L.normal_subgroups(i):
            if quotient_in_a1(L, i, n):
                b &= L[n].bits
        hit = L.index_of[b]
        if not quotient_in_a1(L, i, hit):
            raise EngineError(f"quotient by the A1-residual {L[hit]!r} is not in A1")
        L.cache[key] = hit
    return hit


def a1_residual(G: GroupTable, L: SubgroupLattice, within: Subgroup | None = None) -> Subgroup:
    """Smallest normal subgroup with abelian quotient of squarefree exponent."""
    return L[a1_residual_index(L, _w(L, within))]
