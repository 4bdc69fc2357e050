"""Subgroup-level predicates: Schmidt subgroups, P-groups, subnormality,
permutability and modularity.

Modularity is decided twice. :func:`is_modular_direct` checks the two
lattice identities over all pairs of subgroups; :func:`is_modular_characterized`
searches for Schmidt's decomposition of ``G / M_G`` (nonabelian P-group
factors plus a factor in which ``M`` is permutable). The verifier compares them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd, prod
from typing import NamedTuple

from .groups import GroupTable
from .lattice import (
    Subgroup,
    SubgroupLattice,
    bits_of,
    closure_index,
    core_index,
    enumerate_subgroups,
    quotient,
)
from .structure import (
    EngineError,
    derived_index,
    factorize,
    nilpotent_index,
    sylow_index,
)


# -- Schmidt subgroups ----------------------------------------------------------

@dataclass(frozen=True)
class SchmidtWitness:
    """``S = P ⋊ Q`` with ``P`` the normal Sylow ``p``-subgroup and
    ``Q = <y>`` a non-normal cyclic Sylow ``q``-subgroup."""

    P: Subgroup
    Q: Subgroup
    p: int
    q: int
    y: int


def schmidt_index(L: SubgroupLattice, i: int) -> SchmidtWitness | None:
    key = ("schmidt", i)
    if key in L.cache:
        return L.cache[key]
    w = None
    if not nilpotent_index(L, i) and all(nilpotent_index(L, j) for j in L.maximal_below(i)):
        w = _schmidt_witness(L, i)
    L.cache[key] = w
    return w


def _schmidt_witness(L: SubgroupLattice, i: int) -> SchmidtWitness:
    G = L.group
    S = L[i]
    primes = factorize(L.order(i)).primes
    if len(primes) != 2:
        raise EngineError(f"Schmidt subgroup {S!r} has {len(primes)} prime divisors")
    counts = {r: sylow_index(L, r, i) for r in primes}
    normal = [r for r in primes if counts[r][1] == 1]
    if len(normal) != 1:
        raise EngineError(f"Schmidt subgroup {S!r} does not have exactly one normal Sylow subgroup")
    p = normal[0]
    q = primes[0] if primes[1] == p else primes[1]
    P_idx, Q_idx = counts[p][0], counts[q][0]
    Q = L[Q_idx]
    gens = [x for x in L.elements(Q_idx) if G.elem_order[x] == Q.order]
    if not gens:
        raise EngineError(f"Sylow {q}-subgroup of Schmidt subgroup {S!r} is not cyclic")
    y = gens[0]
    if L.is_normal_in(Q_idx, i) or L.join_index(P_idx, Q_idx) != i:
        raise EngineError(f"{S!r} is not P ⋊ Q with Q non-normal")
    if derived_index(L, i) != P_idx:
        raise EngineError(f"derived subgroup of Schmidt subgroup {S!r} differs from P")
    yq = G.power(y, q)
    if any(G.mul[yq][s] != G.mul[s][yq] for s in L.generators(i)):
        raise EngineError(f"y^q is not central in Schmidt subgroup {S!r}")
    return SchmidtWitness(L[P_idx], Q, p, q, y)


def schmidt_analyze(G: GroupTable, L: SubgroupLattice, S: Subgroup) -> SchmidtWitness | None:
    """Witness iff ``S`` is non-nilpotent with all maximal subgroups nilpotent."""
    return schmidt_index(L, L.idx(S))


# -- P-groups -------------------------------------------------------------------

@dataclass(frozen=True)
class PGroupWitness:
    kind: str  # "elementary_abelian" or "nonabelian"
    p: int
    n: int
    q: int | None = None
    power_exponent: int | None = None

    @property
    def order(self) -> int:
        if self.kind == "elementary_abelian":
            return self.p ** (self.n + 1)
        return self.p**self.n * self.q


def p_group_class(G: GroupTable, L: SubgroupLattice | None = None) -> PGroupWitness | None:
    """Classify ``G`` as a P-group.

    Either elementary abelian of order ``p^(n+1)``, or ``A ⋊ <y>`` with ``A``
    elementary abelian of order ``p^n`` and ``y`` of prime order ``q != p``
    acting on ``A`` as a non-identity power map ``a -> a^k``.
    """
    fact = factorize(G.order)
    if G.order == 1 or len(fact.pairs) > 2:
        return None
    if len(fact.pairs) == 1:
        p, e = fact.pairs[0]
        if G.is_abelian() and all(o in (1, p) for o in G.elem_order):
            return PGroupWitness("elementary_abelian", p, e - 1)
        return None
    if L is None:
        L = enumerate_subgroups(G)
    for (p, n), (q, f) in (fact.pairs, fact.pairs[::-1]):
        if f != 1:
            continue
        a_idx, count = sylow_index(L, p, L.top)
        if count != 1:
            continue
        A = L.elements(a_idx)
        if any(G.elem_order[a] not in (1, p) for a in A):
            continue
        if any(G.mul[a][b] != G.mul[b][a] for a in A for b in A):
            continue
        y = next(x for x in range(G.order) if G.elem_order[x] == q)
        a0 = next(a for a in A if a != G.identity)
        image = G.conj(a0, y)
        k = next((k for k in range(1, p) if G.power(a0, k) == image), None)
        if k is None or k == 1:
            continue
        if any(G.conj(a, y) != G.power(a, k) for a in A):
            continue
        return PGroupWitness("nonabelian", p, n, q, k)
    return None


def section_p_group(L: SubgroupLattice, s: int, k: int) -> PGroupWitness | None:
    """P-group class of ``S_s / K_k`` (``K`` normal in ``S``)."""
    key = ("pgroup", s, k)
    if key not in L.cache:
        Q = quotient(L.group, L, L[k], within=L[s]).quotient
        L.cache[key] = p_group_class(Q)
    return L.cache[key]


# -- subnormality, permutability ---------------------------------------------------

class Subnormality(NamedTuple):
    subnormal: bool
    defect: int | None


def subnormal_index(L: SubgroupLattice, i: int) -> Subnormality:
    key = ("subnormal", i)
    hit = L.cache.get(key)
    if hit is None:
        cur, steps = L.top, 0
        while cur != i:
            nxt = closure_index(L, i, cur)
            if nxt == cur:
                break
            cur, steps = nxt, steps + 1
        hit = L.cache[key] = Subnormality(True, steps) if cur == i else Subnormality(False, None)
    return hit


def is_subnormal(G: GroupTable, L: SubgroupLattice, H: Subgroup) -> Subnormality:
    """Iterated normal closures ``G = H_0 >= H_1 >= ...``; ``defect`` counts strict steps."""
    return subnormal_index(L, L.idx(H))


def permutable_index(L: SubgroupLattice, i: int) -> bool:
    key = ("permutable", i)
    hit = L.cache.get(key)
    if hit is None:
        if L.is_normal_in(i):
            hit = True
        else:
            # HK is a subgroup iff it fills the join, i.e. |H||K|/|H∩K| = |<H,K>|.
            hi = L.order(i)
            hit = all(
                hi * L.order(k) == L.order(L.meet_index(i, k)) * L.order(L.join_index(i, k))
                for k in range(len(L))
            )
        L.cache[key] = hit
    return hit


def is_permutable(G: GroupTable, L: SubgroupLattice, H: Subgroup) -> bool:
    """``HK = KH`` for every subgroup ``K``."""
    return permutable_index(L, L.idx(H))


def product_set(G: GroupTable, A: Subgroup, B: Subgroup) -> int:
    m = G.mul
    return bits_of(m[a][b] for a in A.members for b in B.members)


# -- modularity ---------------------------------------------------------------------

def modular_direct_index(L: SubgroupLattice, m: int) -> bool:
    key = ("modular", m)
    hit = L.cache.get(key)
    if hit is not None:
        return hit
    hit = L.cache[key] = _modular_identities(L, m) is None
    return hit


def modular_violation(L: SubgroupLattice, m: int) -> tuple[int, int, str] | None:
    """First ``(X, Z, identity)`` breaking modularity of ``m``, if any."""
    return _modular_identities(L, m)


def _modular_identities(L: SubgroupLattice, m: int) -> tuple[int, int, str] | None:
    join, meet = L.join_index, L.meet_index
    subs = L.subgroups
    mb = subs[m].bits
    n = len(L)
    for z in range(n):
        zb = subs[z].bits
        if mb & ~zb == 0:
            # (ii) M <= Z: (M v X) ^ Z = M v (X ^ Z) for all X
            for x in range(n):
                if meet(join(m, x), z) != join(m, meet(x, z)):
                    return (x, z, "ii")
        else:
            # (i) X <= Z: (X v M) ^ Z = X v (M ^ Z); trivial when X <= M
            mz = meet(m, z)
            for x in L.below(z):
                if subs[x].bits & ~mb == 0:
                    continue
                if meet(join(x, m), z) != join(x, mz):
                    return (x, z, "i")
    return None


def is_modular_direct(G: GroupTable, L: SubgroupLattice, M: Subgroup) -> bool:
    """``M`` is a modular element of the subgroup lattice.

    For all subgroups X, Z: if X <= Z then <X, M> ∩ Z = <X, M ∩ Z>, and if
    M <= Z then <M, X> ∩ Z = <M, X ∩ Z>.
    """
    return modular_direct_index(L, L.idx(M))


@dataclass(frozen=True)
class Decomposition:
    """``G/K = S_1/K x ... x S_r/K x T/K`` with ``K`` the core of ``M``."""

    core: Subgroup
    S_list: tuple[Subgroup, ...]
    T: Subgroup
    Q_list: tuple[Subgroup, ...]
    p_groups: tuple[PGroupWitness, ...] = field(default=())

    @property
    def r(self) -> int:
        return len(self.S_list)


@dataclass(frozen=True)
class ModularityVerdict:
    direct: bool
    characterized: bool
    decomposition: Decomposition | None

    @property
    def consistent(self) -> bool:
        return self.direct == self.characterized


class ModularityMismatch(EngineError):
    pass


def characterize_index(L: SubgroupLattice, m: int) -> Decomposition | None:
    key = ("characterized", m)
    if key in L.cache:
        return L.cache[key]
    L.cache[key] = res = _search_decomposition(L, m)
    return res


def _search_decomposition(L: SubgroupLattice, m: int) -> Decomposition | None:
    k = core_index(L, m)
    nk = L.order(k)
    index = L.order(L.top) // nk
    over = [n for n in L.normal_subgroups() if L.contains(n, k)]
    cands = []
    for s in over:
        if s == k:
            continue
        w = section_p_group(L, s, k)
        if w is not None and w.kind == "nonabelian":
            cands.append((s, w))
    max_r = len(factorize(index).primes) // 2
    for r in range(max_r + 1):
        for combo in combinations(cands, r):
            orders = [L.order(s) // nk for s, _ in combo]
            if any(gcd(a, b) != 1 for a, b in combinations(orders, 2)):
                continue
            if index % prod(orders):
                continue
            rest = index // prod(orders)
            for t in over:
                if L.order(t) // nk != rest or any(gcd(rest, o) != 1 for o in orders):
                    continue
                found = _check_decomposition(L, m, k, [s for s, _ in combo], t)
                if found is not None:
                    return Decomposition(
                        L[k],
                        tuple(L[s] for s, _ in combo),
                        L[t],
                        tuple(L[q] for q in found),
                        tuple(w for _, w in combo),
                    )
    return None


def _check_decomposition(L: SubgroupLattice, m: int, k: int, S: list[int], t: int) -> list[int] | None:
    factors = S + [t]
    # internal direct product: pairwise trivial (mod K) meets, join is everything
    for a, b in combinations(factors, 2):
        if L.meet_index(a, b) != k:
            return None
    acc = k
    for f in factors:
        acc = L.join_index(acc, f)
    if acc != L.top:
        return None
    nk = L.order(k)
    qs = []
    for s in S:
        qi = L.meet_index(m, s)
        qo = L.order(qi) // nk
        so = L.order(s) // nk
        fq = factorize(qo)
        if qo == 1 or len(fq.pairs) != 1:
            return None
        prime = fq.primes[0]
        if factorize(so).exponent(prime) != fq.pairs[0][1]:
            return None
        if L.is_normal_in(qi, s):
            return None
        qs.append(qi)
    mt = L.meet_index(m, t)
    acc = mt
    for qi in qs:
        acc = L.join_index(acc, qi)
    if acc != m:
        return None
    if not permutable_index(L, mt):
        return None
    return qs


def is_modular_characterized(
    G: GroupTable, L: SubgroupLattice, M: Subgroup, strict: bool = False
) -> ModularityVerdict:
    """Decide modularity by searching for Schmidt's decomposition of ``G/M_G``.

    The verdict also carries the direct lattice test; with ``strict`` a
    disagreement raises :class:`ModularityMismatch`.
    """
    m = L.idx(M)
    dec = characterize_index(L, m)
    verdict = ModularityVerdict(modular_direct_index(L, m), dec is not None, dec)
    if strict and not verdict.consistent:
        raise ModularityMismatch(f"modularity tests disagree on {M!r}: {verdict}")
    return verdict
