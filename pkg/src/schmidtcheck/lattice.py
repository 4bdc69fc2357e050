"""Subgroup lattice enumeration, lattice operations, cores, closures, quotients.

Subgroups are bitsets over element indices, stored as Python ints: bit ``x``
is set iff element ``x`` is a member. Intersection, union and containment are
then single integer operations.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .groups import CapacityError, GroupTable

DEFAULT_LATTICE_CAP = 200
DEFAULT_MAX_SUBGROUPS = 5000


def bits_of(elements: Iterable[int]) -> int:
    b = 0
    for x in elements:
        b |= 1 << x
    return b


def members_of(bits: int) -> list[int]:
    s = bin(bits)[:1:-1]
    return [i for i, c in enumerate(s) if c == "1"]


@dataclass(frozen=True)
class Subgroup:
    bits: int

    @property
    def order(self) -> int:
        return self.bits.bit_count()

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(members_of(self.bits))

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    def __le__(self, other: Subgroup) -> bool:
        return self.bits & ~other.bits == 0

    def __lt__(self, other: Subgroup) -> bool:
        return self.bits != other.bits and self <= other

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order}, members={list(self.members)})"


# -- closure (Dimino) ---------------------------------------------------------

def _extend(G: GroupTable, elems: list[int], seen: bytearray, gens: list[int], g: int) -> list[int]:
    """Grow ``<gens>`` (given as ``elems``, flagged in ``seen``) by ``g``.

    The result is assembled as a union of right cosets of the starting
    subgroup. ``elems`` and ``seen`` are extended in place.
    """
    mul = G.mul
    base = list(elems)
    gens.append(g)
    reps = [G.identity]
    k = 0
    while k < len(reps):
        r = reps[k]
        for s in gens:
            t = mul[r][s]
            if not seen[t]:
                reps.append(t)
                for h in base:
                    x = mul[h][t]
                    seen[x] = 1
                    elems.append(x)
        k += 1
    return elems


def generate(
    G: GroupTable,
    gens: Iterable[int],
    start: Sequence[int] = (),
    start_gens: Sequence[int] = (),
) -> tuple[int, list[int], list[int]]:
    """Subgroup generated by ``gens`` together with the subgroup ``start``
    (its element list, generated by ``start_gens``).

    Returns ``(bits, elements, generators)`` where ``generators`` extends
    ``start_gens`` by the members of ``gens`` that were actually needed.
    """
    seen = bytearray(G.order)
    elems = list(start) if start else [G.identity]
    for x in elems:
        seen[x] = 1
    used = list(start_gens)
    for g in gens:
        if not seen[g]:
            _extend(G, elems, seen, used, g)
    return bits_of(elems), elems, used


def cyclic_bits(G: GroupTable, x: int) -> int:
    b, y = 1 << G.identity, x
    while y != G.identity:
        b |= 1 << y
        y = G.mul[y][x]
    return b


def conjugate_bits(G: GroupTable, elems: Iterable[int], g: int) -> int:
    return bits_of(G.conj(h, g) for h in elems)


# -- lattice ------------------------------------------------------------------

class SubgroupLattice:
    """All subgroups of a group, sorted by ``(order, sorted member list)``.

    Derived relations (containment, maximality, normality, joins) are filled
    lazily and memoised; a lattice is otherwise immutable. ``cache`` is a
    scratch memo for the analysis layers built on top.
    """

    def __init__(self, group: GroupTable, entries: list[tuple[int, list[int], list[int]]]):
        entries = sorted(entries, key=lambda e: (len(e[1]), sorted(e[1])))
        self.group = group
        self.subgroups: list[Subgroup] = [Subgroup(b) for b, _, _ in entries]
        self.index_of: dict[int, int] = {s.bits: i for i, s in enumerate(self.subgroups)}
        self._elems = [sorted(el) for _, el, _ in entries]
        self._gens = [tuple(gs) for _, _, gs in entries]
        self._join: dict[int, int] = {}
        self._below: list[list[int]] | None = None
        self._maximal: list[list[int]] | None = None
        self._normal_in: dict[tuple[int, int], bool] = {}
        self.cache: dict = {}
        self.bottom = 0
        self.top = len(self.subgroups) - 1

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def __getitem__(self, i: int) -> Subgroup:
        return self.subgroups[i]

    def idx(self, H: Subgroup | int | None) -> int:
        """Lattice position of ``H``; ``None`` means the whole group."""
        if H is None:
            return self.top
        if isinstance(H, int):
            return H
        try:
            return self.index_of[H.bits]
        except KeyError:
            raise ValueError(f"{H!r} is not a subgroup in this lattice") from None

    def elements(self, i: int) -> list[int]:
        return self._elems[i]

    def generators(self, i: int) -> tuple[int, ...]:
        return self._gens[i]

    def order(self, i: int) -> int:
        return len(self._elems[i])

    def contains(self, i: int, j: int) -> bool:
        """Subgroup ``j`` is contained in subgroup ``i``."""
        return self.subgroups[j].bits & ~self.subgroups[i].bits == 0

    def below(self, i: int) -> list[int]:
        """Positions of all subgroups contained in ``i`` (including ``i``)."""
        if self._below is None:
            subs = [s.bits for s in self.subgroups]
            self._below = [
                [j for j in range(i + 1) if subs[j] & ~bi == 0] for i, bi in enumerate(subs)
            ]
        return self._below[i]

    def above(self, i: int) -> list[int]:
        bi = self.subgroups[i].bits
        return [j for j in range(i, len(self)) if bi & ~self.subgroups[j].bits == 0]

    def maximal_below(self, i: int) -> list[int]:
        """Maximal subgroups of subgroup ``i``."""
        if self._maximal is None:
            self._maximal = [None] * len(self)  # type: ignore[list-item]
        if self._maximal[i] is None:
            proper = [j for j in self.below(i) if j != i]
            subs = self.subgroups
            self._maximal[i] = [
                j for j in proper
                if not any(k != j and subs[j].bits & ~subs[k].bits == 0 for k in proper)
            ]
        return self._maximal[i]

    def meet_index(self, i: int, j: int) -> int:
        return self.index_of[self.subgroups[i].bits & self.subgroups[j].bits]

    def join_index(self, i: int, j: int) -> int:
        if i > j:
            i, j = j, i
        key = i * len(self) + j
        hit = self._join.get(key)
        if hit is not None:
            return hit
        bi, bj = self.subgroups[i].bits, self.subgroups[j].bits
        if bi & ~bj == 0:
            res = j
        elif bj & ~bi == 0:
            res = i
        else:
            big, small = (i, j) if len(self._elems[i]) >= len(self._elems[j]) else (j, i)
            bits, _, _ = generate(
                self.group, self._gens[small], start=self._elems[big], start_gens=self._gens[big]
            )
            res = self.index_of[bits]
        self._join[key] = res
        return res

    def is_normal_in(self, i: int, within: int | None = None) -> bool:
        """Subgroup ``i`` is normal in subgroup ``within`` (default: the group)."""
        w = self.top if within is None else within
        key = (i, w)
        hit = self._normal_in.get(key)
        if hit is None:
            G, b = self.group, self.subgroups[i].bits
            hit = self.contains(w, i) and all(
                b >> G.conj(h, x) & 1 for x in self._gens[w] for h in self._gens[i]
            )
            self._normal_in[key] = hit
        return hit

    def normal_subgroups(self, within: int | None = None) -> list[int]:
        w = self.top if within is None else within
        return [j for j in self.below(w) if self.is_normal_in(j, w)]


def enumerate_subgroups(
    G: GroupTable,
    cap: int = DEFAULT_LATTICE_CAP,
    max_subgroups: int = DEFAULT_MAX_SUBGROUPS,
) -> SubgroupLattice:
    """Complete subgroup lattice of ``G``.

    Seeds with every cyclic subgroup, then joins each found subgroup with
    each cyclic subgroup of prime-power order until nothing new appears.
    Every subgroup is generated by its prime-power elements, so this reaches
    all of them.
    """
    if G.order > cap:
        raise CapacityError(f"group of order {G.order} exceeds lattice cap {cap}")
    found: dict[int, tuple[list[int], list[int]]] = {}
    joiners: list[tuple[int, int]] = []
    for x in range(G.order):
        b = cyclic_bits(G, x)
        if b not in found:
            found[b] = (members_of(b), [x] if x != G.identity else [])
            if _is_prime_power(G.elem_order[x]):
                joiners.append((b, x))
    queue = list(found)
    tried: set[int] = set()
    k = 0
    while k < len(queue):
        hb = queue[k]
        helems, hgens = found[hb]
        for cb, x in joiners:
            if cb & ~hb == 0:
                continue
            union = hb | cb
            if union in tried:
                continue
            tried.add(union)
            jb, jelems, jgens = generate(G, [x], start=helems, start_gens=hgens)
            if jb not in found:
                found[jb] = (jelems, jgens)
                queue.append(jb)
                if len(found) > max_subgroups:
                    raise CapacityError(f"more than {max_subgroups} subgroups")
        k += 1
    return SubgroupLattice(G, [(b, el, gs) for b, (el, gs) in found.items()])


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while n % p:
        p += 1
    while n % p == 0:
        n //= p
    return n == 1


# -- spec-level operations on Subgroup objects ------------------------------------

def meet(L: SubgroupLattice, A: Subgroup, B: Subgroup) -> Subgroup:
    return L[L.meet_index(L.idx(A), L.idx(B))]


def join(L: SubgroupLattice, A: Subgroup, B: Subgroup) -> Subgroup:
    return L[L.join_index(L.idx(A), L.idx(B))]


def is_normal(G: GroupTable, L: SubgroupLattice, H: Subgroup, within: Subgroup | None = None) -> bool:
    return L.is_normal_in(L.idx(H), L.idx(within))


def core_index(L: SubgroupLattice, i: int, within: int | None = None) -> int:
    """Largest subgroup of ``i`` normal in ``within``: intersection of conjugates."""
    w = L.top if within is None else within
    if L.is_normal_in(i, w):
        return i
    key = ("core", i, w)
    hit = L.cache.get(key)
    if hit is None:
        G = L.group
        elems = L.elements(i)
        b = L[i].bits
        for g in L.elements(w):
            b &= conjugate_bits(G, elems, g)
            if b == 1 << G.identity:
                break
        hit = L.cache[key] = L.index_of[b]
    return hit


def closure_index(L: SubgroupLattice, i: int, within: int | None = None) -> int:
    """Smallest subgroup normal in ``within`` that contains ``i``."""
    w = L.top if within is None else within
    if L.is_normal_in(i, w):
        return i
    key = ("closure", i, w)
    hit = L.cache.get(key)
    if hit is None:
        G = L.group
        bits, elems, gens = generate(G, L.generators(i))
        pending = list(gens)
        while pending:
            n = pending.pop()
            for x in L.generators(w):
                c = G.conj(n, x)
                if not bits >> c & 1:
                    bits, elems, gens = generate(G, [c], start=elems, start_gens=gens)
                    pending.append(c)
        hit = L.cache[key] = L.index_of[bits]
    return hit


def normal_core(G: GroupTable, L: SubgroupLattice, H: Subgroup, within: Subgroup | None = None) -> Subgroup:
    return L[core_index(L, L.idx(H), L.idx(within))]


def normal_closure(G: GroupTable, L: SubgroupLattice, H: Subgroup, within: Subgroup | None = None) -> Subgroup:
    return L[closure_index(L, L.idx(H), L.idx(within))]


def center(G: GroupTable, L: SubgroupLattice | None = None, within: Subgroup | None = None) -> Subgroup:
    """Centre of ``within`` (default ``G``)."""
    m = G.mul
    if within is None:
        elems, gens = range(G.order), range(G.order)
    else:
        elems = within.members
        gens = L.generators(L.idx(within)) if L is not None else elems
    return Subgroup(bits_of(x for x in elems if all(m[x][g] == m[g][x] for g in gens)))


@dataclass(frozen=True, eq=False)
class QuotientMap:
    quotient: GroupTable
    projection: dict[int, int]
    kernel: Subgroup
    representatives: tuple[int, ...] = field(default=())


def quotient(
    G: GroupTable, L: SubgroupLattice, N: Subgroup, within: Subgroup | None = None, label: str = ""
) -> QuotientMap:
    """``within / N``, cosets numbered by their smallest member."""
    n_idx, w_idx = L.idx(N), L.idx(within)
    if not L.is_normal_in(n_idx, w_idx):
        raise ValueError(f"{N!r} is not normal")
    mul = G.mul
    kernel = L.elements(n_idx)
    proj: dict[int, int] = {}
    reps: list[int] = []
    for x in L.elements(w_idx):
        if x not in proj:
            c = len(reps)
            reps.append(x)
            for k in kernel:
                proj[mul[x][k]] = c
    table = [[proj[mul[a][b]] for b in reps] for a in reps]
    Q = GroupTable.from_mul(table, label or f"{G.label}/{len(kernel)}")
    return QuotientMap(Q, proj, L[n_idx], tuple(reps))
