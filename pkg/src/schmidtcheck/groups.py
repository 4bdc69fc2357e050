"""Finite groups as dense multiplication tables.

Every group is closed into a :class:`GroupTable` once; all downstream code
works on element indices only. Element 0 is always the identity for the
constructions in this module.
"""
from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

DEFAULT_ORDER_CAP = 1000

Permutation = tuple[int, ...]


class GroupConstructionError(ValueError):
    """Invalid input to a group construction."""


class CapacityError(GroupConstructionError):
    """A construction or analysis would exceed a configured size cap."""


@dataclass(frozen=True, eq=False)
class GroupTable:
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    elem_order: tuple[int, ...]
    identity: int = 0
    label: str = ""

    @classmethod
    def from_mul(cls, mul: Sequence[Sequence[int]], label: str = "") -> GroupTable:
        n = len(mul)
        if n == 0:
            raise GroupConstructionError("a group has at least one element")
        mul = tuple(tuple(row) for row in mul)
        ident = next((e for e in range(n) if mul[e][e] == e), None)
        if ident is None or any(mul[ident][x] != x or mul[x][ident] != x for x in range(n)):
            raise GroupConstructionError("table has no two-sided identity")
        inv = [-1] * n
        for x in range(n):
            for y in range(n):
                if mul[x][y] == ident:
                    inv[x] = y
                    break
            if inv[x] < 0 or mul[inv[x]][x] != ident:
                raise GroupConstructionError(f"element {x} has no two-sided inverse")
        orders = []
        for x in range(n):
            k, y = 1, x
            while y != ident:
                y = mul[y][x]
                k += 1
                if k > n:
                    raise GroupConstructionError(f"element {x} has no finite order")
            orders.append(k)
        return cls(mul, tuple(inv), tuple(orders), ident, label)

    @property
    def order(self) -> int:
        return len(self.mul)

    def __len__(self) -> int:
        return len(self.mul)

    def __repr__(self) -> str:
        return f"GroupTable({self.label or '?'}, order={self.order})"

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inv[x], -k
        y = self.identity
        for _ in range(k % self.elem_order[x]):
            y = self.mul[y][x]
        return y

    def conj(self, x: int, g: int) -> int:
        """``g^-1 x g``."""
        return self.mul[self.mul[self.inv[g]][x]][g]

    def commutator(self, x: int, y: int) -> int:
        """``[x, y] = x^-1 y^-1 x y``."""
        m, i = self.mul, self.inv
        return m[m[i[x]][i[y]]][m[x][y]]

    def is_abelian(self) -> bool:
        m = self.mul
        n = self.order
        return all(m[x][y] == m[y][x] for x in range(n) for y in range(x + 1, n))

    def same_table(self, other: GroupTable) -> bool:
        return self.mul == other.mul and self.identity == other.identity

    def check_associative(self) -> bool:
        """Exhaustive check over all triples (vectorised)."""
        m = np.asarray(self.mul, dtype=np.int32)
        lhs = m[m]  # (ab)c
        rhs = m[np.arange(self.order)[:, None, None], m[None, :, :]]  # a(bc)
        return bool(np.array_equal(lhs, rhs))

    def profile(self) -> dict:
        """Isomorphism invariants used in place of a full isomorphism test."""
        m = self.mul
        n = self.order
        center = sum(1 for x in range(n) if all(m[x][y] == m[y][x] for y in range(n)))
        return {
            "order": n,
            "abelian": self.is_abelian(),
            "element_orders": tuple(sorted(Counter(self.elem_order).items())),
            "center_order": center,
        }


def element_order(G: GroupTable, x: int) -> int:
    if not 0 <= x < G.order:
        raise IndexError(f"element {x} out of range for order {G.order}")
    return G.elem_order[x]


# -- permutations -----------------------------------------------------------

def as_permutation(images: Sequence[int], degree: int) -> Permutation:
    perm = tuple(int(i) for i in images)
    if len(perm) != degree:
        raise GroupConstructionError(f"permutation {perm} does not have degree {degree}")
    if sorted(perm) != list(range(degree)):
        raise GroupConstructionError(f"{perm} is not a bijection on 0..{degree - 1}")
    return perm


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Product ``pq``: apply ``p`` first, then ``q``."""
    return tuple(q[i] for i in p)


def cycle(degree: int, *points: int) -> Permutation:
    images = list(range(degree))
    for a, b in zip(points, points[1:] + points[:1]):
        images[a] = b
    return tuple(images)


def closure_from_generators(
    gens: Sequence[Sequence[int]],
    degree: int,
    label: str = "",
    cap: int = DEFAULT_ORDER_CAP,
) -> GroupTable:
    """Close a set of permutations into a table.

    Elements are indexed in breadth-first discovery order, multiplying each
    discovered element on the right by the generators in the given order.
    """
    if degree < 1:
        raise GroupConstructionError("degree must be positive")
    gens = [as_permutation(g, degree) for g in gens]
    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in index:
                if len(elements) >= cap:
                    raise CapacityError(f"closure exceeds order cap {cap}")
                index[y] = len(elements)
                elements.append(y)
                queue.append(y)
    mul = [[index[compose(x, y)] for y in elements] for x in elements]
    return GroupTable.from_mul(mul, label)


# -- algebraic constructions --------------------------------------------------

def cyclic_group(n: int, label: str | None = None) -> GroupTable:
    """``Z_n`` with element ``i`` standing for ``g^i``."""
    if n < 1:
        raise GroupConstructionError(f"cyclic group order must be positive, got {n}")
    mul = [[(i + j) % n for j in range(n)] for i in range(n)]
    return GroupTable.from_mul(mul, label if label is not None else f"C{n}")


def direct_product(
    G: GroupTable, H: GroupTable, label: str | None = None, cap: int = DEFAULT_ORDER_CAP
) -> GroupTable:
    """Pair ``(g, h)`` gets index ``g * |H| + h``."""
    n, m = G.order, H.order
    if n * m > cap:
        raise CapacityError(f"direct product of order {n * m} exceeds cap {cap}")
    gm, hm = G.mul, H.mul
    mul = [
        [gm[g1][g2] * m + hm[h1][h2] for g2 in range(n) for h2 in range(m)]
        for g1 in range(n)
        for h1 in range(m)
    ]
    return GroupTable.from_mul(mul, label if label is not None else f"{G.label}x{H.label}")


@dataclass(frozen=True, eq=False)
class SemidirectSpec:
    """``base ⋊ acting``; ``action[q]`` is the permutation of base indices
    induced by the acting element ``q``."""

    base: GroupTable
    acting: GroupTable
    action: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        A, Q = self.base, self.acting
        if len(self.action) != Q.order:
            raise GroupConstructionError("action must give one map per acting element")
        am = A.mul
        for q, phi in enumerate(self.action):
            if sorted(phi) != list(range(A.order)):
                raise GroupConstructionError(f"action of {q} is not a permutation of the base")
            for a in range(A.order):
                for b in range(A.order):
                    if phi[am[a][b]] != am[phi[a]][phi[b]]:
                        raise GroupConstructionError(f"action of {q} is not an automorphism")
        for q1 in range(Q.order):
            for q2 in range(Q.order):
                lhs = self.action[Q.mul[q1][q2]]
                p1, p2 = self.action[q1], self.action[q2]
                if any(lhs[a] != p1[p2[a]] for a in range(A.order)):
                    raise GroupConstructionError("action is not a homomorphism into Aut(base)")


def semidirect_product(
    spec: SemidirectSpec, label: str | None = None, cap: int = DEFAULT_ORDER_CAP
) -> GroupTable:
    """``(a1, q1)(a2, q2) = (a1 * action(q1)(a2), q1 q2)``, indexed ``a * |Q| + q``."""
    spec.validate()
    A, Q = spec.base, spec.acting
    n, m = A.order, Q.order
    if n * m > cap:
        raise CapacityError(f"semidirect product of order {n * m} exceeds cap {cap}")
    am, qm, act = A.mul, Q.mul, spec.action
    mul = [
        [am[a1][act[q1][a2]] * m + qm[q1][q2] for a2 in range(n) for q2 in range(m)]
        for a1 in range(n)
        for q1 in range(m)
    ]
    return GroupTable.from_mul(mul, label if label is not None else f"{A.label}:{Q.label}")


def cyclic_action(n: int, m: int, k: int) -> SemidirectSpec:
    """``C_n ⋊ C_m`` where the generator of ``C_m`` acts as ``x -> x^k``."""
    if n < 1 or m < 1:
        raise GroupConstructionError("cyclic factors must have positive order")
    if pow(k, m, n) != 1 % n:
        raise GroupConstructionError(f"x -> x^{k} does not have order dividing {m} on C{n}")
    action = tuple(tuple(i * pow(k, j, n) % n for i in range(n)) for j in range(m))
    return SemidirectSpec(cyclic_group(n), cyclic_group(m), action)


def dihedral_group(order: int, cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Dihedral group of the given (even) order, as ``C_n ⋊ C_2`` by inversion."""
    if order < 4 or order % 2:
        raise GroupConstructionError(f"dihedral order must be even and >= 4, got {order}")
    n = order // 2
    return semidirect_product(cyclic_action(n, 2, n - 1), label=f"D{order}", cap=cap)


def symmetric_group(n: int, cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    if n < 1:
        raise GroupConstructionError(f"symmetric degree must be positive, got {n}")
    gens = [cycle(n, 0, 1), cycle(n, *range(n))] if n > 1 else []
    return closure_from_generators(gens, n, label=f"S{n}", cap=cap)


def alternating_group(n: int, cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    if n < 1:
        raise GroupConstructionError(f"alternating degree must be positive, got {n}")
    gens = [cycle(n, 0, 1, i) for i in range(2, n)]
    return closure_from_generators(gens, n, label=f"A{n}", cap=cap)


def a4_semidirect() -> GroupTable:
    """``(C2 x C2) ⋊ C3`` with the 3-cycle permuting the three involutions."""
    v4 = direct_product(cyclic_group(2), cyclic_group(2), label="V4")
    rot = (0, 2, 3, 1)
    action = ((0, 1, 2, 3), rot, compose(rot, rot))
    return semidirect_product(SemidirectSpec(v4, cyclic_group(3), action), label="V4:C3")
