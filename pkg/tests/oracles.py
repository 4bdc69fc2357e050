"""Slow, independent reference computations on plain Python sets.

Nothing here uses the engine's bitsets, Dimino closure or lattice caches.
"""
from itertools import combinations


def closure(G, elems):
    """Subgroup generated by ``elems`` by repeated multiplication."""
    m = G.mul
    out = {G.identity} | set(elems)
    frontier = list(out)
    while frontier:
        new = []
        for a in frontier:
            for b in list(out):
                for c in (m[a][b], m[b][a]):
                    if c not in out:
                        out.add(c)
                        new.append(c)
        frontier = new
    return frozenset(out)


def is_closed(G, s):
    m = G.mul
    return G.identity in s and all(m[a][b] in s for a in s for b in s)


def subsets_scan(G):
    """Every subset closed under the product (feasible for order <= 16)."""
    n = G.order
    others = [x for x in range(n) if x != G.identity]
    found = set()
    for mask in range(1 << len(others)):
        s = {G.identity} | {others[i] for i in range(len(others)) if mask >> i & 1}
        if len(s) <= n and n % len(s) == 0 and is_closed(G, s):
            found.add(frozenset(s))
    return found


def generated_subgroups(G):
    """All <x, y>, then pairwise joins until nothing new appears."""
    subs = {closure(G, (x, y)) for x in range(G.order) for y in range(x, G.order)}
    while True:
        new = {closure(G, a | b) for a, b in combinations(subs, 2)} - subs
        if not new:
            return subs
        subs |= new


def conjugate(G, s, g):
    return frozenset(G.mul[G.mul[G.inv[g]][h]][g] for h in s)


def is_normal(G, s, within=None):
    within = range(G.order) if within is None else within
    return all(conjugate(G, s, g) == s for g in within)


def core(G, s):
    out = set(s)
    for g in range(G.order):
        out &= conjugate(G, s, g)
    return frozenset(out)


def normal_closure(G, s, within=None):
    within = list(range(G.order)) if within is None else list(within)
    return closure(G, {x for g in within for x in conjugate(G, s, g)})


def center(G):
    m = G.mul
    return frozenset(x for x in range(G.order) if all(m[x][y] == m[y][x] for y in range(G.order)))


def derived(G, s=None):
    s = range(G.order) if s is None else s
    return closure(G, {G.commutator(a, b) for a in s for b in s})


def product(G, a, b):
    return frozenset(G.mul[x][y] for x in a for y in b)


def is_nilpotent_lcs(G, s):
    """Lower central series of ``s`` reaches 1."""
    s = frozenset(s)
    cur = s
    while True:
        nxt = closure(G, {G.commutator(a, g) for a in cur for g in s})
        if nxt == cur:
            return cur == {G.identity}
        cur = nxt


def is_modular_naive(G, subs, m):
    """Both modular identities over all pairs, joins via :func:`closure`."""
    subs = list(subs)
    join = lambda a, b: closure(G, a | b)  # noqa: E731
    for z in subs:
        for x in subs:
            if x <= z and join(x, m) & z != join(x, m & z):
                return False
            if m <= z and join(m, x) & z != join(m, x & z):
                return False
    return True


def is_permutable_naive(G, subs, h):
    return all(product(G, h, k) == product(G, k, h) for k in subs)
