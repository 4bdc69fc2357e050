import pytest

from conftest import load, pick, subs_of_order
import oracles
from schmidtcheck.classify import (
    ModularityMismatch,
    is_modular_characterized,
    is_modular_direct,
    is_permutable,
    is_subnormal,
    modular_violation,
    p_group_class,
    product_set,
    schmidt_analyze,
)
from schmidtcheck.structure import is_nilpotent

SMALL = ["symmetric:3", "symmetric:4", "alternating:4", "dihedral:30", "dihedral:8", "semidirect:8/2/5",
         "semidirect:5/4/2", "semidirect:7/3/2", "product:symmetric:3,cyclic:3", "dihedral:12",
         "product:cyclic:2,alternating:4"]


# -- Schmidt ---------------------------------------------------------------------

def test_schmidt_examples(s3, a4, d30):
    G, L = load("dihedral:8")
    assert schmidt_analyze(G, L, L[L.top]) is None
    G, L = s3
    w = schmidt_analyze(G, L, L[L.top])
    assert (w.p, w.q, w.P.order, w.Q.order) == (3, 2, 3, 2)
    assert w.y in w.Q and G.elem_order[w.y] == 2
    G, L = a4
    w = schmidt_analyze(G, L, L[L.top])
    assert (w.p, w.q, w.P.order, w.Q.order) == (2, 3, 4, 3)
    G, L = d30
    assert schmidt_analyze(G, L, L[L.top]) is None


@pytest.mark.parametrize(
    "spec",
    ["symmetric:4", "dihedral:30", "alternating:5", "product:symmetric:3,symmetric:3",
     "product:symmetric:4,cyclic:2", "dihedral:48", "product:semidirect:A4,cyclic:4", "semidirect:5/4/2"],
)
def test_maximal_subgroup_scan_matches_all_proper(spec):
    G, L = load(spec)
    for i in range(len(L)):
        all_proper = not is_nilpotent(G, L, L[i]) and all(
            is_nilpotent(G, L, L[j]) for j in L.below(i) if j != i
        )
        assert (schmidt_analyze(G, L, L[i]) is not None) == all_proper


# -- P-groups --------------------------------------------------------------------

def test_p_group_examples():
    w = p_group_class(load("product:cyclic:2,cyclic:2")[0])
    assert (w.kind, w.p, w.n) == ("elementary_abelian", 2, 1)
    w = p_group_class(load("cyclic:3")[0])
    assert (w.kind, w.p, w.n) == ("elementary_abelian", 3, 0)
    w = p_group_class(load("symmetric:3")[0])
    assert (w.kind, w.p, w.n, w.q, w.power_exponent) == ("nonabelian", 3, 1, 2, 2)
    assert p_group_class(load("alternating:4")[0]) is None
    assert p_group_class(load("dihedral:8")[0]) is None
    assert p_group_class(load("cyclic:1")[0]) is None
    assert p_group_class(load("cyclic:4")[0]) is None
    assert p_group_class(load("cyclic:6")[0]) is None
    assert p_group_class(load("semidirect:5/4/2")[0]) is None  # acting group not of prime order


@pytest.mark.parametrize("spec", ["semidirect:7/3/2", "dihedral:10", "product:cyclic:3,symmetric:3"])
def test_p_group_power_map_is_uniform(spec):
    G, L = load(spec)
    w = p_group_class(G, L)
    if spec.startswith("product"):
        # C3 x S3: the normal Sylow 3-subgroup is not acted on by a power map
        assert w is None
        return
    assert w.kind == "nonabelian"
    A = [x for x in range(G.order) if G.elem_order[x] in (1, w.p)]
    assert len(A) == w.p**w.n
    y = next(x for x in range(G.order) if G.elem_order[x] == w.q)
    assert all(G.conj(a, y) == G.power(a, w.power_exponent) for a in A)
    assert w.power_exponent % w.p != 1


# -- subnormality, permutability ---------------------------------------------------

def test_subnormal_examples(s4, d30):
    G, L = s4
    for n in L.normal_subgroups():
        sn = is_subnormal(G, L, L[n])
        assert sn.subnormal and sn.defect <= 1
    v4 = pick(L, lambda i: L.order(i) == 4 and L.is_normal_in(i))
    dbl = pick(L, lambda i: L.order(i) == 2 and L.contains(v4, i))
    assert is_subnormal(G, L, L[dbl]) == (True, 2)
    s3 = subs_of_order(L, 6)[0]
    assert not is_subnormal(G, L, L[s3]).subnormal
    G, L = d30
    assert not is_subnormal(G, L, L[subs_of_order(L, 6)[0]]).subnormal


def _subnormal_oracle(G, h):
    cur = frozenset(range(G.order))
    while True:
        nxt = oracles.normal_closure(G, h, within=cur)
        if nxt == cur:
            return cur == h
        cur = nxt


@pytest.mark.parametrize("spec", SMALL)
def test_subnormal_and_permutable_oracles(spec):
    G, L = load(spec)
    subs = [frozenset(s.members) for s in L]
    for i, H in enumerate(L):
        assert is_subnormal(G, L, H).subnormal == _subnormal_oracle(G, subs[i])
        assert is_permutable(G, L, H) == oracles.is_permutable_naive(G, subs, subs[i])


def test_permutable_examples(s3):
    G, L = load("cyclic:12")
    assert all(is_permutable(G, L, H) for H in L)
    G, L = s3
    assert is_permutable(G, L, L[subs_of_order(L, 3)[0]])
    a, b = subs_of_order(L, 2)[:2]
    assert not is_permutable(G, L, L[a])
    assert product_set(G, L[a], L[b]).bit_count() == 4


# -- modularity -------------------------------------------------------------------

def test_modular_direct_examples(s3, s4, d30):
    G, L = s3
    assert all(is_modular_direct(G, L, H) for H in L)
    G, L = s4
    a4 = pick(L, lambda i: L.order(i) == 12)
    t = pick(L, lambda i: L.order(i) == 2 and not L.contains(a4, i))  # a transposition
    assert not is_modular_direct(G, L, L[t])
    assert modular_violation(L, t) is not None
    assert all(is_modular_direct(G, L, L[n]) for n in L.normal_subgroups())
    G, L = d30
    assert is_modular_direct(G, L, L[subs_of_order(L, 6)[0]])


@pytest.mark.parametrize("spec", SMALL)
def test_modular_direct_against_naive(spec):
    G, L = load(spec)
    subs = [frozenset(s.members) for s in L]
    for i, H in enumerate(L):
        assert is_modular_direct(G, L, H) == oracles.is_modular_naive(G, subs, subs[i])


def test_characterized_examples(s4, d30):
    G, L = load("semidirect:8/2/5")
    for i, H in enumerate(L):
        if is_permutable(G, L, H):
            v = is_modular_characterized(G, L, H)
            assert v.characterized and v.decomposition.r == 0
    G, L = d30
    v = is_modular_characterized(G, L, L[subs_of_order(L, 6)[0]], strict=True)
    assert v.direct and v.characterized
    dec = v.decomposition
    assert dec.r == 1 and dec.core.order == 3 and dec.T == dec.core
    assert dec.S_list[0].order == 30
    w = dec.p_groups[0]
    assert (w.kind, w.p, w.n, w.q) == ("nonabelian", 5, 1, 2)
    G, L = s4
    v = is_modular_characterized(G, L, L[subs_of_order(L, 6)[0]], strict=True)
    assert not v.direct and not v.characterized and v.decomposition is None


def test_strict_mismatch_raises(d30):
    G, L = d30
    i = subs_of_order(L, 6)[0]
    L.cache[("characterized", i)] = None  # corrupt the memo
    try:
        with pytest.raises(ModularityMismatch):
            is_modular_characterized(G, L, L[i], strict=True)
    finally:
        del L.cache[("characterized", i)]


@pytest.mark.parametrize("spec", SMALL + ["product:symmetric:3,symmetric:3", "dihedral:48"])
def test_implication_chain(spec):
    G, L = load(spec)
    for i, H in enumerate(L):
        normal = L.is_normal_in(i)
        perm = is_permutable(G, L, H)
        mod = is_modular_direct(G, L, H)
        if normal:
            assert perm and is_subnormal(G, L, H).defect <= 1
        if perm:
            assert mod and is_modular_characterized(G, L, H).characterized
            assert is_subnormal(G, L, H).subnormal


def test_degenerate_inputs(s4):
    G, L = s4
    for H in (L[0], L[L.top]):
        assert is_permutable(G, L, H) and is_modular_direct(G, L, H)
        assert is_subnormal(G, L, H).defect <= 1
        assert is_modular_characterized(G, L, H, strict=True).characterized
