from collections import Counter

from conftest import load
from schmidtcheck.classify import modular_direct_index, section_p_group
from schmidtcheck.lattice import core_index
from schmidtcheck.verify import (
    VerifyConfig,
    cross_check_modularity,
    scan_catalog,
    verify_lemma_lm1,
    verify_lemma_tsch,
    verify_theorem1,
    verify_vedernikov,
)


def test_theorem_on_cyclic_group():
    rep = verify_theorem1(*load("cyclic:12"))
    assert rep.schmidt_subgroups == []
    assert rep.hypothesis_holds and rep.hypothesis_vacuous
    assert rep.fitting_order == 12 and rep.quotient_order == 1
    assert rep.theorem_respected and rep.all_passed


def test_theorem_on_d30():
    rep = verify_theorem1(*load("dihedral:30"))
    cls = rep.schmidt_subgroups
    assert Counter(c.subgroup.order for c in cls) == {6: 5, 10: 3}
    assert all(c.modular and c.modular_characterized and not c.subnormal for c in cls)
    assert rep.fitting_order == 15
    assert rep.quotient_order == 2 and rep.quotient_cyclic
    assert rep.hypothesis_holds and not rep.hypothesis_vacuous
    assert rep.theorem_respected and rep.all_passed


def test_theorem_on_s4():
    rep = verify_theorem1(*load("symmetric:4"))
    assert not rep.hypothesis_holds
    assert not rep.conclusion_holds and rep.quotient_order == 6
    assert rep.theorem_respected
    s3s = [c for c in rep.schmidt_subgroups if c.subgroup.order == 6]
    assert len(s3s) == 4
    assert all(not c.subnormal and not c.modular for c in s3s)


def test_vedernikov():
    G, L = load("alternating:4")
    rep = verify_theorem1(G, L)
    assert [c.subgroup.order for c in rep.schmidt_subgroups] == [12]
    assert rep.schmidt_subgroups[0].subnormal
    assert rep.fitting_order == 4 and rep.quotient_cyclic
    res = verify_vedernikov(G, L)
    assert res.status == "pass" and res.checked == 1

    G, L = load("dihedral:12")
    rep = verify_theorem1(G, L)
    assert [c.subgroup.order for c in rep.schmidt_subgroups] == [6, 6]
    assert all(L.is_normal_in(c.index) for c in rep.schmidt_subgroups)
    assert rep.fitting_order == 6 and rep.quotient_order == 2
    assert verify_vedernikov(G, L).checked == 1

    res = verify_vedernikov(*load("cyclic:30"))
    assert res.status == "pass" and res.note == "vacuous"


def test_tsch_quotients_on_d30():
    G, L = load("dihedral:30")
    assert verify_lemma_tsch(G, L).status == "pass"
    seen = {}
    for c in verify_theorem1(G, L, suites=False).schmidt_subgroups:
        k = core_index(L, c.index)
        w = section_p_group(L, L.top, k)
        seen[c.subgroup.order] = (L.order(k), G.order // L.order(k), w.p, w.q)
        assert G.order == c.subgroup.order * w.p**w.n
    assert seen == {6: (3, 10, 5, 2), 10: (5, 6, 3, 2)}


def test_tsch_vacuous():
    res = verify_lemma_tsch(*load("symmetric:3"))  # S3 is modular in itself, subnormal
    assert res.status == "pass"
    res = verify_lemma_tsch(*load("alternating:5"))
    assert res.status == "pass" and res.checked == 0


def test_lm1():
    res = verify_lemma_lm1(*load("cyclic:12"))
    assert res.status == "pass" and res.checked == 6
    assert verify_lemma_lm1(*load("dihedral:30")).status == "pass"
    G, L = load("symmetric:4")
    res = verify_lemma_lm1(G, L)
    assert res.status == "pass"
    # the normal subgroups plus the three Sylow 2-subgroups (S4/V4 is a nonabelian P-group)
    modular = [i for i in range(len(L)) if modular_direct_index(L, i)]
    assert res.checked == 7 and len(modular) == 7
    assert sorted(L.order(i) for i in modular if not L.is_normal_in(i)) == [8, 8, 8]


def test_cross_check():
    assert cross_check_modularity(*load("cyclic:6")).checked == 4
    res = cross_check_modularity(*load("symmetric:4"))
    assert res.status == "pass" and res.checked == 30
    res = cross_check_modularity(*load("dihedral:30"))
    assert res.status == "pass" and res.checked == 28 and res.stats == {"modular": 13}


def test_failure_is_reported_with_witnesses():
    G, L = load("dihedral:30")
    rep = verify_theorem1(G, L)
    # corrupt one memoised verdict so the cross-check sees a divergence
    i = rep.schmidt_subgroups[0].index
    key = ("characterized", i)
    saved = L.cache[key]
    L.cache[key] = None
    try:
        res = cross_check_modularity(G, L)
        assert res.status == "fail"
        assert res.witnesses[0]["index"] == i and res.witnesses[0]["direct"] is True
    finally:
        L.cache[key] = saved


def test_exhaustive_suites_skip_above_cap():
    rep = verify_theorem1(*load("dihedral:60"), config=VerifyConfig(exhaustive_max_order=48))
    assert rep.lemma_results["lsch2"].status == "skipped"
    assert rep.lemma_results["tsch"].status == "pass"
    assert rep.all_passed


def test_scan_catalog():
    assert scan_catalog([]).entries == []
    scan = scan_catalog(["cyclic:6", "dihedral:400", "symmetric:6", "cyclic:0", "dihedral:30"])
    assert [e.status for e in scan.entries] == ["ok", "skipped", "skipped", "skipped", "ok"]
    assert "lattice cap" in scan.entries[1].reason
    assert scan.all_passed


def test_scan_parallel_is_order_stable():
    specs = ["dihedral:30", "cyclic:4", "symmetric:4", "alternating:4"]
    serial = scan_catalog(specs)
    parallel = scan_catalog(specs, jobs=2)
    assert [e.spec for e in parallel.entries] == specs
    assert [e.report.fitting_order for e in parallel.entries] == [e.report.fitting_order for e in serial.entries]
