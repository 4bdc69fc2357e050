"""Theorem and lemma suites over single groups and whole catalogs.

A Theorem-1 violation is treated as an engine defect: the report still
carries everything needed to diagnose it.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .catalog import build_named
from .classify import (
    SchmidtWitness,
    characterize_index,
    modular_direct_index,
    modular_violation,
    permutable_index,
    schmidt_index,
    section_p_group,
    subnormal_index,
)
from .groups import DEFAULT_ORDER_CAP, GroupConstructionError, GroupTable
from .lattice import (
    DEFAULT_LATTICE_CAP,
    DEFAULT_MAX_SUBGROUPS,
    Subgroup,
    SubgroupLattice,
    bits_of,
    core_index,
    cyclic_bits,
    enumerate_subgroups,
    quotient,
)
from .structure import (
    EngineError,
    a1_residual_index,
    basic_predicates,
    derived_index,
    factorize,
    fitting_index,
    frattini_index,
    supersoluble_index,
)

log = logging.getLogger(__name__)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass(frozen=True)
class VerifyConfig:
    construction_cap: int = DEFAULT_ORDER_CAP
    lattice_cap: int = DEFAULT_LATTICE_CAP
    max_subgroups: int = DEFAULT_MAX_SUBGROUPS
    # suites quantified over every subgroup run only up to this order
    exhaustive_max_order: int = 48


@dataclass(frozen=True)
class SchmidtClassification:
    index: int
    subgroup: Subgroup
    witness: SchmidtWitness
    subnormal: bool
    defect: int | None
    modular: bool
    modular_characterized: bool


@dataclass
class LemmaResult:
    name: str
    status: str
    checked: int = 0
    witnesses: list[dict] = field(default_factory=list)
    note: str = ""
    stats: dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status != FAIL


@dataclass
class TheoremReport:
    group_label: str
    order: int
    subgroup_count: int
    schmidt_subgroups: list[SchmidtClassification]
    hypothesis_holds: bool
    hypothesis_vacuous: bool
    fitting: Subgroup
    quotient_order: int
    quotient_cyclic: bool
    conclusion_holds: bool
    theorem_respected: bool
    lemma_results: dict[str, LemmaResult] = field(default_factory=dict)
    failure_witnesses: list[dict] = field(default_factory=list)

    @property
    def fitting_order(self) -> int:
        return self.fitting.order

    @property
    def all_passed(self) -> bool:
        return self.theorem_respected and all(r.passed for r in self.lemma_results.values())


def _sub(L: SubgroupLattice, i: int) -> dict:
    return {"index": i, "order": L.order(i), "members": L.elements(i)}


def _lattice(G: GroupTable, L: SubgroupLattice | None, config: VerifyConfig) -> SubgroupLattice:
    if L is None:
        L = enumerate_subgroups(G, cap=config.lattice_cap, max_subgroups=config.max_subgroups)
    return L


def schmidt_classifications(G: GroupTable, L: SubgroupLattice) -> list[SchmidtClassification]:
    key = ("classifications",)
    if key not in L.cache:
        out = []
        for i in range(len(L)):
            w = schmidt_index(L, i)
            if w is None:
                continue
            sn = subnormal_index(L, i)
            out.append(SchmidtClassification(
                i, L[i], w, sn.subnormal, sn.defect,
                modular_direct_index(L, i), characterize_index(L, i) is not None,
            ))
        L.cache[key] = out
    return L.cache[key]


def _conclusion(G: GroupTable, L: SubgroupLattice) -> tuple[int, int, bool]:
    f = fitting_index(L, L.top)
    Q = quotient(G, L, L[f]).quotient
    return f, Q.order, basic_predicates(Q).is_cyclic


def verify_theorem1(
    G: GroupTable,
    L: SubgroupLattice | None = None,
    config: VerifyConfig = VerifyConfig(),
    suites: bool = True,
) -> TheoremReport:
    """Classify every Schmidt subgroup and check that the hypothesis
    (each is subnormal or modular) forces ``G/F(G)`` cyclic.

    With ``suites`` the lemma suites are run as well and stored in
    ``lemma_results``.
    """
    L = _lattice(G, L, config)
    cls = schmidt_classifications(G, L)
    hypothesis = all(c.subnormal or c.modular for c in cls)
    f, qorder, cyclic = _conclusion(G, L)
    respected = (not hypothesis) or cyclic
    report = TheoremReport(
        group_label=G.label,
        order=G.order,
        subgroup_count=len(L),
        schmidt_subgroups=cls,
        hypothesis_holds=hypothesis,
        hypothesis_vacuous=not cls,
        fitting=L[f],
        quotient_order=qorder,
        quotient_cyclic=cyclic,
        conclusion_holds=cyclic,
        theorem_respected=respected,
    )
    if not respected:
        log.error("theorem violated on %s: engine defect", G.label)
        report.failure_witnesses.append({
            "kind": "theorem1",
            "group": G.label,
            "order": G.order,
            "fitting": _sub(L, f),
            "quotient_profile": {
                k: v for k, v in quotient(G, L, L[f]).quotient.profile().items() if k != "element_orders"
            },
            "schmidt": [
                {**_sub(L, c.index), "subnormal": c.subnormal, "modular": c.modular} for c in cls
            ],
        })
    if suites:
        exhaustive = G.order <= config.exhaustive_max_order
        results = [
            verify_corollary(G, L),
            verify_vedernikov(G, L),
            verify_lemma_lsch(G, L),
            verify_lemma_tsch(G, L),
            cross_check_modularity(G, L) if exhaustive else _skip("lsch2", G, config),
            verify_lemma_lm1(G, L) if exhaustive else _skip("lm1", G, config),
            verify_implications(G, L) if exhaustive else _skip("implications", G, config),
        ]
        report.lemma_results = {r.name: r for r in results}
        for r in results:
            if r.status == FAIL:
                report.failure_witnesses.extend({"kind": r.name, **w} for w in r.witnesses)
    return report


def _skip(name: str, G: GroupTable, config: VerifyConfig) -> LemmaResult:
    return LemmaResult(
        name, SKIPPED, note=f"order {G.order} > exhaustive_max_order {config.exhaustive_max_order}"
    )


def verify_corollary(G: GroupTable, L: SubgroupLattice | None = None) -> LemmaResult:
    """All Schmidt subgroups modular ⇒ ``G/F(G)`` cyclic."""
    L = _lattice(G, L, VerifyConfig())
    cls = schmidt_classifications(G, L)
    if not all(c.modular for c in cls):
        return LemmaResult("corollary", PASS, note="hypothesis not met")
    f, qorder, cyclic = _conclusion(G, L)
    if cyclic:
        return LemmaResult("corollary", PASS, checked=1, note="vacuous" if not cls else "")
    return LemmaResult("corollary", FAIL, 1, [{"fitting": _sub(L, f), "quotient_order": qorder}])


def verify_vedernikov(G: GroupTable, L: SubgroupLattice | None = None) -> LemmaResult:
    """All Schmidt subgroups subnormal ⇒ ``G/F(G)`` cyclic."""
    L = _lattice(G, L, VerifyConfig())
    cls = schmidt_classifications(G, L)
    if not all(c.subnormal for c in cls):
        return LemmaResult("vedernikov", PASS, note="hypothesis not met")
    f, qorder, cyclic = _conclusion(G, L)
    if cyclic:
        return LemmaResult("vedernikov", PASS, checked=1, note="vacuous" if not cls else "")
    return LemmaResult("vedernikov", FAIL, 1, [{"fitting": _sub(L, f), "quotient_order": qorder}])


def verify_lemma_lsch(G: GroupTable, L: SubgroupLattice | None = None) -> LemmaResult:
    """Structure of each Schmidt subgroup ``S = P ⋊ <y>``.

    ``S' = P``, ``Φ(S) = Φ(P) x <y^q>``, ``y^q`` central, and ``S`` is
    supersoluble exactly when ``|P| = p`` and ``q | p - 1``.
    """
    L = _lattice(G, L, VerifyConfig())
    res = LemmaResult("lsch", PASS)
    m = G.mul
    for c in schmidt_classifications(G, L):
        w, i = c.witness, c.index
        res.checked += 1
        P = L.idx(w.P)
        yq = G.power(w.y, w.q)
        phi_p = L.elements(frattini_index(L, P))
        product = bits_of(m[a][b] for a in phi_p for b in L.elements(L.index_of[cyclic_bits(G, yq)]))
        problems = []
        if not (L.is_normal_in(P, i) and L.order(P) == w.p ** factorize(L.order(i)).exponent(w.p)):
            problems.append("P is not a normal Sylow p-subgroup")
        if L.is_normal_in(L.idx(w.Q), i) or w.Q.order != G.elem_order[w.y]:
            problems.append("Q is not a non-normal cyclic Sylow q-subgroup generated by y")
        if derived_index(L, i) != P:
            problems.append("S' != P")
        if L[frattini_index(L, i)].bits != product:
            problems.append("Phi(S) != Phi(P) x <y^q>")
        if any(m[yq][s] != m[s][yq] for s in L.elements(i)):
            problems.append("y^q not central")
        criterion = w.P.order == w.p and (w.p - 1) % w.q == 0
        if criterion != supersoluble_index(L, i):
            problems.append("supersolubility criterion disagrees")
        if problems:
            res.status = FAIL
            res.witnesses.append({**_sub(L, i), "problems": problems})
    return res


def verify_lemma_tsch(G: GroupTable, L: SubgroupLattice | None = None) -> LemmaResult:
    """For each modular Schmidt subgroup ``M = P ⋊ <y>``: ``P<y^q> <= F(G)``;
    if ``M`` is not subnormal, ``G/M_G`` is a nonabelian P-group of order
    ``p1^n q`` with ``p1 > q`` and ``|G| = |M| p1^n``."""
    L = _lattice(G, L, VerifyConfig())
    res = LemmaResult("tsch", PASS)
    F = L[fitting_index(L, L.top)].bits
    m = G.mul
    for c in schmidt_classifications(G, L):
        if not c.modular:
            continue
        w, i = c.witness, c.index
        res.checked += 1
        problems = []
        yq = L.elements(L.index_of[cyclic_bits(G, G.power(w.y, w.q))])
        inner = bits_of(m[a][b] for a in w.P.members for b in yq)
        if inner & ~F:
            problems.append("P x <y^q> not inside F(G)")
        detail: dict = {}
        if not c.subnormal:
            k = core_index(L, i)
            pg = section_p_group(L, L.top, k)
            detail = {"core_order": L.order(k), "quotient_order": G.order // L.order(k)}
            if pg is None or pg.kind != "nonabelian":
                problems.append("G/M_G is not a nonabelian P-group")
            else:
                detail.update(p1=pg.p, n=pg.n, q=pg.q)
                if pg.q != w.q:
                    problems.append("acting prime of G/M_G differs from q")
                if not pg.p > pg.q:
                    problems.append("p1 <= q")
                if G.order != c.subgroup.order * pg.p**pg.n:
                    problems.append("|G| != |M| p1^n")
        if problems:
            res.status = FAIL
            res.witnesses.append({**_sub(L, i), **detail, "problems": problems})
    return res


def verify_lemma_lm1(G: GroupTable, L: SubgroupLattice | None = None) -> LemmaResult:
    """For every modular subgroup ``H``: ``H'`` and the A1-residual of ``H`` are subnormal."""
    L = _lattice(G, L, VerifyConfig())
    res = LemmaResult("lm1", PASS)
    for h in range(len(L)):
        if not modular_direct_index(L, h):
            continue
        res.checked += 1
        d, a = derived_index(L, h), a1_residual_index(L, h)
        if not L.contains(a, d):
            raise EngineError(f"A1-residual of {L[h]!r} does not contain its derived subgroup")
        bad = [name for name, j in (("derived", d), ("a1_residual", a)) if not subnormal_index(L, j).subnormal]
        if bad:
            res.status = FAIL
            res.witnesses.append({**_sub(L, h), "not_subnormal": bad})
    return res


def cross_check_modularity(G: GroupTable, L: SubgroupLattice | None = None) -> LemmaResult:
    """Direct lattice test against the decomposition characterisation, on every subgroup."""
    L = _lattice(G, L, VerifyConfig())
    res = LemmaResult("lsch2", PASS)
    modular = 0
    for h in range(len(L)):
        res.checked += 1
        direct = modular_direct_index(L, h)
        dec = characterize_index(L, h)
        modular += direct
        if direct != (dec is not None):
            res.status = FAIL
            wit = {**_sub(L, h), "direct": direct, "characterized": dec is not None}
            v = modular_violation(L, h)
            if v is not None:
                wit["violating_pair"] = {"X": v[0], "Z": v[1], "identity": v[2]}
            res.witnesses.append(wit)
            break
    res.stats = {"modular": modular}
    return res


def verify_implications(G: GroupTable, L: SubgroupLattice | None = None) -> LemmaResult:
    """normal ⇒ permutable ⇒ modular, and permutable ⇒ subnormal."""
    L = _lattice(G, L, VerifyConfig())
    res = LemmaResult("implications", PASS)
    stats = {"normal": 0, "permutable": 0, "modular": 0, "subnormal": 0,
             "modular_not_permutable": 0, "permutable_not_normal": 0}
    for h in range(len(L)):
        res.checked += 1
        normal = L.is_normal_in(h)
        perm = permutable_index(L, h)
        mod = modular_direct_index(L, h)
        sn = subnormal_index(L, h)
        for key, flag in (("normal", normal), ("permutable", perm), ("modular", mod), ("subnormal", sn.subnormal)):
            stats[key] += flag
        stats["modular_not_permutable"] += mod and not perm
        stats["permutable_not_normal"] += perm and not normal
        broken = []
        if normal and not perm:
            broken.append("normal but not permutable")
        if normal and not (sn.subnormal and sn.defect <= 1):
            broken.append("normal but subnormal defect > 1")
        if perm and not mod:
            broken.append("permutable but not modular")
        if perm and not (mod and characterize_index(L, h) is not None):
            broken.append("permutable but characterisation rejects")
        if perm and not sn.subnormal:
            broken.append("permutable but not subnormal")
        if broken:
            res.status = FAIL
            res.witnesses.append({**_sub(L, h), "problems": broken})
    res.stats = stats
    return res


# -- catalogs -------------------------------------------------------------------

@dataclass
class ScanEntry:
    spec: str
    status: str  # "ok", "fail", "skipped" or "error"
    report: TheoremReport | None = None
    reason: str = ""


@dataclass
class ScanReport:
    entries: list[ScanEntry] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(e.status == status for e in self.entries)

    @property
    def all_passed(self) -> bool:
        return all(e.status in ("ok", "skipped") for e in self.entries)


def verify_spec(spec: str, config: VerifyConfig = VerifyConfig()) -> ScanEntry:
    try:
        G = build_named(spec, cap=config.construction_cap)
    except GroupConstructionError as e:
        return ScanEntry(spec, "skipped", reason=str(e))
    if G.order > config.lattice_cap:
        return ScanEntry(spec, "skipped", reason=f"order {G.order} exceeds lattice cap {config.lattice_cap}")
    try:
        L = enumerate_subgroups(G, cap=config.lattice_cap, max_subgroups=config.max_subgroups)
    except GroupConstructionError as e:
        return ScanEntry(spec, "skipped", reason=str(e))
    try:
        report = verify_theorem1(G, L, config)
    except EngineError as e:
        log.error("engine error on %s: %s", spec, e)
        return ScanEntry(spec, "error", reason=f"engine error: {e}")
    return ScanEntry(spec, "ok" if report.all_passed else "fail", report)


def scan_catalog(specs: list[str], config: VerifyConfig = VerifyConfig(), jobs: int = 1) -> ScanReport:
    """Run every suite on every spec, in spec order; failures never abort the scan."""
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(verify_spec, specs, [config] * len(specs), chunksize=4))
    else:
        entries = [verify_spec(s, config) for s in specs]
    return ScanReport(entries)
