"""Canonical JSON reports.

Keys are sorted, lists keep report order, and every value is an integer,
boolean, string or null, so two runs on the same input give identical bytes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__
from .verify import LemmaResult, ScanReport, TheoremReport

SCHEMA_VERSION = "1"


@dataclass
class ReportDocument:
    reports: list[dict] = field(default_factory=list)
    skipped: list[dict] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION
    engine_version: str = __version__

    def to_json(self) -> dict:
        return {
            "engine_version": self.engine_version,
            "reports": self.reports,
            "schema_version": self.schema_version,
            "skipped": self.skipped,
        }


def project_lemma(r: LemmaResult) -> dict:
    return {
        "checked": r.checked,
        "note": r.note,
        "stats": dict(r.stats),
        "status": r.status,
        "witnesses": r.witnesses,
    }


def project_report(rep: TheoremReport, spec: str | None = None, status: str | None = None) -> dict:
    out = {
        "group_label": rep.group_label,
        "order": rep.order,
        "subgroup_count": rep.subgroup_count,
        "schmidt_subgroups": [
            {
                "index": c.index,
                "order": c.subgroup.order,
                "members": list(c.subgroup.members),
                "p": c.witness.p,
                "q": c.witness.q,
                "P_order": c.witness.P.order,
                "Q_order": c.witness.Q.order,
                "y": c.witness.y,
                "subnormal": c.subnormal,
                "subnormal_defect": c.defect,
                "modular": c.modular,
                "modular_characterized": c.modular_characterized,
            }
            for c in rep.schmidt_subgroups
        ],
        "hypothesis_holds": rep.hypothesis_holds,
        "hypothesis_vacuous": rep.hypothesis_vacuous,
        "fitting_order": rep.fitting_order,
        "fitting_members": list(rep.fitting.members),
        "quotient_order": rep.quotient_order,
        "quotient_cyclic": rep.quotient_cyclic,
        "conclusion_holds": rep.conclusion_holds,
        "theorem_respected": rep.theorem_respected,
        "lemma_results": {k: project_lemma(v) for k, v in rep.lemma_results.items()},
        "failure_witnesses": rep.failure_witnesses,
    }
    if spec is not None:
        out["spec"] = spec
    if status is not None:
        out["status"] = status
    return out


def document_from_scan(scan: ScanReport) -> ReportDocument:
    doc = ReportDocument()
    for e in scan.entries:
        if e.report is not None:
            doc.reports.append(project_report(e.report, e.spec, e.status))
        else:
            doc.skipped.append({"spec": e.spec, "status": e.status, "reason": e.reason})
    return doc


def emit_report(doc: ReportDocument) -> bytes:
    return (json.dumps(doc.to_json(), sort_keys=True, indent=1, ensure_ascii=False) + "\n").encode()


def parse_report(data: bytes | str) -> ReportDocument:
    obj = json.loads(data)
    return ReportDocument(
        reports=obj["reports"],
        skipped=obj.get("skipped", []),
        schema_version=obj["schema_version"],
        engine_version=obj["engine_version"],
    )
