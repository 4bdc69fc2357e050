"""Command-line entry point.

Exit codes: 0 all suites pass, 1 some suite failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .catalog import build_named, builtin_catalog
from .classify import (
    characterize_index,
    modular_direct_index,
    permutable_index,
    schmidt_index,
    subnormal_index,
)
from .groups import GroupConstructionError
from .lattice import enumerate_subgroups
from .report import ReportDocument, document_from_scan, emit_report, project_report
from .verify import (
    FAIL,
    TheoremReport,
    VerifyConfig,
    cross_check_modularity,
    scan_catalog,
    verify_lemma_lm1,
    verify_lemma_lsch,
    verify_lemma_tsch,
    verify_theorem1,
)

LEMMAS = {
    "lsch": verify_lemma_lsch,
    "lsch2": cross_check_modularity,
    "lm1": verify_lemma_lm1,
    "tsch": verify_lemma_tsch,
}


class UsageError(Exception):
    pass


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _load(spec: str, config: VerifyConfig):
    try:
        G = build_named(spec, cap=config.construction_cap)
        L = enumerate_subgroups(G, cap=config.lattice_cap, max_subgroups=config.max_subgroups)
    except (GroupConstructionError, OSError) as e:
        raise UsageError(str(e)) from e
    return G, L


def _config(args) -> VerifyConfig:
    return VerifyConfig(exhaustive_max_order=args.exhaustive_max_order)


def _write_json(path: str | None, doc: ReportDocument) -> None:
    if path:
        Path(path).write_bytes(emit_report(doc))


def print_summary(rep: TheoremReport, out=None) -> None:
    out = sys.stdout if out is None else out
    cls = rep.schmidt_subgroups
    print(f"{rep.group_label}: order {rep.order}, {rep.subgroup_count} subgroups", file=out)
    print(
        f"Schmidt subgroups: {len(cls)} "
        f"(subnormal {sum(c.subnormal for c in cls)}, modular {sum(c.modular for c in cls)})",
        file=out,
    )
    for c in cls:
        w = c.witness
        print(
            f"  #{c.index:<4} order {c.subgroup.order:<4} p={w.p} q={w.q} |P|={w.P.order} "
            f"subnormal={_yn(c.subnormal)} modular={_yn(c.modular)}/{_yn(c.modular_characterized)}",
            file=out,
        )
    print(
        f"F(G): order {rep.fitting_order}; G/F(G): order {rep.quotient_order}, "
        f"{'cyclic' if rep.quotient_cyclic else 'not cyclic'}",
        file=out,
    )
    hyp = "holds (vacuous)" if rep.hypothesis_vacuous else ("holds" if rep.hypothesis_holds else "fails")
    print(f"hypothesis {hyp}; conclusion {'holds' if rep.conclusion_holds else 'fails'}", file=out)
    print(f"theorem respected: {_yn(rep.theorem_respected)}", file=out)
    for name, r in rep.lemma_results.items():
        extra = f" ({r.note})" if r.note else ""
        print(f"  {name:<13} {r.status:<8} checked {r.checked}{extra}", file=out)


def cmd_verify(args) -> int:
    config = _config(args)
    G, L = _load(args.group, config)
    rep = verify_theorem1(G, L, config)
    print_summary(rep)
    _write_json(args.json, ReportDocument(reports=[project_report(rep, args.group)]))
    return 0 if rep.all_passed else 1


def cmd_scan(args) -> int:
    config = _config(args)
    specs = builtin_catalog(args.max_order, args.dihedral_max)
    scan = scan_catalog(specs, config, jobs=args.jobs)
    for e in scan.entries:
        if args.verbose or e.status != "ok":
            print(f"{e.spec:<48} {e.status} {e.reason}".rstrip())
    print(
        f"{len(scan.entries)} groups: {scan.count('ok')} ok, {scan.count('fail')} failed, "
        f"{scan.count('error')} errors, {scan.count('skipped')} skipped"
    )
    _write_json(args.json, document_from_scan(scan))
    return 0 if scan.all_passed else 1


def cmd_classify(args) -> int:
    G, L = _load(args.group, _config(args))
    print(f"{'idx':>4} {'order':>5} {'normal':>6} {'subnormal':>9} {'permutable':>10} "
          f"{'modular':>7} {'charact.':>8} {'schmidt':>7}")
    for i in range(len(L)):
        w = schmidt_index(L, i)
        if not args.all_subgroups and w is None:
            continue
        sn = subnormal_index(L, i)
        sn_text = f"yes({sn.defect})" if sn.subnormal else "no"
        schmidt = f"{w.p},{w.q}" if w else "-"
        print(
            f"{i:>4} {L.order(i):>5} {_yn(L.is_normal_in(i)):>6} {sn_text:>9} "
            f"{_yn(permutable_index(L, i)):>10} {_yn(modular_direct_index(L, i)):>7} "
            f"{_yn(characterize_index(L, i) is not None):>8} {schmidt:>7}"
        )
    return 0


def cmd_lemma(args) -> int:
    G, L = _load(args.group, _config(args))
    res = LEMMAS[args.name](G, L)
    print(f"{args.name} on {args.group}: {res.status}, checked {res.checked}")
    for k, v in sorted(res.stats.items()):
        print(f"  {k}: {v}")
    for w in res.witnesses:
        print(f"  witness: {w}")
    return 1 if res.status == FAIL else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schmidtcheck", description=__doc__.splitlines()[0])
    parser.add_argument("--exhaustive-max-order", type=int, default=48,
                        help="largest order for suites quantified over all subgroups")
    parser.add_argument("--log-level", default="WARNING")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run all suites on one group")
    p.add_argument("--group", required=True)
    p.add_argument("--json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="run all suites on the builtin catalog")
    p.add_argument("--max-order", type=int, default=60)
    p.add_argument("--dihedral-max", type=int, default=200)
    p.add_argument("--json")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("classify", help="per-subgroup predicate table")
    p.add_argument("--group", required=True)
    p.add_argument("--all-subgroups", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("lemma", help="run one lemma suite on one group")
    p.add_argument("--name", required=True, choices=sorted(LEMMAS))
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_lemma)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
