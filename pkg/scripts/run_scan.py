"""Scan the builtin catalog and print per-suite totals.

    python3 scripts/run_scan.py [--max-order 60] [--dihedral-max 200] [--jobs 1] [--json out.json]
"""
import argparse
import time
from collections import Counter
from pathlib import Path

from schmidtcheck.catalog import builtin_catalog
from schmidtcheck.report import document_from_scan, emit_report
from schmidtcheck.verify import VerifyConfig, scan_catalog


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=60)
    ap.add_argument("--dihedral-max", type=int, default=200)
    ap.add_argument("--exhaustive-max-order", type=int, default=48)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json")
    args = ap.parse_args()

    specs = builtin_catalog(args.max_order, args.dihedral_max)
    t0 = time.perf_counter()
    scan = scan_catalog(specs, VerifyConfig(exhaustive_max_order=args.exhaustive_max_order), jobs=args.jobs)
    elapsed = time.perf_counter() - t0

    reports = [e.report for e in scan.entries if e.report is not None]
    status = Counter(e.status for e in scan.entries)
    print(f"{len(specs)} groups in {elapsed:.1f}s: {dict(sorted(status.items()))}")
    print(f"hypothesis false on {sum(not r.hypothesis_holds for r in reports)} groups, "
          f"vacuous on {sum(r.hypothesis_vacuous for r in reports)}, "
          f"theorem respected on {sum(r.theorem_respected for r in reports)}")

    checked, outcomes, stats = Counter(), Counter(), Counter()
    for r in reports:
        for name, res in r.lemma_results.items():
            checked[name] += res.checked
            outcomes[name, res.status] += 1
            stats.update({f"{name}.{k}": v for k, v in res.stats.items()})
    print(f"{'suite':<13} {'checked':>8} {'pass':>5} {'fail':>5} {'skip':>5}")
    for name in checked:
        print(f"{name:<13} {checked[name]:>8} {outcomes[name, 'pass']:>5} "
              f"{outcomes[name, 'fail']:>5} {outcomes[name, 'skipped']:>5}")
    for k, v in sorted(stats.items()):
        print(f"  {k}: {v}")

    largest = sorted(reports, key=lambda r: -r.subgroup_count)[:5]
    print("largest lattices:", ", ".join(f"{r.group_label} ({r.subgroup_count})" for r in largest))
    if args.json:
        Path(args.json).write_bytes(emit_report(document_from_scan(scan)))


if __name__ == "__main__":
    main()
