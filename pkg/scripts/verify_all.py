"""Run the full verification pipeline over both shipped catalogs.

Prints one summary block per catalog and exits with the usual codes:
0 all clean, 2 when reconciliation findings were reported, 1 on failures.
"""

import argparse
import importlib.resources
import sys

from superjordan.formats import parse_catalog, parse_certificates, parse_witnesses
from superjordan.report import build_report

DATA = importlib.resources.files("superjordan") / "data"

DATASETS = {
    "(1,3)": ("catalog13.jsv", "witnesses13.jsw", "certs13.jsc"),
    "(3,1)": ("catalog31.jsv", "witnesses31.jsw", "certs31.jsc"),
}


def run_one(label: str, files: tuple[str, str, str]) -> tuple[bool, int]:
    catalog_file, witness_file, cert_file = files
    catalog = parse_catalog((DATA / catalog_file).read_text(encoding="utf-8"))
    witnesses = parse_witnesses((DATA / witness_file).read_text(encoding="utf-8"))
    certificates = parse_certificates((DATA / cert_file).read_text(encoding="utf-8"))
    result = build_report(catalog, witnesses, certificates)
    doc = result.document

    relation = doc["relation"]
    print(f"== catalog {label}: {doc['catalog']['entries']} entries")
    print(
        f"   identities {doc['identity-checks']['failed']} failed, "
        f"witnesses {doc['witnesses']['invalid']} invalid, "
        f"certificates {doc['certificates']['failed']} failed"
    )
    print(
        f"   relation {relation['yes']} yes / {relation['no']} no / "
        f"{relation['unknown']} unknown "
        f"({relation['determination-rate']['percent']}% determined)"
    )
    print(
        f"   components {doc['components']['count']}, "
        f"robustness stable = {doc['robustness']['stable']}"
    )
    for finding in result.findings:
        print(f"   finding [{finding.section}] {finding.subject}")
        print(f"     expected: {finding.expected}")
        print(f"     computed: {finding.computed}")
        if finding.note:
            print(f"     note: {finding.note}")
    return result.ok, len(result.findings)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--type",
        choices=sorted(DATASETS),
        help="restrict to one catalog (default: both)",
    )
    args = parser.parse_args(argv)

    labels = [args.type] if args.type else sorted(DATASETS)
    all_ok = True
    total_findings = 0
    for label in labels:
        ok, findings = run_one(label, DATASETS[label])
        all_ok = all_ok and ok
        total_findings += findings
    if not all_ok:
        return 1
    return 2 if total_findings else 0


if __name__ == "__main__":
    sys.exit(main())
