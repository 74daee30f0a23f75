"""Write the full JSON verification reports for both shipped catalogs."""

import argparse
import importlib.resources
import json
import sys
from pathlib import Path

from superjordan.formats import parse_catalog, parse_certificates, parse_witnesses
from superjordan.report import build_report

DATA = importlib.resources.files("superjordan") / "data"

DATASETS = {
    "13": ("catalog13.jsv", "witnesses13.jsw", "certs13.jsc"),
    "31": ("catalog31.jsv", "witnesses31.jsw", "certs31.jsc"),
}


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out-dir", type=Path, default=Path("out"), help="output directory"
    )
    args = parser.parse_args(argv)
    args.out_dir.mkdir(parents=True, exist_ok=True)

    exit_code = 0
    for suffix, (catalog_file, witness_file, cert_file) in DATASETS.items():
        catalog = parse_catalog((DATA / catalog_file).read_text(encoding="utf-8"))
        witnesses = parse_witnesses((DATA / witness_file).read_text(encoding="utf-8"))
        certificates = parse_certificates(
            (DATA / cert_file).read_text(encoding="utf-8")
        )
        result = build_report(catalog, witnesses, certificates)
        out = args.out_dir / f"report{suffix}.json"
        out.write_text(json.dumps(result.document, indent=2) + "\n", encoding="utf-8")
        print(
            f"wrote {out} (ok={result.document['ok']}, "
            f"findings={len(result.findings)})"
        )
        if not result.ok:
            exit_code = 1
        elif result.findings and exit_code == 0:
            exit_code = 2
    return exit_code


if __name__ == "__main__":
    sys.exit(main())
