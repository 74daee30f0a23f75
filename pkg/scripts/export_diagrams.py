"""Export the deformation Hasse diagrams of both catalogs as DOT files."""

import argparse
import importlib.resources
import sys
from pathlib import Path

from superjordan.dot import export_dot
from superjordan.formats import parse_catalog, parse_certificates, parse_witnesses
from superjordan.variety import relation_build

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

    for suffix, (catalog_file, witness_file, cert_file) in DATASETS.items():
        catalog = parse_catalog((DATA / catalog_file).read_text(encoding="utf-8"))
        witnesses = parse_witnesses((DATA / witness_file).read_text(encoding="utf-8"))
        certificates = parse_certificates(
            (DATA / cert_file).read_text(encoding="utf-8")
        )
        result = relation_build(catalog, witnesses, certificates)
        if not result.ok:
            print(f"catalog {suffix}: build rejected invalid inputs", file=sys.stderr)
            return 1
        out = args.out_dir / f"deformations{suffix}.dot"
        out.write_text(export_dot(result.relation), encoding="utf-8")
        print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
