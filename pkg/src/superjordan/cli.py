"""Command line interface for the verification pipeline.

Exit codes: 0 when everything checks out, 2 when the computation succeeded
but disagrees with a recorded expectation (reconciliation findings), 1 for
errors and failed checks.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import Catalog
from .certify import certificate_suite_check
from .claims import claims_for
from .deformation import witness_verify
from .dot import export_dot
from .formats import FormatError, parse_catalog, parse_certificates, parse_witnesses
from .report import (
    build_report,
    components_section,
    identity_section,
    invariants_section,
    subvarieties_section,
)
from .variety import (
    RelationContradiction,
    components,
    determination_rate,
    relation_build,
    subvariety_components,
)

OK, ERROR, FINDINGS = 0, 1, 2


class CliError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _parse(parser, path: str):
    try:
        return parser(_read(path))
    except FormatError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _load_catalog(path: str) -> Catalog:
    return _parse(parse_catalog, path)


def _check_names(catalog: Catalog, witnesses=(), certificates=()) -> None:
    known = set(catalog.names())
    for witness in witnesses:
        for name in (witness.source, witness.target):
            if name is not None and name not in known:
                raise CliError(
                    f"witness {witness.source} -> {witness.target} "
                    f"references unknown algebra {name!r}"
                )
    for pair_cert in certificates:
        for name in (pair_cert.source, pair_cert.target):
            if name not in known:
                raise CliError(
                    f"certificate {pair_cert.source} -/-> {pair_cert.target} "
                    f"references unknown algebra {name!r}"
                )


def _build(args):
    catalog = _load_catalog(args.catalog)
    witnesses = _parse(parse_witnesses, args.witnesses)
    certificates = _parse(parse_certificates, args.certs)
    _check_names(catalog, witnesses, certificates)
    result = relation_build(catalog, witnesses, certificates)
    return catalog, result


def _print_findings(findings) -> None:
    for finding in findings:
        print(f"finding [{finding.section}] {finding.subject}")
        print(f"  expected: {finding.expected}")
        print(f"  computed: {finding.computed}")
        if finding.note:
            print(f"  note: {finding.note}")


def cmd_validate(args) -> int:
    catalog = _load_catalog(args.catalog)
    identity_doc, identity_failed = identity_section(catalog)
    invariants_doc, findings = invariants_section(catalog)
    for entry in identity_doc["entries"]:
        if not (entry["supercommutative"] and entry["jordan-superidentity"]):
            print(f"{entry['name']}: identity FAILED ({entry['violation']})")
    print(
        f"identities: {identity_doc['checked']} checked, {identity_doc['failed']} failed"
    )
    print(
        f"metadata: {invariants_doc['checked']} entries, "
        f"{invariants_doc['mismatches']} mismatches"
    )
    _print_findings(findings)
    if identity_failed:
        return ERROR
    return FINDINGS if findings else OK


def cmd_invariants(args) -> int:
    catalog = _load_catalog(args.catalog)
    invariants_doc, _ = invariants_section(catalog)
    for entry in invariants_doc["entries"]:
        computed = entry["computed"]
        print(
            f"{entry['name']}: dim_aut={computed['dim_aut']} "
            f"associative={computed['associative']} nilpotent={computed['nilpotent']}"
        )
    return OK


def cmd_witnesses(args) -> int:
    catalog = _load_catalog(args.catalog)
    witnesses = _parse(parse_witnesses, args.witnesses)
    _check_names(catalog, witnesses=witnesses)
    invalid = 0
    for witness in witnesses:
        report = witness_verify(witness, catalog)
        print(f"{witness.source} -> {witness.target}: {report.validity}")
        if not report.is_valid:
            invalid += 1
            if report.reason:
                print(f"  reason: {report.reason}")
    print(f"witnesses: {len(witnesses)} checked, {invalid} invalid")
    return ERROR if invalid else OK


def cmd_certs(args) -> int:
    catalog = _load_catalog(args.catalog)
    certificates = _parse(parse_certificates, args.certs)
    _check_names(catalog, certificates=certificates)
    suite = certificate_suite_check(certificates, catalog)
    for pair_cert, report in suite.reports:
        line = f"{pair_cert.source} -/-> {pair_cert.target}: {report.kind} {report.status}"
        if report.status == "failed" and report.reason:
            line += f" ({report.reason})"
        print(line)
    print(f"certificates: {len(suite.reports)} checked, {len(suite.failed)} failed")
    return ERROR if suite.failed else OK


def cmd_relation(args) -> int:
    catalog, result = _build(args)
    if not result.ok:
        print("relation build rejected invalid inputs", file=sys.stderr)
        return ERROR
    rel = result.relation
    counts = {"yes": 0, "no": 0, "unknown": 0}
    for i in range(rel.size):
        for j in range(rel.size):
            if i != j:
                counts[rel.cells[i][j].status] += 1
    rate = determination_rate(rel)
    print(
        f"relation over {rel.size} entries: {counts['yes']} yes, "
        f"{counts['no']} no, {counts['unknown']} unknown"
    )
    print(f"determination rate: {rate.numerator}/{rate.denominator}")
    if args.json:
        from .report import relation_section

        document, _ = relation_section(rel, claims_for(catalog.names()))
        Path(args.json).write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")
        print(f"wrote {args.json}")
    return OK


def cmd_components(args) -> int:
    catalog, result = _build(args)
    if not result.ok:
        print("relation build rejected invalid inputs", file=sys.stderr)
        return ERROR
    rel = result.relation
    claims = claims_for(catalog.names())
    if args.subvariety:
        comp = subvariety_components(rel, args.subvariety)
        _, findings = subvarieties_section(rel, claims)
        findings = [f for f in findings if f.subject.startswith(args.subvariety)]
        label = f"{args.subvariety} subvariety"
    else:
        comp = components(rel)
        _, findings = components_section(rel, comp, claims)
        label = "variety"
    print(f"{label}: {comp.component_count} components")
    for root in comp.rigid.certain:
        sets = comp.closures[root]
        closure = ", ".join(sets.yes)
        print(f"  {root}: {{{closure}}}")
        if sets.unknown:
            print(f"    open: {{{', '.join(sets.unknown)}}}")
    if comp.rigid.possible:
        print(f"possibly rigid (open incoming cells): {', '.join(comp.rigid.possible)}")
    _print_findings(findings)
    return FINDINGS if findings else OK


def cmd_dot(args) -> int:
    catalog, result = _build(args)
    if not result.ok:
        print("relation build rejected invalid inputs", file=sys.stderr)
        return ERROR
    text = export_dot(result.relation)
    Path(args.output).write_text(text, encoding="utf-8")
    print(f"wrote {args.output}")
    return OK


def cmd_report(args) -> int:
    catalog = _load_catalog(args.catalog)
    witnesses = _parse(parse_witnesses, args.witnesses)
    certificates = _parse(parse_certificates, args.certs)
    _check_names(catalog, witnesses, certificates)
    result = build_report(catalog, witnesses, certificates)
    document = result.document
    print(
        f"catalog {document['catalog']['type']}: {document['catalog']['entries']} entries"
    )
    print(
        f"identities: {document['identity-checks']['failed']} failed; "
        f"witnesses: {document['witnesses']['invalid']} invalid; "
        f"certificates: {document['certificates']['failed']} failed"
    )
    relation = document["relation"]
    print(
        f"relation: {relation['yes']} yes, {relation['no']} no, "
        f"{relation['unknown']} unknown "
        f"({relation['determination-rate']['percent']}% determined)"
    )
    print(f"components: {document['components']['count']}")
    _print_findings(result.findings)
    if args.json:
        Path(args.json).write_text(
            json.dumps(document, indent=2) + "\n", encoding="utf-8"
        )
        print(f"wrote {args.json}")
    if not result.ok:
        return ERROR
    return FINDINGS if result.findings else OK


def _add_data_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("catalog", help="catalog file (.jsv)")
    parser.add_argument("witnesses", help="witness file (.jsw)")
    parser.add_argument("certs", help="certificate file (.jsc)")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="superjordan",
        description="exact verification of deformation classifications",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="identity checks plus metadata reconciliation")
    p.add_argument("catalog")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("invariants", help="recomputed invariants per entry")
    p.add_argument("catalog")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("witnesses", help="verify a witness file")
    p.add_argument("catalog")
    p.add_argument("witnesses")
    p.set_defaults(func=cmd_witnesses)

    p = sub.add_parser("certs", help="check a certificate file")
    p.add_argument("catalog")
    p.add_argument("certs")
    p.set_defaults(func=cmd_certs)

    p = sub.add_parser("relation", help="build the three-valued relation")
    _add_data_arguments(p)
    p.add_argument("--json", metavar="OUT", help="write the relation section as JSON")
    p.set_defaults(func=cmd_relation)

    p = sub.add_parser("components", help="rigid entries and irreducible components")
    _add_data_arguments(p)
    p.add_argument("--subvariety", choices=("associative", "nilpotent"))
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("dot", help="export the Hasse diagram as DOT")
    _add_data_arguments(p)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("report", help="full pipeline with reconciliation findings")
    _add_data_arguments(p)
    p.add_argument("--json", metavar="OUT", help="write the full report as JSON")
    p.set_defaults(func=cmd_report)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    except RelationContradiction as exc:
        print(f"contradiction: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
