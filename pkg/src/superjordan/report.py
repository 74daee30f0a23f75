"""Structured verification report with reconciliation findings.

A report runs the entire pipeline for one catalog plus its witness and
certificate files, records every computed item next to the expectation it
was checked against, and collects expected-vs-computed differences as
findings.  Findings never stop the run; the report shows both sides and
leaves the catalog data untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    check_associativity,
    check_jordan_superidentity,
    check_supercommutativity,
    is_nilpotent,
    is_solvable,
)
from .catalog import Catalog
from .certify import base_kind
from .claims import ClaimSet, claims_for
from .deformation import DeformationWitness
from .derivations import aut_dim
from .variety import (
    SUBVARIETY_PREDICATES,
    UNKNOWN,
    ComponentReport,
    Relation,
    RelationBuildResult,
    components,
    determination_rate,
    relation_build,
    robustness_check,
    subvariety_components,
)


@dataclass(frozen=True)
class Finding:
    """One expected-vs-computed difference, reported without resolution."""

    section: str
    subject: str
    expected: str
    computed: str
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "section": self.section,
            "subject": self.subject,
            "expected": self.expected,
            "computed": self.computed,
            "note": self.note,
        }


@dataclass(frozen=True)
class ReportResult:
    document: dict
    findings: tuple
    ok: bool


def _fmt_names(names) -> str:
    return "{" + ", ".join(names) + "}"


def _sorted_names(catalog: Catalog, names) -> list[str]:
    return sorted(names, key=catalog.index_of)


def _percent(rate: Fraction) -> str:
    return f"{float(rate) * 100:.2f}"


def identity_section(catalog: Catalog) -> tuple[dict, int]:
    entries = []
    failed = 0
    for entry in catalog:
        sc = check_supercommutativity(entry.algebra)
        jd = check_jordan_superidentity(entry.algebra)
        ok = bool(sc) and bool(jd)
        failed += 0 if ok else 1
        entries.append(
            {
                "name": entry.name,
                "supercommutative": bool(sc),
                "jordan-superidentity": bool(jd),
                "violation": "" if ok else (sc.violation or jd.violation or ""),
            }
        )
    return {"entries": entries, "checked": len(entries), "failed": failed}, failed


def invariants_section(catalog: Catalog) -> tuple[dict, list[Finding]]:
    entries = []
    findings = []
    for entry in catalog:
        J = entry.algebra
        computed = {
            "dim_aut": aut_dim(J),
            "associative": bool(check_associativity(J)),
            "nilpotent": is_nilpotent(J),
        }
        expected = {
            "dim_aut": entry.expected.dim_aut,
            "associative": entry.expected.associative,
            "nilpotent": entry.expected.nilpotent,
        }
        mismatches = [
            key
            for key in computed
            if expected[key] is not None and computed[key] != expected[key]
        ]
        entries.append(
            {
                "name": entry.name,
                "computed": computed,
                "expected": expected,
                "mismatches": mismatches,
            }
        )
        for key in mismatches:
            findings.append(
                Finding(
                    section="invariants",
                    subject=f"{entry.name} {key}",
                    expected=str(expected[key]),
                    computed=str(computed[key]),
                    note="catalog metadata disagrees with the recomputed invariant",
                )
            )
    mismatch_total = sum(len(e["mismatches"]) for e in entries)
    return (
        {"entries": entries, "checked": len(entries), "mismatches": mismatch_total},
        findings,
    )


def witnesses_section(build: RelationBuildResult, catalog: Catalog) -> tuple[dict, int]:
    entries = []
    invalid = 0
    for report in build.witness_reports:
        witness = report.witness
        ds = aut_dim(catalog.algebra(witness.source))
        dt = aut_dim(catalog.algebra(witness.target))
        strict = ds < dt or witness.source == witness.target
        if not report.is_valid:
            invalid += 1
        entries.append(
            {
                "source": witness.source,
                "target": witness.target,
                "validity": report.validity,
                "reason": report.reason,
                "aut_dim_source": ds,
                "aut_dim_target": dt,
                "aut_dim_strict_increase": strict,
                "evidence": {
                    "even_det": str(report.even_det) if report.even_det is not None else "",
                    "odd_det": str(report.odd_det) if report.odd_det is not None else "",
                },
            }
        )
    trivial_invalid = sum(1 for r in build.trivial_reports if not r.is_valid)
    return (
        {
            "entries": entries,
            "checked": len(entries),
            "invalid": invalid,
            "trivial-target": {
                "checked": len(build.trivial_reports),
                "invalid": trivial_invalid,
            },
        },
        invalid + trivial_invalid,
    )


def _certificate_rows(checked) -> list[dict]:
    rows = []
    for pair_cert, report in checked:
        rows.append(
            {
                "source": pair_cert.source,
                "target": pair_cert.target,
                "kind": report.kind,
                "base-kind": base_kind(pair_cert.certificate),
                "status": report.status,
                "evidence": {k: str(v) for k, v in report.evidence.items()},
                "citation": report.citation,
                "reason": report.reason,
            }
        )
    return rows


def certificates_section(build: RelationBuildResult) -> tuple[dict, int]:
    suite = build.suite
    transcribed = _certificate_rows(suite.reports)
    swept = _certificate_rows(suite.swept)
    failed = len(suite.failed)
    return (
        {
            "transcribed": transcribed,
            "machine-sweep": swept,
            "checked": len(transcribed) + len(swept),
            "failed": failed,
            "counts": suite.counts,
        },
        failed,
    )


def relation_section(rel: Relation, claims: ClaimSet | None) -> tuple[dict, list[Finding]]:
    findings = []
    statuses = {"yes": 0, "no": 0, "unknown": 0}
    unknown_cells = []
    for i in range(rel.size):
        for j in range(rel.size):
            if i == j:
                continue
            status = rel.cells[i][j].status
            statuses[status] += 1
            if status == UNKNOWN:
                unknown_cells.append([rel.names[i], rel.names[j]])
    rate = determination_rate(rel)
    percent = _percent(rate)
    document = {
        "yes": statuses["yes"],
        "no": statuses["no"],
        "unknown": statuses["unknown"],
        "unknown-cells": unknown_cells,
        "determination-rate": {
            "fraction": f"{rate.numerator}/{rate.denominator}",
            "percent": percent,
        },
    }
    if claims is not None and claims.determination_percent is not None:
        document["determination-rate"]["claimed-percent"] = claims.determination_percent
        if claims.determination_percent != percent:
            findings.append(
                Finding(
                    section="relation",
                    subject="determination rate",
                    expected=f"{claims.determination_percent}%",
                    computed=f"{percent}% (exactly {rate.numerator}/{rate.denominator})",
                    note="the claimed figure is rounded differently than the exact fraction",
                )
            )
    if claims is not None:
        claimed_cells = {pair for pair in claims.open_pairs}
        computed_cells = {(s, t) for s, t in unknown_cells}
        if claimed_cells != computed_cells:
            missing = _sorted_pairs(rel.catalog, claimed_cells - computed_cells)
            extra = _sorted_pairs(rel.catalog, computed_cells - claimed_cells)
            findings.append(
                Finding(
                    section="relation",
                    subject="open cells",
                    expected=f"{len(claimed_cells)} open pairs",
                    computed=f"{len(computed_cells)} open pairs",
                    note=f"claimed-only: {missing}; computed-only: {extra}",
                )
            )
    return document, findings


def _sorted_pairs(catalog: Catalog, pairs) -> list[tuple[str, str]]:
    return sorted(pairs, key=lambda p: (catalog.index_of(p[0]), catalog.index_of(p[1])))


def _closure_document(catalog: Catalog, comp: ComponentReport) -> dict:
    return {
        root: {
            "yes": _sorted_names(catalog, sets.yes),
            "unknown": _sorted_names(catalog, sets.unknown),
        }
        for root, sets in comp.closures.items()
    }


def _cell_note(rel: Relation, source: str, names) -> str:
    parts = []
    for name in names:
        cell = rel.cell(source, name)
        parts.append(f"{source} -> {name} is {cell.status} ({cell.provenance})")
    return "; ".join(parts)


def components_section(
    rel: Relation, comp: ComponentReport, claims: ClaimSet | None
) -> tuple[dict, list[Finding]]:
    catalog = rel.catalog
    findings = []
    solvable_rigid = [
        name for name in comp.rigid.certain if is_solvable(catalog.algebra(name))
    ]
    document = {
        "rigid-certain": list(comp.rigid.certain),
        "rigid-possible": list(comp.rigid.possible),
        "count": comp.component_count,
        "closures": _closure_document(catalog, comp),
        "covered": comp.covered,
        "uncovered": list(comp.uncovered),
        "solvable-rigid": solvable_rigid,
    }
    if claims is None:
        return document, findings

    computed_rigid = set(comp.rigid.certain)
    if computed_rigid != claims.rigid:
        findings.append(
            Finding(
                section="components",
                subject="rigid entries",
                expected=_fmt_names(_sorted_names(catalog, claims.rigid)),
                computed=_fmt_names(_sorted_names(catalog, computed_rigid)),
            )
        )
    if comp.rigid.possible:
        findings.append(
            Finding(
                section="components",
                subject="rigid-possible entries",
                expected="none",
                computed=_fmt_names(list(comp.rigid.possible)),
                note="entries with no incoming Yes but at least one incoming Unknown",
            )
        )
    if not comp.covered:
        findings.append(
            Finding(
                section="components",
                subject="coverage",
                expected="every entry inside some component",
                computed=f"uncovered: {_fmt_names(list(comp.uncovered))}",
            )
        )
    for root in _sorted_names(catalog, set(claims.closures) & computed_rigid):
        claim = claims.closures[root]
        closure = comp.closures[root]
        yes_set = set(closure.yes)
        unknown_set = set(closure.unknown)
        expected_yes = claim.members - claim.unverified
        open_targets = {t for (s, t) in claims.open_pairs if s == root}
        if yes_set != expected_yes:
            missing = _sorted_names(catalog, expected_yes - yes_set)
            extra = _sorted_names(catalog, yes_set - expected_yes)
            notes = []
            if missing:
                notes.append(_cell_note(rel, root, missing))
            if extra:
                notes.append(f"verified additionally: {_fmt_names(extra)}")
            findings.append(
                Finding(
                    section="components",
                    subject=f"closure of {root}",
                    expected=_fmt_names(_sorted_names(catalog, expected_yes)),
                    computed=_fmt_names(_sorted_names(catalog, yes_set)),
                    note="; ".join(notes),
                )
            )
        if unknown_set != open_targets:
            findings.append(
                Finding(
                    section="components",
                    subject=f"open cells from {root}",
                    expected=_fmt_names(_sorted_names(catalog, open_targets)),
                    computed=_fmt_names(_sorted_names(catalog, unknown_set)),
                )
            )
    missing_solvable = claims.solvable_rigid - set(solvable_rigid)
    if missing_solvable:
        findings.append(
            Finding(
                section="components",
                subject="solvable rigid entries",
                expected=_fmt_names(_sorted_names(catalog, claims.solvable_rigid)),
                computed=_fmt_names(solvable_rigid),
            )
        )
    return document, findings


def _subvariety_reconcile(
    label: str,
    rel: Relation,
    comp: ComponentReport,
    claimed_components: dict,
    members: set,
) -> list[Finding]:
    catalog = rel.catalog
    findings = []
    computed_roots = set(comp.rigid.certain)
    claimed_roots = set(claimed_components)
    if computed_roots != claimed_roots:
        notes = []
        for root in _sorted_names(catalog, claimed_roots - computed_roots):
            if root not in members:
                notes.append(f"{root} fails the computed membership predicate")
            else:
                notes.append(f"{root} is not a component root in the computed restriction")
        for root in _sorted_names(catalog, computed_roots - claimed_roots):
            closure = _fmt_names(_sorted_names(catalog, comp.closures[root].yes))
            notes.append(f"computed component rooted at {root}: {closure}")
        findings.append(
            Finding(
                section="subvarieties",
                subject=f"{label} component roots",
                expected=_fmt_names(_sorted_names(catalog, claimed_roots)),
                computed=_fmt_names(_sorted_names(catalog, computed_roots)),
                note="; ".join(notes),
            )
        )
    for root in _sorted_names(catalog, claimed_roots & computed_roots):
        claimed_members = claimed_components[root]
        closure = comp.closures[root]
        yes_set = set(closure.yes)
        unknown_set = set(closure.unknown)
        refuted = claimed_members - yes_set - unknown_set
        extra = yes_set - claimed_members
        if refuted or extra:
            notes = []
            if refuted:
                notes.append(_cell_note(rel, root, _sorted_names(catalog, refuted)))
            if extra:
                notes.append(
                    f"verified additionally: {_fmt_names(_sorted_names(catalog, extra))}"
                )
            findings.append(
                Finding(
                    section="subvarieties",
                    subject=f"{label} component of {root}",
                    expected=_fmt_names(_sorted_names(catalog, claimed_members)),
                    computed=_fmt_names(_sorted_names(catalog, yes_set)),
                    note="; ".join(notes),
                )
            )
    return findings


def subvarieties_section(
    rel: Relation, claims: ClaimSet | None
) -> tuple[dict, list[Finding]]:
    catalog = rel.catalog
    findings = []
    document = {}
    for label in ("associative", "nilpotent"):
        predicate = SUBVARIETY_PREDICATES[label]
        members = [e.name for e in catalog if predicate(e.algebra)]
        comp = subvariety_components(rel, label)
        document[label] = {
            "members": members,
            "component-roots": list(comp.rigid.certain),
            "count": comp.component_count,
            "closures": _closure_document(catalog, comp),
            "covered": comp.covered,
        }
        if claims is not None:
            claimed = (
                claims.associative_components
                if label == "associative"
                else claims.nilpotent_components
            )
            findings.extend(
                _subvariety_reconcile(label, rel, comp, claimed, set(members))
            )
    return document, findings


def robustness_section(rel: Relation, claims: ClaimSet | None) -> tuple[dict, list[Finding]]:
    rob = robustness_check(rel)
    findings = []
    document = {
        "no-unknown-into-rigid": rob.no_unknown_into_rigid,
        "offending-cells": [list(cell) for cell in rob.offending_cells],
        "component-count-all-yes": rob.component_count_all_yes,
        "component-count-all-no": rob.component_count_all_no,
        "closure-deltas": {
            root: list(extra) for root, extra in rob.closure_deltas.items() if extra
        },
        "stable": rob.stable,
    }
    if claims is not None and not rob.stable:
        findings.append(
            Finding(
                section="robustness",
                subject="component stability",
                expected="both extreme resolutions keep the rigid set",
                computed=(
                    f"all-yes {rob.component_count_all_yes} components, "
                    f"all-no {rob.component_count_all_no} components, "
                    f"offending cells {rob.offending_cells}"
                ),
            )
        )
    return document, findings


def build_report(
    catalog: Catalog,
    witnesses: list[DeformationWitness],
    certificates: list,
) -> ReportResult:
    """Run the full pipeline and assemble the report document."""
    findings: list[Finding] = []
    claims = claims_for(catalog.names())

    identity_doc, identity_failed = identity_section(catalog)
    invariants_doc, invariant_findings = invariants_section(catalog)
    findings.extend(invariant_findings)

    build = relation_build(catalog, witnesses, certificates)
    witnesses_doc, witness_invalid = witnesses_section(build, catalog)
    certificates_doc, certs_failed = certificates_section(build)

    rel = build.relation
    relation_doc, relation_findings = relation_section(rel, claims)
    findings.extend(relation_findings)

    comp = components(rel)
    components_doc, component_findings = components_section(rel, comp, claims)
    findings.extend(component_findings)

    subvarieties_doc, subvariety_findings = subvarieties_section(rel, claims)
    findings.extend(subvariety_findings)

    robustness_doc, robustness_findings = robustness_section(rel, claims)
    findings.extend(robustness_findings)

    ok = identity_failed == 0 and witness_invalid == 0 and certs_failed == 0
    document = {
        "catalog": {
            "type": str(catalog.stype),
            "entries": len(catalog),
            "reconciled-against-claims": claims is not None,
        },
        "identity-checks": identity_doc,
        "invariants": invariants_doc,
        "witnesses": witnesses_doc,
        "certificates": certificates_doc,
        "relation": relation_doc,
        "components": components_doc,
        "subvarieties": subvarieties_doc,
        "robustness": robustness_doc,
        "reconciliation-findings": [f.as_dict() for f in findings],
        "ok": ok,
    }
    return ReportResult(document, tuple(findings), ok)
