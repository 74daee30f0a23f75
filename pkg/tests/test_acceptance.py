"""Acceptance gate: one test per criterion, each printing a pass line.

Every criterion recomputes its claim from the shipped data through the
public API; nothing here trusts intermediate caches.
"""

from fractions import Fraction

from superjordan.algebra import (
    check_jordan_superidentity,
    check_supercommutativity,
    check_associativity,
    derived_series,
    is_nilpotent,
    is_solvable,
    SuperAlgebra,
)
from superjordan.certify import (
    AReduction,
    AutDim,
    EvenPart,
    FReduction,
    IdentityPreservation,
    PowerDim,
)
from superjordan.cli import FINDINGS, main
from superjordan.claims import CLAIMS_13, CLAIMS_31
from superjordan.deformation import witness_verify
from superjordan.derivations import aut_dim
from superjordan.dot import export_dot
from superjordan.grassmann import envelope_jordan_check
from superjordan.variety import (
    components,
    determination_rate,
    robustness_check,
    subvariety_components,
)

from util import (
    data_path,
    dot_edges,
    n13,
    n31,
    perturbed_non_jordan,
    transitive_closure,
    yes_sets,
)


def closure_yes_sets(comp):
    return {root: set(sets.yes) for root, sets in comp.closures.items()}


def test_criterion_01_identity_suite(catalog13, catalog31):
    failures = []
    for catalog in (catalog13, catalog31):
        for entry in catalog.entries:
            if not check_supercommutativity(entry.algebra):
                failures.append((entry.name, "supercommutativity"))
            if not check_jordan_superidentity(entry.algebra):
                failures.append((entry.name, "jordan"))
    assert failures == []
    print("criterion 1 PASS: all 80 entries satisfy both identities")


def test_criterion_02_derivation_dimensions(catalog13, catalog31):
    for catalog in (catalog13, catalog31):
        for entry in catalog.entries:
            assert aut_dim(entry.algebra) == entry.expected.dim_aut, entry.name
    print("criterion 2 PASS: computed dim aut matches the recorded value, 80/80")


def test_criterion_03_flag_regressions(catalog13, catalog31):
    for catalog in (catalog13, catalog31):
        for entry in catalog.entries:
            assert bool(check_associativity(entry.algebra)) == entry.expected.associative, entry.name
            assert is_nilpotent(entry.algebra) == entry.expected.nilpotent, entry.name
    nil13 = {e.name for e in catalog13.entries if is_nilpotent(e.algebra)}
    nil31 = {e.name for e in catalog31.entries if is_nilpotent(e.algebra)}
    assert nil13 == {n13(k) for k in (14, 15, 18, 19, 20)}
    assert nil31 == {n31(k) for k in (40, 44, 45, 60)}
    print("criterion 3 PASS: associativity and nilpotency flags match exactly")


def test_criterion_04_witness_suites(catalog13, catalog31, witnesses13, witnesses31):
    assert len(witnesses13) == 18
    for witness in witnesses13:
        report = witness_verify(witness, catalog13)
        assert report.is_valid, (witness.source, witness.target, report.reason)
        assert report.limit == catalog13.algebra(witness.target).constants
        src = aut_dim(catalog13.algebra(witness.source))
        tgt = aut_dim(catalog13.algebra(witness.target))
        assert src < tgt, (witness.source, witness.target)
    invalid = [
        (w.source, w.target)
        for w in witnesses31
        if not witness_verify(w, catalog31).is_valid
    ]
    assert invalid == []
    print(
        f"criterion 4 PASS: 18 witnesses verify with exact limits and strict "
        f"aut-dim increase; {len(witnesses31)} companion witnesses verify"
    )


def _machine_checkable(cert) -> bool:
    if isinstance(cert, (AutDim, PowerDim, IdentityPreservation)):
        return True
    if isinstance(cert, (EvenPart, AReduction, FReduction)):
        return _machine_checkable(cert.inner)
    return False


def test_criterion_05_certificate_suites(build13, build31):
    total = 0
    for build in (build13, build31):
        suite = build.suite
        assert suite.failed == ()
        for pair_cert, report in suite.reports:
            assert report.status in ("proven", "assumed-external")
            if _machine_checkable(pair_cert.certificate):
                assert report.status == "proven", (pair_cert.source, pair_cert.target)
                assert report.evidence, (pair_cert.source, pair_cert.target)
            else:
                assert report.citation
        for _, report in suite.swept:
            assert report.status == "proven" and report.evidence
        total += len(suite.reports) + len(suite.swept)
    print(f"criterion 5 PASS: {total} certificates proven or assumed, zero failed")


def test_criterion_06_13_variety(relation13):
    assert relation13.statuses("unknown") == []
    comp = components(relation13)
    assert set(comp.rigid.certain) == CLAIMS_13.rigid
    assert comp.rigid.possible == ()
    assert comp.component_count == 11
    computed = closure_yes_sets(comp)
    claimed = {root: set(claim.members) for root, claim in CLAIMS_13.closures.items()}
    assert computed == claimed
    covered = set()
    for members in computed.values():
        covered |= members
    assert covered == set(relation13.names)
    print("criterion 6 PASS: (1,3) fully determined, 11 components match verbatim")


def test_criterion_07_solvable_rigid_entry(catalog13, relation13):
    comp = components(relation13)
    J = catalog13.algebra(n13(16))
    assert n13(16) in comp.rigid.certain
    assert is_solvable(J)
    series = derived_series(J)
    assert series[2].is_zero and len(series) == 3
    assert set(comp.closures[n13(16)].yes) == set(CLAIMS_13.closures[n13(16)].members)
    print("criterion 7 PASS: a rigid yet solvable entry, derived series length 2")


def test_criterion_08_31_variety(relation31):
    comp = components(relation31)
    assert set(comp.rigid.certain) == CLAIMS_31.rigid
    assert len(comp.rigid.certain) == 21
    unknown = {(s, t) for s, t in comp.unknown_cells}
    assert unknown == set(CLAIMS_31.open_pairs)
    assert len(unknown) == 34
    for _, target in unknown:
        assert target not in CLAIMS_31.rigid
    robustness = robustness_check(relation31, comp.rigid)
    assert robustness.stable
    assert robustness.component_count_all_yes == 21
    assert robustness.component_count_all_no == 21
    rate = determination_rate(relation31)
    assert rate == Fraction(1753, 1770)
    assert f"{float(rate) * 100:.2f}" == "99.04"
    assert CLAIMS_31.determination_percent == "99.05"
    print(
        "criterion 8 PASS: 21 components under both resolutions of the 34 open "
        "cells; rate exactly 1753/1770"
    )


def test_criterion_09_subvarieties(relation13, relation31, report13, report31):
    nil13 = subvariety_components(relation13, "nilpotent")
    assert closure_yes_sets(nil13) == {
        n13(15): {n13(14), n13(15), n13(19), n13(20)},
        n13(18): {n13(14), n13(18), n13(20)},
    }
    nil31 = subvariety_components(relation31, "nilpotent")
    assert closure_yes_sets(nil31) == {n31(40): {n31(40), n31(44), n31(45), n31(60)}}

    asc31 = subvariety_components(relation31, "associative")
    assert set(asc31.rigid.certain) == {n31(19), n31(20)}
    claimed31 = {r: set(m) for r, m in CLAIMS_31.associative_components.items()}
    computed31 = closure_yes_sets(asc31)
    assert computed31[n31(20)] == claimed31[n31(20)]
    assert computed31[n31(19)] == claimed31[n31(19)] - {n31(42)}
    asc31_findings = [f for f in report31.findings if f.section == "subvarieties"]
    assert any(n31(42) in f.note for f in asc31_findings)

    asc13 = subvariety_components(relation13, "associative")
    assert asc13.component_count == 5
    computed13 = closure_yes_sets(asc13)
    assert computed13[n13(1)] == {n13(1), n13(20)}
    claimed_roots = set(CLAIMS_13.associative_components)
    assert set(computed13) != claimed_roots
    asc13_findings = [
        f
        for f in report13.findings
        if f.section == "subvarieties" and f.subject.startswith("associative")
    ]
    assert len(asc13_findings) == 1

    exit_code = main(
        [
            "components",
            data_path("catalog13.jsv"),
            data_path("witnesses13.jsw"),
            data_path("certs13.jsc"),
            "--subvariety",
            "associative",
        ]
    )
    assert exit_code == FINDINGS
    print(
        "criterion 9 PASS: subvariety components match, with the recorded "
        "root-list discrepancies surfaced as findings and exit code 2"
    )


def test_criterion_10_oracle_equivalence(catalog13):
    for entry in catalog13.entries:
        direct = check_jordan_superidentity(entry.algebra)
        envelope = envelope_jordan_check(entry.algebra)
        assert bool(direct) and envelope.holds, entry.name
    for J in perturbed_non_jordan(catalog13, count=10, seed=20317):
        assert not check_jordan_superidentity(J)
        assert not envelope_jordan_check(J).holds
    print(
        "criterion 10 PASS: envelope oracle agrees with the direct checker on "
        "all 20 entries and rejects 10 perturbed tables"
    )


def test_criterion_11_property_suite(
    relation13, relation31, build13, build31, catalog13, catalog31
):
    for rel in (relation13, relation31):
        names = rel.names
        for name in names:
            assert rel.cell(name, name).status == "yes"
        status = {
            (a, b): rel.cell(a, b).status == "yes" for a in names for b in names
        }
        for a in names:
            for b in names:
                if a != b and status[(a, b)]:
                    assert not status[(b, a)], (a, b)
                for c in names:
                    if status[(a, b)] and status[(b, c)]:
                        assert status[(a, c)], (a, b, c)
    for build, catalog in ((build13, catalog13), (build31, catalog31)):
        stype = catalog.stype
        for report in build.witness_reports + build.trivial_reports:
            assert report.is_valid
            assert check_jordan_superidentity(
                SuperAlgebra("limit-algebra", stype, report.limit)
            )
    for rel in (relation13, relation31):
        edges = dot_edges(export_dot(rel))
        assert transitive_closure(rel.names, edges) == yes_sets(rel)
    print(
        "criterion 11 PASS: partial order axioms, witness limits, and DOT "
        "round-trip all hold"
    )
