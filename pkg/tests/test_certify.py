"""Non-deformation certificates: machine obstructions and cited facts."""

from superjordan.certify import (
    AReduction,
    AutDim,
    CertReport,
    EvenPart,
    ExternalFact,
    FReduction,
    IdentityPreservation,
    PairCertificate,
    PowerDim,
    RigidEvenPart,
    base_kind,
    certificate_check,
    certificate_suite_check,
    kind_name,
    machine_certificate,
)

from util import n13, n31


def test_aut_dim_obstruction(catalog13):
    src = catalog13.algebra(n13(1))  # dim aut 9
    tgt = catalog13.algebra(n13(2))  # dim aut 5
    report = certificate_check(AutDim(), src, tgt)
    assert report.status == "proven"
    assert report.evidence == {"aut_dim_source": 9, "aut_dim_target": 5}
    # Swapped direction carries no obstruction.
    swapped = certificate_check(AutDim(), tgt, src)
    assert swapped.status == "failed"
    assert "no obstruction" in swapped.reason


def test_power_dim_obstruction(catalog31):
    src = catalog31.algebra(n31(19))
    tgt = catalog31.algebra(n31(2))
    report = certificate_check(PowerDim(2, 1), src, tgt)
    assert report.status == "proven"
    assert report.evidence["power_dim_source"] < report.evidence["power_dim_target"]
    assert report.evidence["parity"] == "odd"


def test_power_dim_out_of_range(catalog13):
    src = catalog13.algebra(n13(1))
    tgt = catalog13.algebra(n13(2))
    assert certificate_check(PowerDim(0, 0), src, tgt).status == "failed"
    assert certificate_check(PowerDim(99, 0), src, tgt).status == "failed"


def test_identity_preservation(catalog13):
    associative = catalog13.algebra(n13(1))
    crooked = catalog13.algebra(n13(4))
    report = certificate_check(IdentityPreservation(), associative, crooked)
    assert report.status == "proven"
    assert report.evidence == {
        "source_associative": True,
        "target_associative": False,
    }
    assert certificate_check(IdentityPreservation(), crooked, associative).status == "failed"


def test_reduction_wrappers(catalog13):
    # (1,3)_14 has a zero even part while (1,3)_1 keeps its idempotent, so
    # the even parts already separate them by derivation dimension.
    src = catalog13.algebra(n13(14))
    tgt = catalog13.algebra(n13(1))
    report = certificate_check(EvenPart(AutDim()), src, tgt)
    assert report.status == "proven"
    assert report.kind == "even-part { aut-dim }"
    inner_failed = certificate_check(EvenPart(AutDim()), tgt, src)
    assert inner_failed.status == "failed"


def test_reduction_recursion_depth_cap(catalog13):
    src = catalog13.algebra(n13(14))
    tgt = catalog13.algebra(n13(1))
    nested = AutDim()
    for _ in range(4):
        nested = EvenPart(nested)
    report = certificate_check(nested, src, tgt)
    assert report.status == "failed"
    assert "recursion" in report.reason


def test_external_facts_are_assumed_not_proven(catalog13):
    src = catalog13.algebra(n13(1))
    tgt = catalog13.algebra(n13(2))
    report = certificate_check(ExternalFact("classification of low rank cases"), src, tgt)
    assert report.status == "assumed-external"
    assert report.citation == "classification of low rank cases"
    rigid = certificate_check(RigidEvenPart("rigidity of the even part"), src, tgt)
    assert rigid.status == "assumed-external"
    assert rigid.evidence == {"rigid_target": tgt.name}


def test_kind_names_round_trip_labels():
    assert kind_name(AutDim()) == "aut-dim"
    assert kind_name(PowerDim(2, 1)) == "power-dim r=2 parity=odd"
    assert kind_name(FReduction(AutDim())) == "f-part { aut-dim }"
    assert base_kind(AReduction(PowerDim(3, 0))) == "a-part"
    assert base_kind(IdentityPreservation()) == "identity"


def test_machine_certificate_search(catalog13):
    src = catalog13.algebra(n13(1))
    tgt = catalog13.algebra(n13(2))
    hit = machine_certificate(src, tgt)
    assert hit is not None
    cert, report = hit
    assert report.status == "proven"
    # A pair with a genuine deformation admits no machine obstruction.
    deforming = machine_certificate(catalog13.algebra(n13(2)), catalog13.algebra(n13(14)))
    assert deforming is None


def test_suite_flags_failed_certificates(catalog13):
    bogus = PairCertificate(n13(2), n13(1), AutDim())
    result = certificate_suite_check([bogus], catalog13)
    assert not result.ok
    assert len(result.failed) == 1
    pair_cert, report = result.failed[0]
    assert pair_cert is bogus
    assert report.status == "failed"


def test_suite_sweep_covers_uncovered_pairs(catalog13):
    result = certificate_suite_check([], catalog13, sweep_uncovered=True)
    assert result.ok
    swept_pairs = {(pc.source, pc.target) for pc, _ in result.swept}
    assert (n13(1), n13(2)) in swept_pairs
    for _, report in result.swept:
        assert report.status == "proven"
