"""Non-deformation certificates.

Each machine-checkable kind is the contrapositive of one closure invariant:
if J deforms to J', then dim Aut strictly increases, graded power dimensions
cannot grow, the even parts / odd-product reducts / even-action reducts also
deform, and associativity passes to the limit.  A certificate for the pair
(J, J') exhibits one violated consequence, which proves J does not deform
to J'.  External facts (algebra-level results from the cited classification
of three- and four-dimensional Jordan algebra varieties) are recorded with
their citation and never recomputed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .algebra import (
    POWER_CHAIN_CAP,
    SuperAlgebra,
    check_associativity,
    drop_odd_products,
    even_part,
    odd_products_only,
    power_dims,
)
from .catalog import Catalog
from .derivations import aut_dim


@dataclass(frozen=True)
class AutDim:
    """dim Aut(J) >= dim Aut(J'): deformation needs a strict increase."""


@dataclass(frozen=True)
class PowerDim:
    """dim (J^r)_parity < dim (J'^r)_parity: power dims may not grow."""

    r: int
    parity: int  # 0 even, 1 odd


@dataclass(frozen=True)
class EvenPart:
    inner: "Certificate"


@dataclass(frozen=True)
class AReduction:
    """Obstruction persists after keeping only the odd-odd products."""

    inner: "Certificate"


@dataclass(frozen=True)
class FReduction:
    """Obstruction persists after dropping the odd-odd products."""

    inner: "Certificate"


@dataclass(frozen=True)
class IdentityPreservation:
    identity: str = "associativity"


@dataclass(frozen=True)
class ExternalFact:
    citation: str


@dataclass(frozen=True)
class RigidEvenPart:
    """The target is rigid because its even part is a rigid Jordan algebra."""

    citation: str


Certificate = Union[
    AutDim,
    PowerDim,
    EvenPart,
    AReduction,
    FReduction,
    IdentityPreservation,
    ExternalFact,
    RigidEvenPart,
]

MAX_RECURSION_DEPTH = 3


@dataclass(frozen=True)
class CertReport:
    status: str  # "proven" | "assumed-external" | "failed"
    kind: str
    evidence: dict = field(default_factory=dict)
    citation: str = ""
    reason: str = ""

    @property
    def is_good(self) -> bool:
        return self.status in ("proven", "assumed-external")


@dataclass(frozen=True)
class PairCertificate:
    source: str
    target: str
    certificate: Certificate


def kind_name(cert: Certificate) -> str:
    if isinstance(cert, AutDim):
        return "aut-dim"
    if isinstance(cert, PowerDim):
        parity = "odd" if cert.parity else "even"
        return f"power-dim r={cert.r} parity={parity}"
    if isinstance(cert, EvenPart):
        return f"even-part {{ {kind_name(cert.inner)} }}"
    if isinstance(cert, AReduction):
        return f"a-part {{ {kind_name(cert.inner)} }}"
    if isinstance(cert, FReduction):
        return f"f-part {{ {kind_name(cert.inner)} }}"
    if isinstance(cert, IdentityPreservation):
        return f"identity {cert.identity}"
    if isinstance(cert, ExternalFact):
        return f'external cite="{cert.citation}"'
    if isinstance(cert, RigidEvenPart):
        return f'rigid-even-part cite="{cert.citation}"'
    raise TypeError(f"unknown certificate {cert!r}")


def base_kind(cert: Certificate) -> str:
    """Top-level kind label, used for summary counts."""
    return kind_name(cert).split(" ", 1)[0].split("{", 1)[0].strip()


def certificate_check(
    cert: Certificate,
    source: SuperAlgebra,
    target: SuperAlgebra,
    depth: int = 0,
) -> CertReport:
    """Evaluate one certificate for the claim source does-not-deform-to target."""
    if depth > MAX_RECURSION_DEPTH:
        return CertReport("failed", kind_name(cert), reason="recursion too deep")

    if isinstance(cert, AutDim):
        ds, dt = aut_dim(source), aut_dim(target)
        ok = ds >= dt
        return CertReport(
            "proven" if ok else "failed",
            kind_name(cert),
            evidence={"aut_dim_source": ds, "aut_dim_target": dt},
            reason="" if ok else "aut dims strictly increase; no obstruction",
        )

    if isinstance(cert, PowerDim):
        if cert.r < 1 or cert.r > POWER_CHAIN_CAP:
            return CertReport("failed", kind_name(cert), reason="power index out of range")
        ds = power_dims(source, cert.r)[cert.parity]
        dt = power_dims(target, cert.r)[cert.parity]
        ok = ds < dt
        return CertReport(
            "proven" if ok else "failed",
            kind_name(cert),
            evidence={
                "r": cert.r,
                "parity": "odd" if cert.parity else "even",
                "power_dim_source": ds,
                "power_dim_target": dt,
            },
            reason="" if ok else "power dimension does not grow; no obstruction",
        )

    if isinstance(cert, (EvenPart, AReduction, FReduction)):
        reduce: Callable[[SuperAlgebra], SuperAlgebra] = {
            EvenPart: even_part,
            AReduction: odd_products_only,
            FReduction: drop_odd_products,
        }[type(cert)]
        inner = certificate_check(cert.inner, reduce(source), reduce(target), depth + 1)
        label = kind_name(cert)
        if inner.status == "failed":
            return CertReport("failed", label, evidence=inner.evidence, reason=inner.reason)
        return CertReport(inner.status, label, evidence=inner.evidence, citation=inner.citation)

    if isinstance(cert, IdentityPreservation):
        if cert.identity != "associativity":
            return CertReport("failed", kind_name(cert), reason="unsupported identity")
        src_ok = bool(check_associativity(source))
        tgt_ok = bool(check_associativity(target))
        ok = src_ok and not tgt_ok
        return CertReport(
            "proven" if ok else "failed",
            kind_name(cert),
            evidence={"source_associative": src_ok, "target_associative": tgt_ok},
            reason="" if ok else "associativity pattern does not obstruct",
        )

    if isinstance(cert, ExternalFact):
        if not cert.citation:
            return CertReport("failed", kind_name(cert), reason="empty citation")
        return CertReport("assumed-external", kind_name(cert), citation=cert.citation)

    if isinstance(cert, RigidEvenPart):
        if not cert.citation:
            return CertReport("failed", kind_name(cert), reason="empty citation")
        # The cited fact: the target's even part is rigid in its algebra
        # variety, hence the target is rigid and nothing else reaches it.
        return CertReport(
            "assumed-external",
            kind_name(cert),
            evidence={"rigid_target": target.name},
            citation=cert.citation,
        )

    return CertReport("failed", str(cert), reason="unknown certificate kind")


# Machine kinds tried, in order, when a pair carries no transcribed reason.
def _machine_candidates(cap: int = 3) -> list[Certificate]:
    candidates: list[Certificate] = [AutDim(), IdentityPreservation()]
    for r in range(2, cap + 1):
        candidates.append(PowerDim(r, 0))
        candidates.append(PowerDim(r, 1))
    return candidates


def machine_certificate(
    source: SuperAlgebra, target: SuperAlgebra, cap: int = 3
) -> Optional[tuple[Certificate, CertReport]]:
    """First machine kind that proves source does-not-deform-to target."""
    for cert in _machine_candidates(cap):
        report = certificate_check(cert, source, target)
        if report.status == "proven":
            return cert, report
    return None


@dataclass(frozen=True)
class SuiteResult:
    reports: tuple  # of (PairCertificate, CertReport)
    swept: tuple  # of (PairCertificate, CertReport) discovered by the sweep
    failed: tuple

    @property
    def counts(self) -> dict:
        out: dict[str, int] = {}
        for pair_cert, report in self.reports + self.swept:
            key = f"{base_kind(pair_cert.certificate)}:{report.status}"
            out[key] = out.get(key, 0) + 1
        return out

    @property
    def ok(self) -> bool:
        return not self.failed


def certificate_suite_check(
    certs: list[PairCertificate],
    catalog: Catalog,
    sweep_uncovered: bool = False,
) -> SuiteResult:
    """Check all transcribed certificates; optionally sweep uncovered pairs.

    The sweep tries the machine kinds on every ordered pair that has no
    transcribed certificate and records the first success.  It never
    overrides a transcribed reason.
    """
    reports = []
    failed = []
    covered = set()
    for pair_cert in certs:
        source = catalog.algebra(pair_cert.source)
        target = catalog.algebra(pair_cert.target)
        report = certificate_check(pair_cert.certificate, source, target)
        reports.append((pair_cert, report))
        covered.add((pair_cert.source, pair_cert.target))
        if report.status == "failed":
            failed.append((pair_cert, report))

    swept = []
    if sweep_uncovered:
        names = catalog.names()
        for src in names:
            for tgt in names:
                if src == tgt or (src, tgt) in covered:
                    continue
                hit = machine_certificate(catalog.algebra(src), catalog.algebra(tgt))
                if hit is not None:
                    cert, report = hit
                    swept.append((PairCertificate(src, tgt, cert), report))
    return SuiteResult(tuple(reports), tuple(swept), tuple(failed))
