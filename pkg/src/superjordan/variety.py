"""The deformation relation and its consequences.

Cells of the relation are three-valued: Yes with a verified witness chain
behind it, No with a certificate behind it, or Unknown.  Yes cells are
closed under transitivity; No cells propagate along the sound rule

    a deforms to b,  a does not deform to c   =>   b does not deform to c

(if b reached c, then a would too, by transitivity).  Every derivation step
records provenance, and placing Yes and No on the same cell is a hard error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .algebra import check_associativity, is_nilpotent
from .catalog import Catalog
from .certify import (
    PairCertificate,
    SuiteResult,
    certificate_suite_check,
)
from .deformation import DeformationWitness, trivial_witness, witness_verify
from .derivations import aut_dim

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


class RelationContradiction(RuntimeError):
    """A cell received both Yes and No with their provenances."""


@dataclass(frozen=True)
class Cell:
    status: str
    provenance: str = ""


class Relation:
    """Square three-valued matrix over the catalog, with provenance."""

    def __init__(self, catalog: Catalog):
        self.catalog = catalog
        self.names = catalog.names()
        size = len(self.names)
        self.cells = [[Cell(UNKNOWN) for _ in range(size)] for _ in range(size)]
        for i in range(size):
            self.cells[i][i] = Cell(YES, "reflexive")

    @property
    def size(self) -> int:
        return len(self.names)

    def cell(self, source: str, target: str) -> Cell:
        return self.cells[self.catalog.index_of(source)][self.catalog.index_of(target)]

    def set_yes(self, i: int, j: int, provenance: str) -> bool:
        current = self.cells[i][j]
        if current.status == NO:
            raise RelationContradiction(
                f"{self.names[i]} -> {self.names[j]}: yes ({provenance}) "
                f"contradicts no ({current.provenance})"
            )
        if current.status == YES:
            return False
        self.cells[i][j] = Cell(YES, provenance)
        return True

    def set_no(self, i: int, j: int, provenance: str) -> bool:
        current = self.cells[i][j]
        if current.status == YES:
            raise RelationContradiction(
                f"{self.names[i]} -> {self.names[j]}: no ({provenance}) "
                f"contradicts yes ({current.provenance})"
            )
        if current.status == NO:
            return False
        self.cells[i][j] = Cell(NO, provenance)
        return True

    def statuses(self, status: str) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.size)
            for j in range(self.size)
            if self.cells[i][j].status == status
        ]

    def close_transitively(self, provenance: str = "transitivity") -> None:
        """Warshall closure on Yes; new cells carry the given provenance."""
        size = self.size
        changed = True
        while changed:
            changed = False
            for k in range(size):
                for i in range(size):
                    if self.cells[i][k].status != YES:
                        continue
                    row_k = self.cells[k]
                    for j in range(size):
                        if row_k[j].status == YES and self.cells[i][j].status != YES:
                            self.set_yes(i, j, provenance)
                            changed = True

    def propagate_no(self) -> None:
        """Propagate No across Yes edges to a fixpoint.

        If a deformed to b but not to c, then b cannot deform to c.
        """
        size = self.size
        changed = True
        while changed:
            changed = False
            for a in range(size):
                row_a = self.cells[a]
                yes_targets = [b for b in range(size) if b != a and row_a[b].status == YES]
                no_targets = [c for c in range(size) if row_a[c].status == NO]
                for b in yes_targets:
                    for c in no_targets:
                        if b == c or self.cells[b][c].status == NO:
                            continue
                        self.set_no(b, c, f"propagation via source {self.names[a]}")
                        changed = True


@dataclass(frozen=True)
class RelationBuildResult:
    relation: Relation
    witness_reports: tuple
    suite: SuiteResult
    trivial_reports: tuple

    @property
    def ok(self) -> bool:
        return all(r.is_valid for r in self.witness_reports) and self.suite.ok


def relation_build(
    catalog: Catalog,
    witnesses: list[DeformationWitness],
    certificates: list[PairCertificate],
    sweep: bool = True,
) -> RelationBuildResult:
    """Assemble the relation from verified witnesses and certificates.

    Invalid witnesses and failed certificates never seed cells; they are
    reported through the result object and make .ok false.
    """
    rel = Relation(catalog)

    witness_reports = []
    for witness in witnesses:
        report = witness_verify(witness, catalog)
        witness_reports.append(report)
        if report.is_valid:
            i = catalog.index_of(witness.source)
            j = catalog.index_of(witness.target)
            if i != j:
                rel.set_yes(i, j, f"witness {witness.source} -> {witness.target}")

    trivial_reports = []
    zero = catalog.zero_entry()
    if zero is not None:
        j = catalog.index_of(zero.name)
        for entry in catalog:
            if entry.name == zero.name:
                continue
            report = witness_verify(trivial_witness(entry.algebra), catalog)
            trivial_reports.append(report)
            if report.is_valid:
                rel.set_yes(catalog.index_of(entry.name), j, "trivial-target")

    rel.close_transitively()

    suite = certificate_suite_check(certificates, catalog, sweep_uncovered=sweep)
    for origin, checked in (("", suite.reports), ("machine-sweep ", suite.swept)):
        for pair_cert, report in checked:
            if not report.is_good:
                continue
            i = catalog.index_of(pair_cert.source)
            j = catalog.index_of(pair_cert.target)
            rel.set_no(i, j, f"{origin}certificate {report.kind}")

    rel.propagate_no()

    # Relation invariants: aut dim strictly increases along Yes edges.
    for i, j in rel.statuses(YES):
        if i == j:
            continue
        ds = aut_dim(catalog.entries[i].algebra)
        dt = aut_dim(catalog.entries[j].algebra)
        if ds >= dt:
            raise RelationContradiction(
                f"yes cell {rel.names[i]} -> {rel.names[j]} violates "
                f"aut-dim monotonicity ({ds} >= {dt})"
            )
    return RelationBuildResult(rel, tuple(witness_reports), suite, tuple(trivial_reports))


@dataclass(frozen=True)
class RigidSets:
    certain: tuple[str, ...]
    possible: tuple[str, ...]


def rigid_set(rel: Relation) -> RigidSets:
    certain = []
    possible = []
    for j in range(rel.size):
        incoming = [rel.cells[i][j].status for i in range(rel.size) if i != j]
        if all(status == NO for status in incoming):
            certain.append(rel.names[j])
        elif all(status != YES for status in incoming):
            possible.append(rel.names[j])
    return RigidSets(tuple(certain), tuple(possible))


@dataclass(frozen=True)
class ClosureSets:
    yes: tuple[str, ...]
    unknown: tuple[str, ...]


def closure_of(rel: Relation, name: str) -> ClosureSets:
    i = rel.catalog.index_of(name)
    yes = [rel.names[j] for j in range(rel.size) if rel.cells[i][j].status == YES]
    unknown = [rel.names[j] for j in range(rel.size) if rel.cells[i][j].status == UNKNOWN]
    return ClosureSets(tuple(yes), tuple(unknown))


@dataclass(frozen=True)
class ComponentReport:
    rigid: RigidSets
    closures: dict
    covered: bool
    uncovered: tuple[str, ...]
    unknown_cells: tuple[tuple[str, str], ...]

    @property
    def component_count(self) -> int:
        return len(self.rigid.certain)


def components(rel: Relation) -> ComponentReport:
    rigid = rigid_set(rel)
    closures = {name: closure_of(rel, name) for name in rigid.certain}
    covered_names = set()
    for sets in closures.values():
        covered_names.update(sets.yes)
        covered_names.update(sets.unknown)
    uncovered = tuple(n for n in rel.names if n not in covered_names)
    unknown_cells = tuple(
        (rel.names[i], rel.names[j])
        for i, j in rel.statuses(UNKNOWN)
    )
    return ComponentReport(rigid, closures, not uncovered, uncovered, unknown_cells)


def restrict_relation(rel: Relation, member_names: list[str]) -> Relation:
    """Relation induced on a subset of entries (cells copied verbatim)."""
    sub_catalog = Catalog([rel.catalog.entry(name) for name in member_names])
    sub = Relation(sub_catalog)
    for a, src in enumerate(member_names):
        for b, tgt in enumerate(member_names):
            if a == b:
                continue
            sub.cells[a][b] = rel.cell(src, tgt)
    return sub


SUBVARIETY_PREDICATES: dict[str, Callable] = {
    "associative": lambda J: bool(check_associativity(J)),
    "nilpotent": is_nilpotent,
}


def subvariety_components(rel: Relation, predicate: str) -> ComponentReport:
    """Components of the closed subvariety cut out by a computed predicate."""
    try:
        test = SUBVARIETY_PREDICATES[predicate]
    except KeyError:
        raise ValueError(f"unknown subvariety predicate {predicate!r}") from None
    members = [e.name for e in rel.catalog if test(e.algebra)]
    return components(restrict_relation(rel, members))


@dataclass(frozen=True)
class RobustnessReport:
    no_unknown_into_rigid: bool
    offending_cells: tuple[tuple[str, str], ...]
    rigid_all_yes: tuple[str, ...]
    rigid_all_no: tuple[str, ...]
    closure_deltas: dict
    stable: bool

    @property
    def component_count_all_yes(self) -> int:
        return len(self.rigid_all_yes)

    @property
    def component_count_all_no(self) -> int:
        return len(self.rigid_all_no)


def _reach_closure(adjacency: list[list[bool]]) -> list[list[bool]]:
    size = len(adjacency)
    reach = [row[:] for row in adjacency]
    for k in range(size):
        for i in range(size):
            if reach[i][k]:
                row_k, row_i = reach[k], reach[i]
                for j in range(size):
                    if row_k[j]:
                        row_i[j] = True
    return reach


def robustness_check(rel: Relation, rigid: Optional[RigidSets] = None) -> RobustnessReport:
    """Check that the open cells cannot change the component count.

    The two extreme resolutions (every Unknown taken as Yes, every Unknown
    taken as No) are hypothetical worlds, so they are evaluated as plain
    reachability problems; the all-Yes world may even contradict a recorded
    certificate transitively, which is fine for an upper bound.
    """
    if rigid is None:
        rigid = rigid_set(rel)
    size = rel.size
    offending = tuple(
        (rel.names[i], rel.names[j])
        for i, j in rel.statuses(UNKNOWN)
        if rel.names[j] in rigid.certain
    )
    yes = [[rel.cells[i][j].status == YES for j in range(size)] for i in range(size)]
    merged = [[rel.cells[i][j].status != NO for j in range(size)] for i in range(size)]
    merged_closed = _reach_closure(merged)

    def rigid_from(adjacency: list[list[bool]]) -> tuple[str, ...]:
        return tuple(
            rel.names[j]
            for j in range(size)
            if all(not adjacency[i][j] for i in range(size) if i != j)
        )

    rigid_all_no = rigid_from(yes)
    rigid_all_yes = rigid_from(merged)

    deltas = {}
    for name in rigid.certain:
        i = rel.catalog.index_of(name)
        extra = tuple(
            rel.names[j]
            for j in range(size)
            if merged_closed[i][j] and not yes[i][j] and j != i
        )
        deltas[name] = extra

    stable = not offending and rigid_all_yes == rigid_all_no == rigid.certain
    return RobustnessReport(
        not offending, offending, rigid_all_yes, rigid_all_no, deltas, stable
    )


def determination_rate(rel: Relation) -> Fraction:
    """Fraction of ordered distinct pairs resolved to Yes or No."""
    total = rel.size * (rel.size - 1)
    if total == 0:
        return Fraction(1)
    unknown = sum(1 for i, j in rel.statuses(UNKNOWN) if i != j)
    return Fraction(total - unknown, total)


def hasse_reduction(rel: Relation) -> list[tuple[str, str]]:
    """Transitive reduction of the Yes relation on distinct entries.

    The Yes relation is a partial order (antisymmetry via aut dims), so the
    reduction is unique: keep a -> b iff no intermediate c has a -> c -> b.
    """
    size = rel.size
    yes = [[rel.cells[i][j].status == YES and i != j for j in range(size)] for i in range(size)]
    edges = []
    for i in range(size):
        for j in range(size):
            if not yes[i][j]:
                continue
            if any(yes[i][k] and yes[k][j] for k in range(size) if k not in (i, j)):
                continue
            edges.append((rel.names[i], rel.names[j]))
    return edges
