"""One-parameter deformation witnesses and their exact verification.

A witness is a change of basis g(t) with one block per parity.  Column j of
a block holds the old-basis coordinates of the j-th new basis vector, so a
line like "E1 = t e1" puts t in column 0 of the even block.  Under this
column convention the trivial deformation onto the zero algebra is the
t * identity family: every structure constant picks up a factor t and the
limit at t = 0 is the zero table.

Verification is exact: the source constants are transported over Q(t), each
transported constant must be regular at t = 0, and the evaluated limit must
equal the target's table coordinate by coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import GradedVector, StructureConstants, SuperAlgebra
from .catalog import Catalog
from .scalars import FT, Matrix, PoleError, RatFunc, SingularMatrixError, lift_to_ft


@dataclass(frozen=True)
class BasisFamily:
    """Blockwise change of basis over Q(t); columns are new basis vectors."""

    even_block: Matrix
    odd_block: Matrix

    @staticmethod
    def identity(m: int, n: int) -> "BasisFamily":
        return BasisFamily(Matrix.identity(FT, m), Matrix.identity(FT, n))

    @staticmethod
    def scaling(m: int, n: int, factor: RatFunc) -> "BasisFamily":
        def scaled(k: int) -> Matrix:
            rows = [
                [factor if i == j else FT.zero for j in range(k)] for i in range(k)
            ]
            return Matrix(FT, rows)

        return BasisFamily(scaled(m), scaled(n))


@dataclass(frozen=True)
class DeformationWitness:
    source: str
    target: str
    family: BasisFamily


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of verifying one witness against the active catalog."""

    witness: DeformationWitness
    validity: str  # "strict" | "generic" | "invalid"
    reason: str = ""
    limit: Optional[StructureConstants] = None
    even_det: Optional[RatFunc] = None
    odd_det: Optional[RatFunc] = None

    @property
    def is_valid(self) -> bool:
        return self.validity in ("strict", "generic")


def specialize(J: SuperAlgebra, family: BasisFamily) -> StructureConstants:
    """Structure constants of J in the new basis, over Q(t).

    Raises SingularMatrixError when a block is not invertible over Q(t).
    """
    m, n = J.stype.m, J.stype.n
    Jt = J if J.field is FT else J.lift_to_function_field()
    even_inv = family.even_block.inverse() if m else Matrix(FT, [])
    odd_inv = family.odd_block.inverse() if n else Matrix(FT, [])
    zero = FT.zero

    def new_even_vector(j: int) -> GradedVector:
        return GradedVector(family.even_block.column(j), (zero,) * n)

    def new_odd_vector(j: int) -> GradedVector:
        return GradedVector((zero,) * m, family.odd_block.column(j))

    evens = [new_even_vector(j) for j in range(m)]
    odds = [new_odd_vector(j) for j in range(n)]

    alpha = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            product = Jt.multiply(evens[i], evens[j])
            alpha[i][j] = list(even_inv.apply(product.even))
    beta = [[None] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            product = Jt.multiply(evens[i], odds[j])
            beta[i][j] = list(odd_inv.apply(product.odd))
    gamma = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            product = Jt.multiply(odds[i], odds[j])
            gamma[i][j] = list(even_inv.apply(product.even))
    return StructureConstants(m, n, alpha, beta, gamma)


def limit_at_zero(constants: StructureConstants) -> StructureConstants:
    """Evaluate every constant at t = 0; raises PoleError on any pole."""
    return constants.map_scalars(lambda c: lift_to_ft(c).eval_at_zero())


def _is_monomial_det(det: RatFunc) -> bool:
    return not det.is_zero and det.is_monomial


def witness_verify(witness: DeformationWitness, catalog: Catalog) -> WitnessReport:
    source = catalog.algebra(witness.source)
    target_name = witness.target
    if target_name is None:
        zero_entry = catalog.zero_entry()
        if zero_entry is None:
            return WitnessReport(witness, "invalid", "catalog has no zero algebra")
        target_name = zero_entry.name
        witness = DeformationWitness(witness.source, target_name, witness.family)
    target = catalog.algebra(target_name)
    if source.stype != target.stype:
        return WitnessReport(witness, "invalid", "graded type mismatch")

    family = witness.family
    m, n = source.stype.m, source.stype.n
    if (family.even_block.nrows, family.even_block.ncols) != (m, m) or (
        family.odd_block.nrows,
        family.odd_block.ncols,
    ) != (n, n):
        return WitnessReport(witness, "invalid", "family block shape mismatch")

    even_det = family.even_block.det() if m else FT.one
    odd_det = family.odd_block.det() if n else FT.one
    if even_det.is_zero or odd_det.is_zero:
        return WitnessReport(
            witness, "invalid", "family block identically singular",
            even_det=even_det, odd_det=odd_det,
        )

    transported = specialize(source, family)
    try:
        limit = limit_at_zero(transported)
    except PoleError as exc:
        return WitnessReport(
            witness, "invalid", f"pole at t = 0: {exc}",
            even_det=even_det, odd_det=odd_det,
        )

    if limit != target.constants:
        return WitnessReport(
            witness, "invalid", "limit does not equal the target table",
            limit=limit, even_det=even_det, odd_det=odd_det,
        )

    strict = _is_monomial_det(even_det) and _is_monomial_det(odd_det)
    return WitnessReport(
        witness,
        "strict" if strict else "generic",
        limit=limit,
        even_det=even_det,
        odd_det=odd_det,
    )


def trivial_witness(J: SuperAlgebra, target: Optional[str] = None) -> DeformationWitness:
    """The t * identity family sending J to the zero algebra of its type.

    The target name defaults to None and is resolved against the active
    catalog's zero entry at verification time.
    """
    m, n = J.stype.m, J.stype.n
    t = RatFunc.t_power(1)
    return DeformationWitness(J.name, target, BasisFamily.scaling(m, n, t))
