"""Graded structure-constant algebras and their structural checks.

A type (m, n) superalgebra is stored through three constant tables on a
fixed homogeneous basis e_1..e_m (even), f_1..f_n (odd):

    e_i e_j = sum_k alpha[i][j][k] e_k
    e_i f_j = sum_k beta[i][j][k] f_k
    f_i f_j = sum_k gamma[i][j][k] e_k

Supercommutativity is baked into the storage: alpha is symmetric in (i, j)
and gamma is antisymmetric, which the constructor verifies.  Products of two
odd vectors land in the even part and mixed products in the odd part, so the
grading is structural and never needs a runtime check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Sequence

from .scalars import FieldSpec, QQ, Scalar, lift_to_ft, FT, row_reduce

POWER_CHAIN_CAP = 10


@dataclass(frozen=True)
class SuperType:
    """Graded dimension pair: m even basis vectors, n odd ones."""

    m: int
    n: int

    @property
    def dim(self) -> int:
        return self.m + self.n

    def __str__(self) -> str:
        return f"({self.m},{self.n})"


@dataclass(frozen=True)
class GradedVector:
    """Element written in the fixed basis; even and odd coordinate blocks."""

    even: tuple
    odd: tuple

    def add(self, other: "GradedVector") -> "GradedVector":
        return GradedVector(
            tuple(a + b for a, b in zip(self.even, other.even)),
            tuple(a + b for a, b in zip(self.odd, other.odd)),
        )

    def scale(self, c: Scalar) -> "GradedVector":
        return GradedVector(
            tuple(c * a for a in self.even), tuple(c * a for a in self.odd)
        )

    def is_zero(self, zero: Scalar) -> bool:
        return all(a == zero for a in self.even) and all(a == zero for a in self.odd)


class StructureConstants:
    """Immutable (alpha, beta, gamma) tables with the storage symmetries."""

    __slots__ = ("m", "n", "alpha", "beta", "gamma")

    def __init__(self, m: int, n: int, alpha, beta, gamma):
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "alpha", _freeze3(alpha, m, m, m))
        object.__setattr__(self, "beta", _freeze3(beta, m, n, n))
        object.__setattr__(self, "gamma", _freeze3(gamma, n, n, m))
        for i in range(m):
            for j in range(i, m):
                if self.alpha[i][j] != self.alpha[j][i]:
                    raise ValueError(f"alpha not symmetric at ({i + 1},{j + 1})")
        for i in range(n):
            for j in range(i, n):
                negated = tuple(-c for c in self.gamma[j][i])
                if self.gamma[i][j] != negated:
                    raise ValueError(f"gamma not antisymmetric at ({i + 1},{j + 1})")

    def __setattr__(self, name, value):
        raise AttributeError("StructureConstants is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureConstants):
            return NotImplemented
        return (
            self.m == other.m
            and self.n == other.n
            and self.alpha == other.alpha
            and self.beta == other.beta
            and self.gamma == other.gamma
        )

    def __hash__(self) -> int:
        return hash((self.m, self.n, self.alpha, self.beta, self.gamma))

    @staticmethod
    def zero(m: int, n: int, zero: Scalar = Fraction(0)) -> "StructureConstants":
        a = [[[zero] * m for _ in range(m)] for _ in range(m)]
        b = [[[zero] * n for _ in range(n)] for _ in range(m)]
        g = [[[zero] * m for _ in range(n)] for _ in range(n)]
        return StructureConstants(m, n, a, b, g)

    def map_scalars(self, fn: Callable[[Scalar], Scalar]) -> "StructureConstants":
        def walk(table):
            return [[[fn(c) for c in vec] for vec in plane] for plane in table]

        return StructureConstants(
            self.m, self.n, walk(self.alpha), walk(self.beta), walk(self.gamma)
        )

    def is_zero(self, zero: Scalar) -> bool:
        tables = (self.alpha, self.beta, self.gamma)
        return all(
            c == zero for table in tables for plane in table for vec in plane for c in vec
        )


def _freeze3(table, d0: int, d1: int, d2: int):
    rows = tuple(tuple(tuple(vec) for vec in plane) for plane in table)
    if len(rows) != d0 or any(len(p) != d1 for p in rows) or any(
        len(v) != d2 for p in rows for v in p
    ):
        raise ValueError(f"constant table must have shape {d0}x{d1}x{d2}")
    return rows


@dataclass(frozen=True)
class SuperAlgebra:
    """A named structure-constant superalgebra over an exact field."""

    name: str
    stype: SuperType
    constants: StructureConstants
    field: FieldSpec = QQ

    def __post_init__(self):
        if (self.constants.m, self.constants.n) != (self.stype.m, self.stype.n):
            raise ValueError("constants do not match the declared type")

    def zero_vector(self) -> GradedVector:
        z = self.field.zero
        return GradedVector((z,) * self.stype.m, (z,) * self.stype.n)

    def basis_vector(self, index: int) -> GradedVector:
        """Basis by flat index: 0..m-1 are even e's, m..m+n-1 are odd f's."""
        m, n = self.stype.m, self.stype.n
        z, one = self.field.zero, self.field.one
        even = [z] * m
        odd = [z] * n
        if index < m:
            even[index] = one
        else:
            odd[index - m] = one
        return GradedVector(tuple(even), tuple(odd))

    def basis_parity(self, index: int) -> int:
        return 0 if index < self.stype.m else 1

    def multiply(self, x: GradedVector, y: GradedVector) -> GradedVector:
        m, n = self.stype.m, self.stype.n
        z = self.field.zero
        cons = self.constants
        even_out = [z] * m
        odd_out = [z] * n
        for i in range(m):
            xi = x.even[i]
            if xi == z:
                continue
            for j in range(m):
                yj = y.even[j]
                if yj == z:
                    continue
                coeff = xi * yj
                for k in range(m):
                    a = cons.alpha[i][j][k]
                    if a != z:
                        even_out[k] = even_out[k] + coeff * a
        # Odd products of two odd vectors land in the even block via gamma.
        for i in range(n):
            xi = x.odd[i]
            if xi == z:
                continue
            for j in range(n):
                yj = y.odd[j]
                if yj == z:
                    continue
                coeff = xi * yj
                for k in range(m):
                    g = cons.gamma[i][j][k]
                    if g != z:
                        even_out[k] = even_out[k] + coeff * g
        # Mixed products: e_i f_j = f_j e_i (no sign, degrees 0 and 1).
        for i in range(m):
            for j in range(n):
                coeff = x.even[i] * y.odd[j] + y.even[i] * x.odd[j]
                if coeff == z:
                    continue
                for k in range(n):
                    b = cons.beta[i][j][k]
                    if b != z:
                        odd_out[k] = odd_out[k] + coeff * b
        return GradedVector(tuple(even_out), tuple(odd_out))

    def basis_product(self, a: int, b: int) -> GradedVector:
        return self.multiply(self.basis_vector(a), self.basis_vector(b))

    def lift_to_function_field(self) -> "SuperAlgebra":
        return SuperAlgebra(
            self.name, self.stype, self.constants.map_scalars(lift_to_ft), FT
        )


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of an identity check with a concrete violating tuple, if any."""

    ok: bool
    identity: str
    violation: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def check_supercommutativity(J: SuperAlgebra) -> IdentityReport:
    """xy = (-1)^{|x||y|} yx on all homogeneous basis pairs.

    The storage convention makes this automatic; the check guards against a
    hand-built table bypassing the constructor invariants.
    """
    d = J.stype.dim
    z = J.field.zero
    for a in range(d):
        for b in range(d):
            left = J.basis_product(a, b)
            right = J.basis_product(b, a)
            sign = -J.field.one if J.basis_parity(a) and J.basis_parity(b) else J.field.one
            diff = left.add(right.scale(-sign))
            if not diff.is_zero(z):
                return IdentityReport(False, "supercommutativity", (a, b))
    return IdentityReport(True, "supercommutativity")


def check_jordan_superidentity(J: SuperAlgebra) -> IdentityReport:
    """Six-term signed identity over all homogeneous basis quadruples.

    With |w|,|x|,|y|,|z| the parities, the residual of (w,x,y,z) is
        (wx)(yz) + (-1)^{|x||y|}(wy)(xz) + (-1)^{(|x|+|y|)|z|}(wz)(xy)
        - (-1)^{|w||x|} x(w(yz)) - (-1)^{|y|(|w|+|x|)} y(w(xz))
        - (-1)^{|z|(|w|+|x|+|y|)} z(w(xy))
    and every residual must vanish.
    """
    d = J.stype.dim
    z = J.field.zero
    one = J.field.one
    basis = [J.basis_vector(i) for i in range(d)]
    parity = [J.basis_parity(i) for i in range(d)]
    mul = J.multiply

    def sgn(exponent: int):
        return one if exponent % 2 == 0 else -one

    for iw, ix, iy, iz in itertools.product(range(d), repeat=4):
        w, x, y, v = basis[iw], basis[ix], basis[iy], basis[iz]
        pw, px, py, pz = parity[iw], parity[ix], parity[iy], parity[iz]
        acc = mul(mul(w, x), mul(y, v))
        acc = acc.add(mul(mul(w, y), mul(x, v)).scale(sgn(px * py)))
        acc = acc.add(mul(mul(w, v), mul(x, y)).scale(sgn((px + py) * pz)))
        acc = acc.add(mul(x, mul(w, mul(y, v))).scale(-sgn(pw * px)))
        acc = acc.add(mul(y, mul(w, mul(x, v))).scale(-sgn(py * (pw + px))))
        acc = acc.add(mul(v, mul(w, mul(x, y))).scale(-sgn(pz * (pw + px + py))))
        if not acc.is_zero(z):
            return IdentityReport(False, "jordan", (iw, ix, iy, iz))
    return IdentityReport(True, "jordan")


@lru_cache(maxsize=None)
def check_associativity(J: SuperAlgebra) -> IdentityReport:
    """(xy)z = x(yz) over all basis triples, no grading signs."""
    d = J.stype.dim
    z = J.field.zero
    basis = [J.basis_vector(i) for i in range(d)]
    for ia, ib, ic in itertools.product(range(d), repeat=3):
        left = J.multiply(J.multiply(basis[ia], basis[ib]), basis[ic])
        right = J.multiply(basis[ia], J.multiply(basis[ib], basis[ic]))
        if not left.add(right.scale(-J.field.one)).is_zero(z):
            return IdentityReport(False, "associativity", (ia, ib, ic))
    return IdentityReport(True, "associativity")


@dataclass(frozen=True)
class GradedSubspace:
    """Graded subspace held as reduced row echelon bases per parity block."""

    even: tuple
    odd: tuple

    @property
    def dims(self) -> tuple[int, int]:
        return (len(self.even), len(self.odd))

    @property
    def is_zero(self) -> bool:
        return not self.even and not self.odd


def span_subspace(J: SuperAlgebra, vectors: Sequence[GradedVector]) -> GradedSubspace:
    """Echelonized graded span; inputs must be homogeneous or zero per block."""
    even_rows = [list(v.even) for v in vectors if any(c != J.field.zero for c in v.even)]
    odd_rows = [list(v.odd) for v in vectors if any(c != J.field.zero for c in v.odd)]
    return GradedSubspace(
        tuple(tuple(r) for r in row_reduce(J.field, even_rows)),
        tuple(tuple(r) for r in row_reduce(J.field, odd_rows)),
    )


def full_subspace(J: SuperAlgebra) -> GradedSubspace:
    m, n = J.stype.m, J.stype.n
    z, one = J.field.zero, J.field.one
    return GradedSubspace(
        tuple(tuple(one if i == j else z for j in range(m)) for i in range(m)),
        tuple(tuple(one if i == j else z for j in range(n)) for i in range(n)),
    )


def _subspace_vectors(J: SuperAlgebra, space: GradedSubspace) -> list[GradedVector]:
    m, n = J.stype.m, J.stype.n
    z = J.field.zero
    vectors = [GradedVector(row, (z,) * n) for row in space.even]
    vectors += [GradedVector((z,) * m, row) for row in space.odd]
    return vectors


def _product_space(
    J: SuperAlgebra, left: GradedSubspace, right: GradedSubspace
) -> list[GradedVector]:
    out = []
    for u in _subspace_vectors(J, left):
        for v in _subspace_vectors(J, right):
            out.append(J.multiply(u, v))
    return out


@lru_cache(maxsize=None)
def _power_chain_cached(J: SuperAlgebra, cap: int) -> tuple[GradedSubspace, ...]:
    return tuple(_power_chain_compute(J, cap))


def power_chain(J: SuperAlgebra, cap: int = POWER_CHAIN_CAP) -> list[GradedSubspace]:
    return list(_power_chain_cached(J, cap))


def _power_chain_compute(J: SuperAlgebra, cap: int = POWER_CHAIN_CAP) -> list[GradedSubspace]:
    """Descending chain J^1 ⊇ J^2 ⊇ ... with J^r = sum over i of J^i J^(r-i).

    Stops at the cap or as soon as two consecutive members agree; by
    monotonicity the chain can only shrink, so agreement means it stalled.
    """
    chain = [full_subspace(J)]
    for r in range(2, cap + 1):
        spanning = []
        for i in range(1, r):
            spanning += _product_space(J, chain[i - 1], chain[r - i - 1])
        nxt = span_subspace(J, spanning)
        chain.append(nxt)
        if nxt == chain[-2] or nxt.is_zero:
            break
    return chain


def power_dims(J: SuperAlgebra, r: int, cap: int = POWER_CHAIN_CAP) -> tuple[int, int]:
    """Graded dimensions of J^r; past a stalled chain the last member repeats."""
    if r < 1:
        raise ValueError("powers start at r = 1")
    chain = power_chain(J, cap=max(cap, r))
    index = min(r, len(chain)) - 1
    return chain[index].dims


def is_nilpotent(J: SuperAlgebra, cap: int = POWER_CHAIN_CAP) -> bool:
    return power_chain(J, cap)[-1].is_zero


def derived_series(J: SuperAlgebra, cap: int = POWER_CHAIN_CAP) -> list[GradedSubspace]:
    series = [full_subspace(J)]
    for _ in range(cap):
        nxt = span_subspace(J, _product_space(J, series[-1], series[-1]))
        series.append(nxt)
        if nxt == series[-2] or nxt.is_zero:
            break
    return series


def is_solvable(J: SuperAlgebra, cap: int = POWER_CHAIN_CAP) -> bool:
    return derived_series(J, cap)[-1].is_zero


def even_part(J: SuperAlgebra) -> SuperAlgebra:
    """The even block as a type (m, 0) algebra; beta and gamma are dropped."""
    m = J.stype.m
    cons = StructureConstants(m, 0, J.constants.alpha, [[] for _ in range(m)], [])
    return SuperAlgebra(f"{J.name}|even", SuperType(m, 0), cons, J.field)


def odd_products_only(J: SuperAlgebra) -> SuperAlgebra:
    """Same space, but only products of two odd vectors survive (gamma kept)."""
    m, n = J.stype.m, J.stype.n
    zero = StructureConstants.zero(m, n, J.field.zero)
    cons = StructureConstants(m, n, zero.alpha, zero.beta, J.constants.gamma)
    return SuperAlgebra(f"{J.name}|odd-products", J.stype, cons, J.field)


def drop_odd_products(J: SuperAlgebra) -> SuperAlgebra:
    """Same space with gamma zeroed: the even part still acts on the odd part."""
    m, n = J.stype.m, J.stype.n
    zero = StructureConstants.zero(m, n, J.field.zero)
    cons = StructureConstants(m, n, J.constants.alpha, J.constants.beta, zero.gamma)
    return SuperAlgebra(f"{J.name}|no-odd-products", J.stype, cons, J.field)
