"""Exact scalar arithmetic and linear algebra over Q and Q(t).

Everything here is exact: rationals are `fractions.Fraction`, polynomials
keep Fraction coefficients, and rational functions are kept reduced with a
monic denominator.  No floats appear anywhere in the pipeline, so equality
tests are decidable and limits at t = 0 are computed symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union


class PoleError(ArithmeticError):
    """Raised when evaluating a rational function at a pole."""


class SingularMatrixError(ArithmeticError):
    """Raised when inverting a matrix with zero determinant."""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot coerce {value!r} to a rational")


class UniPoly:
    """Univariate polynomial in t with Fraction coefficients, ascending order.

    The zero polynomial stores an empty coefficient tuple and has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):  # trailing zeros are stripped
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @staticmethod
    def constant(value) -> "UniPoly":
        return UniPoly([_as_fraction(value)])

    @staticmethod
    def t_power(k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("t_power needs k >= 0; use RatFunc for t^-k")
        return UniPoly([0] * k + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __add__(self, other: "UniPoly") -> "UniPoly":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPoly(
            [
                (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                for i in range(n)
            ]
        )

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero or other.is_zero:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    def scale(self, value) -> "UniPoly":
        q = _as_fraction(value)
        return UniPoly([q * c for c in self.coeffs])

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        den = other.coeffs
        quo = [Fraction(0)] * max(len(rem) - len(den) + 1, 0)
        inv_lead = 1 / den[-1]
        for top in range(len(rem) - 1, len(den) - 2, -1):
            q = rem[top] * inv_lead
            if q == 0:
                continue
            shift = top - (len(den) - 1)
            quo[shift] = q
            for j, d in enumerate(den):
                rem[shift + j] -= q * d
        return UniPoly(quo), UniPoly(rem)

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        # Euclidean algorithm; the result is monic (or zero for gcd(0, 0)).
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def eval(self, point: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    @property
    def valuation(self) -> int:
        """Order of vanishing at t = 0; -1 for the zero polynomial."""
        if self.is_zero:
            return -1
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        raise AssertionError("unreachable: normalized polynomial")

    @property
    def is_monomial(self) -> bool:
        return sum(1 for c in self.coeffs if c != 0) == 1

    def __repr__(self) -> str:
        return f"UniPoly({format_poly(self)!r})"


def format_poly(p: UniPoly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            t = "t" if k == 1 else f"t^{k}"
            if c == 1:
                parts.append(t)
            elif c == -1:
                parts.append(f"-{t}")
            else:
                parts.append(f"{c}*{t}")
    return " + ".join(parts).replace("+ -", "- ")


class RatFunc:
    """Element of Q(t): a reduced fraction of UniPoly with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: UniPoly, den: UniPoly = UniPoly([1])):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = UniPoly(), UniPoly([1])
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.leading
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def from_rational(value) -> "RatFunc":
        return RatFunc(UniPoly.constant(_as_fraction(value)))

    @staticmethod
    def t_power(k: int) -> "RatFunc":
        """t^k for any integer k, negative exponents included."""
        if k >= 0:
            return RatFunc(UniPoly.t_power(k))
        return RatFunc(UniPoly([1]), UniPoly.t_power(-k))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    @property
    def is_monomial(self) -> bool:
        """True for c * t^k with k any integer (denominator a power of t)."""
        return self.num.is_monomial and self.den.is_monomial

    @property
    def is_regular_at_zero(self) -> bool:
        return self.den.eval(Fraction(0)) != 0

    def eval_at_zero(self) -> Fraction:
        d = self.den.eval(Fraction(0))
        if d == 0:
            raise PoleError(f"pole at t = 0 in {self}")
        return self.num.eval(Fraction(0)) / d

    def _coerced(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_rational(other)
        raise TypeError(f"cannot coerce {other!r} to Q(t)")

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFunc.from_rational(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self.is_polynomial and self.num.degree <= 0:
            # Constants hash like their rational value.
            value = self.num.coefficient(0)
            return hash(value)
        return hash(("RatFunc", self.num.coeffs, self.den.coeffs))

    def __add__(self, other) -> "RatFunc":
        o = self._coerced(other)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        return self + (-self._coerced(other))

    def __rsub__(self, other) -> "RatFunc":
        return self._coerced(other) - self

    def __mul__(self, other) -> "RatFunc":
        o = self._coerced(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = self._coerced(other)
        if o.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return self._coerced(other) / self

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        num = format_poly(self.num)
        if self.is_polynomial:
            return num
        return f"({num})/({format_poly(self.den)})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


T = RatFunc.t_power(1)

Scalar = Union[Fraction, RatFunc]


@dataclass(frozen=True)
class FieldSpec:
    """Just enough structure to run generic linear algebra over a field."""

    name: str
    zero: Scalar
    one: Scalar
    lift: Callable[[Fraction], Scalar]


QQ = FieldSpec("Q", Fraction(0), Fraction(1), lambda q: q)
FT = FieldSpec(
    "Q(t)",
    RatFunc(UniPoly()),
    RatFunc(UniPoly([1])),
    lambda q: RatFunc.from_rational(q),
)


def lift_to_ft(value: Scalar) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    return RatFunc.from_rational(value)


class Matrix:
    """Dense matrix over a FieldSpec; all arithmetic stays exact."""

    __slots__ = ("field", "rows")

    def __init__(self, field: FieldSpec, rows: Sequence[Sequence[Scalar]]):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "Matrix":
        return Matrix(
            field,
            [[field.one if i == j else field.zero for j in range(n)] for i in range(n)],
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(("Matrix", self.rows))

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return Matrix(
            self.field,
            [
                [
                    sum(
                        (self.rows[i][k] * other.rows[k][j] for k in range(self.ncols)),
                        self.field.zero,
                    )
                    for j in range(other.ncols)
                ]
                for i in range(self.nrows)
            ],
        )

    def apply(self, vector: Sequence[Scalar]) -> tuple:
        if len(vector) != self.ncols:
            raise ValueError("shape mismatch")
        return tuple(
            sum((row[k] * vector[k] for k in range(self.ncols)), self.field.zero)
            for row in self.rows
        )

    def map(self, fn: Callable[[Scalar], Scalar], field: FieldSpec) -> "Matrix":
        return Matrix(field, [[fn(x) for x in row] for row in self.rows])

    def det(self) -> Scalar:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        work = [list(row) for row in self.rows]
        result = self.field.one
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != self.field.zero), None)
            if pivot is None:
                return self.field.zero
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                result = -result
            p = work[col][col]
            result = result * p
            inv = self.field.one / p
            for r in range(col + 1, n):
                factor = work[r][col] * inv
                if factor == self.field.zero:
                    continue
                for c in range(col, n):
                    work[r][c] = work[r][c] - factor * work[col][c]
        return result

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        work = [list(row) + [self.field.one if i == j else self.field.zero for j in range(n)]
                for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != self.field.zero), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            work[col], work[pivot] = work[pivot], work[col]
            inv = self.field.one / work[col][col]
            work[col] = [x * inv for x in work[col]]
            for r in range(n):
                if r == col:
                    continue
                factor = work[r][col]
                if factor == self.field.zero:
                    continue
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
        return Matrix(self.field, [row[n:] for row in work])

    def __repr__(self) -> str:
        body = "; ".join(
            ", ".join(str(x) for x in row) for row in self.rows
        )
        return f"Matrix({self.field.name}: [{body}])"


def row_reduce(field: FieldSpec, rows: Iterable[Sequence[Scalar]]) -> list[list[Scalar]]:
    """Reduced row echelon form; zero rows are dropped."""
    work = [list(r) for r in rows]
    if not work:
        return []
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next(
            (r for r in range(rank, len(work)) if work[r][col] != field.zero), None
        )
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = field.one / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(len(work)):
            if r == rank:
                continue
            factor = work[r][col]
            if factor == field.zero:
                continue
            work[r] = [a - factor * b for a, b in zip(work[r], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return work[:rank]


def nullspace(field: FieldSpec, rows: Iterable[Sequence[Scalar]], ncols: int) -> list[tuple]:
    """Echelonized basis of the right nullspace of the given row system."""
    reduced = row_reduce(field, rows)
    pivot_cols = []
    for row in reduced:
        for c, x in enumerate(row):
            if x != field.zero:
                pivot_cols.append(c)
                break
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [field.zero] * ncols
        vec[free] = field.one
        for row, pc in zip(reduced, pivot_cols):
            vec[pc] = -row[free]
        basis.append(tuple(vec))
    return basis
