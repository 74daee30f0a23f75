"""Even derivations and the automorphism group dimension.

An even derivation is a degree-preserving linear map D with
D(xy) = D(x)y + xD(y).  It is determined by an m x m block A acting on the
even basis and an n x n block B acting on the odd basis.  The Leibniz rule
on basis pairs is linear in (A, B), so the derivation space is the nullspace
of one exact linear system and dim Aut equals its dimension (the
automorphism group is algebraic, with the derivations as its tangent space).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import GradedVector, SuperAlgebra
from .scalars import Matrix, nullspace


@dataclass(frozen=True)
class DerivationSpace:
    """Nullspace of the Leibniz system, echelonized; blocks are (A, B) pairs."""

    dimension: int
    basis: tuple[tuple[Matrix, Matrix], ...]


def _leibniz_rows(J: SuperAlgebra) -> list[list]:
    """One row per (basis pair, output coordinate); columns are A then B."""
    m, n = J.stype.m, J.stype.n
    cons = J.constants
    z = J.field.zero
    ncols = m * m + n * n

    def a_col(row_index: int, col_index: int) -> int:
        return row_index * m + col_index

    def b_col(row_index: int, col_index: int) -> int:
        return m * m + row_index * n + col_index

    rows = []
    # Pairs (e_i, e_j), i <= j: coefficients on e_l.
    for i in range(m):
        for j in range(i, m):
            for l in range(m):
                row = [z] * ncols
                for k in range(m):
                    row[a_col(l, k)] += cons.alpha[i][j][k]
                    row[a_col(k, i)] -= cons.alpha[k][j][l]
                    row[a_col(k, j)] -= cons.alpha[i][k][l]
                rows.append(row)
    # Pairs (e_i, f_j): coefficients on f_l.
    for i in range(m):
        for j in range(n):
            for l in range(n):
                row = [z] * ncols
                for k in range(n):
                    row[b_col(l, k)] += cons.beta[i][j][k]
                    row[b_col(k, j)] -= cons.beta[i][k][l]
                for k in range(m):
                    row[a_col(k, i)] -= cons.beta[k][j][l]
                rows.append(row)
    # Pairs (f_i, f_j), i < j: coefficients on e_l.
    for i in range(n):
        for j in range(i + 1, n):
            for l in range(m):
                row = [z] * ncols
                for k in range(m):
                    row[a_col(l, k)] += cons.gamma[i][j][k]
                for k in range(n):
                    row[b_col(k, i)] -= cons.gamma[k][j][l]
                    row[b_col(k, j)] -= cons.gamma[i][k][l]
                rows.append(row)
    return rows


@lru_cache(maxsize=None)
def even_derivations(J: SuperAlgebra) -> DerivationSpace:
    m, n = J.stype.m, J.stype.n
    ncols = m * m + n * n
    kernel = nullspace(J.field, _leibniz_rows(J), ncols)
    basis = []
    for vec in kernel:
        a_block = Matrix(J.field, [vec[r * m : (r + 1) * m] for r in range(m)])
        b_rows = [
            vec[m * m + r * n : m * m + (r + 1) * n] for r in range(n)
        ]
        b_block = Matrix(J.field, b_rows if n else [])
        basis.append((a_block, b_block))
    return DerivationSpace(len(kernel), tuple(basis))


def aut_dim(J: SuperAlgebra) -> int:
    """dim Aut(J): the dimension of the even derivation space."""
    return even_derivations(J).dimension


def leibniz_check(J: SuperAlgebra, a_block: Matrix, b_block: Matrix) -> bool:
    """Independent re-check of D(xy) = D(x)y + xD(y) on all basis pairs.

    Used by tests to confirm that nullspace vectors really are derivations
    without trusting the row assembly above.
    """
    m, n = J.stype.m, J.stype.n
    z = J.field.zero

    def apply_d(v: GradedVector) -> GradedVector:
        even = a_block.apply(v.even) if m else ()
        odd = b_block.apply(v.odd) if n else ()
        return GradedVector(tuple(even), tuple(odd))

    for a in range(m + n):
        for b in range(m + n):
            x = J.basis_vector(a)
            y = J.basis_vector(b)
            lhs = apply_d(J.multiply(x, y))
            rhs = J.multiply(apply_d(x), y).add(J.multiply(x, apply_d(y)))
            if not lhs.add(rhs.scale(-J.field.one)).is_zero(z):
                return False
    return True
