"""Truncated Grassmann-envelope oracle for the Jordan superidentity.

A graded table is a Jordan superalgebra exactly when its Grassmann envelope
satisfies the ungraded multilinear Jordan identity

    (wx)(yz) + (wy)(xz) + (wz)(xy)
        - x(w(yz)) - y(w(xz)) - z(w(xy)) = 0.

The envelope pairs even basis vectors with even words over k anticommuting
generators and odd basis vectors with odd words; all grading signs are then
carried by the word products, so the ungraded identity on the envelope is an
independent oracle for the signed superidentity checker.  Odd slots of a
quadruple ride on pairwise distinct single generators, which keeps every sign
pattern of a four-variable identity visible; k = 4 generators therefore
suffice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .algebra import SuperAlgebra

Word = tuple[int, ...]


def word_product(u: Word, v: Word) -> tuple[int, Word] | None:
    """Concatenate-and-sort with the anticommutation sign.

    Returns None when a generator repeats (its square is zero).
    """
    if set(u) & set(v):
        return None
    sign = 1
    merged = list(u)
    for g in v:
        # count transpositions moving g past the tail of merged
        bigger = sum(1 for h in merged if h > g)
        if bigger % 2:
            sign = -sign
        merged.append(g)
    merged.sort()
    return sign, tuple(merged)


@dataclass(frozen=True)
class EnvelopeElement:
    """Formal sum of word (x) basis-vector terms with rational coefficients.

    Terms are keyed by (word, flat basis index); every term pairs an even
    word with an even basis vector or an odd word with an odd one.
    """

    k: int
    terms: tuple  # ((word, basis_index), coefficient) pairs, sorted

    @staticmethod
    def build(J: SuperAlgebra, k: int, raw: dict) -> "EnvelopeElement":
        cleaned = {}
        for (word, idx), coeff in raw.items():
            if coeff == 0:
                continue
            if len(word) % 2 != J.basis_parity(idx):
                raise ValueError(
                    f"parity mismatch: word {word} with basis index {idx}"
                )
            if any(not 1 <= g <= k for g in word):
                raise ValueError(f"generator outside 1..{k} in {word}")
            cleaned[(word, idx)] = coeff
        return EnvelopeElement(k, tuple(sorted(cleaned.items())))

    @property
    def is_zero(self) -> bool:
        return not self.terms


def basis_term(J: SuperAlgebra, k: int, word: Word, index: int) -> EnvelopeElement:
    return EnvelopeElement.build(J, k, {(tuple(word), index): Fraction(1)})


def envelope_product(
    J: SuperAlgebra, u: EnvelopeElement, v: EnvelopeElement
) -> EnvelopeElement:
    """(x tensor a)(y tensor b) = xy tensor ab, bilinearly extended."""
    if u.k != v.k:
        raise ValueError(f"mismatched generator counts {u.k} != {v.k}")
    acc: dict = {}
    for (wu, a), cu in u.terms:
        for (wv, b), cv in v.terms:
            wp = word_product(wu, wv)
            if wp is None:
                continue
            sign, word = wp
            prod = J.basis_product(a, b)
            scale = cu * cv * sign
            for i, coeff in enumerate(prod.even):
                if coeff != J.field.zero:
                    key = (word, i)
                    acc[key] = acc.get(key, Fraction(0)) + scale * coeff
            for j, coeff in enumerate(prod.odd):
                if coeff != J.field.zero:
                    key = (word, J.stype.m + j)
                    acc[key] = acc.get(key, Fraction(0)) + scale * coeff
    return EnvelopeElement.build(J, u.k, acc)


def _sum(J: SuperAlgebra, k: int, parts: Iterable[tuple[int, EnvelopeElement]]):
    acc: dict = {}
    for sign, elem in parts:
        for key, coeff in elem.terms:
            acc[key] = acc.get(key, Fraction(0)) + sign * coeff
    return EnvelopeElement.build(J, k, acc)


@dataclass(frozen=True)
class EnvelopeReport:
    """Outcome of the envelope identity check with the first bad quadruple."""

    holds: bool
    violation: tuple | None

    def __bool__(self) -> bool:
        return self.holds


def envelope_jordan_check(J: SuperAlgebra, k: int = 4) -> EnvelopeReport:
    """Evaluate the multilinear Jordan identity on generator-tagged quadruples.

    Slot i of a quadruple carries generator i+1 when its basis vector is odd
    and the empty word when it is even; multilinearity makes this spanning
    set decisive.  Requires k >= 4 so four odd slots stay distinct.
    """
    if k < 4:
        raise ValueError("need at least 4 generators for a 4-variable identity")
    dim = J.stype.dim

    def tagged(slot: int, index: int) -> EnvelopeElement:
        word = (slot + 1,) if J.basis_parity(index) else ()
        return basis_term(J, k, word, index)

    def p(u, v):
        return envelope_product(J, u, v)

    for iw in range(dim):
        for ix in range(dim):
            for iy in range(dim):
                for iz in range(dim):
                    w, x, y, z = (
                        tagged(0, iw),
                        tagged(1, ix),
                        tagged(2, iy),
                        tagged(3, iz),
                    )
                    residual = _sum(
                        J,
                        k,
                        [
                            (1, p(p(w, x), p(y, z))),
                            (1, p(p(w, y), p(x, z))),
                            (1, p(p(w, z), p(x, y))),
                            (-1, p(x, p(w, p(y, z)))),
                            (-1, p(y, p(w, p(x, z)))),
                            (-1, p(z, p(w, p(x, y)))),
                        ],
                    )
                    if not residual.is_zero:
                        return EnvelopeReport(False, (iw, ix, iy, iz))
    return EnvelopeReport(True, None)
