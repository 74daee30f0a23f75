"""Grassmann envelope: the independent oracle for the Jordan superidentity."""

from fractions import Fraction

import pytest

from superjordan.algebra import check_jordan_superidentity
from superjordan.grassmann import (
    basis_term,
    envelope_jordan_check,
    envelope_product,
    word_product,
)

from util import n13, perturbed_non_jordan


def test_word_product_signs():
    assert word_product((1,), (2,)) == (1, (1, 2))
    assert word_product((2,), (1,)) == (-1, (1, 2))
    assert word_product((), (3,)) == (1, (3,))
    assert word_product((1, 3), (2,)) == (-1, (1, 2, 3))
    # Repeated generators square to zero.
    assert word_product((1,), (1,)) is None
    assert word_product((1, 2), (2,)) is None


def test_parity_mismatch_rejected(catalog13):
    J = catalog13.algebra(n13(1))
    with pytest.raises(ValueError):
        basis_term(J, 4, (1,), 0)  # odd word with the even basis vector e1
    with pytest.raises(ValueError):
        basis_term(J, 4, (), 1)  # even word with the odd basis vector f1


def test_envelope_product_is_commutative(catalog13):
    # Odd tensor Grassmann-odd terms are even in the envelope, so the
    # envelope of a supercommutative superalgebra is plain commutative.
    J = catalog13.algebra(n13(4))
    terms = [
        basis_term(J, 4, (), 0),
        basis_term(J, 4, (1, 2), 0),
        basis_term(J, 4, (1,), 1),
        basis_term(J, 4, (2,), 2),
        basis_term(J, 4, (3,), 3),
    ]
    for u in terms:
        for v in terms:
            left = envelope_product(J, u, v)
            right = envelope_product(J, v, u)
            assert left.terms == right.terms


def test_envelope_product_known_value(catalog13):
    # In (1,3)_4 the product f2 f3 = e1 becomes (g1 tensor f2)(g2 tensor f3)
    # = g1 g2 tensor e1.
    J = catalog13.algebra(n13(4))
    u = basis_term(J, 4, (1,), 2)
    v = basis_term(J, 4, (2,), 3)
    prod = envelope_product(J, u, v)
    assert prod.terms == ((((1, 2), 0), Fraction(1)),)
    # Swapping the factors flips both the word sign and the product sign.
    assert envelope_product(J, v, u).terms == prod.terms


def test_mismatched_generator_counts_rejected(catalog13):
    J = catalog13.algebra(n13(1))
    with pytest.raises(ValueError):
        envelope_product(J, basis_term(J, 4, (), 0), basis_term(J, 5, (), 0))


def test_envelope_check_needs_four_generators(catalog13):
    with pytest.raises(ValueError):
        envelope_jordan_check(catalog13.algebra(n13(1)), k=3)


def test_oracle_agrees_on_catalog_entries(catalog13):
    for name in (n13(1), n13(4), n13(16)):
        J = catalog13.algebra(name)
        assert check_jordan_superidentity(J)
        assert envelope_jordan_check(J).holds


def test_oracle_agrees_on_non_jordan_tables(catalog13):
    for J in perturbed_non_jordan(catalog13, count=3, seed=7):
        assert not check_jordan_superidentity(J)
        report = envelope_jordan_check(J)
        assert not report.holds
        assert report.violation is not None
