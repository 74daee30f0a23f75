"""Recorded classification claims, used only for reconciliation.

The engine never reads this module: catalogs, witnesses, and certificates
always come from the data files, and every quantity is recomputed from
them.  Report generation compares the recomputed values against the claims
below and emits a finding for each difference instead of trusting either
side.  Closure claims carry the subset of members that the source
classification itself marks as unverified, together with the deformation
questions it leaves open; a difference only becomes a finding when those
markings do not account for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class ClosureClaim:
    """Claimed orbit closure of one rigid entry, root included."""

    members: frozenset
    unverified: frozenset  # claimed members whose witness chain was left open


@dataclass(frozen=True)
class ClaimSet:
    prefix: str
    rigid: frozenset
    closures: dict  # root name -> ClosureClaim
    open_pairs: dict  # (source, target) -> reason the cell was left open
    associative_components: dict  # root name -> claimed member set
    nilpotent_components: dict  # root name -> claimed member set
    solvable_rigid: frozenset
    determination_percent: Optional[str]  # claimed rounded percentage


def _name(prefix: str, index: int) -> str:
    return f"{prefix}_{index}"


def _names(prefix: str, indices) -> frozenset:
    return frozenset(_name(prefix, i) for i in indices)


def _closures(prefix: str, table: dict) -> dict:
    return {
        _name(prefix, root): ClosureClaim(_names(prefix, members), _names(prefix, reds))
        for root, (members, reds) in table.items()
    }


def _components(prefix: str, table: dict) -> dict:
    return {
        _name(prefix, root): _names(prefix, members) for root, members in table.items()
    }


_P13 = "(1,3)"
_P31 = "(3,1)"

OPEN_EVEN_PART = "the even-part deformation question is open"
OPEN_SUPER = "deforms as an ungraded algebra; open as a superalgebra"
OPEN_ALGEBRA = "open already as ungraded algebras"


CLAIMS_13 = ClaimSet(
    prefix=_P13,
    rigid=_names(_P13, {1, 2, 4, 5, 6, 7, 8, 10, 11, 13, 16}),
    closures=_closures(
        _P13,
        {
            1: ({1, 20}, ()),
            2: ({2, 14, 20}, ()),
            4: ({3, 4, 14, 15, 19, 20}, ()),
            5: ({5, 20}, ()),
            6: ({6, 14, 20}, ()),
            7: ({7, 14, 18, 20}, ()),
            8: ({8, 14, 20}, ()),
            10: ({9, 10, 14, 15, 19, 20}, ()),
            11: ({11, 14, 20}, ()),
            13: ({12, 13, 19, 20}, ()),
            16: ({14, 15, 16, 17, 19, 20}, ()),
        },
    ),
    open_pairs={},
    associative_components=_components(
        _P13,
        {
            4: {4, 20},
            6: {6, 14, 20},
            9: {9, 14, 20},
            12: {12, 20},
            19: {19, 20},
        },
    ),
    nilpotent_components=_components(
        _P13,
        {
            15: {14, 15, 19, 20},
            18: {14, 18, 20},
        },
    ),
    solvable_rigid=_names(_P13, {16}),
    determination_percent=None,
)


def _open_pairs_31() -> dict:
    pairs = {}
    for target in (2, 3, 28, 40):
        pairs[(6, target)] = OPEN_EVEN_PART
    pairs[(46, 28)] = OPEN_EVEN_PART
    pairs[(46, 40)] = OPEN_EVEN_PART
    for source in (*range(11, 19), *range(49, 57)):
        pairs[(source, 40)] = OPEN_EVEN_PART
    for source, target in (
        (20, 23),
        (20, 28),
        (20, 29),
        (21, 42),
        (22, 29),
        (24, 29),
        (27, 42),
        (31, 34),
        (55, 47),
        (53, 43),
    ):
        pairs[(source, target)] = OPEN_SUPER
    pairs[(21, 38)] = OPEN_ALGEBRA
    pairs[(22, 28)] = OPEN_ALGEBRA
    return {
        (_name(_P31, s), _name(_P31, t)): reason for (s, t), reason in pairs.items()
    }


CLAIMS_31 = ClaimSet(
    prefix=_P31,
    rigid=_names(
        _P31,
        {6, 9, 10, 11, 13, 14, 15, 16, 18, 19, 20, 21, 22, 46, 48, 50, 52, 53, 54, 55, 56},
    ),
    closures=_closures(
        _P31,
        {
            6: ({2, 3, 4, 6, 12, 17, 28, 40, 44, 45, 59, 60}, {2, 3, 28, 40}),
            9: ({9, 60}, ()),
            10: ({10, 60}, ()),
            11: ({11, 40, 44, 45, 58, 60}, {40}),
            13: ({7, 13, 40, 44, 45, 60}, {40}),
            14: ({8, 14, 40, 44, 45, 60}, {40}),
            15: ({5, 15, 40, 44, 45, 57, 59, 60}, {40}),
            16: ({4, 16, 40, 44, 45, 57, 58, 60}, {40}),
            18: ({7, 18, 40, 43, 44, 45, 60}, {40}),
            19: ({19, 23, 28, 29, 30, 34, 37, 40, 41, 44, 45, 60}, ()),
            20: (
                {2, 4, 20, 23, 24, 26, 28, 29, 30, 31, 34, 35, 37, 38, 40, 41, 42, 44, 45, 60},
                {23, 28, 29},
            ),
            21: ({3, 5, 21, 25, 27, 30, 32, 34, 36, 37, 39, 40, 41, 43, 44, 45, 60}, ()),
            22: (
                {1, 2, 4, 22, 24, 28, 29, 32, 33, 35, 36, 37, 39, 40, 41, 43, 44, 45, 60},
                {28, 29},
            ),
            46: ({28, 29, 40, 44, 45, 46, 49, 51, 57, 60}, {28, 40}),
            48: ({48, 60}, ()),
            50: ({40, 44, 45, 47, 50, 60}, {40}),
            52: ({40, 41, 44, 45, 47, 52, 60}, {40}),
            53: ({7, 40, 42, 43, 44, 45, 53, 60}, {40, 43}),
            54: ({7, 40, 43, 44, 45, 54, 60}, {40}),
            55: ({7, 40, 41, 44, 45, 47, 55, 60}, {40, 47}),
            56: ({8, 40, 41, 44, 45, 56, 60}, {40}),
        },
    ),
    open_pairs=_open_pairs_31(),
    associative_components=_components(
        _P31,
        {
            19: {19, 23, 28, 29, 30, 34, 37, 40, 41, 42, 44, 45, 60},
            20: {2, 4, 20, 24, 26, 30, 31, 34, 35, 37, 38, 40, 41, 42, 44, 45, 60},
        },
    ),
    nilpotent_components=_components(_P31, {40: {40, 44, 45, 60}}),
    solvable_rigid=frozenset(),
    determination_percent="99.05",
)


_CLAIM_SETS = (CLAIMS_13, CLAIMS_31)
_CATALOG_NAMES = {
    frozenset(_name(_P13, i) for i in range(1, 21)): CLAIMS_13,
    frozenset(_name(_P31, i) for i in range(1, 61)): CLAIMS_31,
}


def claims_for(names) -> Optional[ClaimSet]:
    """The claim set matching a catalog's exact name set, if any."""
    return _CATALOG_NAMES.get(frozenset(names))
