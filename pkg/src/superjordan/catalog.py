"""Catalogs: named algebra entries plus untrusted expected metadata.

The expected dim(Aut) / associative / nilpotent fields are transcription
aids.  Every consumer recomputes them; mismatches become reconciliation
findings rather than silent truth.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .algebra import SuperAlgebra, SuperType


@dataclass(frozen=True)
class ExpectedMetadata:
    dim_aut: Optional[int] = None
    associative: Optional[bool] = None
    nilpotent: Optional[bool] = None


@dataclass(frozen=True)
class CatalogEntry:
    algebra: SuperAlgebra
    expected: ExpectedMetadata = field(default_factory=ExpectedMetadata)

    @property
    def name(self) -> str:
        return self.algebra.name


class Catalog:
    """Ordered collection of entries of one graded type, unique names."""

    def __init__(self, entries: list[CatalogEntry]):
        self.entries = list(entries)
        self._by_name: dict[str, int] = {}
        for idx, entry in enumerate(self.entries):
            if entry.name in self._by_name:
                raise ValueError(f"duplicate algebra name {entry.name!r}")
            self._by_name[entry.name] = idx
        types = {e.algebra.stype for e in self.entries}
        if len(types) > 1:
            raise ValueError(f"catalog mixes graded types: {sorted(map(str, types))}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    @property
    def stype(self) -> SuperType:
        if not self.entries:
            raise ValueError("empty catalog has no type")
        return self.entries[0].algebra.stype

    def index_of(self, name: str) -> int:
        if name not in self._by_name:
            raise KeyError(f"unknown algebra name {name!r}")
        return self._by_name[name]

    def entry(self, name: str) -> CatalogEntry:
        return self.entries[self.index_of(name)]

    def algebra(self, name: str) -> SuperAlgebra:
        return self.entry(name).algebra

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def zero_entry(self) -> Optional[CatalogEntry]:
        """The entry with all-zero products, if the catalog has one."""
        for entry in self.entries:
            if entry.algebra.constants.is_zero(entry.algebra.field.zero):
                return entry
        return None
