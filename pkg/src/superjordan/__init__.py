"""Exact tools for four-dimensional Jordan superalgebra varieties.

The package encodes two catalogs of graded algebras (types (1,3) and (3,1)),
checks the defining identities in exact arithmetic, verifies one-parameter
deformation witnesses and non-deformation certificates, and assembles the
resulting deformation relation into rigidity and component reports.
"""

__version__ = "0.1.0"
