"""DOT export of the deformation order.

The graph is the transitive reduction of the Yes relation; re-closing it
recovers every Yes cell.  Node attributes encode computed flags, never
catalog labels: nilpotent entries are drawn as boxes, associative entries
are filled with the distinguishing color.  Output is deterministic byte
for byte; nodes and edges follow catalog order.
"""

from __future__ import annotations

from .algebra import check_associativity, is_nilpotent
from .variety import Relation, hasse_reduction

ASSOCIATIVE_FILL = "#bcd5f5"


def export_dot(rel: Relation) -> str:
    lines = ["digraph deformations {", "  rankdir=TB;", '  node [fontname="Helvetica"];']
    for entry in rel.catalog:
        J = entry.algebra
        attributes = ["shape=box" if is_nilpotent(J) else "shape=ellipse"]
        if check_associativity(J):
            attributes.append("style=filled")
            attributes.append(f'fillcolor="{ASSOCIATIVE_FILL}"')
        lines.append(f'  "{entry.name}" [{", ".join(attributes)}];')
    for source, target in hasse_reduction(rel):
        lines.append(f'  "{source}" -> "{target}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
