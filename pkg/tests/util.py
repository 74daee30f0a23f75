"""Helpers shared across test modules."""

import importlib.resources
import random
from fractions import Fraction

from superjordan.algebra import (
    StructureConstants,
    SuperAlgebra,
    check_jordan_superidentity,
    check_supercommutativity,
)

_DATA = importlib.resources.files("superjordan") / "data"


def data_text(name: str) -> str:
    return (_DATA / name).read_text(encoding="utf-8")


def data_path(name: str) -> str:
    return str(_DATA / name)


def n13(k: int) -> str:
    return f"(1,3)_{k}"


def n31(k: int) -> str:
    return f"(3,1)_{k}"


def _unfreeze(table):
    return [[list(col) for col in row] for row in table]


def perturb_constants(constants: StructureConstants, rng: random.Random):
    """Add 1 to one random coordinate, respecting the table symmetries.

    Alpha stays symmetric and gamma antisymmetric so the perturbed algebra is
    still supercommutative; only the Jordan identity is at stake.  Returns
    None when no perturbable slot exists.
    """
    m, n = constants.m, constants.n
    one = Fraction(1)
    choices = []
    if m:
        choices.append("alpha")
        if n:
            choices.append("beta")
    if m and n >= 2:
        choices.append("gamma")
    if not choices:
        return None
    alpha = _unfreeze(constants.alpha)
    beta = _unfreeze(constants.beta)
    gamma = _unfreeze(constants.gamma)
    kind = rng.choice(choices)
    if kind == "alpha":
        i, j, k = rng.randrange(m), rng.randrange(m), rng.randrange(m)
        value = alpha[i][j][k] + one
        alpha[i][j][k] = value
        alpha[j][i][k] = value
    elif kind == "beta":
        i, j, k = rng.randrange(m), rng.randrange(n), rng.randrange(n)
        beta[i][j][k] = beta[i][j][k] + one
    else:
        i = rng.randrange(n)
        j = rng.randrange(n)
        while j == i:
            j = rng.randrange(n)
        k = rng.randrange(m)
        gamma[i][j][k] = gamma[i][j][k] + one
        gamma[j][i][k] = gamma[j][i][k] - one
    return StructureConstants(m, n, alpha, beta, gamma)


def dot_edges(text: str) -> list[tuple[str, str]]:
    edges = []
    for line in text.splitlines():
        line = line.strip()
        if "->" in line and line.endswith(";"):
            left, right = line[:-1].split(" -> ")
            edges.append((left.strip().strip('"'), right.strip().strip('"')))
    return edges


def transitive_closure(names, edges) -> dict:
    reach = {name: {name} for name in names}
    for a, b in edges:
        reach[a].add(b)
    changed = True
    while changed:
        changed = False
        for a in names:
            merged = set(reach[a])
            for b in reach[a]:
                merged |= reach[b]
            if merged != reach[a]:
                reach[a] = merged
                changed = True
    return reach


def yes_sets(rel) -> dict:
    return {
        source: {
            target for target in rel.names if rel.cell(source, target).status == "yes"
        }
        for source in rel.names
    }


def perturbed_non_jordan(catalog, count: int, seed: int = 0):
    """Supercommutative tables near catalog entries that break the Jordan identity."""
    rng = random.Random(seed)
    entries = list(catalog.entries)
    out = []
    while len(out) < count:
        entry = rng.choice(entries)
        constants = perturb_constants(entry.algebra.constants, rng)
        if constants is None or constants == entry.algebra.constants:
            continue
        J = SuperAlgebra(
            f"{entry.name}~perturbed{len(out)}",
            entry.algebra.stype,
            constants,
            entry.algebra.field,
        )
        assert check_supercommutativity(J)
        if check_jordan_superidentity(J):
            continue
        out.append(J)
    return out
