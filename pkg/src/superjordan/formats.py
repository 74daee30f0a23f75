"""Line-oriented data formats for catalogs, witnesses and certificates.

All three formats share the same small expression language: rational
coefficients only, symbols e<i> / f<j>, witness expressions additionally
allow a t^k factor.  Files are UTF-8 with LF newlines; entries are separated
by blank lines.  Serialization produces a normal form on which parse and
serialize are mutually inverse.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import StructureConstants, SuperAlgebra, SuperType
from .catalog import Catalog, CatalogEntry, ExpectedMetadata
from .certify import (
    AReduction,
    AutDim,
    Certificate,
    EvenPart,
    ExternalFact,
    FReduction,
    IdentityPreservation,
    PairCertificate,
    PowerDim,
    RigidEvenPart,
    kind_name,
)
from .deformation import BasisFamily, DeformationWitness
from .scalars import FT, Matrix, RatFunc


class FormatError(ValueError):
    def __init__(self, message: str, line_no: int | None = None):
        at = f" (line {line_no})" if line_no is not None else ""
        super().__init__(f"{message}{at}")
        self.line_no = line_no


_RAT = r"-?\d+(?:/\d+)?"
_SYM = r"[ef]\d+"
_TERM_RE = re.compile(rf"^(?:({_RAT})\s+)?({_SYM})$")
_TERM_T_RE = re.compile(rf"^(?:({_RAT})\s+)?(t(?:\^(-?\d+))?\s+)?({_SYM})$")
_HEADER_ALGEBRA = re.compile(r'^\[algebra "([^"]+)"\]$')
_HEADER_WITNESS = re.compile(r'^\[witness "([^"]+)" -> "([^"]+)"\]$')
_HEADER_NONCERT = re.compile(r'^\[noncert "([^"]+)" -> "([^"]+)"\]$')
_TYPE_LINE = re.compile(r"^type = \((\d+), (\d+)\)$")
_PRODUCT_LINE = re.compile(rf"^product ({_SYM}) ({_SYM}) = (.+)$")
_EXPECT_LINE = re.compile(r"^expect (dim_aut|associative|nilpotent) = (\S+)$")
_ASSIGN_LINE = re.compile(r"^([EF])(\d+) = (.+)$")
_KIND_LINE = re.compile(r"^kind = (.+)$")


def _split_terms(expr: str) -> list[str]:
    return [piece.strip() for piece in expr.split(" + ")]


def _parse_symbol(sym: str) -> tuple[str, int]:
    return sym[0], int(sym[1:]) - 1


def _parse_expr(expr: str, line_no: int) -> list[tuple[str, int, Fraction]]:
    """Terms of a t-free expression as (parity letter, 0-based index, coeff)."""
    expr = expr.strip()
    if expr == "0":
        return []
    terms = []
    for piece in _split_terms(expr):
        match = _TERM_RE.match(piece)
        if not match:
            raise FormatError(f"bad term {piece!r}", line_no)
        coeff = Fraction(match.group(1)) if match.group(1) else Fraction(1)
        letter, index = _parse_symbol(match.group(2))
        terms.append((letter, index, coeff))
    return terms


def _parse_expr_t(expr: str, line_no: int) -> list[tuple[str, int, RatFunc]]:
    """Terms of a witness expression as (parity letter, index, Q(t) coeff)."""
    expr = expr.strip()
    if expr == "0":
        return []
    terms = []
    for piece in _split_terms(expr):
        match = _TERM_T_RE.match(piece)
        if not match:
            raise FormatError(f"bad term {piece!r}", line_no)
        coeff = RatFunc.from_rational(
            Fraction(match.group(1)) if match.group(1) else Fraction(1)
        )
        if match.group(2) is not None:  # a t-token; bare t means exponent 1
            power = int(match.group(3)) if match.group(3) is not None else 1
            coeff = coeff * RatFunc.t_power(power)
        letter, index = _parse_symbol(match.group(4))
        terms.append((letter, index, coeff))
    return terms


def _format_rational(q: Fraction) -> str:
    return str(q)


def _format_term(coeff: Fraction, symbol: str) -> str:
    if coeff == 1:
        return symbol
    return f"{_format_rational(coeff)} {symbol}"


def _format_expr(terms: list[tuple[Fraction, str]]) -> str:
    if not terms:
        return "0"
    return " + ".join(_format_term(c, s) for c, s in terms)


# ---------------------------------------------------------------- catalogs


def parse_catalog(text: str) -> Catalog:
    entries = []
    for header, lines in _blocks(text, _HEADER_ALGEBRA, "algebra"):
        name = header[0]
        entries.append(_parse_catalog_entry(name, lines))
    return Catalog(entries)


def _parse_catalog_entry(name: str, lines: list[tuple[int, str]]) -> CatalogEntry:
    stype = None
    for line_no, line in lines:
        match = _TYPE_LINE.match(line)
        if match:
            if stype is not None:
                raise FormatError("duplicate type line", line_no)
            stype = SuperType(int(match.group(1)), int(match.group(2)))
    if stype is None:
        raise FormatError(f"entry {name!r} missing a type line")
    m, n = stype.m, stype.n
    alpha = [[[Fraction(0)] * m for _ in range(m)] for _ in range(m)]
    beta = [[[Fraction(0)] * n for _ in range(n)] for _ in range(m)]
    gamma = [[[Fraction(0)] * m for _ in range(n)] for _ in range(n)]
    seen_pairs = set()
    expected = {}

    def dense(terms, parity: str, size: int, line_no: int):
        vec = [Fraction(0)] * size
        for letter, index, coeff in terms:
            if letter != parity:
                raise FormatError(
                    f"product value mixes parities (expected {parity}-symbols)", line_no
                )
            if not 0 <= index < size:
                raise FormatError(f"symbol index out of range: {letter}{index + 1}", line_no)
            vec[index] += coeff
        return vec

    for line_no, line in lines:
        if _TYPE_LINE.match(line):
            continue
        match = _PRODUCT_LINE.match(line)
        if match:
            (la, ia), (lb, ib) = _parse_symbol(match.group(1)), _parse_symbol(match.group(2))
            for letter, index in ((la, ia), (lb, ib)):
                size = m if letter == "e" else n
                if not 0 <= index < size:
                    raise FormatError(
                        f"symbol index out of range: {letter}{index + 1}", line_no
                    )
            terms = _parse_expr(match.group(3), line_no)
            key = tuple(sorted(((la, ia), (lb, ib))))
            if key in seen_pairs:
                raise FormatError(
                    f"duplicate product {match.group(1)} {match.group(2)}", line_no
                )
            seen_pairs.add(key)
            if la == "e" and lb == "e":
                vec = dense(terms, "e", m, line_no)
                alpha[ia][ib] = list(vec)
                alpha[ib][ia] = list(vec)
            elif la == "f" and lb == "f":
                vec = dense(terms, "e", m, line_no)
                if ia == ib:
                    if any(c != 0 for c in vec):
                        raise FormatError(
                            "diagonal odd product must be zero (gamma is antisymmetric)",
                            line_no,
                        )
                    continue
                gamma[ia][ib] = list(vec)
                gamma[ib][ia] = [-c for c in vec]
            else:
                # Mixed product; normalize to (even index, odd index).
                ei, fj = (ia, ib) if la == "e" else (ib, ia)
                beta[ei][fj] = dense(terms, "f", n, line_no)
            continue
        match = _EXPECT_LINE.match(line)
        if match:
            key, raw = match.group(1), match.group(2)
            if key in expected:
                raise FormatError(f"duplicate expect {key}", line_no)
            if key == "dim_aut":
                expected[key] = int(raw)
            else:
                if raw not in ("true", "false"):
                    raise FormatError(f"bad boolean {raw!r}", line_no)
                expected[key] = raw == "true"
            continue
        raise FormatError(f"unrecognized line {line!r}", line_no)

    constants = StructureConstants(m, n, alpha, beta, gamma)
    algebra = SuperAlgebra(name, stype, constants)
    meta = ExpectedMetadata(
        dim_aut=expected.get("dim_aut"),
        associative=expected.get("associative"),
        nilpotent=expected.get("nilpotent"),
    )
    return CatalogEntry(algebra, meta)


def serialize_catalog(catalog: Catalog) -> str:
    blocks = []
    for entry in catalog:
        J = entry.algebra
        m, n = J.stype.m, J.stype.n
        cons = J.constants
        lines = [f'[algebra "{J.name}"]', f"type = ({m}, {n})"]

        def expr_of(vec, letter: str) -> str:
            terms = [
                (coeff, f"{letter}{k + 1}") for k, coeff in enumerate(vec) if coeff != 0
            ]
            return _format_expr(terms)

        for i in range(m):
            for j in range(i, m):
                if any(c != 0 for c in cons.alpha[i][j]):
                    lines.append(
                        f"product e{i + 1} e{j + 1} = {expr_of(cons.alpha[i][j], 'e')}"
                    )
        for i in range(m):
            for j in range(n):
                if any(c != 0 for c in cons.beta[i][j]):
                    lines.append(
                        f"product e{i + 1} f{j + 1} = {expr_of(cons.beta[i][j], 'f')}"
                    )
        for i in range(n):
            for j in range(i + 1, n):
                if any(c != 0 for c in cons.gamma[i][j]):
                    lines.append(
                        f"product f{i + 1} f{j + 1} = {expr_of(cons.gamma[i][j], 'e')}"
                    )
        if entry.expected.dim_aut is not None:
            lines.append(f"expect dim_aut = {entry.expected.dim_aut}")
        if entry.expected.associative is not None:
            lines.append(f"expect associative = {str(entry.expected.associative).lower()}")
        if entry.expected.nilpotent is not None:
            lines.append(f"expect nilpotent = {str(entry.expected.nilpotent).lower()}")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


# ---------------------------------------------------------------- witnesses


def parse_witnesses(text: str) -> list[DeformationWitness]:
    witnesses = []
    for header, lines in _blocks(text, _HEADER_WITNESS, "witness"):
        source, target = header
        witnesses.append(_parse_witness_block(source, target, lines))
    return witnesses


def _parse_witness_block(
    source: str, target: str, lines: list[tuple[int, str]]
) -> DeformationWitness:
    assignments: dict[tuple[str, int], list] = {}
    for line_no, line in lines:
        match = _ASSIGN_LINE.match(line)
        if not match:
            raise FormatError(f"unrecognized witness line {line!r}", line_no)
        block_letter, label = match.group(1), int(match.group(2)) - 1
        key = (block_letter, label)
        if key in assignments:
            raise FormatError(f"duplicate assignment {block_letter}{label + 1}", line_no)
        terms = _parse_expr_t(match.group(3), line_no)
        want = "e" if block_letter == "E" else "f"
        for letter, _, _ in terms:
            if letter != want:
                raise FormatError(
                    f"parity mixing: {block_letter}{label + 1} uses {letter}-symbols",
                    line_no,
                )
        assignments[key] = terms

    def block(letter: str) -> Matrix:
        labels = sorted(idx for (l, idx) in assignments if l == letter)
        size = len(labels)
        if labels != list(range(size)):
            missing = set(range(max(labels, default=-1) + 1)) - set(labels)
            names = ", ".join(f"{letter}{i + 1}" for i in sorted(missing))
            raise FormatError(f"missing assignment {names} in witness {source!r}")
        rows = [[FT.zero] * size for _ in range(size)]
        for col in range(size):
            for _, index, coeff in assignments[(letter, col)]:
                if index >= size:
                    raise FormatError(
                        f"symbol index out of range in witness {source!r}: "
                        f"column {letter}{col + 1}"
                    )
                rows[index][col] = rows[index][col] + coeff
        return Matrix(FT, rows)

    return DeformationWitness(source, target, BasisFamily(block("E"), block("F")))


def _format_ratfunc_term(coeff: RatFunc, symbol: str, line_source: str) -> str:
    """Render coeff * symbol as RAT [t^k] SYM; coeff must be c * t^k."""
    if not coeff.is_monomial:
        raise FormatError(
            f"witness coefficient {coeff} in {line_source} is not of the form c*t^k"
        )
    k = coeff.num.valuation - coeff.den.valuation
    c = coeff.num.coeffs[-1] / coeff.den.coeffs[-1]
    parts = []
    if c != 1:
        parts.append(_format_rational(c))
    if k == 1:
        parts.append("t")
    elif k != 0:
        parts.append(f"t^{k}")
    parts.append(symbol)
    return " ".join(parts)


def serialize_witnesses(witnesses: list[DeformationWitness]) -> str:
    blocks = []
    for w in witnesses:
        lines = [f'[witness "{w.source}" -> "{w.target}"]']
        for letter, block, symbol in (
            ("E", w.family.even_block, "e"),
            ("F", w.family.odd_block, "f"),
        ):
            for col in range(block.ncols):
                terms = []
                for row in range(block.nrows):
                    coeff = block.entry(row, col)
                    if not coeff.is_zero:
                        terms.append(
                            _format_ratfunc_term(coeff, f"{symbol}{row + 1}", w.source)
                        )
                lines.append(f"{letter}{col + 1} = " + (" + ".join(terms) if terms else "0"))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


# ------------------------------------------------------------- certificates


def parse_certificates(text: str) -> list[PairCertificate]:
    certs = []
    for header, lines in _blocks(text, _HEADER_NONCERT, "noncert"):
        source, target = header
        kind_lines = [
            (line_no, line) for line_no, line in lines if _KIND_LINE.match(line)
        ]
        if len(kind_lines) != 1 or len(lines) != 1:
            bad = lines[0][0] if lines else None
            raise FormatError(
                f"noncert block {source!r} -> {target!r} needs exactly one kind line",
                bad,
            )
        line_no, line = kind_lines[0]
        cert = _parse_kind(_KIND_LINE.match(line).group(1).strip(), line_no)
        certs.append(PairCertificate(source, target, cert))
    return certs


_POWER_RE = re.compile(r"^power-dim r=(\d+) parity=(even|odd)$")
_EXTERNAL_RE = re.compile(r'^external cite="([^"]*)"$')
_RIGID_RE = re.compile(r'^rigid-even-part cite="([^"]*)"$')
_NESTED_RE = re.compile(r"^(even-part|a-part|f-part) \{ (.*) \}$")


def _parse_kind(text: str, line_no: int) -> Certificate:
    text = text.strip()
    if text == "aut-dim":
        return AutDim()
    if text == "identity associativity":
        return IdentityPreservation()
    match = _POWER_RE.match(text)
    if match:
        return PowerDim(int(match.group(1)), 1 if match.group(2) == "odd" else 0)
    match = _EXTERNAL_RE.match(text)
    if match:
        if not match.group(1):
            raise FormatError("external certificate needs a nonempty citation", line_no)
        return ExternalFact(match.group(1))
    match = _RIGID_RE.match(text)
    if match:
        if not match.group(1):
            raise FormatError("rigid-even-part needs a nonempty citation", line_no)
        return RigidEvenPart(match.group(1))
    match = _NESTED_RE.match(text)
    if match:
        wrapper = {"even-part": EvenPart, "a-part": AReduction, "f-part": FReduction}[
            match.group(1)
        ]
        return wrapper(_parse_kind(match.group(2), line_no))
    raise FormatError(f"unknown certificate kind {text!r}", line_no)


def serialize_certificates(certs: list[PairCertificate]) -> str:
    blocks = []
    for pc in certs:
        blocks.append(
            f'[noncert "{pc.source}" -> "{pc.target}"]\n'
            f"kind = {kind_name(pc.certificate)}"
        )
    return "\n\n".join(blocks) + "\n"


# ------------------------------------------------------------------ helpers


def _blocks(text: str, header_re: re.Pattern, label: str):
    """Split a file into (header groups, body lines) blocks on blank lines."""
    current_header = None
    current_lines: list[tuple[int, str]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line.strip():
            if current_header is not None:
                yield current_header, current_lines
                current_header, current_lines = None, []
            continue
        match = header_re.match(line)
        if match:
            if current_header is not None:
                yield current_header, current_lines
            current_header, current_lines = match.groups(), []
            continue
        if current_header is None:
            raise FormatError(f"expected [{label} ...] header", line_no)
        current_lines.append((line_no, line))
    if current_header is not None:
        yield current_header, current_lines
