"""Table serialization and the command-line surface.

Three interchange formats, all bit-deterministic:

* ``markdown`` -- an M x M grid of cell strings in the familiar table
  layout: the unit row doubles as the header, cells read ``e_k`` or
  ``1/2(e_a+e_b)`` with a < b.
* ``csv`` -- sparse nonzero triples ``i,j,k,value`` in ascending index
  order, values as lowest-terms rationals.
* ``json`` -- ``{"dimension": M, "constants": [...]}`` with every entry a
  canonical rational string ("0" and "1" unadorned, halves as "1/2").

Parsers enforce canonical rational strings and a unital first row, so a
parse-serialize round trip is the identity on well-formed tables.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys
from dataclasses import dataclass
from fractions import Fraction

from .finite_systems import (
    FiniteHNS,
    build_quotient_system,
    check_algebra_laws,
    check_structure_conditions,
    multiply_basis,
    project_index,
)
from .isomorphism import find_permutation_isomorphism
from .refactorization import divisor_partition, quotient_system, verify_congruence

FORMATS = ("markdown", "csv", "json")


class TableParseError(ValueError):
    """Malformed or non-canonical table payload."""


@dataclass(frozen=True)
class TableDocument:
    dimension: int
    format: str
    payload: str


# ---------------------------------------------------------------------------
# rendering

def _frac_str(v: Fraction) -> str:
    return str(v)


def _render_cell(row) -> str:
    terms = [(k + 1, c) for k, c in enumerate(row) if c]
    if not terms:
        return "0"
    if len(terms) == 1 and terms[0][1] == 1:
        return f"e_{terms[0][0]}"
    if len(terms) == 2 and terms[0][1] == Fraction(1, 2) and terms[1][1] == Fraction(1, 2):
        a, b = terms[0][0], terms[1][0]
        return f"1/2(e_{a}+e_{b})"
    # arbitrary rows (never produced by the quotient constructors)
    return "+".join(f"e_{k}" if c == 1 else f"{c}*e_{k}" for k, c in terms)


def _parse_cell(text: str, dimension: int) -> tuple[Fraction, ...]:
    row = [Fraction(0)] * dimension

    def put(k: int, c: Fraction) -> None:
        if not 1 <= k <= dimension:
            raise TableParseError(f"basis index {k} out of range in cell {text!r}")
        row[k - 1] += c

    cell = text.strip()
    if cell == "0":
        return tuple(row)
    if cell.startswith("1/2(") and cell.endswith(")"):
        inner = cell[4:-1]
        parts = inner.split("+")
        if len(parts) != 2 or not all(p.startswith("e_") for p in parts):
            raise TableParseError(f"bad cell {text!r}")
        for p in parts:
            put(_parse_label(p), Fraction(1, 2))
        return tuple(row)
    for term in cell.split("+"):
        if term.startswith("e_"):
            put(_parse_label(term), Fraction(1))
        elif "*e_" in term:
            coeff, label = term.split("*e_", 1)
            put(_parse_label("e_" + label), _parse_rational(coeff))
        else:
            raise TableParseError(f"bad cell {text!r}")
    return tuple(row)


def _parse_label(text: str) -> int:
    try:
        return int(text.removeprefix("e_"))
    except ValueError:
        raise TableParseError(f"bad basis label {text!r}") from None


def _parse_rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise TableParseError(f"malformed rational {text!r}") from None
    if str(value) != text:
        raise TableParseError(f"rational {text!r} is not in canonical lowest-terms form")
    return value


def serialize(sys: FiniteHNS, format: str) -> TableDocument:
    """Render the full basis-product table in the requested format."""
    M = sys.dimension
    if format == "markdown":
        cells = [[_render_cell(sys.constants[i][j]) for j in range(M)] for i in range(M)]
        lines = ["| " + " | ".join(cells[0]) + " |"]
        lines.append("| " + " | ".join(["---"] * M) + " |")
        for i in range(1, M):
            lines.append("| " + " | ".join(cells[i]) + " |")
        payload = "\n".join(lines) + "\n"
    elif format == "csv":
        lines = []
        for i in range(M):
            for j in range(M):
                for k in range(M):
                    v = sys.constants[i][j][k]
                    if v:
                        lines.append(f"{i + 1},{j + 1},{k + 1},{_frac_str(v)}")
        payload = "\n".join(lines) + "\n"
    elif format == "json":
        blob = {
            "dimension": M,
            "constants": [
                [[_frac_str(v) for v in row] for row in plane] for plane in sys.constants
            ],
        }
        payload = json.dumps(blob, indent=2) + "\n"
    else:
        raise ValueError(f"unknown format {format!r}; expected one of {FORMATS}")
    return TableDocument(M, format, payload)


# ---------------------------------------------------------------------------
# parsing

def _require_unital(sys: FiniteHNS) -> None:
    for j in range(1, sys.dimension + 1):
        expected = sys.unit_row(j)
        if multiply_basis(sys, 1, j) != expected or multiply_basis(sys, j, 1) != expected:
            raise TableParseError(f"first row is not unital at column {j}")


def parse_json(text: str) -> FiniteHNS:
    """Inverse of ``serialize(. , "json")`` on well-formed unital tables."""
    try:
        blob = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableParseError(f"invalid json: {exc}") from None
    if not isinstance(blob, dict) or set(blob) != {"dimension", "constants"}:
        raise TableParseError("expected an object with fields 'dimension' and 'constants'")
    M = blob["dimension"]
    if not isinstance(M, int) or M < 1:
        raise TableParseError(f"bad dimension {M!r}")
    constants = blob["constants"]
    tensor = []
    if not isinstance(constants, list) or len(constants) != M:
        raise TableParseError(f"constants must be an {M}x{M}x{M} array")
    for plane in constants:
        if not isinstance(plane, list) or len(plane) != M:
            raise TableParseError(f"constants must be an {M}x{M}x{M} array")
        new_plane = []
        for row in plane:
            if not isinstance(row, list) or len(row) != M:
                raise TableParseError(f"constants must be an {M}x{M}x{M} array")
            if not all(isinstance(v, str) for v in row):
                raise TableParseError("constants entries must be rational strings")
            new_plane.append([_parse_rational(v) for v in row])
        tensor.append(new_plane)
    out = FiniteHNS(M, tensor)
    _require_unital(out)
    return out


def parse_csv(text: str) -> FiniteHNS:
    """Inverse of ``serialize(. , "csv")``; dimension inferred from the indices."""
    triples: list[tuple[int, int, int, Fraction]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != 4:
            raise TableParseError(f"line {lineno}: expected 'i,j,k,value'")
        try:
            i, j, k = (int(p) for p in parts[:3])
        except ValueError:
            raise TableParseError(f"line {lineno}: bad index") from None
        triples.append((i, j, k, _parse_rational(parts[3])))
    if not triples:
        raise TableParseError("empty table")
    M = max(max(i, j, k) for i, j, k, _ in triples)
    tensor = [[[Fraction(0)] * M for _ in range(M)] for _ in range(M)]
    for i, j, k, v in triples:
        if min(i, j, k) < 1:
            raise TableParseError(f"index out of range in triple {(i, j, k)}")
        tensor[i - 1][j - 1][k - 1] = v
    out = FiniteHNS(M, tensor)
    _require_unital(out)
    return out


def parse_markdown(text: str) -> FiniteHNS:
    """Inverse of ``serialize(. , "markdown")`` on the emitted cell grammar."""
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if not (line.startswith("|") and line.endswith("|")):
            raise TableParseError(f"bad table line {line!r}")
        cells = [c.strip() for c in line[1:-1].split("|")]
        if all(set(c) <= {"-"} and c for c in cells):
            continue  # separator row
        rows.append(cells)
    if not rows:
        raise TableParseError("empty table")
    M = len(rows[0])
    if len(rows) != M or any(len(r) != M for r in rows):
        raise TableParseError(f"expected an {M}x{M} grid")
    tensor = [[_parse_cell(c, M) for c in row] for row in rows]
    out = FiniteHNS(M, tensor)
    _require_unital(out)
    return out


_PARSERS = {"markdown": parse_markdown, "csv": parse_csv, "json": parse_json}


def parse(document: TableDocument) -> FiniteHNS:
    """Dispatch to the parser matching the document's format."""
    return _PARSERS[document.format](document.payload)


# ---------------------------------------------------------------------------
# command-line surface

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hnskit",
        description="generate, verify, quotient, and compare finite hypercomplex number systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit the multiplication table of a generated system")
    gen.add_argument("--dim", type=int, required=True)
    gen.add_argument("--format", choices=FORMATS, default="markdown")
    gen.add_argument("--out", default=None)

    ver = sub.add_parser("verify", help="run law and structure-constant checks")
    ver.add_argument("--dim", type=int, required=True)
    ver.add_argument("--checks", default="laws,conditions")
    ver.add_argument("--involution", choices=("identity", "reflection"), default="identity")
    ver.add_argument("--strict", action="store_true",
                     help="exit 1 when any requested check reports a failure")

    quo = sub.add_parser("quotient", help="collapse a generated system along a divisor partition")
    quo.add_argument("--dim", type=int, required=True)
    quo.add_argument("--divisor", type=int, required=True)
    quo.add_argument("--format", choices=FORMATS, default="markdown")
    quo.add_argument("--out", default=None)

    iso = sub.add_parser("iso", help="search for a unit-fixing permutation isomorphism")
    iso.add_argument("--a", required=True, help="json table file")
    iso.add_argument("--b", required=True, help="json table file")

    proj = sub.add_parser("project", help="class of a half-line index in a generated system")
    proj.add_argument("--index", type=int, required=True)
    proj.add_argument("--dim", type=int, required=True)

    return parser


def _emit(payload: str, out: str | None) -> None:
    if out is None:
        _sys.stdout.write(payload)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(payload)


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _cmd_generate(args) -> int:
    doc = serialize(build_quotient_system(args.dim), args.format)
    _emit(doc.payload, args.out)
    return 0


def _cmd_verify(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = set(checks) - {"laws", "conditions"}
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}; expected laws,conditions")
    sys_ = build_quotient_system(args.dim)
    failed = False

    if "laws" in checks:
        report = check_algebra_laws(sys_)
        print(
            f"laws dim={args.dim}: unital={_yesno(report.unital)} "
            f"commutative={_yesno(report.commutative)} associative={_yesno(report.associative)}"
        )
        if not report.associative:
            w = report.associativity_witnesses[0]
            print(f"  associativity witness (i,j,k,s)={w.indices}: {w.lhs} != {w.rhs}")
        failed = failed or not report.all_hold

    if "conditions" in checks:
        creport = check_structure_conditions(sys_, args.involution)
        print(
            f"conditions dim={args.dim} involution={args.involution}: "
            f"positivity={_yesno(creport.positivity_holds)} "
            f"unit_diagonal={_yesno(creport.unit_diagonal_holds)} "
            f"adjoint_symmetry={_yesno(creport.adjoint_symmetry_holds)}"
        )
        if creport.failure_witnesses:
            w = creport.failure_witnesses[0]
            print(f"  first witness (i,j,k)=({w.i},{w.j},{w.k}): {w.lhs} != {w.rhs}")
        failed = failed or not (
            creport.positivity_holds
            and creport.unit_diagonal_holds
            and creport.adjoint_symmetry_holds
        )

    return 1 if args.strict and failed else 0


def _cmd_quotient(args) -> int:
    sys_ = build_quotient_system(args.dim)
    partition = divisor_partition(args.dim, args.divisor)
    check = verify_congruence(sys_, partition)
    if not check:
        w = check.witness
        print(
            "note: partition is not a congruence "
            f"(representatives {w.first_pair} and {w.second_pair} disagree); "
            "emitting the minimal-representative quotient",
            file=_sys.stderr,
        )
    quotient = quotient_system(sys_, partition, require_congruence=False)
    doc = serialize(quotient, args.format)
    _emit(doc.payload, args.out)
    return 0


def _cmd_iso(args) -> int:
    with open(args.a, encoding="utf-8") as fh:
        a = parse_json(fh.read())
    with open(args.b, encoding="utf-8") as fh:
        b = parse_json(fh.read())
    perm = find_permutation_isomorphism(a, b)
    if perm is None:
        print("none")
        return 1
    print(" ".join(str(p) for p in perm))
    return 0


def _cmd_project(args) -> int:
    print(f"e_{project_index(args.index, args.dim)}")
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "verify": _cmd_verify,
    "quotient": _cmd_quotient,
    "iso": _cmd_iso,
    "project": _cmd_project,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())
