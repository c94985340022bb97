"""Space-specification files: positioned parsing, schema and semantic checks.

The input format is JSON (see schemas/spacespec.schema.json). A small
recursive-descent reader records the line/column of every value so that both
schema violations and semantic errors (bad indices, malformed rationals) are
reported with a real position, which stdlib json only provides for syntax
errors. Bracket indices in files are 1-based, matching the basis listing;
the Python API stays 0-based.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .affine import UserAssertions
from .errors import SpecFileError
from .homspace import MetricSpec
from .linalg import Matrix

_RATIONAL = re.compile(r"^-?\d+(/[1-9]\d*)?$")

Position = tuple[int, int]
Path = tuple


class _Reader:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1

    def error(self, message: str) -> SpecFileError:
        return SpecFileError(message, self.line, self.col)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def skip_ws(self) -> None:
        while self.peek() in (" ", "\t", "\r", "\n"):
            self.advance()

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.advance()


def parse_positioned(text: str) -> tuple[object, dict[Path, Position]]:
    """Parse JSON, returning the value and a map from path tuples to positions."""
    reader = _Reader(text)
    positions: dict[Path, Position] = {}
    reader.skip_ws()
    value = _parse_value(reader, (), positions)
    reader.skip_ws()
    if reader.pos != len(text):
        raise reader.error("trailing content after the document")
    return value, positions


def _parse_value(r: _Reader, path: Path, positions: dict):
    positions[path] = (r.line, r.col)
    ch = r.peek()
    if ch == "{":
        return _parse_object(r, path, positions)
    if ch == "[":
        return _parse_array(r, path, positions)
    if ch == '"':
        return _parse_string(r)
    if ch and ch in "-0123456789":
        return _parse_number(r)
    for literal, value in (("true", True), ("false", False), ("null", None)):
        if r.text.startswith(literal, r.pos):
            for _ in literal:
                r.advance()
            return value
    raise r.error("expected a JSON value")


def _parse_object(r: _Reader, path: Path, positions: dict) -> dict:
    r.expect("{")
    out: dict = {}
    r.skip_ws()
    if r.peek() == "}":
        r.advance()
        return out
    while True:
        r.skip_ws()
        if r.peek() != '"':
            raise r.error("expected an object key")
        key = _parse_string(r)
        r.skip_ws()
        r.expect(":")
        r.skip_ws()
        if key in out:
            raise r.error(f"duplicate key {key!r}")
        out[key] = _parse_value(r, path + (key,), positions)
        r.skip_ws()
        if r.peek() == ",":
            r.advance()
            continue
        r.expect("}")
        return out


def _parse_array(r: _Reader, path: Path, positions: dict) -> list:
    r.expect("[")
    out: list = []
    r.skip_ws()
    if r.peek() == "]":
        r.advance()
        return out
    while True:
        r.skip_ws()
        out.append(_parse_value(r, path + (len(out),), positions))
        r.skip_ws()
        if r.peek() == ",":
            r.advance()
            continue
        r.expect("]")
        return out


_ESCAPES = {'"': '"', "\\": "\\", "/": "/", "b": "\b", "f": "\f", "n": "\n", "r": "\r", "t": "\t"}


def _parse_string(r: _Reader) -> str:
    r.expect('"')
    chars: list[str] = []
    while True:
        ch = r.peek()
        if ch == "":
            raise r.error("unterminated string")
        if ch == '"':
            r.advance()
            return "".join(chars)
        if ch == "\\":
            r.advance()
            esc = r.advance()
            if esc == "u":
                code = ""
                for _ in range(4):
                    code += r.advance()
                chars.append(chr(int(code, 16)))
            elif esc in _ESCAPES:
                chars.append(_ESCAPES[esc])
            else:
                raise r.error(f"bad escape \\{esc}")
        else:
            chars.append(r.advance())


def _parse_number(r: _Reader):
    start = r.pos
    line, col = r.line, r.col
    while r.peek() and r.peek() in "-+.eE0123456789":
        r.advance()
    token = r.text[start : r.pos]
    try:
        if re.fullmatch(r"-?\d+", token):
            return int(token)
        return float(token)
    except ValueError:
        raise SpecFileError(f"bad number {token!r}", line, col) from None


# ---------------------------------------------------------------------------
# schema + semantic validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpaceSpec:
    """Validated raw contents, ready for the analysis pipeline."""

    dim: int
    basis_labels: tuple[str, ...]
    bracket_entries: tuple  # 0-based (i, j, k, Fraction)
    subalgebra_rows: Matrix
    metric_spec: MetricSpec
    assertions: UserAssertions


def _schema() -> dict:
    data = resources.files("reductive_workbench").joinpath("schemas/spacespec.schema.json")
    return json.loads(data.read_text(encoding="utf-8"))


def _position_for(positions: dict, path: tuple) -> Position:
    while path:
        if path in positions:
            return positions[path]
        path = path[:-1]
    return positions.get((), (1, 1))


def _rat_at(value, positions, path) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        line, col = _position_for(positions, path)
        raise SpecFileError(
            f"rationals must be integers or 'p/q' strings, got {value!r}", line, col
        )
    if isinstance(value, str) and not _RATIONAL.fullmatch(value):
        line, col = _position_for(positions, path)
        raise SpecFileError(f"malformed rational {value!r}", line, col)
    return Fraction(value)


def parse_space_spec(text: str) -> SpaceSpec:
    """Parse and validate a specification document; raises SpecFileError."""
    doc, positions = parse_positioned(text)

    import jsonschema

    validator = jsonschema.Draft7Validator(_schema())
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        line, col = _position_for(positions, tuple(err.absolute_path))
        raise SpecFileError(err.message, line, col)

    labels = tuple(doc["basis"])
    if len(set(labels)) != len(labels):
        line, col = _position_for(positions, ("basis",))
        raise SpecFileError("basis labels must be unique", line, col)
    dim = len(labels)

    entries = []
    for t, item in enumerate(doc["brackets"]):
        i, j, k = item[0], item[1], item[2]
        path = ("brackets", t)
        line, col = _position_for(positions, path)
        for idx in (i, j, k):
            if not 1 <= idx <= dim:
                raise SpecFileError(
                    f"bracket index {idx} out of range 1..{dim}", line, col
                )
        if i >= j:
            raise SpecFileError(
                f"bracket entries need i < j (antisymmetry is automatic), got ({i}, {j})",
                line,
                col,
            )
        coeff = _rat_at(item[3], positions, path + (3,))
        entries.append((i - 1, j - 1, k - 1, coeff))

    rows = []
    for t, row in enumerate(doc["subalgebra"]):
        path = ("subalgebra", t)
        if len(row) != dim:
            line, col = _position_for(positions, path)
            raise SpecFileError(
                f"subalgebra vector has length {len(row)}, expected {dim}", line, col
            )
        rows.append(tuple(_rat_at(x, positions, path + (c,)) for c, x in enumerate(row)))

    metric = doc["metric"]
    if metric["mode"] == "negative_killing":
        for extra in ("scales", "center_gram"):
            if extra in metric:
                line, col = _position_for(positions, ("metric", extra))
                raise SpecFileError(
                    f"{extra} requires metric mode 'custom'", line, col
                )
        spec = MetricSpec()
    else:
        scales = None
        if "scales" in metric:
            scales = [
                _rat_at(s, positions, ("metric", "scales", c))
                for c, s in enumerate(metric["scales"])
            ]
        gram = None
        if "center_gram" in metric:
            gram = [
                [
                    _rat_at(x, positions, ("metric", "center_gram", a, b))
                    for b, x in enumerate(row)
                ]
                for a, row in enumerate(metric["center_gram"])
            ]
        spec = MetricSpec.custom(scale_factors=scales, center_gram=gram)

    asserts = doc.get("assertions", {})
    assertions = UserAssertions(
        locally_irreducible=asserts.get("locally_irreducible"),
        is_sphere_or_rp=asserts.get("is_sphere_or_rp"),
    )
    return SpaceSpec(dim, labels, tuple(entries), tuple(rows), spec, assertions)


def load_space_spec_file(path: str) -> SpaceSpec:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_space_spec(handle.read())
