"""Reading and writing instance files.

An instance file lists one simplex per line followed by one or two values:

    # vertices            f0      f1
    0 :                   0       1/4
    1 :                   0.5     0.5
    0 1 :                 1       0.75

Blank lines and ``#`` comments are skipped.  Every data line must carry the
same number of values (one or two).  Values may be written as integers,
decimals, scientific notation, or ``p/q`` fractions; they are read exactly.
Writing uses the shortest exact form, so a parse/format round trip is the
identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import (
    FiltrationFunction,
    Simplex,
    SimplicialComplex,
    validate_complex,
)
from .errors import InvalidComplex, ParseError
from .rational import format_value, to_fraction


@dataclass(frozen=True)
class InstanceFile:
    complex: SimplicialComplex
    functions: "tuple[FiltrationFunction, ...]"
    path: "str | None" = None


def parse_instance_text(text: str, path: "str | None" = None) -> InstanceFile:
    """Parse instance file content, collecting every problem before failing."""
    problems: "list[tuple[int, str]]" = []
    rows = []  # (line_no, vertices, values)
    expected_width = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            problems.append((line_no, "missing ':' between vertices and values"))
            continue
        left, right = line.split(":", 1)
        try:
            vertices = tuple(int(tok) for tok in left.split())
        except ValueError:
            problems.append((line_no, f"vertices are not integers: {left.strip()!r}"))
            continue
        if not vertices:
            problems.append((line_no, "no vertices before ':'"))
            continue
        value_tokens = right.split()
        if not value_tokens:
            problems.append((line_no, "no values after ':'"))
            continue
        if len(value_tokens) > 2:
            problems.append(
                (line_no, f"expected 1 or 2 values, got {len(value_tokens)}")
            )
            continue
        values = []
        bad = False
        for tok in value_tokens:
            try:
                values.append(to_fraction(tok))
            except (ValueError, ZeroDivisionError):
                problems.append((line_no, f"unreadable value {tok!r}"))
                bad = True
        if bad:
            continue
        if expected_width is None:
            expected_width = len(values)
        elif len(values) != expected_width:
            problems.append(
                (
                    line_no,
                    f"line has {len(values)} values but earlier lines have "
                    f"{expected_width}",
                )
            )
            continue
        try:
            simplex = Simplex(vertices)
        except ValueError as exc:
            problems.append((line_no, str(exc)))
            continue
        rows.append((line_no, simplex, tuple(values)))

    if not rows and not problems:
        problems.append((0, "no simplices in file"))
    if problems:
        raise ParseError(problems, path)

    try:
        K = validate_complex([simplex for _, simplex, _ in rows])
    except InvalidComplex as exc:
        line_of = {}
        for line_no, simplex, _ in rows:
            line_of.setdefault(simplex, line_no)
        for issue in exc.issues:
            anchor = getattr(issue, "simplex", None)
            problems.append((line_of.get(anchor, 0), str(issue)))
        raise ParseError(problems, path) from None

    functions = tuple(
        FiltrationFunction(K, [values[k] for _, _, values in rows])
        for k in range(len(rows[0][2]))
    )
    return InstanceFile(K, functions, path)


def parse_instance(path: str) -> InstanceFile:
    with open(path, encoding="utf-8") as fh:
        return parse_instance_text(fh.read(), path)


def format_instance(instance: InstanceFile) -> str:
    """Render an instance back to file text, values in exact shortest form."""
    K = instance.complex
    lines = []
    for i, simplex in enumerate(K.simplices):
        verts = " ".join(str(v) for v in simplex.vertices)
        vals = " ".join(format_value(f.values[i]) for f in instance.functions)
        lines.append(f"{verts} : {vals}")
    return "\n".join(lines) + "\n"
