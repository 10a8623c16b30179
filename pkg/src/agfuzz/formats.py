"""Text and JSON formats for tables, grade vectors and quotient dumps.

Table text::

    4
    0 1 2 3
    3 0 1 2
    ...

Grade text: one ``index p/q`` line per element.  Parsers are strict and
reject trailing garbage.
"""

import json

from .cayley import validate_table
from .errors import ParseError
from .grades import format_grade, parse_grade


def _int(tok, what):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"bad integer {tok!r} in {what}") from None


def parse_table_text(text):
    lines = [ln.split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty table file")
    if len(lines[0]) != 1:
        raise ParseError("first line must hold only the order")
    n = _int(lines[0][0], "order line")
    if n < 1:
        raise ParseError(f"order {n} must be positive")
    body = lines[1:]
    if len(body) < n:
        raise ParseError(f"expected {n} rows, found {len(body)}")
    if len(body) > n:
        raise ParseError(f"trailing data after {n} rows")
    rows = []
    for i, row in enumerate(body):
        if len(row) != n:
            raise ParseError(f"row {i} has {len(row)} entries, expected {n}", witness=i)
        rows.append([_int(tok, f"row {i}") for tok in row])
    return validate_table(rows)


def format_table_text(t):
    lines = [str(t.order)] + [" ".join(map(str, r)) for r in t.rows]
    return "\n".join(lines) + "\n"


def _load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def parse_table_json(text):
    doc = _load_json(text)
    if not isinstance(doc, dict) or set(doc) != {"order", "table"}:
        raise ParseError('expected exactly the keys "order" and "table"')
    t = validate_table(doc["table"])
    if doc["order"] != t.order:
        raise ParseError(f"order {doc['order']} does not match a {t.order}x{t.order} table")
    return t


def format_table_json(t):
    return json.dumps({"order": t.order, "table": t.tolist()}, sort_keys=True) + "\n"


def parse_table(text):
    """Dispatch on content: JSON if it starts with ``{``, text otherwise."""
    return parse_table_json(text) if text.lstrip().startswith("{") else parse_table_text(text)


def parse_grades_text(text, order=None):
    found = {}
    for ln in text.splitlines():
        parts = ln.split()
        if not parts:
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'index p/q', got {ln!r}")
        i = _int(parts[0], "grade line")
        if i in found:
            raise ParseError(f"index {i} listed twice", witness=i)
        found[i] = parse_grade(parts[1])
    n = len(found) if order is None else order
    if sorted(found) != list(range(n)):
        raise ParseError(f"grade indices must be exactly 0..{n - 1}")
    return [found[i] for i in range(n)]


def format_grades_text(grades):
    return "".join(f"{i} {format_grade(t)}\n" for i, t in enumerate(grades))


def parse_grades_json(text, order=None):
    doc = _load_json(text)
    if not isinstance(doc, dict) or set(doc) != {"grades"} or not isinstance(doc["grades"], list):
        raise ParseError('expected exactly the key "grades" holding a list')
    if not all(isinstance(s, str) for s in doc["grades"]):
        raise ParseError("grades must be strings such as \"1/2\"")
    grades = [parse_grade(s) for s in doc["grades"]]
    if order is not None and len(grades) != order:
        raise ParseError(f"{len(grades)} grades for order {order}")
    return grades


def format_grades_json(grades):
    return json.dumps({"grades": [format_grade(t) for t in grades]}) + "\n"


def parse_grades(text, order=None):
    if text.lstrip().startswith("{"):
        return parse_grades_json(text, order)
    return parse_grades_text(text, order)


def quotient_dict(q, grades=None):
    doc = {
        "classes": [
            {"representative": r, "members": list(c)}
            for r, c in zip(q.representatives, q.classes)
        ],
        "table": q.table.tolist(),
    }
    if grades is not None:
        for entry, t in zip(doc["classes"], grades):
            entry["grade"] = format_grade(t)
    return doc


def format_quotient_text(q, grades=None):
    """Class count, one line per class (``rep: members [grade]``), then the
    class table."""
    lines = [str(q.order)]
    for i, (r, c) in enumerate(zip(q.representatives, q.classes)):
        line = f"{r}: {' '.join(map(str, c))}"
        if grades is not None:
            line += f" | {format_grade(grades[i])}"
        lines.append(line)
    lines.extend(" ".join(map(str, row)) for row in q.table.rows)
    return "\n".join(lines) + "\n"


def format_quotient_json(q, grades=None):
    return json.dumps(quotient_dict(q, grades), sort_keys=True) + "\n"


def format_table_stream(tables):
    """Blank-line separated table blocks, as written by ``enumerate --out``."""
    return "\n".join(format_table_text(t) for t in tables)


def parse_table_stream(text):
    blocks = [b for b in text.split("\n\n") if b.strip()]
    return [parse_table_text(b) for b in blocks]
