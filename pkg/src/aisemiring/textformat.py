"""Plain-text table format for semirings and groups.

A semiring file::

    # flat extension of Z_2
    semiring 3
    0 1 2
    1 1 2
    2 2 2
    mul
    ...
    names e a 0

A group file starts with ``group <m> <identity-index>`` followed by ``m``
table rows.  ``#`` starts a comment.
"""
from __future__ import annotations

from pathlib import Path
from typing import Union

from .algebra import FiniteGroup, FiniteSemiring
from .errors import StructureError

Algebra = Union[FiniteSemiring, FiniteGroup]


def _lines(text):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def _rows(lines, k, what):
    rows = []
    for _ in range(k):
        try:
            line = next(lines)
        except StopIteration:
            raise StructureError(f"{what} table ended after {len(rows)} of {k} rows") from None
        try:
            row = [int(x) for x in line.split()]
        except ValueError:
            raise StructureError(f"non-integer entry in {what} row {line!r}") from None
        rows.append(row)
    return rows


def loads(text: str) -> Algebra:
    lines = _lines(text)
    try:
        header = next(lines).split()
    except StopIteration:
        raise StructureError("empty algebra file") from None
    kind = header[0]
    try:
        size = int(header[1])
    except (IndexError, ValueError):
        raise StructureError(f"bad header {' '.join(header)!r}") from None

    if kind == "group":
        if len(header) != 3:
            raise StructureError("group header must be 'group <m> <identity-index>'")
        table = _rows(lines, size, "group")
        names = _names(lines, size)
        return FiniteGroup(table, int(header[2]), names)
    if kind != "semiring" or len(header) != 2:
        raise StructureError(f"unknown header {' '.join(header)!r}")
    add = _rows(lines, size, "add")
    marker = next(lines, None)
    if marker != "mul":
        raise StructureError(f"expected 'mul' after the addition table, got {marker!r}")
    mul = _rows(lines, size, "mul")
    return FiniteSemiring(add, mul, _names(lines, size))


def _names(lines, size):
    rest = list(lines)
    if not rest:
        return ()
    words = rest[0].split()
    if words[0] != "names" or len(rest) > 1:
        raise StructureError(f"unexpected trailing content {rest[0]!r}")
    if len(words) - 1 != size:
        raise StructureError(f"expected {size} names, got {len(words) - 1}")
    return tuple(words[1:])


def _table_lines(table):
    return [" ".join(str(x) for x in row) for row in table]


def dumps(A: Algebra, comment: str | None = None) -> str:
    out = [f"# {comment}"] if comment else []
    default = tuple(str(i) for i in A.elements)
    if isinstance(A, FiniteGroup):
        out.append(f"group {A.order} {A.identity}")
        out += _table_lines(A.mul)
    else:
        out.append(f"semiring {A.order}")
        out += _table_lines(A.add)
        out.append("mul")
        out += _table_lines(A.mul)
    if A.names != default:
        out.append("names " + " ".join(A.names))
    return "\n".join(out) + "\n"


def load(path) -> Algebra:
    return loads(Path(path).read_text())


def dump(A: Algebra, path, comment: str | None = None) -> None:
    Path(path).write_text(dumps(A, comment))
