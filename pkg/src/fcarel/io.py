"""Reading and writing contexts in Burmeister cxt and CSV form.

Both writers emit UTF-8 with LF line endings and round-trip exactly:
``parse_context(write_context(k, fmt), fmt) == k``.
"""

from __future__ import annotations

import csv
import io as _io
import os
from typing import Union

from .context import FormalContext
from .errors import FormatError

Format = str  # "cxt" or "csv"

_INCIDENT = {"x", "X", "1"}
_EMPTY = {".", "0"}


def _decode(data: Union[bytes, str]) -> str:
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise FormatError(f"context data is not valid UTF-8: {exc}") from None
    else:
        text = data
    return text.replace("\r\n", "\n").replace("\r", "\n")


def parse_context(data: Union[bytes, str], fmt: Format = "cxt") -> FormalContext:
    """Parse a context file given as bytes or text.

    ``fmt`` is ``"cxt"`` (Burmeister) or ``"csv"``. Raises
    :class:`FormatError` for malformed headers, dimension mismatches,
    duplicate names and illegal incidence cells.
    """
    text = _decode(data)
    if fmt == "cxt":
        return _parse_cxt(text)
    if fmt == "csv":
        return _parse_csv(text)
    raise ValueError(f"unknown context format {fmt!r}")


def write_context(ctx: FormalContext, fmt: Format = "cxt") -> bytes:
    """Serialize ``ctx``; the output re-parses to an identical context."""
    if fmt == "cxt":
        return _write_cxt(ctx).encode("utf-8")
    if fmt == "csv":
        return _write_csv(ctx).encode("utf-8")
    raise ValueError(f"unknown context format {fmt!r}")


def guess_format(path) -> Format:
    """``"csv"`` for .csv paths, ``"cxt"`` otherwise."""
    return "csv" if os.path.splitext(str(path))[1].lower() == ".csv" else "cxt"


def read_context_file(path, fmt: Format | None = None) -> FormalContext:
    """Read a context from ``path``, inferring the format from the extension
    unless ``fmt`` is given."""
    with open(path, "rb") as fh:
        data = fh.read()
    return parse_context(data, fmt or guess_format(path))


def write_context_file(ctx: FormalContext, path, fmt: Format | None = None) -> None:
    with open(path, "wb") as fh:
        fh.write(write_context(ctx, fmt or guess_format(path)))


# -- Burmeister cxt ------------------------------------------------------
#
# Layout: "B", a name line (may be empty), |G|, |M|, an optional blank
# separator, |G| object names, |M| attribute names, |G| incidence rows of
# 'X'/'x'/'.' with exactly |M| characters each.


def _parse_cxt(text: str) -> FormalContext:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # the artifact of a trailing newline, nothing more:
        # rows of a zero-attribute context are legitimately empty lines
    if not lines or lines[0].strip() != "B":
        raise FormatError("cxt data must start with a 'B' line")
    if len(lines) < 4:
        raise FormatError("cxt header truncated")
    pos = 1
    # name line; tolerate files that omit it by checking whether the next
    # two lines already look like the two counts
    if lines[1].strip().isdigit() and len(lines) > 2 and lines[2].strip().isdigit():
        name_skipped = 0
    else:
        name_skipped = 1
    pos = 1 + name_skipped
    try:
        n_obj = int(lines[pos].strip())
        n_attr = int(lines[pos + 1].strip())
    except (IndexError, ValueError):
        raise FormatError("cxt header must contain object and attribute counts") from None
    if n_obj < 0 or n_attr < 0:
        raise FormatError("cxt counts must be non-negative")
    pos += 2
    if pos < len(lines) and lines[pos].strip() == "":
        pos += 1
    body = lines[pos:]
    expected = n_obj + n_attr + n_obj
    while len(body) > expected and body[-1].strip() == "":
        body.pop()  # tolerate extra trailing blank lines
    if len(body) != expected:
        raise FormatError(
            f"cxt body has {len(body)} lines, expected {expected} "
            f"({n_obj} objects + {n_attr} attributes + {n_obj} rows)"
        )
    objects = body[:n_obj]
    attributes = body[n_obj : n_obj + n_attr]
    rows = body[n_obj + n_attr :]
    for i, row in enumerate(rows):
        if len(row) != n_attr:
            raise FormatError(
                f"incidence row {i} has {len(row)} characters, expected {n_attr}"
            )
        for ch in row:
            if ch not in ("X", "x", "."):
                raise FormatError(f"illegal cxt cell character {ch!r} in row {i}")
    return FormalContext(objects, attributes, rows)


def _write_cxt(ctx: FormalContext) -> str:
    out = ["B", "", str(ctx.n_objects), str(ctx.n_attributes), ""]
    out.extend(ctx.objects)
    out.extend(ctx.attributes)
    for g in range(ctx.n_objects):
        out.append(
            "".join(
                "X" if ctx.incidence(g, m) else "." for m in range(ctx.n_attributes)
            )
        )
    return "\n".join(out) + "\n"


# -- CSV -----------------------------------------------------------------
#
# Header ",attr1,attr2,..."; one row per object "name,c1,...,cM" with
# cells in {0,1,x,X,.}.


def _parse_csv(text: str) -> FormalContext:
    reader = csv.reader(_io.StringIO(text))
    table = [row for row in reader]
    if not table:
        raise FormatError("csv context data is empty")
    header = table[0] or [""]
    if header[0] != "":
        raise FormatError("csv header must start with an empty cell")
    attributes = header[1:]
    objects = []
    rows = []
    for i, record in enumerate(table[1:]):
        if not record:
            continue  # stray blank line
        if len(record) != len(attributes) + 1:
            raise FormatError(
                f"csv row {i} has {len(record) - 1} cells, expected {len(attributes)}"
            )
        objects.append(record[0])
        mask_row = []
        for cell in record[1:]:
            cell = cell.strip()
            if cell in _INCIDENT:
                mask_row.append("X")
            elif cell in _EMPTY:
                mask_row.append(".")
            else:
                raise FormatError(f"illegal csv cell {cell!r} in row {i}")
        rows.append("".join(mask_row))
    return FormalContext(objects, attributes, rows)


def _write_csv(ctx: FormalContext) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + list(ctx.attributes))
    for g, name in enumerate(ctx.objects):
        writer.writerow(
            [name] + ["1" if ctx.incidence(g, m) else "0" for m in range(ctx.n_attributes)]
        )
    return buf.getvalue()
