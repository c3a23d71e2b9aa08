"""Line-oriented TSV reading shared by the data loaders."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .errors import LoadError


def source_name(source) -> str:
    if isinstance(source, (str, Path)):
        return str(source)
    return getattr(source, "name", "<stream>")


def _lines(source) -> Iterable:
    if isinstance(source, (str, Path)):
        with open(source, "rb") as handle:
            yield from handle
    else:
        yield from source


def iter_tsv(source, expected_cols: int) -> Iterator[tuple[int, list[str]]]:
    """Yield (line_no, fields) for every data line of a TSV source.

    `source` may be a path or an open text/binary stream. Bytes are decoded
    as UTF-8. Blank lines and lines whose first non-space character is '#'
    are skipped. Any other line must have exactly `expected_cols`
    tab-separated fields, else LoadError names the line.
    """
    name = source_name(source)
    for line_no, raw in enumerate(_lines(source), start=1):
        if isinstance(raw, bytes):
            try:
                line = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise LoadError(name, line_no, f"not valid UTF-8 ({exc.reason})") from None
        else:
            line = raw
        line = line.rstrip("\r\n")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != expected_cols:
            raise LoadError(
                name, line_no,
                f"expected {expected_cols} tab-separated fields, got {len(fields)}",
            )
        yield line_no, fields


def parse_positive_count(name: str, line_no: int, raw: str) -> int:
    """Parse a count column that must be a positive integer."""
    try:
        value = int(raw)
    except ValueError:
        raise LoadError(name, line_no, f"count {raw!r} is not an integer") from None
    if value <= 0:
        raise LoadError(name, line_no, f"count must be positive, got {value}")
    return value
