"""Adjacency-dump format for graphs too large for graph6 short form.

A dump is a header line ``n=<N>`` followed by N lines, one per vertex. Line
i is the adjacency row of vertex i as hex: column j is bit j counted from
the most significant bit of the first hex digit, padded with zero bits to a
multiple of 4. Several dumps may follow each other in one stream; blank
lines and lines starting with ``#`` between dumps are ignored.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graphcore import Graph


class DumpFormatError(ValueError):
    pass


def _row_to_hex(row: int, n: int) -> str:
    width = (n + 3) // 4
    if width == 0:
        return ""
    value = 0
    for j in range(n):
        if (row >> j) & 1:
            value |= 1 << (4 * width - 1 - j)
    return format(value, f"0{width}x")


def _hex_to_row(text: str, n: int) -> int:
    width = (n + 3) // 4
    if len(text) != width:
        raise DumpFormatError(f"row has {len(text)} hex digits, expected {width}")
    value = int(text, 16) if text else 0
    row = 0
    for j in range(n):
        if (value >> (4 * width - 1 - j)) & 1:
            row |= 1 << j
    if value & ((1 << (4 * width - n)) - 1):
        raise DumpFormatError("padding bits must be zero")
    return row


def write_adjacency_dump(G: Graph) -> str:
    lines = [f"n={G.n}"]
    lines.extend(_row_to_hex(row, G.n) for row in G.rows)
    return "\n".join(lines) + "\n"


def read_adjacency_dumps(lines: Iterable[str]) -> Iterator[Graph]:
    it = iter(lines)
    for raw in it:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not line.startswith("n="):
            raise DumpFormatError(f"expected 'n=<N>' header, got {line[:40]!r}")
        try:
            n = int(line[2:])
        except ValueError:
            raise DumpFormatError(f"bad vertex count in {line!r}") from None
        rows = []
        for i in range(n):
            try:
                text = next(it).strip()
            except StopIteration:
                raise DumpFormatError(f"dump ended after {i} of {n} rows") from None
            try:
                rows.append(_hex_to_row(text, n))
            except ValueError as exc:
                raise DumpFormatError(f"row {i}: {exc}") from None
        try:
            yield Graph(n, tuple(rows))
        except ValueError as exc:
            raise DumpFormatError(str(exc)) from None


def read_adjacency_dump(fh: TextIO) -> list[Graph]:
    return list(read_adjacency_dumps(fh))
