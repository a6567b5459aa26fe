"""Line-oriented text format for designs.

    DESIGN v=<v> b=<b>
    # optional comments anywhere below the header
    0 1 3
    1 2 4
    ...

The header declares the variety count and the number of block lines.
Every non-comment, non-blank line after it is one block: its variety ids
in strictly ascending order, separated by single spaces.  A block's
multiplicity is encoded by repeating its line.  Writing is canonical:
no comments, blocks sorted lexicographically, so equal designs always
serialize to identical bytes.
"""

from __future__ import annotations

import re
from typing import IO, Iterable

from .design import Design

__all__ = ["DesignFileError", "parse_design", "format_design", "read_design", "write_design"]

_HEADER = re.compile(r"DESIGN v=(\d+) b=(\d+)$")


class DesignFileError(ValueError):
    """A design file violates the format; carries the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def read_design(source: IO[str] | Iterable[str]) -> Design:
    """Parse a design from an iterable of text lines (e.g. an open file)."""
    header: tuple[int, int] | None = None
    blocks: dict[tuple[int, ...], int] = {}
    count = 0
    lineno = 0
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise DesignFileError(lineno, f"expected header 'DESIGN v=<v> b=<b>', got {line!r}")
            header = (int(m.group(1)), int(m.group(2)))
            if header[0] < 1:
                raise DesignFileError(lineno, f"header declares v={header[0]}, need v >= 1")
            continue
        v = header[0]
        try:
            ids = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise DesignFileError(lineno, f"block line is not all integers: {line!r}") from None
        prev = -1
        for e in ids:
            if e < 0:
                raise DesignFileError(lineno, f"negative variety id {e}")
            if e <= prev:
                raise DesignFileError(lineno, f"block ids are not strictly ascending: {line!r}")
            prev = e
        if prev >= v:
            raise DesignFileError(lineno, f"variety id {prev} is not below v={v}")
        blocks[ids] = blocks.get(ids, 0) + 1
        count += 1
    if header is None:
        raise DesignFileError(lineno + 1, "missing header 'DESIGN v=<v> b=<b>'")
    if count != header[1]:
        raise DesignFileError(
            lineno + 1, f"header declares b={header[1]} but found {count} block lines"
        )
    return Design(header[0], blocks)


def parse_design(text: str) -> Design:
    """Parse a design from a string in the file format."""
    return read_design(text.splitlines())


def format_design(design: Design) -> str:
    """Canonical file text for a design: sorted blocks, multiplicity by repetition."""
    lines = [f"DESIGN v={design.v} b={design.num_blocks}"]
    for block in sorted(design.blocks):
        line = " ".join(str(e) for e in block)
        lines.extend([line] * design.blocks[block])
    return "\n".join(lines) + "\n"


def write_design(design: Design, out: IO[str]) -> None:
    """Write the canonical file text of a design to a text stream."""
    out.write(format_design(design))
