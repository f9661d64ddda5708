"""Plain-text file formats for codes and block designs.

Code files start with ``# n=4 q=<q> size=<N> kind=<optimal|perfect>`` and
hold one word per line as space-separated decimal letters. Design files (SQS
and GDD) hold one block per line as four ascending integers after optional
``#`` header lines. Every parse error names the offending line.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InvalidArgument
from .words import Code, Word


class ParseError(InvalidArgument):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _header_fields(line: str) -> dict[str, str]:
    return dict(tok.split("=", 1) for tok in line.lstrip("#").split() if "=" in tok)


def format_code(code: Code, kind: str = "optimal") -> str:
    lines = [f"# n={code.n} q={code.q} size={len(code)} kind={kind}"]
    lines += [" ".join(map(str, w)) for w in code]
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> tuple[Code, dict[str, str]]:
    """Read a code file; returns the code and its header fields."""
    header: dict[str, str] = {}
    words: list[Word] = []
    lines: list[int] = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header.update(_header_fields(line))
            continue
        try:
            words.append(tuple(int(t) for t in line.split()))
        except ValueError:
            raise ParseError(no, f"expected decimal letters, got {line!r}") from None
        lines.append(no)
    try:
        q = int(header["q"])
        n = int(header.get("n", "4"))
    except KeyError:
        raise ParseError(1, "missing header field q (expected '# n=4 q=<q> size=<N> kind=<kind>')") from None
    except ValueError:
        raise ParseError(1, "header fields n and q must be integers") from None
    if q < 1 or n < 1:
        raise ParseError(1, f"bad header parameters n={n}, q={q}")
    seen: dict[Word, int] = {}
    for no, w in zip(lines, words):
        if len(w) != n:
            raise ParseError(no, f"word has {len(w)} letters, expected {n}")
        if any(not 0 <= a < q for a in w):
            raise ParseError(no, f"letter outside 0..{q - 1}")
        if w in seen:
            raise ParseError(no, f"duplicate of the word on line {seen[w]}")
        seen[w] = no
    if "size" in header:
        try:
            size = int(header["size"])
        except ValueError:
            raise ParseError(1, "header field size must be an integer") from None
        if size != len(words):
            raise ParseError(1, f"header says size={size} but the file has {len(words)} words")
    return Code(n, q, tuple(words)), header


def format_blocks(blocks: Iterable[Sequence[int]], header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines += [" ".join(map(str, sorted(b))) for b in blocks]
    return "\n".join(lines) + "\n"


def parse_blocks(text: str) -> tuple[dict[str, str], list[tuple[int, int, int, int]]]:
    """Read a design file; returns header fields and the blocks."""
    header: dict[str, str] = {}
    blocks = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header.update(_header_fields(line))
            continue
        try:
            vals = tuple(int(t) for t in line.split())
        except ValueError:
            raise ParseError(no, f"expected 4 integers, got {line!r}") from None
        if len(vals) != 4:
            raise ParseError(no, f"expected 4 integers, got {len(vals)}")
        if any(v < 0 for v in vals):
            raise ParseError(no, "negative point label")
        if list(vals) != sorted(set(vals)):
            raise ParseError(no, "points must be distinct and ascending")
        blocks.append(vals)
    return header, blocks  # type: ignore[return-value]
