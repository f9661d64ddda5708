"""The two orbit codes generated by a word with four distinct letters.

``gen_A`` is the classical six-word code; ``gen_B`` trades two of its words
for four ``(a, b, c, a)``-type words. Both cover every ordered triple of
distinct letters of the quadruple exactly once.
"""

from __future__ import annotations

from typing import Sequence

from .errors import InvalidArgument
from .words import Code, Word


def _check(x: Sequence[int]) -> tuple[int, int, int, int]:
    if len(x) != 4 or len(set(x)) != 4:
        raise InvalidArgument(f"generator needs four distinct letters, got {tuple(x)}")
    return tuple(x)  # type: ignore[return-value]


def words_A(x: Sequence[int]) -> list[Word]:
    a1, a2, a3, a4 = _check(x)
    return [
        (a1, a2, a3, a4),
        (a1, a4, a3, a2),
        (a2, a4, a1, a3),
        (a3, a4, a1, a2),
        (a3, a2, a1, a4),
        (a4, a2, a3, a1),
    ]


def words_B(x: Sequence[int]) -> list[Word]:
    a1, a2, a3, a4 = _check(x)
    return [
        (a1, a4, a3, a2),
        (a2, a4, a1, a3),
        (a3, a2, a1, a4),
        (a4, a2, a3, a1),
        (a1, a3, a4, a1),
        (a2, a3, a4, a2),
        (a3, a1, a2, a3),
        (a4, a1, a2, a4),
    ]


def gen_A(x: Sequence[int], q: int | None = None) -> Code:
    words = words_A(x)
    return Code(4, q if q is not None else max(x) + 1, tuple(words))


def gen_B(x: Sequence[int], q: int | None = None) -> Code:
    words = words_B(x)
    return Code(4, q if q is not None else max(x) + 1, tuple(words))


def cross_pairs_B(x: Sequence[int]) -> list[frozenset[int]]:
    """Letter pairs whose ``(a, b, a)`` words ``gen_B(x)`` covers: first half x last half."""
    a1, a2, a3, a4 = _check(x)
    return [frozenset(p) for p in ((a1, a3), (a1, a4), (a2, a3), (a2, a4))]
