"""Knuth's Algorithm X over a dict-of-sets incidence structure.

Columns are chosen by fewest remaining candidate rows, ties broken by the
column key itself, and rows are tried in sorted order, so the first solution
found is a function of the input alone.
"""

from __future__ import annotations

import time
from typing import Hashable, Iterable, Mapping, Sequence

from .errors import BudgetExhausted

Column = Hashable
Row = Hashable


def _select(X, Y, r):
    removed = []
    for j in Y[r]:
        for i in X[j]:
            for k in Y[i]:
                if k != j:
                    X[k].discard(i)
        removed.append(X.pop(j))
    return removed


def _deselect(X, Y, r, removed):
    for j in reversed(Y[r]):
        X[j] = removed.pop()
        for i in X[j]:
            for k in Y[i]:
                if k != j:
                    X[k].add(i)


def exact_cover(
    columns: Iterable[Column],
    rows: Mapping[Row, Sequence[Column]],
    *,
    budget: float | None = None,
    node_limit: int | None = None,
) -> list[Row] | None:
    """Rows covering every column exactly once, or None if no such choice exists.

    ``budget`` is in seconds. Running out of time or nodes raises
    ``BudgetExhausted``, which is distinct from a proven ``None``.
    """
    Y = {r: tuple(cols) for r, cols in rows.items()}
    X: dict[Column, set[Row]] = {c: set() for c in columns}
    for r, cols in Y.items():
        for c in cols:
            if c not in X:
                raise KeyError(f"row {r!r} uses unknown column {c!r}")
            X[c].add(r)
    deadline = None if budget is None else time.monotonic() + budget
    nodes = 0
    solution: list[Row] = []
    # frame: [candidate rows, next index, columns removed by the selected row]
    stack: list[list] = []
    while True:
        if not X:
            return list(solution)
        col = min(X, key=lambda c: (len(X[c]), c))
        stack.append([sorted(X[col]), 0, None])
        while stack:
            frame = stack[-1]
            if frame[2] is not None:
                _deselect(X, Y, solution.pop(), frame[2])
                frame[2] = None
            if frame[1] >= len(frame[0]):
                stack.pop()
                continue
            r = frame[0][frame[1]]
            frame[1] += 1
            nodes += 1
            if node_limit is not None and nodes > node_limit:
                raise BudgetExhausted(f"exact cover exceeded {node_limit} nodes")
            if deadline is not None and nodes % 256 == 0 and time.monotonic() > deadline:
                raise BudgetExhausted(f"exact cover exceeded {budget} s")
            frame[2] = _select(X, Y, r)
            solution.append(r)
            break
        else:
            return None
