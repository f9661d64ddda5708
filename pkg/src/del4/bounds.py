"""Upper bounds on single-deletion-correcting codes and two exact-search oracles.

``max_code_search`` finds a maximum code by branch and bound on the conflict
graph of ``B_q^n`` and ``exact_cover_sqs`` finds some SQS(q) by exact cover.
Neither uses any of the algebraic constructions.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

import numpy as np
from scipy.optimize import linprog
from scipy.sparse import csr_matrix

from .errors import BudgetExhausted, InvalidArgument, UnsupportedParameter
from .exact_cover import exact_cover
from .sqs import Quad, is_sqs
from .words import Code, deletion_ball

EXACT_SEARCH_LIMIT = 10**4


def levenshtein_bound(n: int, q: int) -> int:
    """floor((q^(n-1) + (n-2) q^(n-2) + q) / n)."""
    if n < 2 or q < 2:
        raise InvalidArgument(f"levenshtein_bound needs n >= 2 and q >= 2, got n={n}, q={q}")
    return (q ** (n - 1) + (n - 2) * q ** (n - 2) + q) // n


def sharp_bound(q: int) -> int:
    """q^2 (q + 2) / 4, the sharp bound for length 4 and even q."""
    if q < 2 or q % 2:
        raise UnsupportedParameter(f"the sharp length-4 bound is known for even q >= 2 only, got {q}")
    return q * q * (q + 2) // 4


@dataclass(frozen=True)
class BoundReport:
    n: int
    q: int
    levenshtein_bound: int
    sharp_bound: int | None
    achieved: int | None = None

    def __post_init__(self):
        if self.sharp_bound is not None and self.sharp_bound > self.levenshtein_bound:
            raise InvalidArgument("sharp_bound exceeds levenshtein_bound")

    @property
    def meets_bound(self) -> bool | None:
        if self.achieved is None or self.sharp_bound is None:
            return None
        return self.achieved == self.sharp_bound


def bound_report(q: int, n: int = 4, achieved: int | None = None) -> BoundReport:
    t2 = sharp_bound(q) if n == 4 and q % 2 == 0 else None
    return BoundReport(n, q, levenshtein_bound(n, q), t2, achieved)


@dataclass(frozen=True)
class SearchResult:
    size: int
    witness: Code
    exact: bool
    nodes: int
    root_bound: float


def _ball_structure(n: int, q: int):
    words = list(itertools.product(range(q), repeat=n))
    subs = {y: i for i, y in enumerate(itertools.product(range(q), repeat=n - 1))}
    balls = [[subs[y] for y in deletion_ball(w, 1)] for w in words]
    return words, subs, balls


def fractional_packing_bound(n: int, q: int) -> float:
    """LP relaxation: maximise sum x_w subject to every (n-1)-word being covered at most once."""
    words, subs, balls = _ball_structure(n, q)
    rows = [r for b in balls for r in b]
    cols = [j for j, b in enumerate(balls) for _ in b]
    A = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(subs), len(words)))
    res = linprog(-np.ones(len(words)), A_ub=A, b_ub=np.ones(len(subs)), bounds=(0, 1), method="highs")
    if res.status != 0:
        raise BudgetExhausted(f"LP solver failed: {res.message}")
    return float(-res.fun)


def max_code_search(
    n: int, q: int, budget: float | None = 60.0, warm_start: Code | None = None
) -> SearchResult:
    """Maximum single-deletion-correcting code in ``B_q^n`` by branch and bound.

    Words sharing a length-(n-1) subword form a clique of the conflict graph,
    so greedily covering the candidates by such cliques bounds every
    subproblem; the LP relaxation caps the root. ``exact`` is False when the
    budget (seconds) ran out, in which case ``size`` is only a lower bound.
    """
    if n < 1 or q < 1:
        raise InvalidArgument("max_code_search needs n >= 1 and q >= 1")
    if q**n > EXACT_SEARCH_LIMIT:
        raise InvalidArgument(f"q^n = {q ** n} exceeds the search limit {EXACT_SEARCH_LIMIT}")
    words, subs, balls = _ball_structure(n, q)
    N = len(words)
    clique = [0] * len(subs)
    for j, b in enumerate(balls):
        for r in b:
            clique[r] |= 1 << j
    conflict = [0] * N
    for j, b in enumerate(balls):
        for r in b:
            conflict[j] |= clique[r]
    root = fractional_packing_bound(n, q) if n >= 2 else float(q)
    cap = math.floor(root + 1e-9)

    def cover_bound(cand: int) -> int:
        count = 0
        while cand:
            v = (cand & -cand).bit_length() - 1
            best = max((clique[r] & cand for r in balls[v]), key=int.bit_count)
            cand &= ~best
            count += 1
        return count

    # Greedy start: lowest-degree word first.
    best: list[int] = []
    cand = (1 << N) - 1
    while cand:
        v = min(
            (i for i in range(N) if cand >> i & 1),
            key=lambda i: ((conflict[i] & cand).bit_count(), i),
        )
        best.append(v)
        cand &= ~conflict[v]
    if warm_start is not None and warm_start.n == n and warm_start.q <= q and len(warm_start) > len(best):
        index = {w: i for i, w in enumerate(words)}
        best = [index[w] for w in warm_start]

    deadline = None if budget is None else time.monotonic() + budget
    nodes = 0
    exact = True
    chosen: list[int] = []
    stack = [((1 << N) - 1, 0)]  # (candidates, depth); depth = len(chosen) at that node
    while stack:
        if len(best) >= cap:
            break
        cand, depth = stack.pop()
        del chosen[depth:]
        nodes += 1
        if deadline is not None and nodes % 512 == 0 and time.monotonic() > deadline:
            exact = False
            break
        if not cand:
            if depth > len(best):
                best = list(chosen)
            continue
        if depth + cover_bound(cand) <= len(best):
            continue
        v = (cand & -cand).bit_length() - 1
        # exclude v (explored second), include v (explored first)
        stack.append((cand & ~(1 << v), depth))
        chosen.append(v)
        stack.append((cand & ~conflict[v], depth + 1))
    witness = Code(n, q, tuple(words[i] for i in best))
    return SearchResult(len(best), witness, exact, nodes, root)


def exact_cover_sqs(q: int, budget: float | None = 60.0) -> list[Quad] | None:
    """Some SQS(q) found by exact cover (rows: 4-subsets, columns: 3-subsets).

    Returns None when the search proves none exists; raises
    ``BudgetExhausted`` when it runs out of time first.
    """
    if q < 4 or q % 6 not in (2, 4):
        raise UnsupportedParameter(f"SQS(q) exists only for q = 2, 4 (mod 6), got {q}")
    # The blocks through {0, 1} split the other points into pairs; relabelling
    # makes them {0, 1, 2t, 2t+1}, so they can be fixed without loss.
    fixed = [(0, 1, 2 * t, 2 * t + 1) for t in range(1, q // 2)]
    covered = {t for b in fixed for t in itertools.combinations(b, 3)}
    columns = [t for t in itertools.combinations(range(q), 3) if t not in covered]
    rows = {}
    for b in itertools.combinations(range(q), 4):
        ts = tuple(itertools.combinations(b, 3))
        if not any(t in covered for t in ts):
            rows[b] = ts
    found = exact_cover(columns, rows, budget=budget)
    if found is None:
        return None
    quads = sorted(fixed + found)
    if not is_sqs(quads, q):
        raise BudgetExhausted("exact cover returned a non-SQS")  # unreachable if Algorithm X is sound
    return quads  # type: ignore[return-value]
