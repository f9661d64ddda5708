"""Optimal single-deletion-correcting codes of length 4 for every even q.

Each builder returns a ``Code`` that has already passed ``validate_code``;
``optimal_code`` dispatches on ``q`` and records how the code was assembled in
a ``ConstructionTrace``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ConstructionError, InvalidArgument, UnsupportedParameter
from .gdd import GDD, build_gdd
from .orbits import words_A, words_B
from .pairs import reiss_partition
from .sqs import CanonicalSQS, build_sqs_step, select_upper_quads
from .words import Code, Word, ball_collision, is_deletion_correcting, is_perfect, parse_word


def optimal_size(q: int) -> int:
    return q * q * (q + 2) // 4


CODE_Q4_TEXT = """
0000 1111 2222 3333
0011 0022 0033 1100
1122 1133 2200 2211
2233 3300 3311 3322
0230 1231 2012 3013
0321 2103 1302 3120
"""

ORBITS_Q6_TEXT = """
0230 1231 2012 3013 4014 5015
0450 1451 2452 3453 4234 5235
0251 1304 2053 3105 4035 5102
0342 1325 2140 3124 4120 5143
0431 1503 2413 3520 4215 5321
0524 1542 2504 3541 4302 5340
"""


def _table_words(text: str) -> list[Word]:
    return [parse_word(tok) for tok in text.split()]


def constant_words(letters: Iterable[int]) -> list[Word]:
    return [(a, a, a, a) for a in letters]


def double_pair_words(letters: Sequence[int]) -> list[Word]:
    """All ``(a, a, b, b)`` with ``a != b`` drawn from ``letters``."""
    return [(a, a, b, b) for a, b in itertools.permutations(letters, 2)]


@dataclass(frozen=True)
class ConstructionTrace:
    """How a code was assembled: the dispatch route and the size of each part."""

    q: int
    route: tuple[str, ...]
    components: dict[str, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.components.values())


def validate_code(code: Code, expected_size: int | None = None, what: str = "code") -> Code:
    """Raise ``ConstructionError`` unless ``code`` corrects one deletion (and has the expected size)."""
    if expected_size is not None and len(code) != expected_size:
        raise ConstructionError(f"{what} has {len(code)} words, expected {expected_size}", "size law")
    if not is_deletion_correcting(code, 1):
        hit = ball_collision(code, 1)
        raise ConstructionError(f"{what}: {hit[0]} and {hit[1]} share {hit[2]}", "disjoint balls")
    return code


def _assemble(q: int, parts: dict[str, list[Word]], what: str) -> Code:
    words = [w for ws in parts.values() for w in ws]
    if len(set(words)) != len(words):
        raise ConstructionError(f"{what}: components overlap", "disjoint components")
    return validate_code(Code(4, q, tuple(words)), optimal_size(q), what)


def base_code(q: int) -> Code:
    """The embedded optimal codes for q = 2, 4 and 6."""
    if q == 2:
        words = [(0, 0, 0, 0), (1, 1, 1, 1), (0, 0, 1, 1), (1, 1, 0, 0)]
    elif q == 4:
        words = _table_words(CODE_Q4_TEXT)
    elif q == 6:
        words = _table_words(ORBITS_Q6_TEXT) + constant_words(range(6)) + double_pair_words(range(6))
    else:
        raise UnsupportedParameter(f"no embedded base code for q={q}")
    return validate_code(Code(4, q, tuple(words)), optimal_size(q), f"base code q={q}")


def orbit_words(blocks: Iterable[Sequence[int]], special: set) -> list[Word]:
    """gen_B words for blocks in ``special`` and gen_A words for the rest; blocks are sorted first."""
    out: list[Word] = []
    for b in blocks:
        x = tuple(sorted(b))
        out += words_B(x) if x in special else words_A(x)
    return out


def code_from_sqs(s: CanonicalSQS) -> Code:
    q = s.q
    if q < 4 or q % 6 not in (2, 4):
        raise InvalidArgument(f"code_from_sqs needs q = 2, 4 (mod 6), q >= 4, got {q}")
    upper = set(select_upper_quads(s))
    parts = {
        "constant": constant_words(range(q)),
        "double_pair": double_pair_words(range(q)),
        "orbits": orbit_words(s.quads, upper),
    }
    return _assemble(q, parts, f"SQS code q={q}")


def _sqs_parts(q: int) -> dict[str, int]:
    return {"constant": q, "double_pair": q * (q - 1), "orbits": q * q * (q - 2) // 4}


def gdd_parts(g: GDD, group_code: Code) -> dict[str, list[Word]]:
    m = g.m
    groups = [range(6 * i, 6 * i + 6) for i in range(m)]
    inner = [tuple(grp[a] for a in w) for grp in groups for w in group_code]
    cross = [
        (a, a, b, b)
        for gi, gj in itertools.permutations(groups, 2)
        for a in gi
        for b in gj
    ]
    return {"groups": inner, "orbits": orbit_words(g.blocks, set(g.marked_A1)), "cross": cross}


def code_from_gdd(m: int, budget: float | None = None) -> Code:
    if m < 1 or m % 2 == 0:
        raise UnsupportedParameter(f"code_from_gdd needs odd m, got {m}")
    g = build_gdd(m, budget=budget)
    parts = gdd_parts(g, base_code(6))
    expected_m = 54 * m**3 - 18 * m**2 - 36 * m
    if len(parts["orbits"]) != expected_m:
        raise ConstructionError(f"orbit part has {len(parts['orbits'])} words, expected {expected_m}", "orbit size")
    return _assemble(6 * m, parts, f"GDD code q={6 * m}")


def doubling_blocks(p: int) -> tuple[list[tuple[int, int, int, int]], set]:
    """The quadruples of S^{1,2} on two copies of ``B_p``, and the first-class ones.

    Copy one uses letters ``0..p-1`` and copy two ``p..2p-1``; Reiss label
    ``L`` becomes letter ``L - 1`` in the first copy.
    """
    if p % 2:
        raise InvalidArgument("doubling needs an even half alphabet")
    classes = reiss_partition(p // 2)
    blocks = []
    first = set()
    for idx, cls in enumerate(classes.systems):
        for (a, b), (c, d) in itertools.product(cls, repeat=2):
            blk = (a - 1, b - 1, p + c - 1, p + d - 1)
            blocks.append(blk)
            if idx == 0:
                first.add(blk)
    return blocks, first


def double_code(half: Code) -> Code:
    p = half.q
    if p % 6 or p < 6:
        raise UnsupportedParameter(f"double_code needs a half alphabet = 0 (mod 6), got {p}")
    validate_code(half, optimal_size(p), f"half code q={p}")
    blocks, first = doubling_blocks(p)
    orbits = orbit_words(blocks, first)
    if len(orbits) != 2 * p * p * (3 * p - 2) // 4:
        raise ConstructionError("doubling orbit part has the wrong size", "orbit size")
    parts = {
        "half_1": list(half.words),
        "half_2": [tuple(p + a for a in w) for w in half],
        "orbits": orbits,
        "cross": [(a, a, b, b) for a in range(p) for b in range(p, 2 * p)]
        + [(b, b, a, a) for a in range(p) for b in range(p, 2 * p)],
    }
    return _assemble(2 * p, parts, f"doubled code q={2 * p}")


@functools.lru_cache(maxsize=None)
def _optimal(q: int, budget: float | None) -> tuple[Code, ConstructionTrace]:
    if q < 2 or q % 2:
        raise UnsupportedParameter(f"optimal codes are constructed for even q >= 2, got {q}")
    if q in (2, 4, 6):
        code = base_code(q)
        return code, ConstructionTrace(q, (f"BASE{q}",), {"base": len(code)})
    if q % 6 in (2, 4):
        s = build_sqs_step(q)
        route = tuple(f"SQS({o})" if c == "base" else f"SQS({o}):case {c}" for o, c in s.route)
        return code_from_sqs(s), ConstructionTrace(q, route, _sqs_parts(q))
    m = q // 6
    if m % 2:
        code = code_from_gdd(m, budget)
        parts = {"groups": 72 * m, "orbits": 54 * m**3 - 18 * m**2 - 36 * m, "cross": 36 * m * (m - 1)}
        return code, ConstructionTrace(q, (f"GDD({m})", "BASE6"), parts)
    half, sub = _optimal(q // 2, budget)
    p = q // 2
    parts = {"halves": 2 * len(half), "orbits": 2 * p * p * (3 * p - 2) // 4, "cross": 2 * p * p}
    return double_code(half), ConstructionTrace(q, (f"DOUBLE({p})",) + sub.route, parts)


def optimal_code(q: int, budget: float | None = None) -> tuple[Code, ConstructionTrace]:
    """An optimal code of size q^2 (q + 2) / 4 for even ``q``, with its trace."""
    code, trace = _optimal(q, budget)
    if trace.total != len(code):
        raise ConstructionError(f"trace sizes sum to {trace.total}, code has {len(code)}", "trace")
    return code, trace


def step_swap_words(q: int) -> tuple[list[Word], list[Word]]:
    """Words removed and added by the perfect modification, for t in B_{q/2}."""
    removed = [(2 * t, 2 * t, 2 * t + 1, 2 * t + 1) for t in range(q // 2)]
    added = [(2 * t, 2 * t + 1, 2 * t, 2 * t + 1) for t in range(q // 2)]
    return removed, added


def make_perfect(code: Code) -> Code:
    removed, added = step_swap_words(code.q)
    missing = [w for w in removed if w not in code]
    if missing:
        raise ConstructionError(f"code lacks {missing[0]}", "double-pair words present")
    out = code.replace(removed, added)
    validate_code(out, len(code), f"perfect code q={code.q}")
    if not is_perfect(out, 1):
        raise ConstructionError(f"modified code q={code.q} does not cover B_q^3", "perfectness")
    return out


def perfect_code(q: int, budget: float | None = None) -> Code:
    """The optimal code with each (2t,2t,2t+1,2t+1) replaced by (2t,2t+1,2t,2t+1); perfect."""
    return make_perfect(optimal_code(q, budget)[0])
