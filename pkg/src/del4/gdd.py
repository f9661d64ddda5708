"""Group divisible systems G(m, 6, 4, 3) on m groups of six points.

Point ``(i, alpha)`` (group ``i`` in ``1..m``, slot ``alpha`` in ``B_6``) has
flattened label ``(i - 1) * 6 + alpha``. Every block is stored as its sorted
tuple of labels, so sorting a block orders both points of the lower group
before both points of the higher one.

``build_gdd`` forces in the Mills family ``A`` (two points in each of two
groups, both pairs from the same pairing ``P_lambda``) and completes the
system by exact cover. Completed block sets are cached on disk.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .errors import ConstructionError, UnsupportedParameter
from .exact_cover import exact_cover
from .formats import ParseError, format_blocks, parse_blocks
from .pairs import MILLS
from .sqs import Quad

GROUP_SIZE = 6


def label(group: int, slot: int) -> int:
    return (group - 1) * GROUP_SIZE + slot


def point(lab: int) -> tuple[int, int]:
    return lab // GROUP_SIZE + 1, lab % GROUP_SIZE


def group_of(lab: int) -> int:
    return lab // GROUP_SIZE + 1


def gdd_size(m: int) -> int:
    return (math.comb(6 * m, 3) - m * math.comb(6, 3)) // 4


@dataclass(frozen=True)
class GDD:
    m: int
    blocks: tuple[Quad, ...]
    marked_A1: frozenset[Quad]

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def q(self) -> int:
        return GROUP_SIZE * self.m


def family_A(m: int) -> tuple[set[Quad], set[Quad]]:
    """The blocks of ``A`` and its ``lambda = 1`` part ``A_1``."""
    if m < 1 or m % 2 == 0:
        raise UnsupportedParameter(f"family A is defined here for odd m >= 1, got {m}")
    A: set[Quad] = set()
    A1: set[Quad] = set()
    for w, x in itertools.combinations(range(1, m + 1), 2):
        for lam, pairing in enumerate(MILLS, start=1):
            for (a, b), (c, d) in itertools.product(pairing, repeat=2):
                blk = tuple(sorted((label(w, a), label(w, b), label(x, c), label(x, d))))
                A.add(blk)  # type: ignore[arg-type]
                if lam == 1:
                    A1.add(blk)  # type: ignore[arg-type]
    return A, A1


def _cross_triples(m: int):
    for t in itertools.combinations(range(6 * m), 3):
        if len({group_of(v) for v in t}) > 1:
            yield t


def gdd_violations(g: GDD) -> list[str]:
    out = []
    n = 6 * g.m
    census: Counter = Counter()
    for b in g.blocks:
        if len(b) != 4 or len(set(b)) != 4 or min(b) < 0 or max(b) >= n:
            out.append(f"malformed block {b}")
            continue
        if max(Counter(group_of(v) for v in b).values()) >= 3:
            out.append(f"block {b} has three points in one group")
        census.update(itertools.combinations(sorted(b), 3))
    for t in _cross_triples(g.m):
        c = census.get(t, 0)
        if c != 1:
            out.append(f"cross triple {t} covered {c} times")
            break
    if len(g.blocks) != gdd_size(g.m):
        out.append(f"{len(g.blocks)} blocks, expected {gdd_size(g.m)}")
    if len(set(g.blocks)) != len(g.blocks):
        out.append("repeated block")
    if not g.marked_A1 <= set(g.blocks):
        out.append("marked A_1 blocks missing from the block set")
    if len(g.marked_A1) != 9 * math.comb(g.m, 2):
        out.append(f"|A_1| = {len(g.marked_A1)}, expected {9 * math.comb(g.m, 2)}")
    return out


def is_gdd(g: GDD) -> bool:
    return not gdd_violations(g)


def _cache_path(m: int) -> Path | None:
    root = os.environ.get("DEL4_CACHE_DIR")
    if not root:
        return None
    return Path(root) / f"gdd_m{m}.txt"


def format_gdd(g: GDD) -> str:
    return format_blocks(g.blocks, [f"gdd m={g.m}"])


def parse_gdd(text: str) -> tuple[int, list[Quad]]:
    """Parse a GDD file; errors name the offending line."""
    header, blocks = parse_blocks(text)
    try:
        m = int(header["m"])
    except KeyError:
        raise ParseError(1, "missing '# gdd m=<m>' header") from None
    except ValueError:
        raise ParseError(1, "header field m must be an integer") from None
    return m, blocks


def _shift(m: int, dg: int, ds: int):
    def act(lab: int) -> int:
        i, a = divmod(lab, GROUP_SIZE)
        return ((i + dg) % m) * GROUP_SIZE + (a + ds) % GROUP_SIZE
    return act


def symmetry_subgroups(m: int) -> list[tuple[int, int]]:
    """Subgroups of Z_m x Z_6 fixing ``A``, as (group step, slot step), largest first.

    Cycling the groups permutes group pairs and shifting every slot by one
    sends ``P_1 -> P_2 -> P_3 -> P_1``, so each subgroup maps ``A`` onto itself.
    ``(0, 0)`` is the trivial group.
    """
    out = []
    for ds in (1, 2, 3, 0):
        for dg in ((1, 0) if m > 1 else (0,)):
            out.append((dg, ds))
    return out


def _orbit_elements(m: int, dg: int, ds: int):
    gsteps = sorted({(k * dg) % m for k in range(m)}) if dg else [0]
    ssteps = sorted({(k * ds) % GROUP_SIZE for k in range(GROUP_SIZE)}) if ds else [0]
    return [_shift(m, a, b) for a in gsteps for b in ssteps]


def complete_blocks(
    m: int, forced: set[Quad], budget: float | None = None, symmetry: tuple[int, int] = (0, 0)
) -> list[Quad] | None:
    """Blocks that together with ``forced`` cover every cross triple once.

    The search runs over orbits of the subgroup ``symmetry`` (see
    ``symmetry_subgroups``): a quad orbit is a candidate only if it covers
    each triple at most once. Returns None when no invariant completion exists.
    """
    elems = _orbit_elements(m, *symmetry)

    def orbit(obj: tuple) -> frozenset:
        return frozenset(tuple(sorted(g(v) for v in obj)) for g in elems)

    covered = {t for b in forced for t in itertools.combinations(b, 3)}
    triple_orbit: dict[tuple, tuple] = {}
    for t in _cross_triples(m):
        if t in covered or t in triple_orbit:
            continue
        orb = orbit(t)
        rep = min(orb)
        for u in orb:
            triple_orbit[u] = rep
    columns = sorted(set(triple_orbit.values()))
    rows: dict[tuple, tuple] = {}
    members: dict[tuple, frozenset] = {}
    seen: set = set()
    for b in itertools.combinations(range(6 * m), 4):
        if b in seen or max(Counter(group_of(v) for v in b).values()) > 2 or b in forced:
            continue
        orb = orbit(b)
        seen |= orb
        ts = [t for blk in orb for t in itertools.combinations(blk, 3)]
        if any(t in covered for t in ts) or len(set(ts)) != len(ts):
            continue
        rep = min(orb)
        rows[rep] = tuple(sorted({triple_orbit[t] for t in ts}))
        members[rep] = orb
    found = exact_cover(columns, rows, budget=budget)
    if found is None:
        return None
    return sorted(blk for rep in found for blk in members[rep])


def build_gdd(m: int, budget: float | None = None, use_cache: bool = True) -> GDD:
    """A validated G(m, 6, 4, 3) containing ``A`` with ``A_1`` marked.

    ``budget`` bounds the completion search in seconds; running out raises
    ``BudgetExhausted``. A cache hit is revalidated before use.
    """
    A, A1 = family_A(m)
    path = _cache_path(m) if use_cache else None
    blocks = None
    if path is not None and path.exists():
        cached_m, cached = parse_gdd(path.read_text())
        if cached_m == m and A <= set(cached):
            blocks = cached
    if blocks is None:
        deadline = None if budget is None else time.monotonic() + budget
        for sym in symmetry_subgroups(m):
            left = None if deadline is None else max(deadline - time.monotonic(), 0.0)
            found = complete_blocks(m, A, left, sym)
            if found is not None:
                blocks = sorted(A) + found
                break
        else:
            raise ConstructionError(f"no completion of A exists for m={m}", "GDD completion")
    g = GDD(m, tuple(sorted(blocks)), frozenset(A1))
    bad = gdd_violations(g)
    if bad:
        raise ConstructionError(f"G({m},6,4,3): {bad[0]}", bad[0])
    if path is not None and not path.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(format_gdd(g))
    return g


def a1_pair_equality_failures(g: GDD) -> list[tuple[Quad, Quad]]:
    """Pairs a, b in A_1 sharing two letters where neither the leading pair nor the trailing pair coincides."""
    out = []
    for a, b in itertools.combinations(sorted(g.marked_A1), 2):
        if len(set(a) & set(b)) == 2:
            if set(a[:2]) != set(b[:2]) and set(a[2:]) != set(b[2:]):
                out.append((a, b))
    return out


def a1_disjointness_failures(g: GDD) -> list[tuple[Quad, Quad]]:
    """Pairs a, b in A_1 sharing two letters whose leading pairs meet and whose trailing pairs meet.

    Empty means any two gen_B orbits over A_1 blocks sharing two letters may
    be combined without creating a shared single-deletion word.
    """
    out = []
    for a, b in itertools.combinations(sorted(g.marked_A1), 2):
        if len(set(a) & set(b)) == 2:
            if set(a[:2]) & set(b[:2]) and set(a[2:]) & set(b[2:]):
                out.append((a, b))
    return out
