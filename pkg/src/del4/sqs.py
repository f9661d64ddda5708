"""Steiner quadruple systems with the step property.

``build_sqs_step(q)`` returns an SQS(q) on ``0..q-1`` in which every quadruple
holding a consecutive pair ``{2t, 2t+1}`` has its other two points both below
``2t`` or both above ``2t+1``. It recurses through Hanani's six product
constructions; every case is relabelled so that the natural order is the step
order, and every result is validated before it is returned.
"""

from __future__ import annotations

import functools
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable

from .errors import ConstructionError, InvalidArgument, UnsupportedParameter
from .pairs import p_bar_systems, p_systems

Quad = tuple[int, int, int, int]


def quad(points: Iterable[int]) -> Quad:
    q = tuple(sorted(points))
    if len(q) != 4 or len(set(q)) != 4:
        raise ConstructionError(f"degenerate quadruple {q}", "quadruple has four points")
    return q  # type: ignore[return-value]


class CaseId(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"

    def matches(self, q: int) -> bool:
        if self is CaseId.I:
            return q % 12 in (4, 8)
        if self is CaseId.II:
            return q % 18 in (4, 10)
        if self is CaseId.III:
            return q % 36 == 34
        if self is CaseId.IV:
            return q % 36 == 26
        if self is CaseId.V:
            return q % 24 in (2, 10) and q > 2
        return q % 72 in (14, 38)

    def f(self, q: int) -> int:
        return {
            CaseId.I: q // 2,
            CaseId.II: (q - 1) // 3,
            CaseId.III: (q - 4) // 3,
            CaseId.IV: (q - 2) // 3,
            CaseId.V: (q - 2) // 4,
            CaseId.VI: (q - 2) // 12,
        }[self]

    def sub_order(self, q: int) -> int:
        """Order of the smaller step-property SQS this case is built from."""
        f = self.f(q)
        return {
            CaseId.I: f,
            CaseId.II: f + 1,
            CaseId.III: f + 4,
            CaseId.IV: f + 2,
            CaseId.V: f + 2,
            CaseId.VI: f + 1,
        }[self]


@dataclass(frozen=True)
class CanonicalSQS:
    """An SQS(q) on ``0..q-1`` whose natural order has the step property.

    ``route`` lists ``(order, case)`` for this system and every system it was
    recursively built from; base systems record ``"base"``.
    """

    q: int
    quads: tuple[Quad, ...]
    route: tuple[tuple[int, str], ...] = ()

    def __len__(self) -> int:
        return len(self.quads)

    @property
    def cases(self) -> set[str]:
        return {c for _, c in self.route if c != "base"}


def sqs_size(q: int) -> int:
    return q * (q - 1) * (q - 2) // 24


def triple_census(quads: Iterable[Quad]) -> Counter:
    return Counter(t for b in quads for t in itertools.combinations(b, 3))


def is_sqs(quads: Iterable[Iterable[int]], q: int) -> bool:
    """Every 3-subset of ``B_q`` lies in exactly one quadruple."""
    blocks = [tuple(sorted(b)) for b in quads]
    for b in blocks:
        if len(b) != 4 or len(set(b)) != 4 or b[0] < 0 or b[-1] >= q:
            return False
    census = triple_census(blocks)  # type: ignore[arg-type]
    return len(census) == math.comb(q, 3) and all(c == 1 for c in census.values())


def step_violations(quads: Iterable[Quad]) -> list[Quad]:
    bad = []
    for b in quads:
        s = set(b)
        for x in b:
            if x % 2 == 0 and x + 1 in s:
                rest = [y for y in b if y not in (x, x + 1)]
                if not (all(y < x for y in rest) or all(y > x + 1 for y in rest)):
                    bad.append(b)
    return bad


def has_step_property(s: CanonicalSQS | Iterable[Quad]) -> bool:
    quads = s.quads if isinstance(s, CanonicalSQS) else s
    return not step_violations(quads)


def select_upper_quads(s: CanonicalSQS) -> list[Quad]:
    """The quadruples ``{2t, 2t+1, a, b}`` with ``a, b > 2t + 1``."""
    return [b for b in s.quads if b[0] % 2 == 0 and b[1] == b[0] + 1]


# An SQS(14), verbatim: 13 rows of 7 quadruples.
SQS14_TEXT = r"""
{0,1,2,4}&{13,9,12,11}&{12,1,4,3}&{12,8,5,1}&{5,6,10,11}&{3,5,13,8}&{4,5,7,8}
{7,10,13,12}&{0,8,9,11}&{13,2,5,4}&{13,9,6,2}&{6,0,11,12}&{4,6,7,9}&{9,12,4,0}
{1,2,3,5}&{7,3,6,5}&{3,4,10,11}&{7,10,0,3}&{0,1,12,13}&{5,0,8,10}&{10,13,5,1}
{2,3,4,6}&{1,9,10,12}&{9,12,2,5}&{8,11,1,4}&{1,2,13,7}&{6,1,9,11}&{11,7,6,2}
{3,4,5,0}&{2,10,11,13}&{6,1,13,8}&{0,2,7,9}&{2,3,7,8}&{0,2,10,12}&{12,8,0,3}
{4,5,6,1}&{3,11,12,7}&{4,5,11,12}&{1,3,8,10}&{3,4,8,9}&{5,6,8,9}&{13,9,1,4}
{5,6,0,2}&{4,12,13,8}&{5,6,12,13}&{2,4,9,11}&{13,9,0,3}&{8,11,3,6}&{7,10,2,5}
{6,0,1,3}&{5,13,7,9}&{6,0,13,7}&{3,5,10,12}&{7,10,1,4}&{3,5,9,11}&{4,6,10,12}
{8,11,7,13}&{6,7,8,10}&{0,1,7,8}&{4,6,11,13}&{8,11,2,5}&{6,0,9,10}&{5,0,11,13}
{9,12,8,7}&{8,4,0,6}&{1,2,8,9}&{5,0,12,7}&{9,12,3,6}&{0,1,10,11}&{6,1,12,7}
{10,13,9,8}&{9,5,1,0}&{2,3,9,10}&{4,5,9,10}&{10,13,4,0}&{1,2,11,12}&{0,2,13,8}
{11,7,10,9}&{10,6,2,1}&{10,13,3,6}&{12,8,6,2}&{11,7,5,1}&{2,3,12,13}&{1,3,7,9}
{12,8,11,10}&{11,0,3,2}&{11,7,4,0}&{1,3,11,13}&{2,4,12,7}&{3,4,13,7}&{2,4,8,10}
"""


def sqs14_rows() -> list[tuple[int, int, int, int]]:
    """The embedded SQS(14) quadruples in reading order, points in the order printed."""
    rows = []
    for line in SQS14_TEXT.strip().splitlines():
        for cell in line.split("&"):
            rows.append(tuple(int(v) for v in cell.strip().strip("{}").split(",")))
    return rows  # type: ignore[return-value]


def sqs14_position(t: int) -> int:
    """Step-order position of embedded SQS(14) point ``t``: pairs ``{t, t+7}`` become ``{2t, 2t+1}``."""
    if t < 6:
        return 2 * t
    if 7 <= t <= 12:
        return 2 * t - 13
    if t in (6, 13):
        return 12 + (t - 6) // 7
    raise InvalidArgument(f"{t} is not a point of the embedded SQS(14)")


def canonical_sqs14() -> CanonicalSQS:
    quads = tuple(sorted(quad(sqs14_position(t) for t in row) for row in sqs14_rows()))
    return _finish(14, quads, ((14, "base"),))


def _finish(q: int, quads: Iterable[Quad], route) -> CanonicalSQS:
    blocks = tuple(sorted(set(quads)))
    if len(blocks) != sqs_size(q):
        raise ConstructionError(
            f"SQS({q}) has {len(blocks)} quadruples, expected {sqs_size(q)}", "cardinality"
        )
    if not is_sqs(blocks, q):
        raise ConstructionError(f"SQS({q}) does not cover every triple once", "triple coverage")
    bad = step_violations(blocks)
    if bad:
        raise ConstructionError(f"SQS({q}) breaks the step property at {bad[0]}", "step property")
    return CanonicalSQS(q, blocks, tuple(route))


def _check_order(q: int):
    if q < 4 or q % 2 or q % 6 not in (2, 4):
        raise UnsupportedParameter(f"no SQS({q}) construction: need q >= 4 and q = 2, 4 (mod 6)")


@functools.lru_cache(maxsize=None)
def build_sqs_step(q: int) -> CanonicalSQS:
    """A validated step-property SQS(q) for any ``q = 2, 4 (mod 6)``, ``q >= 4``."""
    _check_order(q)
    if q == 4:
        return _finish(4, [(0, 1, 2, 3)], ((4, "base"),))
    if q == 14:
        return canonical_sqs14()
    case = next(c for c in CaseId if c.matches(q))
    return build_case(case, q, build_sqs_step(case.sub_order(q)))


def build_case(case: CaseId, q: int, sub: CanonicalSQS) -> CanonicalSQS:
    """Apply one recursive case to ``sub`` and return the validated SQS(q)."""
    _check_order(q)
    if not case.matches(q):
        raise UnsupportedParameter(f"case {case.value} does not apply to q={q}")
    if sub.q != case.sub_order(q):
        raise InvalidArgument(f"case {case.value} for q={q} needs SQS({case.sub_order(q)}), got SQS({sub.q})")
    quads = _BUILDERS[case](q, sub)
    return _finish(q, quads, ((q, case.value),) + sub.route)


def _case_I(q: int, sub: CanonicalSQS) -> list[Quad]:
    f = q // 2
    out = []
    even = [p for p in itertools.product((0, 1), repeat=4) if sum(p) % 2 == 0]
    for b in sub.quads:
        for pattern in even:
            out.append(quad(a * f + x for a, x in zip(pattern, b)))
    for j, k in itertools.combinations(range(f), 2):
        out.append(quad((j, k, f + j, f + k)))
    return out


def _case_II(q: int, sub: CanonicalSQS) -> list[Quad]:
    f = (q - 1) // 3
    A = f  # top point of the sub-system

    def lab(i: int, j: int) -> int:
        i %= 3
        if j == f - 1:
            return 3 * f - 3 + i
        return 6 * (j // 2) + 2 * i + j % 2

    top = 3 * f
    out = []
    zero3 = lambda n: [p for p in itertools.product(range(3), repeat=n) if sum(p) % 3 == 0]
    for b in sub.quads:
        if A not in b:
            for a in zero3(4):
                out.append(quad(lab(ai, x) for ai, x in zip(a, b)))
            continue
        uvw = [x for x in b if x != A]
        for bb in zero3(3):
            out.append(quad([top] + [lab(bi, x) for bi, x in zip(bb, uvw)]))
        for w in uvw:
            u, v = [x for x in uvw if x != w]
            for i in range(3):
                out.append(quad((lab(i, u), lab(i, v), lab(i + 1, w), lab(i + 2, w))))
    for j, k in itertools.combinations(range(f), 2):
        for i in range(3):
            out.append(quad((lab(i, j), lab(i, k), lab(i + 1, j), lab(i + 1, k))))
    for j in range(f):
        out.append(quad((top, lab(0, j), lab(1, j), lab(2, j))))
    return out


def hanani_order(f: int) -> list[int]:
    """``L_t``: the integer of ``B_f`` sitting at step-order position ``t``.

    Evens first then odds (``L_t = 2t``, ``L_{f/2+t} = 2t+1``), except that
    when ``f/2`` is odd the step pair straddling the two halves would be
    ``{f-2, 1}``, at difference 3; that pair is swapped for ``{0, f/2}``, at
    difference ``f/2``, keeping every step pair clear of the small odd
    differences used by the mixed-group quadruples.
    """
    h = f // 2
    if h % 2 == 0:
        return [2 * t for t in range(h)] + [2 * t + 1 for t in range(h)]
    evens = [2 * t for t in range(1, h)]
    odds = [x for x in range(1, f, 2) if x != h]
    return evens + [0, h] + odds


def _cases_III_IV(q: int, sub: CanonicalSQS, n_a: int) -> list[Quad]:
    f = (q - n_a) // 3
    order = hanani_order(f)
    pos = {j: t for t, j in enumerate(order)}
    top = 3 * f

    def lab(i: int, j: int) -> int:
        return (i % 3) * f + pos[j % f]

    def copy(b: Quad, i: int) -> Quad:
        return quad(i * f + c if c < f else top + (c - f) for c in b)

    if n_a == 4:
        k = (f - 10) // 12
        m_pairs, alphas = 6 * k + 5, range(4 * k + 2, 12 * k + 9)
    else:
        k = (f - 8) // 12
        m_pairs, alphas = 6 * k + 4, range(4 * k + 2, 12 * k + 7)
    out: list[Quad] = []
    a_quad = tuple(range(f, f + n_a))
    if n_a == 4:
        if a_quad not in sub.quads:
            raise ConstructionError("sub-system lacks the quadruple on its four top points", "top quadruple")
        out.append(quad(range(top, top + 4)))
    for b in sub.quads:
        if b == a_quad:
            continue
        for i in range(3):
            out.append(copy(b, i))
    for a1 in range(n_a):
        for a2, a3 in itertools.product(range(f), repeat=2):
            a4 = (-a1 - a2 - a3) % f
            out.append(quad((top + a1, lab(0, a2), lab(1, a3), lab(2, a4))))
    for i in range(3):
        shift = 2 * k + 1 + i * (4 * k + 2)
        for b1, b2 in itertools.product(range(f), repeat=2):
            b3 = (-b1 - b2) % f
            for d in range(2 * k + 1):
                out.append(quad((
                    lab(i + 2, b3),
                    lab(i, b1 + shift - d),
                    lab(i, b1 + shift + 1 + d),
                    lab(i + 1, b2),
                )))
    fam = p_systems(m_pairs)
    for alpha in alphas:
        system = fam[alpha]
        for i in range(3):
            for (r, s), (r2, s2) in itertools.product(system, repeat=2):
                out.append(quad((lab(i, r), lab(i, s), lab(i + 1, r2), lab(i + 1, s2))))
    return out


def _case_III(q: int, sub: CanonicalSQS) -> list[Quad]:
    return _cases_III_IV(q, sub, 4)


def _case_IV(q: int, sub: CanonicalSQS) -> list[Quad]:
    return _cases_III_IV(q, sub, 2)


def _case_V(q: int, sub: CanonicalSQS) -> list[Quad]:
    f = (q - 2) // 4
    k = f // 2
    top = 4 * f
    if k < 2:
        raise UnsupportedParameter(f"case V needs f >= 4, got f={f}")

    def lab(h: int, i: int, j: int) -> int:
        return (2 * (h % 2) + i) * f + j % f

    out: list[Quad] = []
    for b in sub.quads:
        for h, i in itertools.product(range(2), repeat=2):
            out.append(quad(lab(h, i, c) if c < f else top + (c - f) for c in b))
    pbar = p_bar_systems(k)
    p = p_systems(k)
    for c1, c2 in itertools.product(range(k), repeat=2):
        c3 = (-c1 - c2) % k
        for e, l in itertools.product(range(2), repeat=2):
            A = top + l
            out.append(quad((A, lab(0, 0, 2 * c1), lab(0, 1, 2 * c2 - e), lab(1, e, 2 * c3 + l))))
            out.append(quad((A, lab(0, 0, 2 * c1 + 1), lab(0, 1, 2 * c2 - 1 - e), lab(1, e, 2 * c3 + 1 - l))))
            out.append(quad((A, lab(1, 0, 2 * c1), lab(1, 1, 2 * c2 - e), lab(0, e, 2 * c3 + 1 - l))))
            out.append(quad((A, lab(1, 0, 2 * c1 + 1), lab(1, 1, 2 * c2 - 1 - e), lab(0, e, 2 * c3 + l))))
        for h, e in itertools.product(range(2), repeat=2):
            x0, x0m = lab(h, 0, 2 * c1 + e), lab(h, 0, 2 * c1 - 1 + e)
            y = lab(h, 1, 2 * c2 - e)
            for r, s in pbar[c3]:
                out.append(quad((x0, y, lab(h + 1, 0, r), lab(h + 1, 0, s))))
                out.append(quad((x0m, y, lab(h + 1, 1, r), lab(h + 1, 1, s))))
            for r, s in pbar[k + c3]:
                out.append(quad((x0, y, lab(h + 1, 1, r), lab(h + 1, 1, s))))
                out.append(quad((x0m, y, lab(h + 1, 0, r), lab(h + 1, 0, s))))
    for h in range(2):
        for alpha in range(f - 1):
            for (r, s), (r2, s2) in itertools.product(p[alpha], repeat=2):
                out.append(quad((lab(h, 0, r), lab(h, 0, s), lab(h, 1, r2), lab(h, 1, s2))))
    return out


def sqs38_pattern() -> list[tuple[tuple[int, int], ...]]:
    """The mixed-group quadruples of the 38-point product, as ``(group, j)`` / ``('A', h)`` points.

    Groups are 0, 1, 2 and ``j`` is taken mod 12. Quadruples inside one group
    (copies of SQS(14)) are not included.
    """
    pts: set[tuple] = set()

    def add(*points):
        norm = tuple(sorted(
            ((g, j) if g == "A" else (g % 3, j % 12) for g, j in points),
            key=lambda p: (p[0] == "A", p),
        ))
        if len(set(norm)) != 4:
            raise ConstructionError(f"degenerate 38-point quadruple {points}", "quadruple has four points")
        pts.add(norm)

    r12 = range(12)
    for b1, b2 in itertools.product(r12, repeat=2):
        b3 = (-b1 - b2) % 12
        for h in range(2):
            add(("A", h), (0, b1), (1, b2), (2, b3 + 3 * h))
        for i in range(3):
            add((i, b1 + 4 + i), (i, b1 + 7 + i), (i + 1, b2), (i + 2, b3))
    for i, j, e in itertools.product(range(3), r12, range(2)):
        s = 6 * e
        add((i, j), (i + 1, j + s), (i + 2, s - 2 * j + 1), (i + 2, s - 2 * j - 1))
        add((i, j), (i + 1, j + s), (i + 2, s - 2 * j + 2), (i + 2, s - 2 * j - 2))
        add((i, j), (i + 1, j + s - 3), (i + 2, s - 2 * j + 1), (i + 2, s - 2 * j + 2))
        add((i, j), (i + 1, j + s + 3), (i + 2, s - 2 * j - 1), (i + 2, s - 2 * j - 2))
        add((i, j), (i, j + 6), (i + 1, j + 3 * e), (i + 1, j + 6 + 3 * e))
    for i, i2 in itertools.permutations(range(3), 2):
        for g, e in itertools.product(range(6), range(2)):
            add((i, 2 * g + 3 * e), (i, 2 * g + 6 + 3 * e), (i2, 2 * g + 1), (i2, 2 * g + 5))
            add((i, 2 * g + 3 * e), (i, 2 * g + 6 + 3 * e), (i2, 2 * g + 2), (i2, 2 * g + 4))
    for i, j, e in itertools.product(range(3), r12, range(4)):
        for step in (1, 2, 4):
            add((i, j), (i, j + step), (i + 1, j + 3 * e), (i + 1, j + 3 * e + step))
    p6 = p_systems(6)
    for i, i2 in itertools.combinations(range(3), 2):
        for alpha in (4, 5):
            for (r, s), (r2, s2) in itertools.product(p6[alpha], repeat=2):
                add((i, r), (i, s), (i2, r2), (i2, s2))
    return sorted(pts)


def _case_VI(q: int, sub: CanonicalSQS) -> list[Quad]:
    f = (q - 2) // 12
    top = 12 * f
    A = f
    s14 = canonical_sqs14()

    def pos(j: int) -> int:
        return 2 * j if j < 6 else 2 * (j - 6) + 1

    out: list[Quad] = []
    for i in range(f):
        for b in s14.quads:
            out.append(quad(12 * i + c if c < 12 else top + (c - 12) for c in b))
    pattern = sqs38_pattern()
    for b in sub.quads:
        if A in b:
            groups = [x for x in b if x != A]
            for blk in pattern:
                out.append(quad(
                    top + j if g == "A" else 12 * groups[g] + pos(j) for g, j in blk
                ))
        else:
            for a in itertools.product(range(12), repeat=3):
                a4 = -sum(a) % 12
                out.append(quad(12 * g + pos(x) for g, x in zip(b, a + (a4,))))
    return out


_BUILDERS: dict[CaseId, Callable[[int, CanonicalSQS], list[Quad]]] = {
    CaseId.I: _case_I,
    CaseId.II: _case_II,
    CaseId.III: _case_III,
    CaseId.IV: _case_IV,
    CaseId.V: _case_V,
    CaseId.VI: _case_VI,
}
