"""Partitions of the 2-subsets of a 2m-set into systems of disjoint pairs.

Four families are provided: Hanani's ``P_alpha(m)`` and ``Pbar_xi(m)`` on
``B_2m``, the Reiss 1-factorization ``S_l`` on labels ``1..2n`` and the three
Mills pairings of ``B_6``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import Enum

from .errors import ConstructionError, InvalidArgument

Pair = tuple[int, int]


def _pair(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


class FamilyKind(Enum):
    P = "P"
    PBAR = "PBAR"
    REISS = "REISS"
    MILLS = "MILLS"


@dataclass(frozen=True)
class PairSystemFamily:
    m: int
    kind: FamilyKind
    systems: tuple[tuple[Pair, ...], ...]
    base: int = 0  # labels are base .. base + 2m - 1

    def __getitem__(self, index: int) -> tuple[Pair, ...]:
        return self.systems[index]

    def __len__(self) -> int:
        return len(self.systems)

    @property
    def labels(self) -> range:
        return range(self.base, self.base + 2 * self.m)

    def violations(self) -> list[str]:
        """Every broken family invariant, as text; empty when the family is sound."""
        out = []
        labels = set(self.labels)
        for k, system in enumerate(self.systems):
            pts = [a for p in system for a in p]
            if len(pts) != len(set(pts)):
                out.append(f"system {k} has overlapping pairs")
            if not set(pts) <= labels:
                out.append(f"system {k} uses labels outside {self.labels}")
            if any(a == b for a, b in system):
                out.append(f"system {k} has a degenerate pair")
        census = Counter(p for system in self.systems for p in system)
        repeated = [p for p, c in census.items() if c > 1]
        if repeated:
            out.append(f"pairs appear twice: {sorted(repeated)[:5]}")
        all_pairs = {_pair(a, b) for a, b in itertools.combinations(sorted(labels), 2)}
        m = self.m
        if self.kind is FamilyKind.MILLS:
            hexagon = {_pair(i, (i + 1) % 6) for i in range(6)}
            if set(census) != all_pairs - hexagon:
                out.append("Mills pairings must cover exactly the 9 non-hexagon pairs")
            if len(self.systems) != 3 or any(len(s) != 3 for s in self.systems):
                out.append("Mills family must be 3 perfect matchings of B_6")
            return out
        if set(census) != all_pairs:
            out.append("not every pair is covered")
        if self.kind in (FamilyKind.P, FamilyKind.REISS):
            if len(self.systems) != 2 * m - 1:
                out.append(f"expected {2 * m - 1} systems, got {len(self.systems)}")
            if any(len(s) != m for s in self.systems):
                out.append(f"every system must have {m} pairs")
        elif self.kind is FamilyKind.PBAR:
            if len(self.systems) != 2 * m:
                out.append(f"expected {2 * m} systems, got {len(self.systems)}")
            for k, system in enumerate(self.systems):
                if k < m:
                    pts = {a for p in system for a in p}
                    if len(system) != m - 1 or {2 * k, 2 * k + 1} & pts:
                        out.append(f"system {k} must have {m - 1} pairs avoiding {2 * k}, {2 * k + 1}")
                elif len(system) != m:
                    out.append(f"system {k} must have {m} pairs")
        return out

    def check(self) -> PairSystemFamily:
        bad = self.violations()
        if bad:
            raise ConstructionError(f"{self.kind.value}({self.m}): " + "; ".join(bad), bad[0])
        return self


def _p_raw(m: int) -> list[list[Pair]]:
    mod = 2 * m
    systems: list[list[Pair]] = []

    def cyc(beta: int, sign: int) -> list[Pair]:
        return [_pair(2 * a, (2 * a + sign * (2 * beta + 1)) % mod) for a in range(m)]

    half = m // 2 if m % 2 == 0 else (m - 1) // 2
    for beta in range(half):
        systems.append(cyc(beta, +1))  # P_{2 beta}
        systems.append(cyc(beta, -1))  # P_{2 beta + 1}
    if m % 2 == 0:
        # The two tail pairs read {2m - 3/2 - (-1)^g/2, g} and
        # {2m - 3/2 + (-1)^g/2, m + g - 1}; this keeps every pair of these
        # systems same-parity, as the cyclic systems above use all mixed ones.
        for g in range(m - 1):
            s = [_pair(b, 2 * g - b) for b in range(g)]
            s += [_pair(c, (2 * m + 2 * g - c - 2) % mod) for c in range(2 * g + 1, m + g - 1)]
            sign = 1 if g % 2 == 0 else -1
            s.append(_pair((4 * m - 3 - sign) // 2, g))
            s.append(_pair((4 * m - 3 + sign) // 2, m + g - 1))
            systems.append(s)
    else:
        for g in range(m):
            s = [_pair(b, 2 * g - b) for b in range(g)]
            s += [_pair(c, (2 * m + 2 * g - c) % mod) for c in range(2 * g + 1, m + g)]
            s.append(_pair(g, m + g))
            systems.append(s)
    return systems


def p_systems(m: int) -> PairSystemFamily:
    """Hanani's 2m-1 systems ``P_alpha(m)`` of m disjoint pairs on ``B_2m``."""
    if m < 1:
        raise InvalidArgument("p_systems needs m >= 1")
    systems = tuple(tuple(sorted(s)) for s in _p_raw(m))
    return PairSystemFamily(m, FamilyKind.P, systems).check()


def _transversal(m: int) -> list[tuple[int, Pair, Pair]]:
    """(source system, pair, relabelled pair) for the pairs pulled out to form the new system."""
    out = []
    if m % 2 == 0:
        for mu in range(1, (m - 2) // 2 + 1):
            out.append((2 * mu, _pair(2 * mu, 4 * mu + 1), (4 * mu, 4 * mu + 1)))
            out.append((2 * mu - 1, _pair(2 * m - 2 - 2 * mu, 2 * m - 1 - 4 * mu), (4 * mu - 2, 4 * mu - 1)))
        out.append((m, _pair(2 * m - 2, 0), (0, 1)))
        out.append((m + 1, _pair(2 * m - 1, 1), (2 * m - 2, 2 * m - 1)))
    else:
        for mu in range((m - 1) // 2):
            out.append((2 * mu, _pair(2 * mu, 4 * mu + 1), (4 * mu, 4 * mu + 1)))
            out.append((2 * mu + 1, _pair(2 * m - 2 - 2 * mu, 2 * m - 3 - 4 * mu), (4 * mu + 2, 4 * mu + 3)))
        out.append((2 * m - 2, _pair(m - 1, 2 * m - 1), (2 * m - 2, 2 * m - 1)))
    return out


def _relabelling(m: int) -> dict[int, int]:
    perm: dict[int, int] = {}
    if m % 2 == 0:
        for mu in range(1, (m - 2) // 2 + 1):
            perm[2 * mu] = 4 * mu
            perm[4 * mu + 1] = 4 * mu + 1
            perm[2 * m - 2 - 2 * mu] = 4 * mu - 2
            perm[2 * m - 1 - 4 * mu] = 4 * mu - 1
        perm.update({2 * m - 2: 1, 0: 0, 2 * m - 1: 2 * m - 1, 1: 2 * m - 2})
    else:
        for mu in range((m - 1) // 2):
            perm[2 * mu] = 4 * mu
            perm[4 * mu + 1] = 4 * mu + 1
            perm[2 * m - 2 - 2 * mu] = 4 * mu + 2
            perm[2 * m - 3 - 4 * mu] = 4 * mu + 3
        perm.update({m - 1: 2 * m - 2, 2 * m - 1: 2 * m - 1})
    return perm


def p_bar_systems(m: int) -> PairSystemFamily:
    """Hanani's 2m systems ``Pbar_xi(m)``; system eta < m avoids 2eta and 2eta + 1."""
    if m < 2:
        raise InvalidArgument("p_bar_systems needs m >= 2")
    if m == 2:
        # Every 1-factor of K4 contains the complement of each of its pairs,
        # so no transversal exists; split P_0 instead.
        p = _p_raw(2)
        systems = (((2, 3),), ((0, 1),), tuple(sorted(p[1])), tuple(sorted(p[2])))
        return PairSystemFamily(2, FamilyKind.PBAR, systems).check()
    raw = _p_raw(m)
    perm = _relabelling(m)
    if sorted(perm) != list(range(2 * m)) or sorted(perm.values()) != list(range(2 * m)):
        raise ConstructionError(f"relabelling for m={m} is not a permutation", "permutation")
    removed: dict[int, int] = {}
    for src, pair, image in _transversal(m):
        if pair not in raw[src]:
            raise ConstructionError(f"{pair} not in P_{src}({m})", "transversal membership")
        raw[src].remove(pair)
        if _pair(perm[pair[0]], perm[pair[1]]) != image:
            raise ConstructionError(f"{pair} does not map to {image}", "relabelling")
        removed[src] = image[0] // 2
    moved = [sorted(_pair(perm[a], perm[b]) for a, b in s) for s in raw]
    new_system = [(2 * e, 2 * e + 1) for e in range(m)]
    slots: list[tuple[Pair, ...] | None] = [None] * (2 * m)
    for src, eta in removed.items():
        slots[eta] = tuple(moved[src])
    rest = [tuple(moved[k]) for k in range(len(raw)) if k not in removed] + [tuple(new_system)]
    for k, system in zip(range(m, 2 * m), rest):
        slots[k] = system
    return PairSystemFamily(m, FamilyKind.PBAR, tuple(slots)).check()  # type: ignore[arg-type]


def reiss_partition(n: int) -> PairSystemFamily:
    """Reiss' 2n-1 classes ``S_l`` (index l - 1) on labels ``1..2n``."""
    if n < 1:
        raise InvalidArgument("reiss_partition needs n >= 1")
    mod = 2 * n - 1

    def label(i: int, j: int) -> int:
        if j == 2 * n:
            j = i
        return (i + j - 2) % mod + 1

    classes: list[list[Pair]] = [[] for _ in range(mod)]
    for i, j in itertools.combinations(range(1, 2 * n + 1), 2):
        classes[label(i, j) - 1].append((i, j))
    systems = tuple(tuple(sorted(c)) for c in classes)
    return PairSystemFamily(n, FamilyKind.REISS, systems, base=1).check()


MILLS = (
    ((0, 3), (1, 5), (2, 4)),
    ((1, 4), (0, 2), (3, 5)),
    ((2, 5), (1, 3), (0, 4)),
)


def mills_pairs() -> PairSystemFamily:
    """The three pairings ``P_1, P_2, P_3`` of ``B_6`` (index lambda - 1)."""
    return PairSystemFamily(3, FamilyKind.MILLS, MILLS).check()
