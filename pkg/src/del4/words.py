"""Words, codes and the deletion/insertion metric.

A word is a plain tuple of ints. ``Code`` bundles a duplicate-free set of
equal-length words with its alphabet size. The single-deletion structure of
length-4 words (classes, U/V/W/Z coverage) lives here too.
"""

from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numba
import numpy as np

from .errors import InternalError, InvalidArgument

if "NUMBA_THREADING_LAYER" not in os.environ:
    # The portable layer; avoids probing for an outdated system TBB.
    numba.config.THREADING_LAYER = "workqueue"

Word = tuple[int, ...]


@dataclass(frozen=True)
class Code:
    """A duplicate-free set of length-``n`` words over ``B_q``.

    Words are kept sorted so that iteration order (and any file written from
    it) is deterministic.
    """

    n: int
    q: int
    words: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        if self.n < 0 or self.q < 1:
            raise InvalidArgument(f"bad code parameters n={self.n}, q={self.q}")
        seen = set()
        for w in self.words:
            if len(w) != self.n:
                raise InvalidArgument(f"word {w} has length {len(w)}, expected {self.n}")
            if any(not 0 <= a < self.q for a in w):
                raise InvalidArgument(f"word {w} has a letter outside B_{self.q}")
            if w in seen:
                raise InvalidArgument(f"duplicate word {w}")
            seen.add(w)
        object.__setattr__(self, "words", tuple(sorted(self.words)))

    @classmethod
    def of(cls, words: Iterable[Sequence[int]], q: int, n: int | None = None) -> Code:
        """Build a code from any iterable of letter sequences; duplicates collapse."""
        ws = {tuple(int(a) for a in w) for w in words}
        if n is None:
            if not ws:
                raise InvalidArgument("cannot infer n from an empty code")
            n = len(next(iter(ws)))
        return cls(n, q, tuple(ws))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __contains__(self, w) -> bool:
        return tuple(w) in self._set

    @property
    def _set(self) -> frozenset[Word]:
        s = self.__dict__.get("_cached_set")
        if s is None:
            s = frozenset(self.words)
            object.__setattr__(self, "_cached_set", s)
        return s

    def replace(self, removed: Iterable[Word], added: Iterable[Word]) -> Code:
        ws = self._set.difference(removed).union(added)
        return Code(self.n, self.q, tuple(ws))

    def as_array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int32).reshape(len(self.words), self.n)


def parse_word(text: str) -> Word:
    """Parse ``"0 1 2 3"`` or, for single-digit letters, ``"0123"``."""
    text = text.strip()
    if " " in text or "," in text:
        return tuple(int(t) for t in text.replace(",", " ").split())
    return tuple(int(ch) for ch in text)


def deletion_ball(x: Sequence[int], s: int) -> set[Word]:
    """All distinct words obtained from ``x`` by deleting ``s`` letters."""
    n = len(x)
    if s < 0 or s > n:
        raise InvalidArgument(f"cannot delete {s} letters from a word of length {n}")
    return {tuple(x[i] for i in keep) for keep in itertools.combinations(range(n), n - s)}


def lcs_length(x: Sequence[int], y: Sequence[int]) -> int:
    prev = [0] * (len(y) + 1)
    for a in x:
        cur = [0]
        for j, b in enumerate(y):
            cur.append(prev[j] + 1 if a == b else max(prev[j + 1], cur[j]))
        prev = cur
    return prev[-1]


def rho(x: Sequence[int], y: Sequence[int]) -> int:
    """Deletion/insertion distance: ``|x| + |y| - 2 LCS(x, y)``."""
    return len(x) + len(y) - 2 * lcs_length(x, y)


@numba.njit(cache=True)
def _min_rho_kernel(arr):
    # arr: (N, n) int32, all rows distinct; returns min pairwise rho.
    N, n = arr.shape
    best = 2 * n
    prev = np.zeros(n + 1, dtype=np.int32)
    cur = np.zeros(n + 1, dtype=np.int32)
    for i in range(N):
        for j in range(i + 1, N):
            for k in range(n + 1):
                prev[k] = 0
            for a in range(n):
                cur[0] = 0
                xa = arr[i, a]
                for b in range(n):
                    if xa == arr[j, b]:
                        cur[b + 1] = prev[b] + 1
                    elif prev[b + 1] >= cur[b]:
                        cur[b + 1] = prev[b + 1]
                    else:
                        cur[b + 1] = cur[b]
                for k in range(n + 1):
                    prev[k] = cur[k]
            r = 2 * (n - prev[n])
            if r < best:
                best = r
                if best <= 2:
                    return best
    return best


@numba.njit(cache=True, parallel=True)
def _min_rho_parallel(arr):
    # Same result as _min_rho_kernel, rows split across threads, no early exit.
    N, n = arr.shape
    row_best = np.full(N, 2 * n, dtype=np.int64)
    for i in numba.prange(N):
        prev = np.zeros(n + 1, dtype=np.int32)
        cur = np.zeros(n + 1, dtype=np.int32)
        best = 2 * n
        for j in range(i + 1, N):
            for k in range(n + 1):
                prev[k] = 0
            for a in range(n):
                cur[0] = 0
                xa = arr[i, a]
                for b in range(n):
                    if xa == arr[j, b]:
                        cur[b + 1] = prev[b] + 1
                    elif prev[b + 1] >= cur[b]:
                        cur[b + 1] = prev[b + 1]
                    else:
                        cur[b + 1] = cur[b]
                for k in range(n + 1):
                    prev[k] = cur[k]
            r = 2 * (n - prev[n])
            if r < best:
                best = r
        row_best[i] = best
    return row_best.min()


def min_distance(code: Code, jobs: int = 1) -> int:
    """Minimum deletion/insertion distance over distinct pairs of codewords.

    ``jobs > 1`` spreads the pair scan over that many threads; the result is
    the same.
    """
    if len(code) < 2:
        raise InvalidArgument("min_distance needs at least two codewords")
    if code.n == 0:
        raise InvalidArgument("a code of length 0 has at most one word")
    if jobs > 1:
        numba.set_num_threads(min(jobs, numba.config.NUMBA_NUM_THREADS))
        return int(_min_rho_parallel(code.as_array()))
    return int(_min_rho_kernel(code.as_array()))


def ball_collision(code: Code, s: int) -> tuple[Word, Word, Word] | None:
    """First pair of codewords whose ``s``-deletion balls meet, with the shared word."""
    owner: dict[Word, Word] = {}
    for x in code:
        for y in deletion_ball(x, s):
            other = owner.setdefault(y, x)
            if other != x:
                return other, x, y
    return None


def is_deletion_correcting(code: Code, s: int, jobs: int = 1) -> bool:
    """True iff the ``s``-deletion balls of all codewords are pairwise disjoint.

    The ball test is cross-checked against ``min_distance(code) > 2s``; the two
    must agree.
    """
    if s < 1:
        raise InvalidArgument("s must be at least 1")
    if s > code.n:
        raise InvalidArgument(f"s={s} exceeds word length {code.n}")
    disjoint = ball_collision(code, s) is None
    if len(code) >= 2:
        by_metric = min_distance(code, jobs) > 2 * s
        if by_metric != disjoint:
            raise InternalError(
                f"ball test says {disjoint} but min_distance test says {by_metric}"
            )
    return disjoint


def covered_words(code: Code, s: int) -> set[Word]:
    out: set[Word] = set()
    for x in code:
        out |= deletion_ball(x, s)
    return out


def is_perfect(code: Code, s: int) -> bool:
    """True iff the deletion balls of ``code`` cover every word of length n - s."""
    if not is_deletion_correcting(code, s):
        raise InvalidArgument("is_perfect requires an s-deletion-correcting code")
    covered = covered_words(code, s)
    if code.n == 4 and s == 1:
        return len(covered) == code.q**3
    everything: set[Word] = set()
    for w in itertools.product(range(code.q), repeat=code.n):
        everything |= deletion_ball(w, s)
    return covered == everything


class WordClass(Enum):
    K1 = "C1"
    K2 = "C2"
    K31 = "C3,1"
    K32 = "C3,2"
    K41 = "C4,1"
    K42 = "C4,2"
    K43 = "C4,3"

    @property
    def ball_size(self) -> int:
        return _BALL_SIZE[self]


_BALL_SIZE = {
    WordClass.K1: 1,
    WordClass.K2: 2,
    WordClass.K31: 3,
    WordClass.K32: 3,
    WordClass.K41: 4,
    WordClass.K42: 4,
    WordClass.K43: 4,
}


def _pattern(x: Sequence[int]) -> str:
    first: dict[int, str] = {}
    for a in x:
        first.setdefault(a, "abcd"[len(first)])
    return "".join(first[a] for a in x)


# Patterns the normal form never produces (aaab, aaba, ...) go to the class
# whose template they match with one forced coincidence; ball sizes still agree.
_CLASS_OF_PATTERN = {
    "aaaa": WordClass.K1,
    "aabb": WordClass.K2,
    "aaab": WordClass.K2,
    "abbb": WordClass.K2,
    "aabc": WordClass.K31,
    "abcc": WordClass.K31,
    "abbc": WordClass.K31,
    "aaba": WordClass.K31,
    "abaa": WordClass.K31,
    "abba": WordClass.K32,
    "abcd": WordClass.K41,
    "abca": WordClass.K42,
    "abac": WordClass.K43,
    "abcb": WordClass.K43,
    "abab": WordClass.K43,
}


def classify(x: Sequence[int]) -> WordClass:
    """Class of a length-4 word by its repeated-letter pattern."""
    if len(x) != 4:
        raise InvalidArgument(f"classify needs a length-4 word, got length {len(x)}")
    return _CLASS_OF_PATTERN[_pattern(x)]


TRIPLE_TYPES = ("U", "V", "W", "Z")


def triple_type(y: Sequence[int]) -> str:
    """Which of U (aaa), V (aab/abb), W (aba), Z (abc) a length-3 word is."""
    a, b, c = y
    if a == b == c:
        return "U"
    if a == b or b == c:
        return "V"
    if a == c:
        return "W"
    return "Z"


def ambient_counts(q: int) -> dict[str, int]:
    """Sizes of U, V, W, Z inside B_q^3, by enumeration."""
    return dict(Counter(triple_type(y) for y in itertools.product(range(q), repeat=3)))


@dataclass
class Profile:
    """Per-class word counts and U/V/W/Z coverage of a length-4 code.

    ``coverage[X][K]`` is ``|X ∩ ⌊C_K⌋_1|``.
    """

    class_counts: dict[WordClass, int]
    coverage: dict[str, dict[WordClass, int]]

    def count(self, *classes: WordClass) -> int:
        return sum(self.class_counts[k] for k in classes)

    def covered(self, x: str, k: WordClass) -> int:
        return self.coverage[x][k]

    @property
    def size(self) -> int:
        return sum(self.class_counts.values())

    def size_from_coverage(self) -> Fraction:
        """|C| recomputed from the coverage counts, assuming normal-form classes."""
        K = WordClass
        c = self.covered
        return (
            c("U", K.K1)
            + Fraction(c("V", K.K2), 2)
            + Fraction(c("V", K.K31), 2)
            + Fraction(c("V", K.K32), 2)
            + Fraction(c("Z", K.K41), 4)
            + Fraction(c("Z", K.K42), 2)
            + Fraction(c("Z", K.K43), 2)
        )

    def optimal_identity(self) -> Fraction:
        """|U1| + |V2|/2 + |Z41|/4 + |Z42|/2, the optimal-code form of the count."""
        K = WordClass
        c = self.covered
        return (
            c("U", K.K1)
            + Fraction(c("V", K.K2), 2)
            + Fraction(c("Z", K.K41), 4)
            + Fraction(c("Z", K.K42), 2)
        )

    def class_law(self, q: int) -> dict[str, int]:
        return {
            "C1": q,
            "C2": q * (q - 1),
            "C3": 0,
            "C4,2": q * (q - 2) // 2,
            "C4,1": (q * (q - 1) * (q - 2) - q * (q - 2)) // 4,
        }

    def class_summary(self) -> dict[str, int]:
        K = WordClass
        return {
            "C1": self.count(K.K1),
            "C2": self.count(K.K2),
            "C3": self.count(K.K31, K.K32),
            "C4,2": self.count(K.K42),
            "C4,1": self.count(K.K41),
        }


def profile(code: Code) -> Profile:
    if code.n != 4:
        raise InvalidArgument("profile is defined for length-4 codes")
    counts = {k: 0 for k in WordClass}
    sets: dict[str, dict[WordClass, set[Word]]] = {
        x: {k: set() for k in WordClass} for x in TRIPLE_TYPES
    }
    for w in code:
        k = classify(w)
        counts[k] += 1
        for y in deletion_ball(w, 1):
            sets[triple_type(y)][k].add(y)
    coverage = {x: {k: len(v) for k, v in per.items()} for x, per in sets.items()}
    return Profile(counts, coverage)
