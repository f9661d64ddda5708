"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Run on its own with ``pytest tests/test_acceptance.py -v``.
"""

from __future__ import annotations

import contextlib
import subprocess
import sys
import time
from pathlib import Path

import pytest

from del4.bounds import exact_cover_sqs, levenshtein_bound, max_code_search, sharp_bound
from del4.codes import base_code, optimal_code, perfect_code
from del4.gdd import a1_pair_equality_failures, build_gdd, family_A, gdd_size, is_gdd
from del4.sqs import (
    CaseId,
    build_case,
    build_sqs_step,
    canonical_sqs14,
    has_step_property,
    is_sqs,
    select_upper_quads,
    sqs14_rows,
)
from del4.words import covered_words, deletion_ball, is_deletion_correcting, is_perfect

CODE_Q = [2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 32, 34, 36, 38, 40]
CODE_SIZES = [4, 24, 72, 160, 300, 504, 784, 1152, 1620, 2200, 2904, 3744, 4732, 5880, 8704, 10404, 12312, 14440, 16800]
SQS_Q = [4, 8, 10, 14, 16, 20, 22, 26, 28, 32, 34, 38, 40]


@pytest.fixture
def criterion(capsys):
    @contextlib.contextmanager
    def run(number: int, title: str):
        notes: list[str] = []
        ok = False
        try:
            yield notes
            ok = True
        finally:
            detail = f" ({'; '.join(notes)})" if notes else ""
            with capsys.disabled():
                print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} {title}{detail}")

    return run


def test_criterion_1_optimal_sizes(criterion):
    with criterion(1, "optimal sizes and validity") as notes:
        slowest = 0.0
        for q, size in zip(CODE_Q, CODE_SIZES):
            t = time.monotonic()
            code, trace = optimal_code(q)
            assert is_deletion_correcting(code, 1), q
            elapsed = time.monotonic() - t
            slowest = max(slowest, elapsed)
            assert len(code) == size == q * q * (q + 2) // 4 == trace.total, q
            assert elapsed <= 60, (q, elapsed)
        notes.append(f"{len(CODE_Q)} alphabets, slowest {slowest:.1f} s")


def test_criterion_2_q30_via_gdd(criterion):
    with criterion(2, "q=30 through G(5,6,4,3)") as notes:
        t = time.monotonic()
        g = build_gdd(5, budget=600)
        assert is_gdd(g) and len(g) == gdd_size(5) == 990
        code, trace = optimal_code(30, budget=600)
        assert trace.route[0] == "GDD(5)"
        assert is_deletion_correcting(code, 1)
        assert len(code) == 30 * 30 * 32 // 4 == 7200
        elapsed = time.monotonic() - t
        assert elapsed <= 600
        notes.append(f"{len(g)} blocks, {len(code)} words, {elapsed:.1f} s")


def test_criterion_3_perfect_codes(criterion):
    with criterion(3, "perfect codes") as notes:
        for q, size in zip(CODE_Q, CODE_SIZES):
            code = perfect_code(q)
            assert len(code) == size
            assert is_deletion_correcting(code, 1)
            cover = covered_words(code, 1)
            assert len(cover) == q**3, q
            assert is_perfect(code, 1)
        notes.append(f"{len(CODE_Q)} alphabets cover B_q^3 exactly")


def test_criterion_4_golden_tables(criterion):
    with criterion(4, "embedded tables") as notes:
        t2 = base_code(4)
        assert len(t2) == 24 and is_deletion_correcting(t2, 1)
        t3 = base_code(6)
        assert len(t3) == 72 and is_deletion_correcting(t3, 1)
        rows = sqs14_rows()
        assert len(rows) == 91 and is_sqs(rows, 14)
        assert has_step_property(canonical_sqs14())
        notes.append("24 + 72 words, 91 quadruples")


def test_criterion_5_sqs_suite(criterion):
    with criterion(5, "step-property SQS suite") as notes:
        natural: set[str] = set()
        for q in SQS_Q:
            s = build_sqs_step(q)
            assert is_sqs(s.quads, q), q
            assert has_step_property(s), q
            assert len(select_upper_quads(s)) == q * (q - 2) // 8, q
            natural |= s.cases
        # Case V never wins the dispatch order on this set, so it is built directly.
        v = build_case(CaseId.V, 26, build_sqs_step(8))
        assert is_sqs(v.quads, 26) and has_step_property(v)
        assert len(select_upper_quads(v)) == 26 * 24 // 8
        cases = natural | v.cases
        assert cases == {c.value for c in CaseId}, cases
        notes.append(f"dispatch reached {sorted(natural)}, V built from SQS(8)")


def test_criterion_6_gdd_suite(criterion):
    with criterion(6, "G(3,6,4,3) and the A_1 pair structure") as notes:
        g = build_gdd(3)
        A, A1 = family_A(3)
        assert len(g) == 189
        assert len(A) == 81 and A <= set(g.blocks)
        assert len(A1) == 27 and g.marked_A1 == A1
        assert is_gdd(g)
        for m in (3, 5):
            failures = a1_pair_equality_failures(build_gdd(m))
            notes.append(f"m={m}: {len(failures)} A_1 block pairs break the pair equality")
            assert not failures, failures[:3]


def test_criterion_7_oracles(criterion):
    with criterion(7, "oracle agreement") as notes:
        r = max_code_search(4, 2, budget=60)
        assert r.exact and r.size == 4 == sharp_bound(2)
        for q, n in ((8, 14), (10, 30)):
            quads = exact_cover_sqs(q)
            assert is_sqs(quads, q)
            assert len(quads) == n == len(build_sqs_step(q))
        notes.append("search 4, exact cover 14 and 30")


def test_criterion_8_bound_dominance(criterion):
    with criterion(8, "bound dominance") as notes:
        for q in range(2, 101, 2):
            t2, lev = sharp_bound(q), levenshtein_bound(4, q)
            assert t2 <= lev
            if q >= 4:
                assert t2 < lev, q
        pairs = [(levenshtein_bound(4, q), sharp_bound(q)) for q in (4, 6, 8, 10)]
        assert pairs == [(25, 24), (73, 72), (162, 160), (302, 300)]
        notes.append("even q up to 100")


def test_criterion_9_property_suites(criterion):
    with criterion(9, "property suites standalone") as notes:
        path = Path(__file__).with_name("test_properties.py")
        proc = subprocess.run(
            [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(path)],
            capture_output=True,
            text=True,
        )
        summary = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr
        notes.append(summary)
        assert proc.returncode == 0, proc.stdout[-2000:]
        # A direct spot check that the two routes to "corrects one deletion" agree here too.
        assert not deletion_ball((0, 0, 1, 1), 1).isdisjoint(deletion_ball((0, 1, 0, 1), 1))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
