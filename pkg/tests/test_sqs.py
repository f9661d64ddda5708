from __future__ import annotations

import pytest

from del4.errors import ConstructionError, InvalidArgument, UnsupportedParameter
from del4.sqs import (
    CanonicalSQS,
    CaseId,
    build_case,
    build_sqs_step,
    canonical_sqs14,
    has_step_property,
    hanani_order,
    is_sqs,
    quad,
    select_upper_quads,
    sqs_size,
    step_violations,
    sqs14_position,
    sqs14_rows,
)

ORDERS = [q for q in range(4, 120) if q % 6 in (2, 4)]


def test_sqs4():
    s = build_sqs_step(4)
    assert s.quads == ((0, 1, 2, 3),)
    assert select_upper_quads(s) == [(0, 1, 2, 3)]


@pytest.mark.parametrize("q", ORDERS)
def test_build_sqs_step(q):
    s = build_sqs_step(q)
    assert s.q == q
    assert len(s) == sqs_size(q)
    assert is_sqs(s.quads, q)
    assert has_step_property(s)
    assert len(select_upper_quads(s)) == q * (q - 2) // 8


def test_upper_quad_examples():
    assert len(select_upper_quads(build_sqs_step(8))) == 6
    assert len(select_upper_quads(build_sqs_step(14))) == 21


def test_deterministic():
    build_sqs_step.cache_clear()
    a = build_sqs_step(40).quads
    build_sqs_step.cache_clear()
    assert build_sqs_step(40).quads == a


@pytest.mark.parametrize("q", [0, 2, 5, 6, 12, 3])
def test_unsupported_orders(q):
    with pytest.raises(UnsupportedParameter):
        build_sqs_step(q)


def test_case_residues():
    assert CaseId.I.matches(8) and CaseId.I.matches(16)
    assert CaseId.II.matches(10) and CaseId.II.matches(22) and CaseId.II.matches(28)
    assert CaseId.III.matches(34)
    assert CaseId.IV.matches(26)
    assert CaseId.V.matches(26) and CaseId.V.matches(10) and not CaseId.V.matches(2)
    assert CaseId.VI.matches(14) and CaseId.VI.matches(38)


def test_dispatch_routes():
    assert build_sqs_step(20).route == ((20, "I"), (10, "II"), (4, "base"))
    assert build_sqs_step(34).route[0] == (34, "III")
    assert build_sqs_step(26).route[0] == (26, "IV")
    assert build_sqs_step(38).route[0] == (38, "VI")


def test_forced_case_v():
    s = build_case(CaseId.V, 26, build_sqs_step(8))
    assert len(s) == 650 and is_sqs(s.quads, 26) and has_step_property(s)
    assert s.route[0] == (26, "V")


def test_build_case_checks_inputs():
    with pytest.raises(UnsupportedParameter):
        build_case(CaseId.III, 26, build_sqs_step(10))
    with pytest.raises(InvalidArgument):
        build_case(CaseId.V, 26, build_sqs_step(10))


def test_sqs14():
    rows = sqs14_rows()
    assert len(rows) == 91
    assert is_sqs(rows, 14)
    s = canonical_sqs14()
    assert is_sqs(s.quads, 14) and has_step_property(s)
    assert sorted(sqs14_position(t) for t in range(14)) == list(range(14))


def test_step_property_detects_violation():
    assert step_violations([(0, 1, 2, 3)]) == []
    assert step_violations([(1, 2, 3, 4)]) == [(1, 2, 3, 4)]
    assert not has_step_property([(0, 2, 3, 5)])


def test_is_sqs_negative():
    quads = list(build_sqs_step(8).quads)
    assert not is_sqs(quads[1:], 8)
    assert not is_sqs(quads + [quads[0]], 8)
    assert not is_sqs([(0, 1, 2, 9)], 4)


def test_quad_rejects_repeats():
    assert quad([3, 1, 2, 0]) == (0, 1, 2, 3)
    with pytest.raises(ConstructionError):
        quad([1, 1, 2, 3])


def test_hanani_order_is_permutation():
    for f in (10, 16, 22, 34, 70):
        assert sorted(hanani_order(f)) == list(range(f))


def test_canonical_type():
    assert isinstance(build_sqs_step(10), CanonicalSQS)
