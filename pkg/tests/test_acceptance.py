"""The acceptance gate: every criterion at reference scale, one test each.

Each test prints its verdict line (visible with ``pytest -s`` or on
failure) and asserts the criterion passed within its runtime budget.
"""

import pytest

from semilink.acceptance import (PROFILES, criterion_1, criterion_2,
                                 criterion_3, criterion_4, criterion_5,
                                 criterion_6, criterion_7, criterion_8)

FULL = PROFILES["full"]


def _run(criterion):
    result = criterion(FULL)
    print(result.line())
    assert result.passed, result.line()
    return result


def test_criterion_1_circulant_connectivity():
    _run(criterion_1)


def test_criterion_2_flow_oracle_equivalence():
    _run(criterion_2)


def test_criterion_3_dominating_vertex_finder():
    _run(criterion_3)


def test_criterion_4_two_linkage_spot_check():
    _run(criterion_4)


def test_criterion_5_linkage_end_to_end():
    result = _run(criterion_5)
    assert "40/40" in result.details


def test_criterion_6_construction_certification():
    result = _run(criterion_6)
    assert "rules 13/13" in result.details


def test_criterion_7_adjustment_program_audit():
    result = _run(criterion_7)
    assert "1 round(s)" in result.details


def test_criterion_8_fault_injection():
    result = _run(criterion_8)
    assert "5 mutations" in result.details
