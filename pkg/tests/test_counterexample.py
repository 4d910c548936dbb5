import pytest

from bgs_forge.bgs import ClockPolynomial, decode_bgs, encode_bgs
from bgs_forge.cnf import instance_at, verify
from bgs_forge.counterexample import (
    FailsAt,
    NoFailureFound,
    NotFoundWithin,
    OracleRefused,
    Zero,
    audit_minimality,
    counterexample_F,
    counterexample_Fprime,
    describe,
    empirical_R,
    growth_table,
)
from bgs_forge.errors import InvariantViolation
from bgs_forge.folklore import DeclineSolver, OracleSolver, lookup_solver
from bgs_forge.machine import Move, Step, Symbol, TuringMachine
from bgs_forge.solvers import bgs_family, native_family

BLANK_RUNNER = TuringMachine(1, (None, None, Step(Symbol.BLANK, Move.RIGHT, 0)))


def test_F_of_all_halt_couple():
    # the echo of "11100" happens to satisfy (x1); "11110" = (~x1) is the
    # first satisfiable instance whose echo is not a model
    assert counterexample_F(0, bgs_family(), 64) == FailsAt(61, "wrong_output")


def test_F_never_halting_couple():
    k = encode_bgs(BLANK_RUNNER, ClockPolynomial((1,)))
    assert counterexample_F(k, bgs_family(), 64) == FailsAt(0, "interrupted")


def test_F_native_lookup_is_clean():
    assert counterexample_F(0, native_family([lookup_solver(64)]), 64) == NoFailureFound(64)


def test_F_decline_fails_immediately():
    assert counterexample_F(0, native_family([DeclineSolver()]), 64) == FailsAt(0, "wrong_output")


def test_F_reports_refusal():
    res = counterexample_F(0, native_family([OracleSolver()]), 20_000)
    assert res == OracleRefused(14443, 27, 26)


def _direct_F(k, rank_budget):
    solver = bgs_family().at(k)
    for z in range(rank_budget):
        bits, f, line = instance_at(z)
        if line is None:
            continue
        o = solver(bits)
        if not (o.is_answer and verify(f, o.line)):
            return z
    return None


def test_F_against_direct_scan():
    for k in range(0, 400, 3):
        res = counterexample_F(k, bgs_family(), 64)
        expected = _direct_F(k, 64)
        assert (res.z if isinstance(res, FailsAt) else None) == expected
        audit_minimality(k, bgs_family(), res)


def test_audit_catches_wrong_claims():
    with pytest.raises(InvariantViolation):
        audit_minimality(0, bgs_family(), FailsAt(59, "wrong_output"))
    with pytest.raises(InvariantViolation):
        audit_minimality(0, bgs_family(), FailsAt(62, "wrong_output"))


def test_Fprime_parity():
    for k in range(100):
        res = counterexample_Fprime(k, 64)
        if k % 2:
            assert res == Zero()
        else:
            assert res == counterexample_F(k // 2, bgs_family(), 64)


def test_Fprime_rejects_negative():
    with pytest.raises(ValueError):
        counterexample_Fprime(-1, 8)


def test_empirical_R_small_windows():
    assert empirical_R(1, bgs_family(), 10) == 0
    assert empirical_R(64, native_family([lookup_solver(64)]), 10) == 0
    assert empirical_R(64, native_family([DeclineSolver(), lookup_solver(64)]), 10) == 1


def test_empirical_R_bgs_window_64_not_found():
    assert empirical_R(64, bgs_family(), 1000) == NotFoundWithin(1000, 64)


def test_empirical_R_monotone_in_window():
    fam = native_family([lookup_solver(n) for n in (0, 10, 40, 64)])
    values = [empirical_R(r, fam, 5) for r in range(0, 65, 4)]
    assert values == sorted(values)


def test_growth_table_sorted_and_deduplicated():
    rows = growth_table([3, 0, 3, 1], bgs_family(), 64)
    assert [r.k for r in rows] == [0, 1, 3]
    assert rows[0].value == 61
    assert rows[0].as_dict() == {"k": 0, "kind": "fails_at", "z": 61, "detail": "wrong_output"}


def test_describe_kinds():
    assert describe(Zero()) == {"kind": "zero", "value": 0}
    assert describe(7) == {"kind": "index", "k": 7}
    assert describe(NoFailureFound(3))["kind"] == "no_failure_found"
    with pytest.raises(TypeError):
        describe("x")


def test_index_decodes_expected_couple():
    k = encode_bgs(BLANK_RUNNER, ClockPolynomial((1,)))
    assert decode_bgs(k).machine == BLANK_RUNNER
