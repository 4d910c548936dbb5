"""Counterexample function F, its all-machines variant F', and empirical R.

All three are only semi-computable; every scan carries an explicit budget
and reports the ceiling it reached instead of claiming totality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .cnf import DEFAULT_VAR_CAP, instance_at, verify
from .errors import InvariantViolation, VarCapExceeded
from .solvers import Failure, SolverFamily, bgs_family


@dataclass(frozen=True)
class FailsAt:
    z: int
    detail: str  # wrong_output | interrupted


@dataclass(frozen=True)
class NoFailureFound:
    scanned: int


@dataclass(frozen=True)
class OracleRefused:
    rank: int
    var_count: int
    var_cap: int


@dataclass(frozen=True)
class Zero:
    """F'(k) = 0: index ``k`` does not carry a clocked couple."""


CounterexampleResult = FailsAt | NoFailureFound | OracleRefused


def counterexample_F(
    k: int,
    family: SolverFamily,
    rank_budget: int,
    var_cap: int = DEFAULT_VAR_CAP,
) -> CounterexampleResult:
    """Least rank below ``rank_budget`` whose instance is satisfiable but gets
    no verified line from ``family.at(k)``."""
    solver = family.at(k)
    for z in range(rank_budget):
        try:
            bits, formula, line = instance_at(z, var_cap)
        except VarCapExceeded as exc:
            return OracleRefused(z, exc.var_count, var_cap)
        if line is None:
            continue
        outcome = solver(bits)
        if outcome.is_answer and verify(formula, outcome.line):
            continue
        if outcome.failure is Failure.CLOCK_INTERRUPT:
            return FailsAt(z, "interrupted")
        return FailsAt(z, "wrong_output")
    return NoFailureFound(rank_budget)


def counterexample_Fprime(
    k: int,
    rank_budget: int,
    var_cap: int = DEFAULT_VAR_CAP,
) -> CounterexampleResult | Zero:
    """Even ``k`` carries BGS couple ``k // 2``; odd ``k`` is not a couple.

    The tag is syntactic. Whether an arbitrary machine runs in polynomial
    time is undecidable, so the semantic F' is not computed here.
    """
    if k < 0:
        raise ValueError("index must be nonnegative")
    if k % 2:
        return Zero()
    return counterexample_F(k // 2, bgs_family(), rank_budget, var_cap)


@dataclass(frozen=True)
class NotFoundWithin:
    index_budget: int
    rank_bound: int


def empirical_R(
    rank_bound: int,
    family: SolverFamily,
    index_budget: int,
    var_cap: int = DEFAULT_VAR_CAP,
) -> int | NotFoundWithin:
    """Least ``k <= index_budget`` whose solver settles every satisfiable
    instance of rank below ``rank_bound``."""
    for k in range(index_budget + 1):
        res = counterexample_F(k, family, rank_bound, var_cap)
        if isinstance(res, OracleRefused):
            raise VarCapExceeded(res.var_count, var_cap, res.rank)
        if isinstance(res, NoFailureFound):
            return k
    return NotFoundWithin(index_budget, rank_bound)


def audit_minimality(
    k: int,
    family: SolverFamily,
    result: CounterexampleResult,
    var_cap: int = DEFAULT_VAR_CAP,
) -> None:
    """Re-run ``family.at(k)`` below a reported ``FailsAt`` and raise
    :class:`InvariantViolation` unless every earlier satisfiable rank verifies
    and the reported rank really fails."""
    if not isinstance(result, FailsAt):
        return
    solver = family.at(k)
    for z in range(result.z + 1):
        bits, formula, line = instance_at(z, var_cap)
        if line is None:
            if z == result.z:
                raise InvariantViolation(f"F({k}) = {z} is unsatisfiable")
            continue
        outcome = solver(bits)
        ok = outcome.is_answer and verify(formula, outcome.line)
        if ok == (z == result.z):
            raise InvariantViolation(f"F({k}) = {result.z} is not minimal at rank {z}")


def describe(result) -> dict:
    if isinstance(result, FailsAt):
        return {"kind": "fails_at", "z": result.z, "detail": result.detail}
    if isinstance(result, NoFailureFound):
        return {"kind": "no_failure_found", "scanned": result.scanned}
    if isinstance(result, OracleRefused):
        return {"kind": "oracle_refused", "rank": result.rank,
                "var_count": result.var_count, "var_cap": result.var_cap}
    if isinstance(result, Zero):
        return {"kind": "zero", "value": 0}
    if isinstance(result, NotFoundWithin):
        return {"kind": "not_found_within", "index_budget": result.index_budget,
                "rank_bound": result.rank_bound}
    if isinstance(result, int):
        return {"kind": "index", "k": result}
    raise TypeError(f"unknown result {result!r}")


@dataclass(frozen=True)
class GrowthRow:
    k: int
    result: CounterexampleResult

    @property
    def value(self) -> Optional[int]:
        return self.result.z if isinstance(self.result, FailsAt) else None

    def as_dict(self) -> dict:
        return {"k": self.k, **describe(self.result)}


def growth_table(
    ks: Iterable[int],
    family: SolverFamily,
    rank_budget: int,
    var_cap: int = DEFAULT_VAR_CAP,
) -> list[GrowthRow]:
    return [GrowthRow(k, counterexample_F(k, family, rank_budget, var_cap)) for k in sorted(set(ks))]
