"""Universal search: feed one instance to P_0, P_1, ... until a verified line.

Dovetailing is round-robin: round ``r`` activates solver ``r`` and then gives
every active solver one slot, in index order. A slot runs a solver to
completion (solvers are clock-bounded), so a solver's outcome is the same in
every slot; it is computed once and charged once per slot.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cnf import DEFAULT_VAR_CAP, brute_force_solve, decode_instance, verify
from .codes import check_bits, string_to_rank
from .errors import InvariantViolation
from .solvers import SolverFamily, SolverOutcome


@dataclass(frozen=True)
class Found:
    k: int
    line: str
    round: int
    total_cycles: int


@dataclass(frozen=True)
class ExhaustedBudget:
    total_cycles: int
    rounds: int


@dataclass(frozen=True)
class CertifiedUnsat:
    oracle: str = "brute_force"


@dataclass(frozen=True)
class SearchOutcome:
    result: Found | ExhaustedBudget | CertifiedUnsat
    trace: Optional[list] = field(default=None, compare=False)


def universal_search(
    bits: str,
    family: SolverFamily,
    round_budget: int,
    unsat_guard: bool = False,
    var_cap: int = DEFAULT_VAR_CAP,
    trace: bool = False,
) -> SearchOutcome:
    check_bits(bits)
    if round_budget < 1:
        raise ValueError(f"round budget must be positive, got {round_budget}")
    formula = decode_instance(bits)
    if unsat_guard and brute_force_solve(formula, var_cap) is None:
        return SearchOutcome(CertifiedUnsat(), [] if trace else None)

    outcomes: list[SolverOutcome] = []
    verified: list[bool] = []
    log = [] if trace else None
    total = 0
    for rnd in range(round_budget):
        outcome = family.at(rnd)(bits)
        outcomes.append(outcome)
        verified.append(outcome.is_answer and verify(formula, outcome.line))
        for k in range(rnd + 1):
            total += outcomes[k].cycles_charged
            if log is not None:
                log.append({"round": rnd, "k": k, **outcomes[k].as_dict(), "verified": verified[k]})
        winners = [k for k in range(rnd + 1) if verified[k]]
        if winners:
            k = winners[0]
            line = outcomes[k].line
            if not verify(formula, line):
                raise InvariantViolation(f"search accepted an unverified line from P_{k}")
            return SearchOutcome(Found(k, line, rnd, total), log)
    return SearchOutcome(ExhaustedBudget(total, round_budget), log)


def search_report(outcome: SearchOutcome, bits: Optional[str] = None) -> dict:
    """Flatten an outcome into a JSON-ready record payload."""
    res = outcome.result
    if isinstance(res, Found):
        rec = {"kind": "found", "k": res.k, "line": res.line, "round": res.round,
               "total_cycles": res.total_cycles}
    elif isinstance(res, ExhaustedBudget):
        rec = {"kind": "exhausted", "rounds": res.rounds, "total_cycles": res.total_cycles}
    else:
        rec = {"kind": "unsat", "oracle": res.oracle}
    if bits is not None:
        rec["bits"] = bits
        rec["rank"] = string_to_rank(bits)
    if outcome.trace is not None:
        rec["trace"] = outcome.trace
    return rec
