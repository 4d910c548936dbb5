"""Folklore constructions: per-instance solvers, the lookup chain, dominance,
and the finite-window check of a ``(machine, a, b)`` witness tuple."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .cnf import (
    DEFAULT_VAR_CAP,
    CnfFormula,
    brute_force_solve,
    decode_instance,
    encode_instance,
    instance_at,
    sat_instances_upto,
    verify,
)
from .codes import string_to_rank
from .errors import VarCapExceeded
from .solvers import Failure, Solver, SolverOutcome, surrogate_cost


def heuristic_line(formula: CnfFormula) -> Optional[str]:
    """All-ones if every clause has a positive literal, else all-zeros if
    every clause has a negative literal, else ``None``."""
    if all(any(l > 0 for l in c) for c in formula.clauses):
        return "1" * formula.var_count
    if all(any(l < 0 for l in c) for c in formula.clauses):
        return "0" * formula.var_count
    return None


@dataclass(frozen=True)
class TrivialInstanceSolver:
    """Answers one fixed instance with a stored line; declines everything else."""

    bits: str
    line: str
    degree: int = 1

    def __call__(self, bits: str) -> SolverOutcome:
        cost = surrogate_cost(bits, self.degree)
        if bits == self.bits:
            return SolverOutcome.answered(self.line, cost)
        return SolverOutcome.failed(Failure.DECLINED, cost)

    def __str__(self):
        return f"trivial:{string_to_rank(self.bits)}"


def trivial_instance_solver(formula: CnfFormula, var_cap: int = DEFAULT_VAR_CAP) -> TrivialInstanceSolver:
    line = brute_force_solve(formula, var_cap)
    if line is None:
        raise ValueError(f"formula {formula} is unsatisfiable; no solver settles it")
    return TrivialInstanceSolver(encode_instance(formula).bits, line)


@dataclass(frozen=True)
class LookupSolver:
    """Table of oracle lines for ranks below ``n``; heuristic above."""

    n: int
    table: dict = field(compare=False, repr=False)
    degree: int = 1

    def __call__(self, bits: str) -> SolverOutcome:
        cost = surrogate_cost(bits, self.degree)
        rank = string_to_rank(bits)
        if rank < self.n:
            line = self.table.get(rank)
        else:
            line = heuristic_line(decode_instance(bits))
        if line is None:
            return SolverOutcome.failed(Failure.DECLINED, cost)
        return SolverOutcome.answered(line, cost)

    def __str__(self):
        return f"lookup:{self.n}"


def lookup_solver(n: int, var_cap: int = DEFAULT_VAR_CAP) -> LookupSolver:
    if n < 0:
        raise ValueError(f"table size must be nonnegative, got {n}")
    table = {inst.rank: inst.line for inst in sat_instances_upto(n, var_cap)}
    return LookupSolver(n, table)


@dataclass(frozen=True)
class OracleSolver:
    """Exhaustive search behind a polynomial surrogate cost (degree 2)."""

    var_cap: int = DEFAULT_VAR_CAP
    degree: int = 2

    def __call__(self, bits: str) -> SolverOutcome:
        cost = surrogate_cost(bits, self.degree)
        try:
            line = brute_force_solve(decode_instance(bits), self.var_cap)
        except VarCapExceeded:
            line = None
        if line is None:
            return SolverOutcome.failed(Failure.DECLINED, cost)
        return SolverOutcome.answered(line, cost)

    def __str__(self):
        return "oracle"


@dataclass(frozen=True)
class DeclineSolver:
    def __call__(self, bits: str) -> SolverOutcome:
        return SolverOutcome.failed(Failure.DECLINED, surrogate_cost(bits, 1))

    def __str__(self):
        return "decline"


# -- witness tuples -----------------------------------------------------------


@dataclass(frozen=True)
class WitnessTuple:
    solver: Solver
    index: int
    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise ValueError("a and b must be positive integers")

    def bound(self, bits: str) -> int:
        return len(bits) ** self.a + self.b


class Violation(NamedTuple):
    rank: int
    kind: str  # wrong_output | too_slow | interrupted
    cycles: int
    bound: int

    def as_dict(self) -> dict:
        return self._asdict()


@dataclass
class WitnessReport:
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "checked": self.checked,
            "holds_on_window": self.holds,
            "violations": [v.as_dict() for v in self.violations],
        }


def check_witness_tuple(wt: WitnessTuple, rank_bound: int, var_cap: int = DEFAULT_VAR_CAP) -> WitnessReport:
    """Check ``wt`` on every satisfiable instance of rank below ``rank_bound``.

    Flags unverified answers, clock interrupts, and runs charged at least
    ``|x|**a + b`` cycles.
    """
    report = WitnessReport()
    for inst in sat_instances_upto(rank_bound, var_cap):
        bits, _, _ = instance_at(inst.rank, var_cap)
        outcome = wt.solver(bits)
        bound = wt.bound(bits)
        report.checked += 1
        if outcome.failure is Failure.CLOCK_INTERRUPT:
            report.violations.append(Violation(inst.rank, "interrupted", outcome.cycles_charged, bound))
        elif not (outcome.is_answer and verify(inst.formula, outcome.line)):
            report.violations.append(Violation(inst.rank, "wrong_output", outcome.cycles_charged, bound))
        if outcome.cycles_charged >= bound:
            report.violations.append(Violation(inst.rank, "too_slow", outcome.cycles_charged, bound))
    return report


# -- dominance ----------------------------------------------------------------


class Relation(str, enum.Enum):
    STRICTLY_MORE = "strictly_more"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Dominance:
    relation: Relation
    witnesses: tuple[int, ...] = ()  # ranks settled only by the left solver
    only_right: tuple[int, ...] = ()

    def as_dict(self) -> dict:
        return {
            "relation": self.relation.value,
            "witness_ranks": list(self.witnesses),
            "only_right": list(self.only_right),
        }


def settled_set(solver: Solver, rank_bound: int, var_cap: int = DEFAULT_VAR_CAP) -> frozenset[int]:
    settled = set()
    for inst in sat_instances_upto(rank_bound, var_cap):
        bits, _, _ = instance_at(inst.rank, var_cap)
        outcome = solver(bits)
        if outcome.is_answer and verify(inst.formula, outcome.line):
            settled.add(inst.rank)
    return frozenset(settled)


def dominates(left: Solver, right: Solver, rank_bound: int, var_cap: int = DEFAULT_VAR_CAP) -> Dominance:
    """Compare settled sets on the window of ranks below ``rank_bound``.

    ``STRICTLY_MORE`` means ``left`` settles a strict superset of ``right``.
    """
    s_left = settled_set(left, rank_bound, var_cap)
    s_right = settled_set(right, rank_bound, var_cap)
    extra = tuple(sorted(s_left - s_right))
    missing = tuple(sorted(s_right - s_left))
    if not extra and not missing:
        return Dominance(Relation.EQUAL)
    if not missing:
        return Dominance(Relation.STRICTLY_MORE, extra)
    return Dominance(Relation.INCOMPARABLE, extra, missing)


class ChainLink(NamedTuple):
    n: int
    dominance: Dominance
    included: bool

    def as_dict(self) -> dict:
        return {"n": self.n, "included": self.included, **self.dominance.as_dict()}


def folklore_chain(upto: int, rank_bound: int, var_cap: int = DEFAULT_VAR_CAP) -> list[ChainLink]:
    """Compare ``lookup_solver(n + 1)`` against ``lookup_solver(n)`` for ``n < upto``."""
    links = []
    prev = lookup_solver(0, var_cap)
    for n in range(upto):
        nxt = lookup_solver(n + 1, var_cap)
        dom = dominates(nxt, prev, rank_bound, var_cap)
        links.append(ChainLink(n, dom, dom.relation is not Relation.INCOMPARABLE))
        prev = nxt
    return links

