"""Common behaviour for BGS couples and native solvers.

A solver is any deterministic callable ``bits -> SolverOutcome``. Outcomes
are never trusted: consumers call :func:`bgs_forge.cnf.verify` themselves.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .bgs import ClockedMachine, clock_bound, decode_bgs, run_clocked
from .machine import Status


class Failure(str, enum.Enum):
    CLOCK_INTERRUPT = "clock_interrupt"
    BAD_OUTPUT = "bad_output"
    DECLINED = "declined"


@dataclass(frozen=True)
class SolverOutcome:
    line: Optional[str]
    failure: Optional[Failure]
    cycles_charged: int

    @classmethod
    def answered(cls, line: str, cycles: int) -> SolverOutcome:
        return cls(line, None, cycles)

    @classmethod
    def failed(cls, reason: Failure, cycles: int) -> SolverOutcome:
        return cls(None, reason, cycles)

    @property
    def is_answer(self) -> bool:
        return self.line is not None

    def as_dict(self) -> dict:
        if self.is_answer:
            return {"kind": "answered", "line": self.line, "cycles": self.cycles_charged}
        return {"kind": "failed", "reason": self.failure.value, "cycles": self.cycles_charged}


Solver = Callable[[str], SolverOutcome]


def surrogate_cost(bits: str, degree: int) -> int:
    """Cycle charge for native solvers: ``(|x| + 1) * degree``.

    A stand-in for the running time of a polynomial procedure of the given
    degree; deterministic and independent of wall time.
    """
    return (len(bits) + 1) * degree


@dataclass(frozen=True)
class BgsSolver:
    couple: ClockedMachine

    def __call__(self, bits: str) -> SolverOutcome:
        result = run_clocked(self.couple, bits)
        if result.status is Status.HALTED:
            return SolverOutcome.answered(result.output, result.cycles)
        return SolverOutcome.failed(Failure.CLOCK_INTERRUPT, result.cycles)

    def bound(self, bits: str) -> int:
        return clock_bound(self.couple.clock, len(bits))

    def __str__(self):
        return f"bgs:{self.couple.index}"


class SolverFamily:
    """Total indexed family ``k -> solver``."""

    def __init__(self, name: str, at: Callable[[int], Solver]):
        self.name = name
        self._at = at

    def at(self, k: int) -> Solver:
        if k < 0:
            raise ValueError(f"family index must be nonnegative, got {k}")
        return self._at(k)

    def __repr__(self):
        return f"SolverFamily({self.name!r})"


def bgs_family() -> SolverFamily:
    return SolverFamily("bgs", lambda k: BgsSolver(decode_bgs(k)))


def native_family(chain: Sequence[Solver]) -> SolverFamily:
    """``at(k) = chain[min(k, len(chain) - 1)]``."""
    chain = tuple(chain)
    if not chain:
        raise ValueError("native family needs a nonempty chain")
    last = len(chain) - 1
    names = ",".join(str(s) for s in chain)
    return SolverFamily(f"native[{names}]", lambda k: chain[min(k, last)])
