"""Clocked polynomial machines ``P_k = <M, C_p>`` and their enumeration.

Index ``k`` is Cantor-unpaired into a machine index and a polynomial index;
both halves are decoded totally, so every ``k`` is a legal couple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .codes import BitReader, cantor_pair, cantor_unpair, gamma, rank_to_string, string_to_rank
from .errors import ClockOverflow
from .machine import RunResult, Status, TuringMachine, decode_machine, encode_machine, run

# Widest cycle budget the compiled kernel can count exactly (signed 64-bit).
MAX_CLOCK = 2**63 - 1


@dataclass(frozen=True)
class ClockPolynomial:
    """``p(n) = sum(a_t * n**t)`` with every ``a_t >= 1``."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("a clock polynomial needs at least one coefficient")
        if any(a < 1 for a in self.coefficients):
            raise ValueError(f"coefficients must be positive: {self.coefficients}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __str__(self):
        return " + ".join(
            f"{a}" if t == 0 else f"{a}*n" if t == 1 else f"{a}*n^{t}"
            for t, a in enumerate(self.coefficients)
        )


def decode_poly(index: int) -> ClockPolynomial:
    """Greedy run of gamma codes; no complete code gives the constant clock 1."""
    reader = BitReader(rank_to_string(index))
    coeffs = []
    while True:
        value = reader.read_gamma()
        if value is None:
            break
        coeffs.append(value)
    return ClockPolynomial(tuple(coeffs) or (1,))


def encode_poly(clock: ClockPolynomial) -> int:
    return string_to_rank("".join(gamma(a) for a in clock.coefficients))


@dataclass(frozen=True)
class ClockedMachine:
    machine: TuringMachine
    clock: ClockPolynomial
    index: int

    @property
    def pair(self) -> tuple[int, int]:
        return cantor_unpair(self.index)


@lru_cache(maxsize=4096)
def decode_bgs(index: int) -> ClockedMachine:
    i, j = cantor_unpair(index)
    return ClockedMachine(decode_machine(i), decode_poly(j), index)


def encode_bgs(machine: TuringMachine, clock: ClockPolynomial) -> int:
    return cantor_pair(encode_machine(machine), encode_poly(clock))


def clock_bound(clock: ClockPolynomial, input_len: int) -> int:
    if input_len < 0:
        raise ValueError("input length must be nonnegative")
    total = 0
    for a in reversed(clock.coefficients):
        total = total * input_len + a
    if total > MAX_CLOCK:
        raise ClockOverflow(
            f"p({input_len}) = {total} exceeds the exact cycle counter ({MAX_CLOCK})"
        )
    return total


def run_clocked(cm: ClockedMachine, bits: str) -> RunResult:
    """Run ``cm.machine`` until it halts or the clock shuts it down.

    An interrupted run is a failure with empty output.
    """
    result = run(cm.machine, bits, clock_bound(cm.clock, len(bits)))
    if result.status is Status.BUDGET_EXCEEDED:
        return RunResult(Status.CLOCK_INTERRUPT, "", result.cycles)
    return result
