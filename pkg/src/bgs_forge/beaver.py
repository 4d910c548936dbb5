"""Exhaustive Busy Beaver census for 2-symbol machines with 1..4 states.

Convention: blank tape of 0s, start in state 0, and a Halt entry counts as
one final step that writes a 1 (the classical halting transition with its
best write). Sigma is the number of 1s at halt, S the number of steps.

Two enumeration methods give identical counts:

``brute``
    runs every full table.
``tree``
    runs partial tables and branches only on entries the run reaches; a leaf
    with ``u`` unreached entries stands for ``(4n + 1) ** u`` full tables.
"""

from __future__ import annotations

import array
import os
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from . import _kernels
from .errors import LongRunRequired

MAX_STATES = 4
LONG_RUN_ENV = "BGS_FORGE_LONG_RUNS"


class BeaverStep(NamedTuple):
    write: int
    move: int  # 0 = left, 1 = right
    next_state: int


@dataclass(frozen=True)
class BeaverMachine:
    """Table indexed ``state * 2 + symbol``; ``None`` is Halt."""

    state_count: int
    table: tuple[Optional[BeaverStep], ...]

    def __post_init__(self):
        if len(self.table) != 2 * self.state_count:
            raise ValueError(f"need {2 * self.state_count} entries, got {len(self.table)}")
        for e in self.table:
            if e is not None and not 0 <= e.next_state < self.state_count:
                raise ValueError(f"next state {e.next_state} out of range")

    def codes(self) -> list[int]:
        return [-1 if e is None else (e.next_state << 2) | (e.move << 1) | e.write for e in self.table]

    @classmethod
    def from_codes(cls, codes) -> BeaverMachine:
        table = []
        for c in codes:
            if c < 0:
                table.append(None)
            else:
                table.append(BeaverStep(c & 1, (c >> 1) & 1, c >> 2))
        return cls(len(table) // 2, tuple(table))

    def __str__(self):
        parts = []
        for e in self.table:
            parts.append("1RH" if e is None else f"{e.write}{'LR'[e.move]}{'ABCD'[e.next_state]}")
        return " ".join(parts)


class Simulation(NamedTuple):
    halted: bool
    steps: int
    ones: int


def simulate(machine: BeaverMachine, cutoff: int) -> Simulation:
    status, steps, ones, _ = _kernels.run_beaver(array.array("q", machine.codes()), cutoff)
    return Simulation(status == _kernels.HALTED, steps, ones)


class Halter(NamedTuple):
    codes: tuple[int, ...]  # -2 marks an entry the run never reads
    steps: int
    ones: int
    weight: int


@dataclass(frozen=True)
class BeaverCensus:
    n: int
    cutoff: int
    sigma: int
    s_max: int
    halted: int
    unresolved: int
    normalized: bool
    method: str
    halters: Optional[tuple[Halter, ...]] = field(default=None, compare=False, repr=False)

    @property
    def enumerated(self) -> int:
        return self.halted + self.unresolved

    @property
    def exact(self) -> bool:
        """Sigma and S are exact only if nothing was left unresolved."""
        return self.unresolved == 0

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "cutoff": self.cutoff,
            "sigma": self.sigma,
            "s_max": self.s_max,
            "halted": self.halted,
            "unresolved": self.unresolved,
            "enumerated": self.enumerated,
            "normalized": self.normalized,
            "method": self.method,
            "values_are": "exact" if self.exact else "lower_bounds",
        }


def table_count(n: int, normalized: bool) -> int:
    per_entry = 4 * n + 1
    first = 2 * n + 1 if normalized else per_entry
    return first * per_entry ** (2 * n - 1)


def long_runs_enabled() -> bool:
    return os.environ.get(LONG_RUN_ENV) == "1"


def beaver_census(
    n: int,
    cutoff: int,
    *,
    normalize: bool = True,
    method: str = "tree",
    allow_long: bool = False,
    collect: bool = False,
) -> BeaverCensus:
    if not 1 <= n <= MAX_STATES:
        raise ValueError(f"state count must be in 1..{MAX_STATES}, got {n}")
    if cutoff < 1:
        raise ValueError(f"cutoff must be positive, got {cutoff}")
    if n == MAX_STATES and not (allow_long or long_runs_enabled()):
        raise LongRunRequired(f"n={n} is a long run; pass allow_long or set {LONG_RUN_ENV}=1")
    if method == "brute":
        if collect:
            raise ValueError("halter collection is only available for the tree method")
        sigma, s_max, halted, unresolved = _kernels.brute_census(n, cutoff, normalize)
        return BeaverCensus(n, cutoff, sigma, s_max, halted, unresolved, normalize, method)
    if method != "tree":
        raise ValueError(f"unknown census method {method!r}")
    return _tree_census(n, cutoff, normalize, collect)


def _tree_census(n: int, cutoff: int, normalize: bool, collect: bool) -> BeaverCensus:
    per_entry = 4 * n + 1
    first_opts = _kernels.beaver_options(n, normalize)
    other_opts = _kernels.beaver_options(n, False)
    sigma = s_max = halted = unresolved = 0
    halters = [] if collect else None
    stack = [array.array("q", [-2] * (2 * n))]
    while stack:
        table = stack.pop()
        status, steps, ones, slot = _kernels.run_beaver(table, cutoff)
        if status == _kernels.UNDEFINED:
            for opt in first_opts if slot == 0 else other_opts:
                child = array.array("q", table)
                child[slot] = opt
                stack.append(child)
            continue
        weight = per_entry ** table.count(-2)
        if status == _kernels.HALTED:
            halted += weight
            sigma = max(sigma, ones)
            s_max = max(s_max, steps)
            if halters is not None:
                halters.append(Halter(tuple(table), steps, ones, weight))
        else:
            unresolved += weight
    return BeaverCensus(
        n, cutoff, sigma, s_max, halted, unresolved, normalize, "tree",
        tuple(halters) if halters is not None else None,
    )


def compare_growth(census_table: list[BeaverCensus], f_table: list) -> dict:
    """Both tables side by side with their budgets; no conclusion is drawn."""
    return {
        "busy_beaver": [c.as_dict() for c in sorted(census_table, key=lambda c: (c.n, c.cutoff))],
        "counterexample": [row.as_dict() for row in f_table],
    }
