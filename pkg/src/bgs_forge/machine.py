"""Single-tape Turing machines over {0, 1, blank} and a total Goedel-number codec.

Every natural number names a machine: the index is read as its length-lex
bit string and parsed with a grammar whose missing pieces default to Halt.
"""

from __future__ import annotations

import array
import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, NamedTuple, Optional

from . import _kernels
from .codes import BitReader, check_bits, gamma, rank_to_string, string_to_rank


class Symbol(enum.IntEnum):
    ZERO = 0
    ONE = 1
    BLANK = 2


class Move(enum.IntEnum):
    LEFT = 0
    RIGHT = 1


class Step(NamedTuple):
    write: Symbol
    move: Move
    next_state: int


# ``None`` in a table is a Halt entry.
Entry = Optional[Step]

_WRITE_CODES = {Symbol.ZERO: "00", Symbol.ONE: "01", Symbol.BLANK: "10"}
_WRITE_DECODE = {0: Symbol.ZERO, 1: Symbol.ONE, 2: Symbol.BLANK, 3: Symbol.BLANK}


@dataclass(frozen=True)
class TuringMachine:
    """Deterministic machine with a total table indexed ``state * 3 + symbol``."""

    state_count: int
    table: tuple[Entry, ...]

    def __post_init__(self):
        if self.state_count < 1:
            raise ValueError("a machine needs at least one state")
        if len(self.table) != 3 * self.state_count:
            raise ValueError(
                f"table must have {3 * self.state_count} entries, got {len(self.table)}"
            )
        for entry in self.table:
            if entry is not None and not 0 <= entry.next_state < self.state_count:
                raise ValueError(f"next state {entry.next_state} out of range")

    def entry(self, state: int, symbol: Symbol) -> Entry:
        return self.table[state * 3 + symbol]

    @cached_property
    def flat_table(self) -> array.array:
        """Kernel encoding of the table (see ``_kernels._pure``)."""
        return array.array(
            "q",
            [
                -1 if e is None else (e.next_state << 3) | (e.move << 2) | e.write
                for e in self.table
            ],
        )

    def describe(self) -> list[str]:
        """Entries as ``H`` or ``<write><L|R><next>``, e.g. ``1R0``."""
        out = []
        for e in self.table:
            if e is None:
                out.append("H")
            else:
                w = "01_"[e.write]
                out.append(f"{w}{'LR'[e.move]}{e.next_state}")
        return out


def halt_everywhere(state_count: int = 1) -> TuringMachine:
    return TuringMachine(state_count, (None,) * (3 * state_count))


@dataclass(frozen=True)
class TapeConfig:
    """Tape contents (non-blank cells only), head, state and cycle count.

    Treated as immutable: :func:`step` returns a fresh config.
    """

    cells: Mapping[int, Symbol] = field(default_factory=dict)
    head: int = 0
    state: int = 0
    cycles: int = 0

    @classmethod
    def initial(cls, bits: str) -> TapeConfig:
        check_bits(bits)
        return cls({i: Symbol(int(b)) for i, b in enumerate(bits)})

    def symbol(self, pos: int) -> Symbol:
        return self.cells.get(pos, Symbol.BLANK)


class Halt:
    """Signal returned by :func:`step` when the current entry is Halt."""

    def __repr__(self):
        return "HALT"


HALT = Halt()


class Status(str, enum.Enum):
    HALTED = "halted"
    CLOCK_INTERRUPT = "clock_interrupt"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class RunResult:
    status: Status
    output: str
    cycles: int


def step(machine: TuringMachine, config: TapeConfig) -> TapeConfig | Halt:
    entry = machine.entry(config.state, config.symbol(config.head))
    if entry is None:
        return HALT
    cells = dict(config.cells)
    if entry.write == Symbol.BLANK:
        cells.pop(config.head, None)
    else:
        cells[config.head] = entry.write
    head = config.head + (1 if entry.move == Move.RIGHT else -1)
    return TapeConfig(cells, head, entry.next_state, config.cycles + 1)


def read_output(tape: TapeConfig) -> str:
    """Leftmost run of non-blank cells, read up to the first blank."""
    cells = {p: s for p, s in tape.cells.items() if s != Symbol.BLANK}
    if not cells:
        return ""
    pos = min(cells)
    out = []
    while pos in cells:
        out.append("1" if cells[pos] == Symbol.ONE else "0")
        pos += 1
    return "".join(out)


def run(machine: TuringMachine, bits: str, budget: int) -> RunResult:
    """Run on ``bits`` for at most ``budget`` transitions.

    A Halt entry is checked before the budget, so a machine that halts right
    after its ``budget``-th transition still counts as halted.
    """
    if budget < 1:
        raise ValueError(f"budget must be positive, got {budget}")
    check_bits(bits)
    halted, cycles, output = _kernels.run_tm(machine.flat_table, bits, budget)
    if halted:
        return RunResult(Status.HALTED, output, cycles)
    return RunResult(Status.BUDGET_EXCEEDED, "", cycles)


def decode_machine(index: int) -> TuringMachine:
    reader = BitReader(rank_to_string(index))
    state_count = reader.read_gamma() or 1
    table: list[Entry] = []
    for _ in range(3 * state_count):
        table.append(_decode_entry(reader, state_count))
    return TuringMachine(state_count, tuple(table))


def _decode_entry(reader: BitReader, state_count: int) -> Entry:
    if reader.read() != "0":
        return None
    write = reader.read_int(2)
    move = reader.read()
    if write is None or move is None:
        return None
    nxt = reader.read_gamma()
    if nxt is None:
        return None
    return Step(_WRITE_DECODE[write], Move(int(move)), (nxt - 1) % state_count)


def machine_bits(machine: TuringMachine) -> str:
    """Canonical bit string of ``machine`` under the decode grammar."""
    parts = [gamma(machine.state_count)]
    for e in machine.table:
        if e is None:
            parts.append("1")
        else:
            parts.append("0" + _WRITE_CODES[e.write] + str(int(e.move)) + gamma(e.next_state + 1))
    return "".join(parts)


def encode_machine(machine: TuringMachine) -> int:
    return string_to_rank(machine_bits(machine))
