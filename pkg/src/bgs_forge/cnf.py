"""CNF formulas as binary strings.

Literals are signed ints in DIMACS style: ``3`` is x3, ``-3`` is not-x3. A
satisfying line is a bit string whose bit ``i`` is the value of variable
``i + 1``.

Instance code, one token per bit::

    formula := ("1" clause)* "0"
    clause  := ("1" gamma(var) sign)* "0"      sign: 0 positive, 1 negative

Decoding is total: a clause cut off by the end of the string is dropped and
the formula closes; bits after the terminator are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional

from .codes import BitReader, check_bits, gamma, rank_to_string, string_to_rank
from .errors import (
    ClauseCountMismatch,
    MalformedHeader,
    MissingTerminator,
    VarCapExceeded,
    VariableOutOfRange,
    ZeroInHeader,
)

DEFAULT_VAR_CAP = 26

Clause = tuple[int, ...]


@dataclass(frozen=True)
class CnfFormula:
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        for clause in self.clauses:
            for lit in clause:
                if lit == 0:
                    raise ValueError("literal 0 is not a variable")

    @classmethod
    def of(cls, *clauses) -> CnfFormula:
        return cls(tuple(tuple(c) for c in clauses))

    @property
    def var_count(self) -> int:
        return max((abs(l) for c in self.clauses for l in c), default=0)

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.clauses)

    def __str__(self):
        if not self.clauses:
            return "<empty formula>"
        return " & ".join(
            "(" + " | ".join(f"x{l}" if l > 0 else f"~x{-l}" for l in c) + ")"
            for c in self.clauses
        )


class InstanceCode(NamedTuple):
    bits: str
    rank: int


def encode_instance(formula: CnfFormula) -> InstanceCode:
    parts = []
    for clause in formula.clauses:
        parts.append("1")
        for lit in clause:
            parts.append("1" + gamma(abs(lit)) + ("1" if lit < 0 else "0"))
        parts.append("0")
    parts.append("0")
    bits = "".join(parts)
    return InstanceCode(bits, string_to_rank(bits))


def decode_instance(bits: str) -> CnfFormula:
    check_bits(bits)
    reader = BitReader(bits)
    clauses = []
    while reader.read() == "1":
        clause = _read_clause(reader)
        if clause is None:
            break
        clauses.append(clause)
    return CnfFormula(tuple(clauses))


def _read_clause(reader: BitReader) -> Optional[Clause]:
    lits = []
    while True:
        tag = reader.read()
        if tag is None:
            return None
        if tag == "0":
            return tuple(lits)
        var = reader.read_gamma()
        sign = reader.read()
        if var is None or sign is None:
            return None
        lits.append(-var if sign == "1" else var)


def verify(formula: CnfFormula, line: str) -> bool:
    """True iff ``line`` covers every variable and satisfies every clause."""
    if len(line) < formula.var_count:
        return False
    for clause in formula.clauses:
        for lit in clause:
            if (line[abs(lit) - 1] == "1") == (lit > 0):
                break
        else:
            return False
    return True


def brute_force_solve(formula: CnfFormula, var_cap: int = DEFAULT_VAR_CAP) -> Optional[str]:
    """First satisfying line in lexicographic order, or ``None`` if unsatisfiable."""
    n = formula.var_count
    if n > var_cap:
        raise VarCapExceeded(n, var_cap)
    # Each clause as (positive mask, negative mask) over line positions.
    masks = []
    for clause in formula.clauses:
        pos = neg = 0
        for lit in clause:
            bit = 1 << (n - abs(lit))
            if lit > 0:
                pos |= bit
            else:
                neg |= bit
        masks.append((pos, neg))
    full = (1 << n) - 1
    for value in range(1 << n):
        inv = full ^ value
        if all(value & p or inv & q for p, q in masks):
            return format(value, f"0{n}b") if n else ""
    return None


@lru_cache(maxsize=1 << 16)
def _oracle_at(rank: int, var_cap: int) -> tuple[CnfFormula, Optional[str]]:
    formula = decode_instance(rank_to_string(rank))
    try:
        return formula, brute_force_solve(formula, var_cap)
    except VarCapExceeded as exc:
        raise exc.at_rank(rank) from None


def instance_at(rank: int, var_cap: int = DEFAULT_VAR_CAP) -> tuple[str, CnfFormula, Optional[str]]:
    """Bits, decoded formula and oracle line (``None`` if unsatisfiable) at ``rank``."""
    formula, line = _oracle_at(rank, var_cap)
    return rank_to_string(rank), formula, line


class SatInstance(NamedTuple):
    rank: int
    formula: CnfFormula
    line: str


def sat_instances_upto(n: int, var_cap: int = DEFAULT_VAR_CAP) -> list[SatInstance]:
    """Satisfiable instances among ranks ``0 .. n-1`` with the oracle's line."""
    out = []
    for rank in range(n):
        _, formula, line = instance_at(rank, var_cap)
        if line is not None:
            out.append(SatInstance(rank, formula, line))
    return out


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    tokens: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if header is not None:
                raise MalformedHeader(f"line {lineno}: second header")
            header = _parse_header(line, lineno)
            continue
        if header is None:
            raise MalformedHeader(f"line {lineno}: clause data before the 'p cnf' header")
        tokens.extend(line.split())
    if header is None:
        raise MalformedHeader("missing 'p cnf <vars> <clauses>' header")
    n_vars, n_clauses = header
    clauses = []
    current: list[int] = []
    for tok in tokens:
        try:
            lit = int(tok)
        except ValueError:
            raise MalformedHeader(f"non-integer token {tok!r} in clause data") from None
        if lit == 0:
            clauses.append(tuple(current))
            current = []
            continue
        if abs(lit) > n_vars:
            raise VariableOutOfRange(f"variable {abs(lit)} exceeds declared count {n_vars}")
        current.append(lit)
    if current:
        raise MissingTerminator(f"last clause {current} is not terminated by 0")
    if len(clauses) != n_clauses:
        raise ClauseCountMismatch(f"header declares {n_clauses} clauses, found {len(clauses)}")
    return CnfFormula(tuple(clauses))


def _parse_header(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) > 4 and "0" in parts[4:]:
        raise ZeroInHeader(f"line {lineno}: literal 0 inside header {line!r}")
    if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
        raise MalformedHeader(f"line {lineno}: expected 'p cnf <vars> <clauses>', got {line!r}")
    try:
        n_vars, n_clauses = int(parts[2]), int(parts[3])
    except ValueError:
        raise MalformedHeader(f"line {lineno}: non-integer counts in {line!r}") from None
    if n_vars < 0 or n_clauses < 0:
        raise MalformedHeader(f"line {lineno}: negative counts in {line!r}")
    return n_vars, n_clauses


def to_dimacs(formula: CnfFormula) -> str:
    lines = [f"p cnf {formula.var_count} {len(formula.clauses)}"]
    lines += [" ".join(map(str, c + (0,))) for c in formula.clauses]
    return "\n".join(lines) + "\n"
