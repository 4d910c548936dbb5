"""Exception types. Refusals (caps, overflow, long-run gates) are kept
distinct from invariant violations so the CLI can map them to exit codes."""


class Refused(Exception):
    """A precondition or resource cap refused the request."""


class VarCapExceeded(Refused, ValueError):
    def __init__(self, var_count: int, var_cap: int, rank: int | None = None):
        self.var_count = var_count
        self.var_cap = var_cap
        self.rank = rank
        where = f" at rank {rank}" if rank is not None else ""
        super().__init__(
            f"formula{where} has {var_count} variables, above the oracle cap {var_cap}"
        )

    def at_rank(self, rank: int) -> "VarCapExceeded":
        return VarCapExceeded(self.var_count, self.var_cap, rank)


class ClockOverflow(Refused, OverflowError):
    pass


class LongRunRequired(Refused):
    pass


class InvariantViolation(RuntimeError):
    """Internal consistency check failed; always a bug."""


class DimacsError(ValueError):
    pass


class MalformedHeader(DimacsError):
    pass


class ZeroInHeader(DimacsError):
    pass


class VariableOutOfRange(DimacsError):
    pass


class MissingTerminator(DimacsError):
    pass


class ClauseCountMismatch(DimacsError):
    pass
