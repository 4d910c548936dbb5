"""Pure-Python simulation kernels. Same contract as the compiled ``_native``.

Turing-machine tables are flat int sequences indexed ``state * 3 + symbol``
(symbols 0, 1, 2 = Zero, One, Blank); ``-1`` is Halt, otherwise
``(next << 3) | (move << 2) | write`` with move 0 = Left, 1 = Right.

Beaver tables are indexed ``state * 2 + symbol``; ``-2`` is undefined,
``-1`` is Halt, otherwise ``(next << 2) | (move << 1) | write``.
"""

BLANK = 2

HALTED = 0
CUTOFF = 1
UNDEFINED = 2


def run_tm(table, bits, budget):
    """Run from state 0 with ``bits`` at cells 0.. and the head on cell 0.

    Returns ``(halted, cycles, output)``; output is ``""`` unless halted.
    """
    n_in = len(bits)
    size = 2 * n_in + 64
    offset = size // 4
    tape = bytearray([BLANK]) * size
    for i, ch in enumerate(bits):
        tape[offset + i] = 1 if ch == "1" else 0
    head = offset
    lo = offset
    hi = offset + n_in - 1 if n_in else offset
    state = 0
    cycles = 0
    halted = False
    while True:
        entry = table[state * 3 + tape[head]]
        if entry < 0:
            halted = True
            break
        if cycles >= budget:
            break
        tape[head] = entry & 3
        if entry & 4:
            head += 1
            if head >= size:
                tape.extend(bytearray([BLANK]) * size)
                size *= 2
            if head > hi:
                hi = head
        else:
            head -= 1
            if head < 0:
                tape[:0] = bytearray([BLANK]) * size
                head += size
                offset += size
                lo += size
                hi += size
                size *= 2
            if head < lo:
                lo = head
        state = entry >> 3
        cycles += 1
    if not halted:
        return False, cycles, ""
    pos = lo
    while pos <= hi and tape[pos] == BLANK:
        pos += 1
    out = []
    while pos <= hi and tape[pos] != BLANK:
        out.append("1" if tape[pos] == 1 else "0")
        pos += 1
    return True, cycles, "".join(out)


def run_beaver(table, cutoff):
    """Run a (possibly partial) 2-symbol table from a blank tape.

    A Halt entry is one final step that writes 1. Returns
    ``(status, steps, ones, slot)``; ``slot`` is the undefined entry reached
    when ``status == UNDEFINED``, else -1.
    """
    tape = {}
    head = 0
    state = 0
    steps = 0
    while steps < cutoff:
        sym = tape.get(head, 0)
        slot = state * 2 + sym
        entry = table[slot]
        if entry == -2:
            return UNDEFINED, steps, 0, slot
        if entry == -1:
            ones = sum(tape.values()) + (1 - sym)
            return HALTED, steps + 1, ones, -1
        tape[head] = entry & 1
        head += 1 if entry & 2 else -1
        state = entry >> 2
        steps += 1
    return CUTOFF, steps, 0, -1


def beaver_options(n, first):
    """Entry codes for one table slot; ``first`` restricts to Halt or right moves."""
    opts = [-1]
    for nxt in range(n):
        for move in ((1,) if first else (0, 1)):
            for write in (0, 1):
                opts.append((nxt << 2) | (move << 1) | write)
    return opts


def brute_census(n, cutoff, normalize):
    """Run every full table; returns ``(sigma, s_max, halted, unresolved)``."""
    slots = 2 * n
    options = [beaver_options(n, normalize and s == 0) for s in range(slots)]
    idx = [0] * slots
    table = [opts[0] for opts in options]
    sigma = s_max = halted = unresolved = 0
    while True:
        status, steps, ones, _ = run_beaver(table, cutoff)
        if status == HALTED:
            halted += 1
            if ones > sigma:
                sigma = ones
            if steps > s_max:
                s_max = steps
        else:
            unresolved += 1
        s = 0
        while s < slots:
            idx[s] += 1
            if idx[s] < len(options[s]):
                table[s] = options[s][idx[s]]
                break
            idx[s] = 0
            table[s] = options[s][0]
            s += 1
        if s == slots:
            return sigma, s_max, halted, unresolved
