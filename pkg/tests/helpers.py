"""Independent reference implementations used as test oracles.

Nothing here imports the simulator or codec internals under test.
"""

import itertools

from bgs_forge.machine import Move, Step, Symbol, TuringMachine


def random_machine(rng, max_states=5):
    n = rng.randint(1, max_states)
    table = []
    for _ in range(3 * n):
        if rng.random() < 0.25:
            table.append(None)
        else:
            table.append(Step(Symbol(rng.randrange(3)), Move(rng.randrange(2)), rng.randrange(n)))
    return TuringMachine(n, tuple(table))


def reference_run(machine, bits, budget):
    """Straight-line interpreter over a dict tape with ``None`` as blank.

    Returns ``(halted, cycles, output)``.
    """
    tape = {i: int(b) for i, b in enumerate(bits)}
    head, state, cycles = 0, 0, 0
    while True:
        sym = tape.get(head)
        key = 2 if sym is None else sym
        entry = machine.table[state * 3 + key]
        if entry is None:
            break
        if cycles == budget:
            return False, cycles, ""
        if int(entry.write) == 2:
            tape.pop(head, None)
        else:
            tape[head] = int(entry.write)
        head += 1 if int(entry.move) == 1 else -1
        state = entry.next_state
        cycles += 1
    if not tape:
        return True, cycles, ""
    pos = min(tape)
    out = ""
    while pos in tape:
        out += str(tape[pos])
        pos += 1
    return True, cycles, out


def truth_table_models(clauses, n_vars):
    """All satisfying lines, by direct evaluation of every row."""
    models = []
    for row in itertools.product("01", repeat=n_vars):
        if all(any((row[abs(l) - 1] == "1") == (l > 0) for l in c) for c in clauses):
            models.append("".join(row))
    return models


def all_strings(max_len):
    for length in range(max_len + 1):
        for tup in itertools.product("01", repeat=length):
            yield "".join(tup)


def beaver_reference(n, cutoff, normalize=False):
    """Every full 2-symbol table, classical halting step writing 1.

    ``normalize`` keeps only tables whose first entry halts or moves right.

    Returns ``(sigma, s_max, halted, unresolved)``.
    """
    actions = [None] + [(w, m, q) for q in range(n) for m in (0, 1) for w in (0, 1)]
    sigma = s_max = halted = unresolved = 0
    for table in itertools.product(actions, repeat=2 * n):
        if normalize and table[0] is not None and table[0][1] == 0:
            continue
        tape, head, state, steps = {}, 0, 0, 0
        result = None
        while steps < cutoff:
            sym = tape.get(head, 0)
            act = table[state * 2 + sym]
            if act is None:
                result = (steps + 1, sum(tape.values()) + (1 - sym))
                break
            w, m, q = act
            tape[head] = w
            head += 1 if m else -1
            state = q
            steps += 1
        if result is None:
            unresolved += 1
        else:
            halted += 1
            s_max = max(s_max, result[0])
            sigma = max(sigma, result[1])
    return sigma, s_max, halted, unresolved
