# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled simulation kernels. Contract identical to ``_pure``."""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memset, memmove

from bgs_forge._kernels._pure import beaver_options

cdef enum:
    BLANK = 2
    HALTED_C = 0
    CUTOFF_C = 1
    UNDEFINED_C = 2

HALTED = 0
CUTOFF = 1
UNDEFINED = 2


cdef long long[::1] _as_table(object table):
    import array
    if isinstance(table, array.array) and table.typecode == "q":
        return table
    return array.array("q", table)


def run_tm(table, str bits, long long budget):
    cdef long long[::1] tab = _as_table(table)
    cdef Py_ssize_t n_in = len(bits)
    cdef Py_ssize_t size = 2 * n_in + 64
    cdef Py_ssize_t offset = size // 4
    cdef Py_ssize_t head, lo, hi, i, pos
    cdef unsigned char *tape = <unsigned char *> malloc(size)
    cdef unsigned char *grown
    cdef long long entry, state = 0, cycles = 0
    cdef bint halted = False
    cdef bytes raw = bits.encode("ascii")
    cdef const unsigned char *src = raw
    if tape == NULL:
        raise MemoryError()
    try:
        memset(tape, BLANK, size)
        for i in range(n_in):
            tape[offset + i] = 1 if src[i] == 49 else 0
        head = offset
        lo = offset
        hi = offset + n_in - 1 if n_in else offset
        while True:
            entry = tab[state * 3 + tape[head]]
            if entry < 0:
                halted = True
                break
            if cycles >= budget:
                break
            tape[head] = <unsigned char> (entry & 3)
            if entry & 4:
                head += 1
                if head >= size:
                    grown = <unsigned char *> realloc(tape, 2 * size)
                    if grown == NULL:
                        raise MemoryError()
                    tape = grown
                    memset(tape + size, BLANK, size)
                    size *= 2
                if head > hi:
                    hi = head
            else:
                head -= 1
                if head < 0:
                    grown = <unsigned char *> realloc(tape, 2 * size)
                    if grown == NULL:
                        raise MemoryError()
                    tape = grown
                    memmove(tape + size, tape, size)
                    memset(tape, BLANK, size)
                    head += size
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
        i = pos
        while pos <= hi and tape[pos] != BLANK:
            tape[pos] += 48
            pos += 1
        return True, cycles, (<char *> tape)[i:pos].decode("ascii")
    finally:
        free(tape)


cdef int _beaver(const long long *tab, long long cutoff, unsigned char *tape,
                 Py_ssize_t size, long long *steps_out, long long *ones_out,
                 long long *slot_out) nogil:
    # tape holds 2 * cutoff + 3 zeroed cells; the head cannot leave it.
    cdef Py_ssize_t head = size // 2, lo = head, hi = head, p
    cdef long long state = 0, steps = 0, entry, slot, ones
    cdef unsigned char sym
    cdef int status = CUTOFF_C
    while steps < cutoff:
        sym = tape[head]
        slot = state * 2 + sym
        entry = tab[slot]
        if entry == -2:
            slot_out[0] = slot
            status = UNDEFINED_C
            break
        if entry == -1:
            ones = 1 - sym
            for p in range(lo, hi + 1):
                ones += tape[p]
            ones_out[0] = ones
            steps += 1
            status = HALTED_C
            break
        tape[head] = <unsigned char> (entry & 1)
        if entry & 2:
            head += 1
            if head > hi:
                hi = head
        else:
            head -= 1
            if head < lo:
                lo = head
        state = entry >> 2
        steps += 1
    steps_out[0] = steps
    memset(tape + lo, 0, hi - lo + 1)
    return status


def run_beaver(table, long long cutoff):
    cdef long long[::1] tab = _as_table(table)
    cdef Py_ssize_t size = 2 * cutoff + 3
    cdef unsigned char *tape = <unsigned char *> malloc(size)
    cdef long long steps = 0, ones = 0, slot = -1
    cdef int status
    if tape == NULL:
        raise MemoryError()
    try:
        memset(tape, 0, size)
        status = _beaver(&tab[0], cutoff, tape, size, &steps, &ones, &slot)
    finally:
        free(tape)
    if status == HALTED_C:
        return HALTED, steps, ones, -1
    if status == UNDEFINED_C:
        return UNDEFINED, steps, 0, slot
    return CUTOFF, steps, 0, -1


def brute_census(int n, long long cutoff, bint normalize):
    cdef int slots = 2 * n, s
    cdef list options = [beaver_options(n, normalize and s == 0) for s in range(slots)]
    cdef long long[:, ::1] opt = _option_grid(options)
    cdef long long[::1] counts = _as_table([len(o) for o in options])
    cdef long long[::1] idx = _as_table([0] * slots)
    cdef long long[::1] table = _as_table([o[0] for o in options])
    cdef Py_ssize_t size = 2 * cutoff + 3
    cdef unsigned char *tape = <unsigned char *> malloc(size)
    cdef long long steps, ones, slot
    cdef long long sigma = 0, s_max = 0, halted = 0, unresolved = 0
    cdef int status
    if tape == NULL:
        raise MemoryError()
    try:
        memset(tape, 0, size)
        with nogil:
            while True:
                status = _beaver(&table[0], cutoff, tape, size, &steps, &ones, &slot)
                if status == HALTED_C:
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
                    if idx[s] < counts[s]:
                        table[s] = opt[s, idx[s]]
                        break
                    idx[s] = 0
                    table[s] = opt[s, 0]
                    s += 1
                if s == slots:
                    break
    finally:
        free(tape)
    return sigma, s_max, halted, unresolved


cdef long long[:, ::1] _option_grid(list options):
    import array
    width = max(len(o) for o in options)
    flat = array.array("q", [0] * (len(options) * width))
    for r, o in enumerate(options):
        for c, v in enumerate(o):
            flat[r * width + c] = v
    return memoryview(flat).cast("B").cast("q", (len(options), width))
