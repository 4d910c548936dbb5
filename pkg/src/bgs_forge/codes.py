"""Integer/bit-string codes shared by the machine, clock and CNF codecs.

Bit strings are plain ``str`` values over the characters ``"0"`` and ``"1"``.
"""

from __future__ import annotations

from math import isqrt


def rank_to_string(rank: int) -> str:
    """Return the bit string at position ``rank`` of the length-lex order.

    >>> [rank_to_string(r) for r in range(7)]
    ['', '0', '1', '00', '01', '10', '11']
    """
    if rank < 0:
        raise ValueError(f"rank must be nonnegative, got {rank}")
    return bin(rank + 1)[3:]


def string_to_rank(bits: str) -> int:
    """Inverse of :func:`rank_to_string`."""
    check_bits(bits)
    return int("1" + bits, 2) - 1


def check_bits(bits: str) -> str:
    if not isinstance(bits, str) or bits.strip("01"):
        raise ValueError(f"not a bit string: {bits!r}")
    return bits


def gamma(value: int) -> str:
    """Elias-gamma code of a positive integer."""
    if value < 1:
        raise ValueError(f"gamma code needs a positive integer, got {value}")
    body = bin(value)[2:]
    return "0" * (len(body) - 1) + body


class BitReader:
    """Cursor over a bit string. Reads return ``None`` once the bits run out."""

    __slots__ = ("bits", "pos")

    def __init__(self, bits: str):
        self.bits = bits
        self.pos = 0

    def read(self) -> str | None:
        if self.pos >= len(self.bits):
            return None
        bit = self.bits[self.pos]
        self.pos += 1
        return bit

    def read_int(self, width: int) -> int | None:
        if self.pos + width > len(self.bits):
            self.pos = len(self.bits)
            return None
        chunk = self.bits[self.pos:self.pos + width]
        self.pos += width
        return int(chunk, 2) if chunk else 0

    def read_gamma(self) -> int | None:
        """Decode one gamma code; ``None`` if the code is cut off."""
        zeros = 0
        while True:
            bit = self.read()
            if bit is None:
                return None
            if bit == "1":
                break
            zeros += 1
        rest = self.read_int(zeros)
        if rest is None:
            return None
        return (1 << zeros) | rest

    @property
    def exhausted(self) -> bool:
        return self.pos >= len(self.bits)


def cantor_pair(i: int, j: int) -> int:
    """Cantor pairing ``(i, j) -> (i + j)(i + j + 1)/2 + j``."""
    if i < 0 or j < 0:
        raise ValueError("pairing is defined on naturals only")
    w = i + j
    return w * (w + 1) // 2 + j


def cantor_unpair(z: int) -> tuple[int, int]:
    if z < 0:
        raise ValueError("pairing is defined on naturals only")
    w = (isqrt(8 * z + 1) - 1) // 2
    j = z - w * (w + 1) // 2
    return w - j, j
