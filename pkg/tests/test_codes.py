import pytest
from hypothesis import given
from hypothesis import strategies as st

from bgs_forge.codes import (
    BitReader,
    cantor_pair,
    cantor_unpair,
    gamma,
    rank_to_string,
    string_to_rank,
)


def test_length_lex_prefix():
    assert [rank_to_string(r) for r in range(7)] == ["", "0", "1", "00", "01", "10", "11"]


def test_rank_roundtrip_exhaustive():
    seen = set()
    for r in range(100_000):
        s = rank_to_string(r)
        assert string_to_rank(s) == r
        seen.add(s)
    assert len(seen) == 100_000


def test_rank_order_is_length_then_lex():
    strings = [rank_to_string(r) for r in range(2000)]
    assert strings == sorted(strings, key=lambda s: (len(s), s))


@pytest.mark.parametrize("value, code", [(1, "1"), (2, "010"), (3, "011"), (4, "00100"), (9, "0001001")])
def test_gamma_known_codes(value, code):
    assert gamma(value) == code


@given(st.lists(st.integers(min_value=1, max_value=10**12), max_size=20))
def test_gamma_stream_roundtrip(values):
    reader = BitReader("".join(gamma(v) for v in values))
    assert [reader.read_gamma() for _ in values] == values
    assert reader.exhausted


@pytest.mark.parametrize("bits", ["", "0", "00", "001", "0001"])
def test_gamma_cut_off_is_none(bits):
    assert BitReader(bits).read_gamma() is None


def test_gamma_rejects_nonpositive():
    with pytest.raises(ValueError):
        gamma(0)


def test_pairing_base_and_roundtrip():
    assert cantor_unpair(0) == (0, 0)
    for z in range(10_000):
        assert cantor_pair(*cantor_unpair(z)) == z


@given(st.integers(0, 10**9), st.integers(0, 10**9))
def test_pairing_inverse(i, j):
    assert cantor_unpair(cantor_pair(i, j)) == (i, j)


def test_bad_bits_rejected():
    with pytest.raises(ValueError):
        string_to_rank("012")
