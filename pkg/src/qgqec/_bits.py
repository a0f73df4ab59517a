"""Small bit-mask helpers shared across the GF(2) layers."""

try:
    popcount = int.bit_count
except AttributeError:  # Python < 3.11
    def popcount(v: int) -> int:
        return bin(v).count("1")


def bits_to_int(s: str) -> int:
    """'0'/'1' string, leftmost character most significant."""
    return int(s, 2) if s else 0


def int_to_bits(v: int, width: int) -> str:
    return format(v, f"0{width}b")


def rotl(v: int, i: int, width: int) -> int:
    """Cyclic left rotation of a width-bit value."""
    i %= width
    if i == 0:
        return v
    mask = (1 << width) - 1
    return ((v << i) | (v >> (width - i))) & mask
