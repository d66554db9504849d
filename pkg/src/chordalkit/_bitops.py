"""Low-level bit twiddling shared by the graph type and the fast paths.

Adjacency is kept as little-endian packed rows (numpy ``uint8``); the same
bytes convert to arbitrary-precision ints for subset/intersection tests.
"""

from __future__ import annotations

import zlib

import numpy as np

_U64 = np.uint64
_MASK64 = (1 << 64) - 1

# popcount per byte value, used for degree sums over packed rows
POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint16)


def row_width(n: int) -> int:
    """Bytes needed for one packed row of n bits."""
    return (n + 7) >> 3


def packed_to_int(row: np.ndarray) -> int:
    """Little-endian packed row -> Python int bitset."""
    return int.from_bytes(row.tobytes(), "little")


def int_to_packed(bits: int, n: int) -> np.ndarray:
    w = row_width(n)
    return np.frombuffer(bits.to_bytes(w, "little"), dtype=np.uint8).copy()


def iter_bits(bits: int):
    """Yield set bit positions of a Python int, ascending."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def splitmix64(x: int) -> int:
    """One round of the splitmix64 mixer on a 64-bit value."""
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def mix64(*values: int) -> int:
    """Fold integers into one 64-bit hash, order-sensitive and stable."""
    h = 0
    for v in values:
        h = splitmix64(h ^ (v & _MASK64))
    return h


def splitmix64_np(x: np.ndarray) -> np.ndarray:
    """Vectorized splitmix64; must match :func:`splitmix64` exactly."""
    with np.errstate(over="ignore"):
        z = (x.astype(_U64) + _U64(0x9E3779B97F4A7C15)).astype(_U64)
        z = (z ^ (z >> _U64(30))) * _U64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> _U64(27))) * _U64(0x94D049BB133111EB)
        return z ^ (z >> _U64(31))


def mix64_np(prefix: int, values: np.ndarray) -> np.ndarray:
    """Vectorized tail step of :func:`mix64`: mix64(*prefix_parts, v) per v.

    ``prefix`` must already be the folded hash of the leading parts.
    """
    return splitmix64_np(np.asarray(prefix, dtype=_U64) ^ values.astype(_U64))


def label_hash(text: str) -> int:
    """Stable 32-bit hash of a short string (process-independent)."""
    return zlib.crc32(text.encode("ascii"))
