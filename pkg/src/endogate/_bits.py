"""Packing helpers between bit arrays and little-endian uint64 words."""

import numpy as np

WORD = 64


def n_words(nbits: int) -> int:
    return max(1, (nbits + WORD - 1) // WORD)


def pack(bits: np.ndarray, nbits: int) -> np.ndarray:
    """Pack a (..., nbits) 0/1 array into (..., n_words(nbits)) uint64 words."""
    bits = np.asarray(bits, dtype=np.uint8)
    lead = bits.shape[:-1]
    w = n_words(nbits)
    padded = np.zeros(lead + (w * WORD,), dtype=np.uint8)
    padded[..., :nbits] = bits[..., :nbits]
    packed = np.packbits(padded, axis=-1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64).reshape(lead + (w,))


def unpack(words: np.ndarray, nbits: int) -> np.ndarray:
    """Inverse of :func:`pack`; returns a (..., nbits) uint8 array."""
    words = np.ascontiguousarray(np.asarray(words, dtype="<u8"))
    raw = words.view(np.uint8)
    bits = np.unpackbits(raw, axis=-1, bitorder="little")
    return bits[..., :nbits]


def words_to_int(words) -> int:
    out = 0
    for i, w in enumerate(np.asarray(words, dtype=np.uint64).tolist()):
        out |= int(w) << (WORD * i)
    return out


def int_to_words(value: int, nbits: int) -> np.ndarray:
    w = n_words(nbits)
    mask = (1 << WORD) - 1
    return np.array([(value >> (WORD * i)) & mask for i in range(w)], dtype=np.uint64)


def identity_combos(k: int) -> np.ndarray:
    """Row i is the unit vector e_i of length k, packed."""
    return pack(np.eye(k, dtype=np.uint8), k)
