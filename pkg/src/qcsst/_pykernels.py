"""Pure-python (numpy) enumeration kernels.

Fallback backend for the compiled extension; same contracts, same results.
Full codeword spans are enumerated meet-in-the-middle so memory stays
bounded by the left block while the right block is streamed.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

_LEFT_BLOCK = 1 << 14  # max rows materialised for the left half of the span


def _popcount_u64(arr: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(arr)
    table = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)
    return table[arr.view(np.uint8)].reshape(arr.shape + (8,)).sum(-1)


def pack_bits(rows: np.ndarray) -> np.ndarray:
    """Pack 0/1 rows (k, n) into uint64 words (k, ceil(n/64))."""
    k, n = rows.shape
    nwords = (n + 63) // 64
    packed = np.zeros((k, nwords), dtype=np.uint64)
    for j in range(n):
        packed[:, j >> 6] |= rows[:, j].astype(np.uint64) << np.uint64(j & 63)
    return packed


def gf2_weight_hist(rows01: np.ndarray, n: int) -> np.ndarray:
    """Weight histogram of the full 2^k span of 0/1 generator rows."""
    k = rows01.shape[0]
    hist = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        hist[0] = 1
        return hist
    packed = pack_bits(np.asarray(rows01, dtype=np.uint8))
    k_left = k
    while (1 << k_left) > _LEFT_BLOCK and k_left > 1:
        k_left -= 1
    left = np.zeros((1, packed.shape[1]), dtype=np.uint64)
    for i in range(k_left):
        left = np.vstack([left, left ^ packed[i]])
    right_rows = packed[k_left:]
    # stream the right span in gray-code order
    cur = np.zeros(packed.shape[1], dtype=np.uint64)
    for idx in range(1 << (k - k_left)):
        if idx > 0:
            j = (idx & -idx).bit_length() - 1
            cur = cur ^ right_rows[j]
        weights = _popcount_u64(left ^ cur).sum(axis=1).astype(np.int64)
        hist += np.bincount(weights, minlength=n + 1)
    return hist


def span_block(rows: np.ndarray, q: int, add_table: np.ndarray,
               mul_table: np.ndarray) -> np.ndarray:
    """All q^k words of the span of rows (k, n), in odometer order.

    Row index i corresponds to coefficient digits (c_0, ..., c_{k-1}) with
    c_0 varying fastest: i = sum c_j * q^j.
    """
    n = rows.shape[1]
    words = np.zeros((1, n), dtype=rows.dtype)
    for row in rows:
        scaled = mul_table[np.arange(q, dtype=rows.dtype)[:, None], row[None, :]]
        words = add_table[words[None, :, :], scaled[:, None, :]].reshape(-1, n)
    return words


def gfq_weight_hist(rows: np.ndarray, q: int, n: int, add_table: np.ndarray,
                    mul_table: np.ndarray) -> np.ndarray:
    """Weight histogram of the full q^k span of generator rows over GF(q)."""
    k = rows.shape[0]
    hist = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        hist[0] = 1
        return hist
    k_left = k
    while q**k_left > _LEFT_BLOCK and k_left > 1:
        k_left -= 1
    left = span_block(rows[:k_left], q, add_table, mul_table)
    right = rows[k_left:]
    digits = [0] * (k - k_left)
    cur = np.zeros(n, dtype=rows.dtype)
    scaled = [mul_table[np.arange(q, dtype=rows.dtype)[:, None], r[None, :]]
              for r in right]
    while True:
        weights = np.count_nonzero(add_table[left, cur[None, :]], axis=1)
        hist += np.bincount(weights, minlength=n + 1)
        # odometer over the right digits; recompute cur from scratch on carry
        i = 0
        while i < len(digits) and digits[i] == q - 1:
            digits[i] = 0
            i += 1
        if i == len(digits):
            break
        digits[i] += 1
        cur = np.zeros(n, dtype=rows.dtype)
        for j, d in enumerate(digits):
            if d:
                cur = add_table[cur, scaled[j][d]]
    return hist
