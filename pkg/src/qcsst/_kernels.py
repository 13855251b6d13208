"""Kernel backend selection.

The compiled extension is preferred when importable; the numpy fallback is
used otherwise, or when QCSST_PURE=1 is set.  Both backends implement the
same contracts and return identical results.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels

_ckernels = None
if os.environ.get("QCSST_PURE") != "1":
    try:
        from . import _ckernels  # type: ignore[no-redef]
    except ImportError:
        _ckernels = None

BACKEND = _ckernels.BACKEND_NAME if _ckernels is not None else "python"


def weight_histogram(rows: np.ndarray, q: int, add_table: np.ndarray,
                     mul_table: np.ndarray, backend: str | None = None) -> np.ndarray:
    """Hamming-weight histogram over the full q^k span of generator rows.

    rows: (k, n) uint8 matrix over GF(q), entries in [0, q).  Returns an
    int64 array of length n+1; entry w counts span words of weight w
    (the zero word included, so the total is q^k).
    """
    rows = np.ascontiguousarray(rows, dtype=np.uint8)
    k, n = rows.shape
    use = backend or BACKEND
    if use == "cython" and _ckernels is not None and q <= 256:
        if q == 2:
            packed = _pykernels.pack_bits(rows)
            return _ckernels.gf2_weight_hist(packed, n)
        scaled = np.ascontiguousarray(
            mul_table[np.arange(q, dtype=np.uint8)[None, :, None],
                      rows[:, None, :]])
        return _ckernels.gfq_weight_hist(scaled, q, n,
                                         np.ascontiguousarray(add_table))
    if q == 2:
        return _pykernels.gf2_weight_hist(rows, n)
    return _pykernels.gfq_weight_hist(rows, q, n, add_table, mul_table)
