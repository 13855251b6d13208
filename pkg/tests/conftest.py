"""Shared fixtures and brute-force oracles.

The oracles here deliberately avoid the library's vectorised span/RREF
machinery: spans are generated by scalar field arithmetic over explicit
coefficient tuples, so they provide an independent route for expected
values.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from qcsst import fqlinear, make_field
from qcsst.galois import Field

HAMMING_7_4 = np.array([
    [1, 1, 0, 1, 0, 0, 0],
    [0, 1, 1, 0, 1, 0, 0],
    [0, 0, 1, 1, 0, 1, 0],
    [0, 0, 0, 1, 1, 0, 1],
], dtype=np.uint8)

# first-order Reed-Muller of length 8: the self-dual extended [8, 4, 4] code
EXTENDED_HAMMING_8_4 = np.array([
    [1, 1, 1, 1, 1, 1, 1, 1],
    [0, 1, 0, 1, 0, 1, 0, 1],
    [0, 0, 1, 1, 0, 0, 1, 1],
    [0, 0, 0, 0, 1, 1, 1, 1],
], dtype=np.uint8)


@pytest.fixture(scope="session")
def f2() -> Field:
    return make_field(2)


@pytest.fixture(scope="session")
def f3() -> Field:
    return make_field(3)


@pytest.fixture(scope="session")
def f4() -> Field:
    return make_field(2, 2)


@pytest.fixture(scope="session")
def f5() -> Field:
    return make_field(5)


@pytest.fixture(scope="session")
def hamming(f2) -> fqlinear.LinearCode:
    return fqlinear.LinearCode.from_rows(f2, HAMMING_7_4)


def brute_span(field: Field, rows) -> set[tuple[int, ...]]:
    """All codewords of the row span, by scalar arithmetic only."""
    rows = [list(int(x) for x in row) for row in rows]
    n = len(rows[0]) if rows else 0
    span = set()
    for coeffs in itertools.product(range(field.q), repeat=len(rows)):
        word = [0] * n
        for c, row in zip(coeffs, rows):
            for j in range(n):
                word[j] = field.add(word[j], field.mul(c, row[j]))
        span.add(tuple(word))
    return span


def brute_min_distance(field: Field, rows, n: int) -> int:
    """Minimum nonzero weight by exhaustive scalar-arithmetic enumeration."""
    words = brute_span(field, rows)
    weights = [sum(1 for x in w if x) for w in words if any(w)]
    return min(weights) if weights else n + 1


def random_code(field: Field, n: int, k: int, rng) -> fqlinear.LinearCode:
    return fqlinear.sample_code(field, n, k, rng)
