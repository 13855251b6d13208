"""Backend agreement: compiled kernels vs numpy fallback vs scalar oracle."""

import numpy as np
import pytest

from qcsst import _kernels, fqlinear, make_field
from tests.conftest import brute_span

HAVE_CYTHON = _kernels.BACKEND == "cython"


def _hist(field, rows, backend):
    return _kernels.weight_histogram(np.asarray(rows, dtype=np.uint8),
                                     field.q, field.add_table,
                                     field.mul_table, backend=backend)


@pytest.mark.parametrize("q,e", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3)])
def test_histogram_matches_scalar_oracle(q, e):
    field = make_field(q, e)
    rng = np.random.default_rng(q * 100 + e)
    for k, n in [(0, 4), (1, 5), (2, 6), (3, 7)]:
        code = fqlinear.sample_code(field, n, k, rng)
        rows = code.generator
        words = brute_span(field, rows.tolist())
        expected = np.zeros(n + 1, dtype=np.int64)
        for w in words:
            expected[sum(1 for x in w if x)] += 1
        got = _hist(field, rows, backend="python")
        assert got.tolist() == expected.tolist()
        if HAVE_CYTHON:
            got_c = _hist(field, rows, backend="cython")
            assert got_c.tolist() == expected.tolist()


@pytest.mark.skipif(not HAVE_CYTHON, reason="compiled kernels unavailable")
@pytest.mark.parametrize("q,e,n,k", [(2, 1, 40, 14), (2, 2, 12, 6),
                                     (3, 1, 14, 8), (2, 4, 9, 5),
                                     (7, 1, 8, 5)])
def test_backends_agree_on_random_codes(q, e, n, k):
    field = make_field(q, e)
    rng = np.random.default_rng(1234 + q + n)
    code = fqlinear.sample_code(field, n, k, rng)
    a = _hist(field, code.generator, backend="python")
    b = _hist(field, code.generator, backend="cython")
    assert a.tolist() == b.tolist()
    assert int(a.sum()) == field.q**k


def test_histogram_totals_and_zero_bucket(f4):
    rng = np.random.default_rng(9)
    code = fqlinear.sample_code(f4, 8, 4, rng)
    hist = _hist(f4, code.generator, backend="python")
    assert int(hist.sum()) == 4**4
    assert hist[0] == 1  # full-rank generator: only the zero word


def test_empty_generator():
    field = make_field(2)
    hist = _hist(field, np.zeros((0, 5), dtype=np.uint8), backend="python")
    assert hist.tolist() == [1, 0, 0, 0, 0, 0]
