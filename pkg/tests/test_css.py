import numpy as np
import pytest

from qcsst import fqlinear, make_field
from qcsst.css import (correction_capability, css_equals, css_report,
                       make_css)
from qcsst.fqlinear import LinearCode, dual, full_space, sample_code, zero_code


@pytest.fixture
def steane(hamming):
    return make_css(hamming, dual(hamming))


def test_steane_parameters(steane):
    assert (steane.n, steane.quantum_dim) == (7, 1)
    assert steane.d1 == 3 and steane.d2_perp == 3
    assert steane.d == 3
    assert correction_capability(steane) == (1, 1, 1)


def test_equal_pair_gives_dimension_zero(hamming):
    q = make_css(hamming, hamming)
    assert q.quantum_dim == 0


def test_full_space_over_zero(f2):
    q = make_css(full_space(f2, 2), zero_code(f2, 2))
    assert (q.n, q.quantum_dim) == (2, 2)
    assert q.d1 == 1 and q.d2_perp == 1
    assert correction_capability(q) == (0, 0, 0)


def test_make_css_validation(f2, f3, hamming):
    with pytest.raises(ValueError):
        make_css(dual(hamming), hamming)  # containment fails
    with pytest.raises(ValueError):
        make_css(hamming, zero_code(f2, 6))  # length mismatch
    with pytest.raises(ValueError):
        make_css(hamming, zero_code(f3, 7))  # field mismatch


def test_unknown_distance_degrades_to_bounds(f2):
    # length-32 first-order Reed-Muller: distance 16 is far beyond the
    # shallow low-weight search, so with enumeration capped the exact d1
    # stays unknown while the cheap dual distance is still found
    rows = [[1] * 32] + [[(j >> i) & 1 for j in range(32)] for i in range(5)]
    c1 = LinearCode.from_rows(f2, np.array(rows, dtype=np.uint8))
    c2 = LinearCode.from_rows(f2, np.array([[1] * 32], dtype=np.uint8))
    q = make_css(c1, c2, cap=2, d1_floor=16)
    assert q.d1 is None and q.d1_lower == 16
    assert q.d2_perp == 2 and q.d2_perp_lower == 2
    assert correction_capability(q) == (7, 0, 0)
    with pytest.raises(fqlinear.EnumerationCapError):
        make_css(c1, c2, cap=2, support_cap=1000, require_distances=True)


def test_css_equals(hamming, f2):
    c2 = fqlinear.sample_subcode(dual(hamming), 2, np.random.default_rng(0))
    a = make_css(hamming, c2)
    b = make_css(hamming, c2)
    assert css_equals(a, b)
    smaller = fqlinear.sample_subcode(c2, 1, np.random.default_rng(1))
    c = make_css(hamming, smaller)
    assert not css_equals(a, c)  # same C1, different C2
    # the locally-equivalent swapped pair is a different pair
    swapped = make_css(dual(c2), dual(hamming))
    assert not css_equals(a, swapped)


def test_swapped_pair_symmetry():
    rng = np.random.default_rng(77)
    for q in (2, 3, 4):
        field = make_field(2, 2) if q == 4 else make_field(q)
        for _ in range(15):
            n = int(rng.integers(2, 7))
            k1 = int(rng.integers(0, n + 1))
            k2 = int(rng.integers(0, k1 + 1))
            c1 = sample_code(field, n, k1, rng)
            c2 = fqlinear.sample_subcode(c1, k2, rng)
            a = make_css(c1, c2)
            b = make_css(dual(c2), dual(c1))
            assert b.quantum_dim == a.quantum_dim
            ea, fa, _ = correction_capability(a)
            eb, fb, _ = correction_capability(b)
            assert (eb, fb) == (fa, ea)
            assert a.quantum_dim == a.k1 - a.k2


def test_css_report_schema(steane):
    rep = css_report(steane)
    assert rep["schema"] == "qcsst-css-v1"
    assert rep["q"] == 2 and rep["n"] == 7
    assert rep["k1"] == 4 and rep["k2"] == 3
    assert rep["quantum_dim"] == 1
    assert rep["d1"] == 3 and rep["d2_perp"] == 3
    assert (rep["e_max"], rep["f_max"], rep["t"]) == (1, 1, 1)
