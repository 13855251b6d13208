"""Acceptance suite: one criterion per test, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines.
Every tolerance is pinned here; exact claims use integer/rational
arithmetic with zero tolerance.
"""

import warnings
from contextlib import contextmanager
from fractions import Fraction

import numpy as np

from qcsst import census, fqlinear, make_field, statevec
from qcsst.css import make_css
from qcsst.csst import (check_rate_distance_bounds, contains_self_dual,
                        contains_self_dual_bruteforce, build_remark_csst,
                        is_csst, is_csst_definition, is_even,
                        self_orthogonal_codes)
from qcsst.fqlinear import (LinearCode, dual, enumerate_all_subcodes,
                            full_space, min_distance, sample_code,
                            sample_subcode)
from qcsst.hermitian import build_curve, even_subcode, hermitian_csst
from tests.conftest import EXTENDED_HAMMING_8_4, HAMMING_7_4


@contextmanager
def criterion(num: int, desc: str):
    try:
        yield
    except BaseException:
        print(f"\nACCEPTANCE {num:2d} FAIL  {desc}")
        raise
    print(f"\nACCEPTANCE {num:2d} PASS  {desc}")


def field_of_order(q):
    return make_field(2, q.bit_length() - 1) if q & (q - 1) == 0 \
        else make_field(q)


def test_criterion_01_steane_parameters(f2):
    with criterion(1, "Steane pair gives [[7,1]] with d1 = d2_perp = 3 "
                      "and capability (1,1,1), exact"):
        c1 = LinearCode.from_rows(f2, HAMMING_7_4)
        c2 = dual(c1)
        q = make_css(c1, c2)
        assert (q.n, q.quantum_dim) == (7, 1)
        assert q.d1 == 3 and q.d2_perp == 3
        from qcsst.css import correction_capability
        assert correction_capability(q) == (1, 1, 1)


def test_criterion_02_hermitian_family():
    with criterion(2, "Hermitian family: q=2 gives [[8, m-1]] CSS-T for "
                      "m=1..4 with R + delta2_perp/2 = 1/2 at m=4; "
                      "q=4, m=37 gives [[64, 31]] CSS-T at exactly 1/2"):
        curve2 = build_curve(2)
        assert curve2.field.q == 4
        for m in (1, 2, 3, 4):
            res = hermitian_csst(curve2, m)
            assert res.certification.verdict
            assert (res.css.n, res.css.quantum_dim) == (8, m - 1)
        top2 = hermitian_csst(curve2, 4)
        assert Fraction(top2.css.quantum_dim, top2.css.n) + \
            Fraction(top2.css.d2_perp, 2 * top2.css.n) == Fraction(1, 2)

        curve4 = build_curve(4)
        res4 = hermitian_csst(curve4, 37)
        assert res4.certification.verdict
        assert (res4.css.n, res4.css.quantum_dim) == (64, 31)
        assert Fraction(res4.css.quantum_dim, res4.css.n) + \
            Fraction(res4.css.d2_perp, 2 * res4.css.n) == Fraction(1, 2)


def test_criterion_03_even_subcode_structure():
    with criterion(3, "q=2 even subcode: all 64 words even, maximal under "
                      "exhaustive subcode search, dual distances exactly 2"):
        curve = build_curve(2)
        c1 = fqlinear.LinearCode.from_rows(
            curve.field, hermitian_csst(curve, 4).css.c1.generator)
        c2 = even_subcode(curve, 4)
        words = c2.codewords()
        assert words.shape[0] == 64
        assert not (np.count_nonzero(words, axis=1) % 2).any()
        evens = [d for d in enumerate_all_subcodes(c1) if is_even(d)]
        assert max(d.k for d in evens) == c2.k == 3
        assert all(c2.contains_code(d) for d in evens)
        assert min_distance(dual(c2)) == 2
        ones = LinearCode.from_rows(curve.field, [[1] * 8])
        assert min_distance(dual(ones)) == 2


def test_criterion_04_characterization_equals_definition():
    with criterion(4, "is_csst == is_csst_definition on all nested pairs "
                      "over GF(2) for n <= 5 and on 500 random pairs for "
                      "each q in {3,4,5}, n <= 6; zero mismatches"):
        f2 = make_field(2)
        for n in range(1, 6):
            for c1 in enumerate_all_subcodes(full_space(f2, n)):
                for c2 in enumerate_all_subcodes(c1):
                    assert is_csst(c1, c2).verdict == \
                        is_csst_definition(c1, c2)
        for q in (3, 4, 5):
            field = field_of_order(q)
            rng = np.random.default_rng(4000 + q)
            for _ in range(500):
                n = int(rng.integers(1, 7))
                k1 = int(rng.integers(0, n + 1))
                k2 = int(rng.integers(0, k1 + 1))
                c1 = sample_code(field, n, k1, rng)
                c2 = sample_subcode(c1, k2, rng)
                assert is_csst(c1, c2).verdict == is_csst_definition(c1, c2)


def test_criterion_05_self_dual_criterion_equals_bruteforce():
    with criterion(5, "closed-form self-dual containment == exhaustive "
                      "search on every code with dual inside it, q in "
                      "{2,3,4,5,7}, n <= 6, plus negative controls"):
        for q in (2, 3, 4, 5, 7):
            field = field_of_order(q)
            for n in range(1, 7):
                for d in self_orthogonal_codes(field, n):
                    code = dual(d)
                    got = contains_self_dual(code)
                    want = contains_self_dual_bruteforce(code)
                    assert got == want, (q, n, code.generator.tolist())
                    if n % 2 == 1:
                        assert got is False
                    if q % 4 == 3 and n % 4 == 2:
                        assert got is False


def test_criterion_06_density_bound_monte_carlo():
    with criterion(6, "pair-density Monte Carlo >= exact bound - 3*sigma on "
                      "the n=8, k1=4, k2=2, alpha=beta=2 grid for q in "
                      "{4,8,16}, N=2000; bound and estimate rise toward 1"):
        bounds = []
        estimates = []
        for q in (4, 8, 16):
            bound = census.density_lower_bound(8, 4, 2, 2, 2, q)
            est = census.estimate_pair_density(8, 4, 2, 2, 2, q, 2000, 7)
            assert est.estimate >= float(bound) - 3 * est.std_error, \
                (q, float(bound), est.estimate)
            bounds.append(bound)
            estimates.append(est.estimate)
        assert all(a < b for a, b in zip(bounds, bounds[1:]))
        assert all(a < b for a, b in zip(estimates, estimates[1:]))
        assert bounds[-1] > Fraction(24, 25) and estimates[-1] > 0.96


def test_criterion_07_bound_soundness():
    with criterion(7, "every applicable rate/distance inequality holds with "
                      "slack >= 0 in exact arithmetic; the extremal "
                      "construction and Hermitian instance have slack 0"):
        f2 = make_field(2)
        instances = []
        # the extremal constructions
        rep = LinearCode.from_rows(f2, [[1, 1]])
        instances.append(build_remark_csst(rep, [1, 1]))
        ext = LinearCode.from_rows(f2, EXTENDED_HAMMING_8_4)
        remark = build_remark_csst(ext, [1] * 8)
        instances.append(remark)
        # the Hermitian family
        curve2 = build_curve(2)
        hermitian_instances = [hermitian_csst(curve2, m) for m in (1, 2, 3, 4)]
        instances.extend(h.css for h in hermitian_instances)
        curve4 = build_curve(4)
        h4 = hermitian_csst(curve4, 37)
        instances.append(h4.css)
        # every certified pair over GF(2), n <= 4
        for n in range(1, 5):
            for c1 in enumerate_all_subcodes(full_space(f2, n)):
                for c2 in enumerate_all_subcodes(c1):
                    if is_csst(c1, c2).verdict:
                        instances.append(make_css(c1, c2))
        assert len(instances) > 40
        for inst in instances:
            report = check_rate_distance_bounds(inst)
            for chk in report.applicable_checks:
                assert chk.slack is not None and chk.slack >= 0, \
                    (inst.n, inst.k1, inst.k2, chk)
        for extremal in (remark, hermitian_csst(curve2, 4).css, h4.css):
            report = check_rate_distance_bounds(extremal)
            bound1 = report.checks[0]
            assert bound1.applicable and bound1.slack == 0


def test_criterion_08_construction_equivalence():
    with criterion(8, "Fourier-gate equivalence of the two constructions: "
                      "residual < 1e-9 on all nested pairs for q in {2,3}, "
                      "n <= 3, and the q=2, n=4 even-weight/repetition pair"):
        for q in (2, 3):
            field = make_field(q)
            for n in range(1, 4):
                for c1 in enumerate_all_subcodes(full_space(field, n)):
                    for c2 in enumerate_all_subcodes(c1):
                        ok, resid = statevec.verify_cs_steane_equivalence(
                            c1, c2, tol=1e-9)
                        assert ok and resid < 1e-9, (q, n, resid)
        f2 = make_field(2)
        c1 = LinearCode.from_rows(
            f2, [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]])
        c2 = LinearCode.from_rows(f2, [[1, 1, 1, 1]])
        ok, resid = statevec.verify_cs_steane_equivalence(c1, c2, tol=1e-9)
        assert ok and resid < 1e-9


def test_criterion_09_pair_distinctness():
    with criterion(9, "distinct nested pairs give distinct basis-state "
                      "sets, exhaustively for q=2, n in {2,3}"):
        f2 = make_field(2)
        for n in (2, 3):
            assert statevec.verify_pair_distinctness(f2, n)


def test_criterion_10_weightword_trend():
    with criterion(10, "fixed-weight-word density at n=6, k=4, omega=4 is "
                       "monotone in q over {2,4,8} and saturates at 1"):
        estimates = []
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            for q in (2, 4, 8):
                est = census.estimate_weightword_density(6, 4, 4, q, 600, 7)
                estimates.append(est.estimate)
        assert all(a <= b for a, b in zip(estimates, estimates[1:]))
        assert estimates[-1] == 1.0


def test_criterion_11_counting_identities():
    with criterion(11, "q-binomials match subspace enumeration (n <= 4, "
                       "q in {2,3}); full-radius balls have volume q^n; "
                       "q-binomial symmetry holds; all exact"):
        for q in (2, 3):
            field = make_field(q)
            for n in range(1, 5):
                for k in range(0, n + 1):
                    count = sum(1 for _ in fqlinear.enumerate_subspaces(
                        full_space(field, n), k))
                    assert count == census.gaussian_binomial(n, k, q)
        for n in range(1, 7):
            for q in (2, 3, 4, 5, 7, 8):
                assert census.ball_volume(n, q, n) == q**n
        for n in range(0, 9):
            for k in range(n + 1):
                for q in (2, 3, 4, 5):
                    assert census.gaussian_binomial(n, k, q) == \
                        census.gaussian_binomial(n, n - k, q)
