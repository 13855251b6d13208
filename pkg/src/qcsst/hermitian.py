"""One-point evaluation codes on the Hermitian curve and their CSS-T family.

For q a power of 2, the curve y^q + y = x^(q+1) over GF(q^2) has q^3 affine
points (q of them over each x-coordinate) and genus q(q-1)/2.  Functions
with poles only at the point at infinity form the Weierstrass semigroup
generated by q (pole order of x) and q+1 (pole order of y), so the space of
functions with pole order at most m has the monomial basis

    { x^i y^j : i*q + j*(q+1) <= m, 0 <= j <= q-1 }.

Evaluating at all affine points gives codes over GF(q^2) of length q^3 and
dimension m - g + 1 (for m >= 2g - 1), with minimum distance at least
q^3 - m.  Taking C2 to be the span of the all-ones word yields the CSS-T
family; at the top of the admissible range the pair meets the rate bound
R + delta2_perp/2 = 1/2 with equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import csst as csst_mod
from .css import CssCode, css_report, make_css
from .csst import BoundReport, CsstReport
from .fqlinear import LinearCode
from .galois import Field, make_field


@dataclass(frozen=True)
class HermitianCurve:
    """The curve y^q + y = x^(q+1) with its rational points enumerated.

    Points are (x, y) pairs of field-element encodings over GF(q^2), in
    lexicographic order, which fixes the code coordinates reproducibly.
    """

    q: int
    field: Field
    points: tuple[tuple[int, int], ...]
    genus: int

    @property
    def n(self) -> int:
        return len(self.points)


def build_curve(q: int) -> HermitianCurve:
    """Enumerate the q^3 affine points of the curve over GF(q^2)."""
    if q < 2 or q & (q - 1):
        raise ValueError(f"q must be a power of 2, got {q}")
    e = 2 * (q.bit_length() - 1)
    field = make_field(2, e)
    points = []
    for alpha in field.elements():
        rhs = field.pow(alpha, q + 1)
        fiber = [(alpha, beta) for beta in field.elements()
                 if field.add(field.pow(beta, q), beta) == rhs]
        if len(fiber) != q:
            raise AssertionError(
                f"fiber over x={alpha} has {len(fiber)} points, expected {q}")
        points.extend(fiber)
    if len(points) != q**3:
        raise AssertionError(f"found {len(points)} points, expected {q ** 3}")
    return HermitianCurve(q=q, field=field, points=tuple(points),
                          genus=q * (q - 1) // 2)


@dataclass(frozen=True)
class RrBasis:
    """Monomial basis of the functions with pole order at most m at infinity."""

    m: int
    monomials: tuple[tuple[int, int], ...]  # (i, j) exponent pairs for x^i y^j

    @property
    def dimension(self) -> int:
        return len(self.monomials)


def rr_basis(curve: HermitianCurve, m: int) -> RrBasis:
    """Monomials x^i y^j with i*q + j*(q+1) <= m and 0 <= j <= q-1.

    Pole orders i*q + j*(q+1) are distinct across the admissible range
    (j is the pole order mod q), so sorting by pole order is unambiguous.
    """
    if m < 0:
        raise ValueError(f"pole-order budget must be >= 0, got {m}")
    q = curve.q
    monomials = [(i, j)
                 for j in range(min(q - 1, m // (q + 1)) + 1)
                 for i in range((m - j * (q + 1)) // q + 1)]
    monomials.sort(key=lambda ij: ij[0] * q + ij[1] * (q + 1))
    return RrBasis(m=m, monomials=tuple(monomials))


def _evaluation_rows(curve: HermitianCurve,
                     monomials: tuple[tuple[int, int], ...]) -> np.ndarray:
    field = curve.field
    max_i = max((ij[0] for ij in monomials), default=0)
    max_j = max((ij[1] for ij in monomials), default=0)
    rows = np.zeros((len(monomials), curve.n), dtype=np.uint8)
    for col, (alpha, beta) in enumerate(curve.points):
        xpow = [1]
        for _ in range(max_i):
            xpow.append(field.mul(xpow[-1], alpha))
        ypow = [1]
        for _ in range(max_j):
            ypow.append(field.mul(ypow[-1], beta))
        for row, (i, j) in enumerate(monomials):
            rows[row, col] = field.mul(xpow[i], ypow[j])
    return rows


def designed_distance(curve: HermitianCurve, m: int) -> int:
    """Guaranteed lower bound on the distance of the order-m code."""
    return curve.n - m


def one_point_code(curve: HermitianCurve, m: int) -> LinearCode:
    """Evaluation code of the pole-order-m function space at all points."""
    if not 0 <= m < curve.n:
        raise ValueError(f"need 0 <= m < {curve.n}, got m={m}")
    basis = rr_basis(curve, m)
    rows = _evaluation_rows(curve, basis.monomials)
    code = LinearCode.from_rows(curve.field, rows, curve.n)
    if code.k != basis.dimension:
        raise AssertionError(
            f"evaluation not injective: rank {code.k} < {basis.dimension}")
    return code


def even_subcode(curve: HermitianCurve, m: int) -> LinearCode:
    """The largest even subcode: evaluation of 1, x, ..., x^floor(m/q).

    These functions are constant on the q-point fibers over each
    x-coordinate, so every codeword weight is a multiple of q (even).
    """
    if m < 0:
        raise ValueError(f"pole-order budget must be >= 0, got {m}")
    monomials = tuple((i, 0) for i in range(m // curve.q + 1))
    rows = _evaluation_rows(curve, monomials)
    return LinearCode.from_rows(curve.field, rows, curve.n)


def admissible_range(curve: HermitianCurve) -> tuple[int, int]:
    """Admissible pole orders for the CSS-T family: [q^2-q-1, (q^3+q^2-q-2)/2]."""
    q = curve.q
    return q * q - q - 1, (q**3 + q * q - q - 2) // 2


@dataclass(frozen=True)
class HermitianCsst:
    """The CSS-T instance built from the order-m code and the all-ones span."""

    curve: HermitianCurve
    m: int
    css: CssCode
    certification: CsstReport
    bounds: BoundReport | None
    in_admissible_range: bool

    def to_json(self) -> dict:
        lo, hi = admissible_range(self.curve)
        return {
            "schema": "qcsst-hermitian-v1",
            "q": self.curve.q,
            # the codes live over the quadratic extension; the qudit
            # alphabet reported here is that field's order
            "field_order": self.curve.field.q,
            "genus": self.curve.genus,
            "m": self.m,
            "m_range": [lo, hi],
            "in_admissible_range": self.in_admissible_range,
            "quantum_dim": self.css.quantum_dim,
            "designed_d1": designed_distance(self.curve, self.m),
            "css": css_report(self.css),
            "certification": self.certification.to_json(),
            "bounds": None if self.bounds is None else self.bounds.to_json(),
            "rate_plus_half_dual_delta": str(
                Fraction(self.css.quantum_dim, self.css.n)
                + Fraction(self.css.d2_perp, 2 * self.css.n))
            if self.css.d2_perp is not None else None,
        }


def hermitian_csst(curve: HermitianCurve, m: int) -> HermitianCsst:
    """The CSS-T pair (order-m code, span of the all-ones word).

    Outside the admissible m range the pair is still constructed (flagged),
    but certification may fail.
    """
    c1 = one_point_code(curve, m)
    ones = np.ones((1, curve.n), dtype=np.uint8)
    c2 = LinearCode.from_rows(curve.field, ones, curve.n)
    code = make_css(c1, c2, d1_floor=designed_distance(curve, m))
    report = csst_mod.is_csst(c1, c2)
    bounds = csst_mod.check_rate_distance_bounds(code, report) \
        if report.verdict else None
    lo, hi = admissible_range(curve)
    return HermitianCsst(curve=curve, m=m, css=code, certification=report,
                         bounds=bounds, in_admissible_range=lo <= m <= hi)
