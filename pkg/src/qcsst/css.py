"""CSS quantum codes from nested pairs of classical linear codes.

A CSS code is identified with its defining pair (C1, C2), C2 a subcode of
C1; distinct pairs give distinct quantum codes, so pair equality on
canonical generator matrices is quantum-code equality.  Quantum parameters
are [[n, k1 - k2]] with X/Z correction radii governed by d(C1) and the dual
distance of C2.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fqlinear
from .fqlinear import EnumerationCapError, LinearCode


@dataclass(frozen=True)
class CssCode:
    """Validated nested pair with computed quantum parameters.

    Distances may be unknown when exhaustive computation is infeasible; in
    that case the corresponding ``*_lower`` field still carries a guaranteed
    lower bound (at worst 1), and the exact field is None.
    """

    c1: LinearCode
    c2: LinearCode
    d1: int | None
    d1_lower: int
    d2_perp: int | None
    d2_perp_lower: int

    @property
    def field(self):
        return self.c1.field

    @property
    def n(self) -> int:
        return self.c1.n

    @property
    def k1(self) -> int:
        return self.c1.k

    @property
    def k2(self) -> int:
        return self.c2.k

    @property
    def quantum_dim(self) -> int:
        return self.k1 - self.k2

    @property
    def d(self) -> int | None:
        if self.d1 is None or self.d2_perp is None:
            return None
        return min(self.d1, self.d2_perp)

    @property
    def d_lower(self) -> int:
        return min(self.d1_lower, self.d2_perp_lower)


# shallow budget for the low-weight fallback inside make_css: enough to
# catch small distances of large-dimension codes quickly, cheap to abandon
_AUTO_SUPPORT_BUDGET = 4096


def _distance_or_bound(code: LinearCode, cap: int, floor: int | None,
                       support_cap: int) -> tuple[int | None, int]:
    """(exact distance or None, guaranteed lower bound)."""
    lower = floor if floor is not None else 1
    try:
        d = fqlinear.min_distance(code, cap=cap, support_cap=support_cap)
    except EnumerationCapError:
        return None, max(lower, 1)
    return d, d


def make_css(c1: LinearCode, c2: LinearCode, *,
             cap: int = fqlinear.DEFAULT_ENUM_CAP,
             support_cap: int | None = None,
             d1_floor: int | None = None,
             d2_perp_floor: int | None = None,
             require_distances: bool = False) -> CssCode:
    """Build and validate the CSS code of the nested pair (C1, C2).

    Distances are computed eagerly when feasible under the caps.  When a
    distance is out of reach, it is left unknown unless require_distances is
    set, in which case the cap error propagates.  Optional floors let a
    caller record a designed lower bound (e.g. from a code construction).
    """
    if c1.field != c2.field:
        raise ValueError("component codes live over different fields")
    if c1.n != c2.n:
        raise ValueError(f"length mismatch: {c1.n} vs {c2.n}")
    if not c1.contains_code(c2):
        raise ValueError("C2 is not a subcode of C1")
    if require_distances:
        scap = support_cap if support_cap is not None \
            else fqlinear.DEFAULT_SUPPORT_CAP
        d1 = fqlinear.min_distance(c1, cap=cap, support_cap=scap)
        d2p = fqlinear.min_distance(fqlinear.dual(c2), cap=cap,
                                    support_cap=scap)
        d1_pair: tuple[int | None, int] = (d1, d1)
        d2_pair: tuple[int | None, int] = (d2p, d2p)
    else:
        scap = support_cap if support_cap is not None else _AUTO_SUPPORT_BUDGET
        d1_pair = _distance_or_bound(c1, cap, d1_floor, scap)
        d2_pair = _distance_or_bound(fqlinear.dual(c2), cap, d2_perp_floor,
                                     scap)
    return CssCode(c1=c1, c2=c2, d1=d1_pair[0], d1_lower=d1_pair[1],
                   d2_perp=d2_pair[0], d2_perp_lower=d2_pair[1])


def correction_capability(code: CssCode) -> tuple[int, int, int]:
    """(e_max, f_max, t): correctable X-error, Z-error, and mixed radii.

    e_max = floor((d1-1)/2) and f_max = floor((d2_perp-1)/2); together any
    X^e Z^f pattern with e <= e_max, f <= f_max is correctable, and any
    pattern of weight at most t = floor((min(d1, d2_perp)-1)/2) is.  When a
    distance is unknown, its guaranteed lower bound is used, so the returned
    capability is itself a guarantee.
    """
    d1 = code.d1 if code.d1 is not None else code.d1_lower
    d2p = code.d2_perp if code.d2_perp is not None else code.d2_perp_lower
    e_max = (d1 - 1) // 2
    f_max = (d2p - 1) // 2
    t = (min(d1, d2p) - 1) // 2
    return e_max, f_max, t


def css_equals(qa: CssCode, qb: CssCode) -> bool:
    """Quantum-code equality, decided on the defining classical pair."""
    return qa.c1 == qb.c1 and qa.c2 == qb.c2


def css_report(code: CssCode) -> dict:
    """JSON-ready parameter report."""
    e_max, f_max, t = correction_capability(code)
    return {
        "schema": "qcsst-css-v1",
        "q": code.field.q,
        "n": code.n,
        "k1": code.k1,
        "k2": code.k2,
        "quantum_dim": code.quantum_dim,
        "d1": code.d1,
        "d1_lower": code.d1_lower,
        "d2_perp": code.d2_perp,
        "d2_perp_lower": code.d2_perp_lower,
        "e_max": e_max,
        "f_max": f_max,
        "t": t,
    }
