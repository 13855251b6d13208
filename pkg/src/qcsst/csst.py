"""CSS-T certification and its supporting machinery.

A CSS pair (C1, C2) supports a transversal T gate when C2 is even and, for
every x in C2, the shortening of the dual of C1 to the support of x contains
a self-dual code.  Two independent routes decide this:

* ``is_csst`` applies the closed-form characterization: for each x, the
  projection of C1 onto the support of x must be self-orthogonal under the
  length-wt(x) inner product, plus a wt(x)/2 parity condition when
  q = 3 (mod 4).
* ``is_csst_definition`` runs the definition literally, using an exhaustive
  search for self-dual subcodes (``contains_self_dual_bruteforce``).

The same split exists for self-dual containment: ``contains_self_dual`` is
the closed-form criterion (evenness conditions on the length plus
self-orthogonality of the dual) and ``contains_self_dual_bruteforce`` is
the search oracle.  Certified instances can then be checked against three
rate/distance trade-off inequalities in exact rational arithmetic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import fqlinear
from .css import CssCode, make_css
from .fqlinear import (DEFAULT_DENSE_CAP, DEFAULT_ENUM_CAP,
                       EnumerationCapError, LinearCode, gf_matmul, rref)
from .galois import Field


# ----------------------------------------------------------------------
# even codes
# ----------------------------------------------------------------------

def is_even(code: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Whether every codeword has even Hamming weight.

    Over GF(2) the even-weight property is closed under addition, so the
    generators suffice; over larger fields it is not, and the whole code is
    enumerated.
    """
    if code.q == 2:
        return all(int(np.count_nonzero(row)) % 2 == 0
                   for row in code.generator)
    hist = code.weight_histogram(cap)
    return not hist[1::2].any()


# ----------------------------------------------------------------------
# self-dual containment: closed form and exhaustive search
# ----------------------------------------------------------------------

def contains_self_dual(code: LinearCode) -> bool:
    """Closed-form criterion for containing a self-dual subcode.

    In characteristic 2 and for q = 1 (mod 4): the length must be even and
    the dual self-orthogonal.  For q = 3 (mod 4): the length must be
    divisible by 4 and the dual self-orthogonal.
    """
    dual_inside = code.contains_code(fqlinear.dual(code))
    if code.field.p == 2 or code.q % 4 == 1:
        return code.n % 2 == 0 and dual_inside
    return code.n % 4 == 0 and dual_inside


def _vector_norms(field: Field, words: np.ndarray) -> np.ndarray:
    """<v, v> for each row, via table arithmetic."""
    add, mul = field.add_table, field.mul_table
    sq = mul[words, words]
    acc = np.zeros(words.shape[0], dtype=np.uint8)
    for j in range(words.shape[1]):
        acc = add[acc, sq[:, j]]
    return acc


def _normalize_rows(field: Field, arr: np.ndarray) -> np.ndarray:
    """Scale each nonzero row so its first nonzero entry is 1."""
    if arr.size == 0:
        return arr
    first = (arr != 0).argmax(axis=1)
    lead = arr[np.arange(arr.shape[0]), first]
    return field.mul_table[field.inv_table[lead][:, None], arr]


def _reduce_rows(code: LinearCode, arr: np.ndarray) -> np.ndarray:
    """Residues of many vectors after elimination against the code rows."""
    arr = np.array(arr, dtype=np.uint8, copy=True)
    sub, mul = code.field.sub_table, code.field.mul_table
    for i, p in enumerate(code.pivots):
        col = arr[:, p].copy()
        if col.any():
            arr = sub[arr, mul[col[:, None], code.generator[i][None, :]]]
    return arr


@functools.lru_cache(maxsize=128)
def _self_orthogonal_levels(field: Field, n: int, stop_dim: int,
                            cap: int) -> tuple[tuple[LinearCode, ...], ...]:
    """levels[d] = every self-orthogonal d-dimensional subspace of GF(q)^n,
    found by breadth-first extension with isotropic vectors.

    Complete because every self-orthogonal space of dimension d contains
    self-orthogonal hyperplanes, so each level is reachable from the one
    below.
    """
    q = field.q
    if q**n > cap:
        raise EnumerationCapError(
            f"isotropic scan over {q**n} vectors exceeds cap {cap}")
    ambient = fqlinear.full_space(field, n)
    words = ambient.codewords(cap)
    norms = _vector_norms(field, words)
    nonzero = words.any(axis=1)
    first = (words != 0).argmax(axis=1)
    lead = words[np.arange(words.shape[0]), first]
    iso = words[(norms == 0) & nonzero & (lead == 1)]
    levels: list[tuple[LinearCode, ...]] = [(fqlinear.zero_code(field, n),)]
    frontier = levels[0]
    for _dim in range(1, stop_dim + 1):
        found: dict[tuple, LinearCode] = {}
        for code in frontier:
            if code.k == 0:
                cands = iso
            else:
                prods = gf_matmul(field, iso, code.generator.T)
                cands = iso[~prods.any(axis=1)]
            if cands.size == 0:
                continue
            residues = _normalize_rows(field, _reduce_rows(code, cands))
            residues = residues[residues.any(axis=1)]
            if residues.size == 0:
                continue
            for res in np.unique(residues, axis=0):
                ext = LinearCode.from_rows(
                    field, np.vstack([code.generator, res[None, :]]), n)
                found.setdefault(ext.key(), ext)
        frontier = tuple(found.values())
        levels.append(frontier)
        if not frontier:
            break
    return tuple(levels)


def self_dual_codes(field: Field, n: int,
                    cap: int = DEFAULT_DENSE_CAP) -> tuple[LinearCode, ...]:
    """Every self-dual code of length n over the field (exhaustive)."""
    if n % 2:
        return ()
    levels = _self_orthogonal_levels(field, n, n // 2, cap)
    return levels[n // 2] if len(levels) > n // 2 else ()


def self_orthogonal_codes(field: Field, n: int,
                          cap: int = DEFAULT_DENSE_CAP) -> list[LinearCode]:
    """Every self-orthogonal code of length n over the field, all dimensions."""
    levels = _self_orthogonal_levels(field, n, n // 2, cap)
    return [code for level in levels for code in level]


def contains_self_dual_bruteforce(code: LinearCode,
                                  cap: int = DEFAULT_DENSE_CAP) -> bool:
    """Exhaustive-search oracle: does some self-dual D sit inside the code?

    Scans the complete registry of self-dual codes of this length (built
    once per field/length by breadth-first isotropic search) for a subcode.
    """
    n = code.n
    if n % 2:
        return False
    if code.k < n // 2:
        return False  # a self-dual subcode has dimension n/2
    return any(code.contains_code(sd)
               for sd in self_dual_codes(code.field, n, cap))


# ----------------------------------------------------------------------
# CSS-T certification
# ----------------------------------------------------------------------

COND_EVEN = "evenness"
COND_ORTHO = "projection-self-orthogonality"
COND_PARITY = "weight-parity"


@dataclass(frozen=True)
class CsstWitness:
    vector: tuple[int, ...]
    condition: str


@dataclass(frozen=True)
class CsstReport:
    """Outcome of CSS-T certification.

    On failure, ``witness`` carries a concrete codeword of C2 violating the
    named condition; re-running the check on it fails again.
    """

    verdict: bool
    branch: str  # "char-2" | "1-mod-4" | "3-mod-4"
    witness: CsstWitness | None
    checked_codewords: int
    n: int
    k1: int
    k2: int

    def to_json(self) -> dict:
        return {
            "schema": "qcsst-csst-v1",
            "verdict": self.verdict,
            "branch": self.branch,
            "n": self.n,
            "k1": self.k1,
            "k2": self.k2,
            "checked_codewords": self.checked_codewords,
            "witness": None if self.witness is None else {
                "vector": list(self.witness.vector),
                "condition": self.witness.condition,
            },
        }


def _branch_label(field: Field) -> str:
    if field.p == 2:
        return "char-2"
    return "1-mod-4" if field.q % 4 == 1 else "3-mod-4"


def _validate_nested(c1: LinearCode, c2: LinearCode) -> None:
    if c1.field != c2.field:
        raise ValueError("component codes live over different fields")
    if c1.n != c2.n:
        raise ValueError(f"length mismatch: {c1.n} vs {c2.n}")
    if not c1.contains_code(c2):
        raise ValueError("C2 is not a subcode of C1")


def _scan_c2(c2: LinearCode, cap: int, want_parity: bool):
    """One pass over all codewords of C2.

    Returns (count, min odd-weight word or None, {support: min word},
    min word of weight = 2 mod 4 or None).  Minima are taken in encoding
    order (lexicographic on coordinate encodings), so reports are
    deterministic regardless of enumeration order.
    """
    count = 0
    odd_min: tuple[int, ...] | None = None
    parity_min: tuple[int, ...] | None = None
    support_min: dict[tuple[int, ...], tuple[int, ...]] = {}
    for block in fqlinear.iter_codeword_blocks(c2, cap):
        count += block.shape[0]
        order = np.lexsort(block.T[::-1])
        block = block[order]
        weights = np.count_nonzero(block, axis=1)
        odd_rows = np.nonzero(weights % 2 == 1)[0]
        if odd_rows.size:
            cand = tuple(int(x) for x in block[odd_rows[0]])
            if odd_min is None or cand < odd_min:
                odd_min = cand
        if want_parity:
            bad = np.nonzero(weights % 4 == 2)[0]
            if bad.size:
                cand = tuple(int(x) for x in block[bad[0]])
                if parity_min is None or cand < parity_min:
                    parity_min = cand
        masks = (block != 0).astype(np.uint8)
        packed = np.packbits(masks, axis=1)
        _, idx = np.unique(packed, axis=0, return_index=True)
        for i in idx:
            sup = tuple(int(j) for j in np.nonzero(block[i])[0])
            word = tuple(int(x) for x in block[i])
            prev = support_min.get(sup)
            if prev is None or word < prev:
                support_min[sup] = word
    return count, odd_min, support_min, parity_min


def projection_self_orthogonal(c1: LinearCode, support: tuple[int, ...]) -> bool:
    """Whether the projection of C1 onto the support is self-orthogonal."""
    proj, _, _ = rref(c1.field, c1.generator[:, list(support)])
    gram = gf_matmul(c1.field, proj, proj.T)
    return not gram.any()


def is_csst(c1: LinearCode, c2: LinearCode,
            cap: int = DEFAULT_ENUM_CAP) -> CsstReport:
    """Certify the pair via the closed-form characterization.

    For every x in C2: the projection of C1 onto the support of x must be
    self-orthogonal; when q = 3 (mod 4), additionally wt(x)/2 must be even.
    C2 must be even (otherwise the verdict is false with an evenness
    witness).  The zero word is vacuously fine: its projection is the
    length-0 code, which is its own dual.

    The orthogonality condition depends on x only through its support, so
    codewords are de-duplicated by support; the parity condition is
    per-weight.
    """
    _validate_nested(c1, c2)
    branch = _branch_label(c1.field)
    want_parity = branch == "3-mod-4"
    count, odd_min, support_min, parity_min = _scan_c2(c2, cap, want_parity)

    def report(verdict, witness):
        return CsstReport(verdict=verdict, branch=branch, witness=witness,
                          checked_codewords=count, n=c1.n, k1=c1.k, k2=c2.k)

    if odd_min is not None:
        return report(False, CsstWitness(odd_min, COND_EVEN))
    failing = [word for sup, word in support_min.items()
               if sup and not projection_self_orthogonal(c1, sup)]
    if failing:
        return report(False, CsstWitness(min(failing), COND_ORTHO))
    if want_parity and parity_min is not None:
        return report(False, CsstWitness(parity_min, COND_PARITY))
    return report(True, None)


def is_csst_definition(c1: LinearCode, c2: LinearCode,
                       cap: int = DEFAULT_ENUM_CAP,
                       search_cap: int = DEFAULT_DENSE_CAP) -> bool:
    """Certify the pair by the definition, as a cross-validation oracle.

    C2 must be even, and for every x in C2 the shortening of the dual of C1
    to the support of x must contain a self-dual code, decided by exhaustive
    search.  Intended for small instances.
    """
    _validate_nested(c1, c2)
    count, odd_min, support_min, _ = _scan_c2(c2, cap, want_parity=False)
    if odd_min is not None:
        return False
    c1_dual = fqlinear.dual(c1)
    for sup in sorted(support_min):
        if not sup:
            continue
        shortened = fqlinear.shorten(c1_dual, sup)
        if not _contains_self_dual_cached(shortened, search_cap):
            return False
    return True


@functools.lru_cache(maxsize=1 << 16)
def _contains_self_dual_cached(code: LinearCode, cap: int) -> bool:
    return contains_self_dual_bruteforce(code, cap)


# ----------------------------------------------------------------------
# rate / relative-distance bounds
# ----------------------------------------------------------------------

HYP_HOLDS = "holds"
HYP_FAILS = "fails"
HYP_UNDECIDED = "undecided"


@dataclass(frozen=True)
class BoundCheck:
    bound_id: int
    hypothesis: str
    witness_weight: int | None
    lhs: Fraction | None
    rhs: Fraction | None

    @property
    def applicable(self) -> bool:
        return self.hypothesis == HYP_HOLDS

    @property
    def slack(self) -> Fraction | None:
        if self.lhs is None or self.rhs is None:
            return None
        return self.rhs - self.lhs

    def to_json(self) -> dict:
        return {
            "bound": self.bound_id,
            "hypothesis": self.hypothesis,
            "witness_weight": self.witness_weight,
            "lhs": None if self.lhs is None else str(self.lhs),
            "rhs": None if self.rhs is None else str(self.rhs),
            "slack": None if self.slack is None else str(self.slack),
        }


@dataclass(frozen=True)
class BoundReport:
    """Rate/distance trade-offs of a certified instance, exact rationals.

    delta1 is None when d(C1) is only known as an interval; the checks then
    record each hypothesis as holding, failing, or undecided accordingly.
    """

    n: int
    k1: int
    k2: int
    rate: Fraction
    delta1: Fraction | None
    delta1_range: tuple[Fraction, Fraction]
    delta2_perp: Fraction
    checks: tuple[BoundCheck, ...]

    @property
    def delta(self) -> Fraction | None:
        if self.delta1 is None:
            return None
        return min(self.delta1, self.delta2_perp)

    @property
    def applicable_checks(self) -> tuple[BoundCheck, ...]:
        return tuple(c for c in self.checks if c.applicable)

    def to_json(self) -> dict:
        return {
            "schema": "qcsst-bounds-v1",
            "n": self.n,
            "k1": self.k1,
            "k2": self.k2,
            "rate": str(self.rate),
            "delta1": None if self.delta1 is None else str(self.delta1),
            "delta1_range": [str(self.delta1_range[0]),
                             str(self.delta1_range[1])],
            "delta2_perp": str(self.delta2_perp),
            "delta": None if self.delta is None else str(self.delta),
            "checks": [c.to_json() for c in self.checks],
        }


def check_rate_distance_bounds(code: CssCode,
                               report: CsstReport | None = None,
                               cap: int = DEFAULT_ENUM_CAP) -> BoundReport:
    """Detect which trade-off hypotheses hold and evaluate each applicable
    inequality exactly.

    Scanning the weights present in C2:
      1. some wt(x) >= n - k2 + 1  =>  R + delta2_perp/2 <= 1/2
      2. some wt(x) >  n - d1      =>  R + delta2_perp   <= 1/2 + 1/n
      3. some wt(x) =  n - d1      =>  R + delta1/2 + delta2_perp <= 1/2 + 2/n

    The instance must certify as CSS-T first.  When d(C1) is known only as
    an interval, hypotheses are decided conservatively and left undecided
    when the interval cannot settle them.
    """
    rep = report if report is not None else is_csst(code.c1, code.c2, cap)
    if not rep.verdict:
        raise ValueError("bounds apply to certified instances only")
    if code.d2_perp is None:
        raise EnumerationCapError("exact dual distance of C2 required")
    n, k1, k2 = code.n, code.k1, code.k2
    hist = code.c2.weight_histogram(cap)
    weights = [int(w) for w in np.nonzero(hist)[0]]
    wt_max = max(weights)
    rate = Fraction(code.quantum_dim, n)
    d2p = code.d2_perp
    delta2 = Fraction(d2p, n)
    d1 = code.d1
    if d1 is not None:
        lo = hi = d1
        delta1: Fraction | None = Fraction(d1, n)
    else:
        lo = code.d1_lower
        hi = n - k1 + 1 if k1 >= 1 else n + 1  # Singleton ceiling
        delta1 = None
    checks = []

    # 1: weight reaching n - k2 + 1
    hyp1 = HYP_HOLDS if wt_max >= n - k2 + 1 else HYP_FAILS
    wit1 = wt_max if hyp1 == HYP_HOLDS else None
    lhs1 = rate + delta2 / 2 if hyp1 == HYP_HOLDS else None
    checks.append(BoundCheck(1, hyp1, wit1, lhs1, Fraction(1, 2)))

    # 2: weight exceeding n - d1
    if lo > n - wt_max:
        hyp2 = HYP_HOLDS
    elif hi <= n - wt_max:
        hyp2 = HYP_FAILS
    else:
        hyp2 = HYP_UNDECIDED
    wit2 = wt_max if hyp2 == HYP_HOLDS else None
    lhs2 = rate + delta2 if hyp2 == HYP_HOLDS else None
    checks.append(BoundCheck(2, hyp2, wit2, lhs2,
                             Fraction(1, 2) + Fraction(1, n)))

    # 3: weight equal to n - d1 (needs the exact distance)
    if d1 is not None:
        wit3 = n - d1 if (n - d1) in weights else None
        hyp3 = HYP_HOLDS if wit3 is not None else HYP_FAILS
    else:
        possible = [w for w in weights if lo <= n - w <= hi]
        hyp3 = HYP_UNDECIDED if possible else HYP_FAILS
        wit3 = None
    lhs3 = (rate + delta1 / 2 + delta2
            if hyp3 == HYP_HOLDS and delta1 is not None else None)
    checks.append(BoundCheck(3, hyp3, wit3, lhs3,
                             Fraction(1, 2) + Fraction(2, n)))

    return BoundReport(n=n, k1=k1, k2=k2, rate=rate, delta1=delta1,
                       delta1_range=(Fraction(lo, n), Fraction(hi, n)),
                       delta2_perp=delta2, checks=tuple(checks))


# ----------------------------------------------------------------------
# the extremal construction
# ----------------------------------------------------------------------

def build_remark_csst(c1: LinearCode, x) -> CssCode:
    """CSS-T pair (C1, <x>) from a self-dual C1 and a full-support
    even-weight codeword x; attains R + delta2_perp/2 = 1/2.

    The dual distance of <x> is exactly 2: at most 2 by the Singleton bound,
    and more than 1 because x has no zero coordinate.
    """
    x = np.asarray(x, dtype=np.uint8)
    if x.shape != (c1.n,):
        raise ValueError(f"expected a length-{c1.n} vector")
    if not c1.contains_vector(x):
        raise ValueError("x is not a codeword of C1")
    if not x.all():
        raise ValueError("x must have full support")
    if int(np.count_nonzero(x)) % 2:
        raise ValueError("x must have even weight")
    if fqlinear.dual(c1) != c1:
        raise ValueError("C1 must be self-dual")
    c2 = LinearCode.from_rows(c1.field, x[None, :], c1.n)
    return make_css(c1, c2)
