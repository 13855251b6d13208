"""Linear codes over GF(q): canonical forms, duals, distances, coordinate
operations, and subspace sampling/enumeration.

A code is identified with its reduced-row-echelon generator matrix, which is
the unique canonical representative of the row space; code equality is byte
equality of canonical forms.  Coordinate indices are 0-based throughout the
Python API.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _kernels, _pykernels
from .galois import Field

DEFAULT_ENUM_CAP = 1 << 24      # max codewords enumerated for distances/histograms
DEFAULT_DENSE_CAP = 1 << 20     # max codewords materialised as an array
DEFAULT_SUPPORT_CAP = 1 << 20   # max supports scanned in low-weight searches


class EnumerationCapError(RuntimeError):
    """Raised when an exhaustive step would exceed its configured cap."""


# ----------------------------------------------------------------------
# vectorised field-matrix primitives
# ----------------------------------------------------------------------

def gf_matmul(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over the field, via dense operation tables."""
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    m, r = a.shape
    r2, s = b.shape
    if r != r2:
        raise ValueError(f"shape mismatch: {a.shape} @ {b.shape}")
    add, mul = field.add_table, field.mul_table
    out = np.zeros((m, s), dtype=np.uint8)
    for i in range(r):
        out = add[out, mul[a[:, i][:, None], b[i][None, :]]]
    return out


def rref(field: Field, mat: Sequence[Sequence[int]] | np.ndarray
         ) -> tuple[np.ndarray, int, tuple[int, ...]]:
    """Reduced row echelon form: (canonical matrix, rank, pivot columns)."""
    a = np.array(mat, dtype=np.uint8, copy=True)
    if a.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    m, n = a.shape
    if a.size and int(a.max()) >= field.q:
        raise ValueError(f"matrix entries must lie in [0, {field.q})")
    add, sub = field.add_table, field.sub_table
    mul, inv = field.mul_table, field.inv_table
    r = 0
    pivots: list[int] = []
    for col in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, col])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        pv = int(a[r, col])
        if pv != 1:
            a[r] = mul[inv[pv], a[r]]
        factors = a[:, col].copy()
        factors[r] = 0
        if factors.any():
            a = sub[a, mul[factors[:, None], a[r][None, :]]]
        pivots.append(col)
        r += 1
    return np.ascontiguousarray(a[:r]), r, tuple(pivots)


def normalize_support(support: Iterable[int], n: int) -> tuple[int, ...]:
    """Sorted, de-duplicated 0-based coordinate subset; range-checked."""
    s = sorted(set(int(i) for i in support))
    if s and (s[0] < 0 or s[-1] >= n):
        raise ValueError(f"support indices must lie in [0, {n})")
    return tuple(s)


# ----------------------------------------------------------------------
# the code object
# ----------------------------------------------------------------------

class LinearCode:
    """A subspace of GF(q)^n held as a canonical (RREF) generator matrix."""

    __slots__ = ("field", "n", "generator", "pivots", "_hist", "_dmin")

    def __init__(self, field: Field, n: int, generator: np.ndarray,
                 pivots: tuple[int, ...] | None = None):
        generator = np.ascontiguousarray(generator, dtype=np.uint8)
        if generator.ndim != 2 or generator.shape[1] != n:
            raise ValueError("generator shape inconsistent with length")
        if pivots is None:
            pivots = tuple(int(np.nonzero(row)[0][0]) for row in generator)
        generator.flags.writeable = False
        self.field = field
        self.n = int(n)
        self.generator = generator
        self.pivots = pivots
        self._hist: np.ndarray | None = None
        self._dmin: int | None = None

    @classmethod
    def from_rows(cls, field: Field, rows, n: int | None = None) -> "LinearCode":
        """Canonicalize a spanning set of rows (zero rows are dropped)."""
        rows = np.asarray(rows, dtype=np.uint8)
        if rows.size == 0:
            if n is None:
                n = rows.shape[1] if rows.ndim == 2 else 0
            return cls(field, n, np.zeros((0, n), dtype=np.uint8), ())
        if rows.ndim == 1:
            rows = rows[None, :]
        if n is None:
            n = rows.shape[1]
        g, _, piv = rref(field, rows)
        return cls(field, n, g, piv)

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @property
    def q(self) -> int:
        return self.field.q

    def key(self) -> tuple:
        return (self.field.key, self.n, self.generator.tobytes())

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearCode) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"LinearCode[{self.n},{self.k}] over {self.field!r}"

    # -- membership -----------------------------------------------------

    def reduce_vector(self, v) -> np.ndarray:
        """Residue of v after elimination against the generator rows."""
        v = np.array(v, dtype=np.uint8, copy=True)
        if v.shape != (self.n,):
            raise ValueError(f"expected a length-{self.n} vector")
        sub, mul = self.field.sub_table, self.field.mul_table
        for i, p in enumerate(self.pivots):
            c = v[p]
            if c:
                v = sub[v, mul[c, self.generator[i]]]
        return v

    def contains_vector(self, v) -> bool:
        return not self.reduce_vector(v).any()

    def contains_code(self, other: "LinearCode") -> bool:
        if other.n != self.n or other.field != self.field:
            return False
        return all(self.contains_vector(row) for row in other.generator)

    # -- enumeration ------------------------------------------------------

    def codewords(self, cap: int = DEFAULT_DENSE_CAP) -> np.ndarray:
        """All q^k codewords as a (q^k, n) array, in coefficient order."""
        count = self.q**self.k
        if count > cap:
            raise EnumerationCapError(
                f"codeword table of size {count} exceeds cap {cap}")
        return _pykernels.span_block(self.generator, self.q,
                                     self.field.add_table, self.field.mul_table)

    def weight_histogram(self, cap: int = DEFAULT_ENUM_CAP) -> np.ndarray:
        """Hamming-weight histogram over all codewords (cached)."""
        if self._hist is None:
            count = self.q**self.k
            if count > cap:
                raise EnumerationCapError(
                    f"enumerating {count} codewords exceeds cap {cap}")
            hist = _kernels.weight_histogram(self.generator, self.q,
                                             self.field.add_table,
                                             self.field.mul_table)
            hist.flags.writeable = False
            self._hist = hist
        return self._hist


def iter_codeword_blocks(code: LinearCode, cap: int = DEFAULT_ENUM_CAP,
                         block: int = 1 << 16) -> Iterator[np.ndarray]:
    """Stream the full codeword span in arrays of at most ~block rows."""
    q, k = code.q, code.k
    count = q**k
    if count > cap:
        raise EnumerationCapError(
            f"enumerating {count} codewords exceeds cap {cap}")
    field = code.field
    if count <= block:
        yield code.codewords(cap=max(count, 1))
        return
    add, mul = field.add_table, field.mul_table
    k_left = k
    while q**k_left > block and k_left > 1:
        k_left -= 1
    left = _pykernels.span_block(code.generator[:k_left], q, add, mul)
    right = code.generator[k_left:]
    scaled = [mul[np.arange(q, dtype=np.uint8)[:, None], r[None, :]]
              for r in right]
    digits = [0] * (k - k_left)
    cur = np.zeros(code.n, dtype=np.uint8)
    while True:
        yield add[left, cur[None, :]]
        i = 0
        while i < len(digits) and digits[i] == q - 1:
            digits[i] = 0
            i += 1
        if i == len(digits):
            return
        digits[i] += 1
        cur = np.zeros(code.n, dtype=np.uint8)
        for j, d in enumerate(digits):
            if d:
                cur = add[cur, scaled[j][d]]


def zero_code(field: Field, n: int) -> LinearCode:
    return LinearCode(field, n, np.zeros((0, n), dtype=np.uint8), ())


def full_space(field: Field, n: int) -> LinearCode:
    return LinearCode(field, n, np.eye(n, dtype=np.uint8), tuple(range(n)))


# ----------------------------------------------------------------------
# duals, distances
# ----------------------------------------------------------------------

def dual(code: LinearCode) -> LinearCode:
    """The dual code under the standard inner product; dimension n - k."""
    field, n, k = code.field, code.n, code.k
    g = code.generator
    pivset = set(code.pivots)
    free = [j for j in range(n) if j not in pivset]
    rows = np.zeros((len(free), n), dtype=np.uint8)
    neg = field.neg_table
    for r, f in enumerate(free):
        rows[r, f] = 1
        for i, p in enumerate(code.pivots):
            rows[r, p] = neg[g[i, f]]
    return LinearCode.from_rows(field, rows, n)


def _min_dependent_columns(field: Field, h: np.ndarray, n: int, w_max: int,
                           support_cap: int = DEFAULT_SUPPORT_CAP) -> int | None:
    """Smallest w <= w_max such that some w columns of h are dependent.

    Returns None when every set of up to w_max columns is independent.  This
    is the minimum distance of the code whose parity-check matrix is h,
    searched from below.
    """
    r = h.shape[0]
    if r == 0:
        return 1 if w_max >= 1 and n >= 1 else None
    cols = h.T
    if w_max >= 1 and (~cols.any(axis=1)).any():
        return 1
    if w_max >= 2:
        # normalize leading coefficient to 1; dependent pairs collide
        inv, mul = field.inv_table, field.mul_table
        seen: set[bytes] = set()
        for j in range(n):
            col = cols[j]
            nz = np.nonzero(col)[0]
            if nz.size == 0:
                continue
            norm = mul[inv[col[nz[0]]], col].tobytes()
            if norm in seen:
                return 2
            seen.add(norm)
    budget = support_cap
    for w in range(3, w_max + 1):
        level = math.comb(n, w)
        if level > budget:
            # a partial level cannot certify absence of weight-w words
            raise EnumerationCapError(
                f"scanning the {level} weight-{w} supports exceeds the "
                f"remaining budget of {budget} (cap {support_cap})")
        budget -= level
        for support in itertools.combinations(range(n), w):
            _, rank, _ = rref(field, cols[list(support)])
            if rank < w:
                return w
    return None


def min_distance(code: LinearCode, cap: int = DEFAULT_ENUM_CAP,
                 support_cap: int = DEFAULT_SUPPORT_CAP) -> int:
    """Minimum nonzero codeword weight; n + 1 for the zero code.

    Exhaustive codeword enumeration when q^k fits under the cap; otherwise a
    bottom-up search for the smallest dependent column set of a parity-check
    matrix, which is cheap exactly when the distance is small.
    """
    if code._dmin is not None:
        return code._dmin
    n = code.n
    if code.k == 0:
        d = n + 1
    elif code.q**code.k <= cap:
        hist = code.weight_histogram(cap)
        nz = np.nonzero(hist[1:])[0]
        if nz.size == 0:
            raise AssertionError("nonzero code with no nonzero codeword")
        d = int(nz[0]) + 1
    else:
        h = dual(code).generator
        found = _min_dependent_columns(code.field, h, n, n, support_cap)
        if found is None:
            raise AssertionError("no dependent columns in a parity-check matrix")
        d = found
    code._dmin = d
    return d


def distance_at_least(code: LinearCode, t: int,
                      support_cap: int = DEFAULT_SUPPORT_CAP) -> bool:
    """Whether the minimum distance is >= t, without full enumeration.

    Scans for codewords of weight < t via dependent parity-check columns;
    cost grows with t, so this is intended for small thresholds.
    """
    if t <= 1:
        return True
    if code._dmin is not None:
        return code._dmin >= t
    if code.k == 0:
        return code.n + 1 >= t
    h = dual(code).generator
    found = _min_dependent_columns(code.field, h, code.n, t - 1, support_cap)
    return found is None


# ----------------------------------------------------------------------
# coordinate operations
# ----------------------------------------------------------------------

def puncture(code: LinearCode, support: Iterable[int]) -> LinearCode:
    """Projection onto the given coordinates."""
    s = normalize_support(support, code.n)
    return LinearCode.from_rows(code.field, code.generator[:, s], len(s))


def shorten(code: LinearCode, support: Iterable[int]) -> LinearCode:
    """Codewords supported inside the given coordinates, then projected."""
    s = normalize_support(support, code.n)
    field, n, k = code.field, code.n, code.k
    outside = [j for j in range(n) if j not in set(s)]
    if not outside or k == 0:
        return LinearCode.from_rows(field, code.generator[:, s], len(s))
    # coefficient vectors x with x . G[:, outside] = 0
    colspace = LinearCode.from_rows(field, code.generator[:, outside].T, k)
    coeffs = dual(colspace)
    rows = gf_matmul(field, coeffs.generator, code.generator)
    return LinearCode.from_rows(field, rows[:, s], len(s))


# ----------------------------------------------------------------------
# sampling (uniform over subspaces)
# ----------------------------------------------------------------------

def sample_code(field: Field, n: int, k: int,
                rng: np.random.Generator) -> LinearCode:
    """Uniformly random k-dimensional subspace of GF(q)^n.

    Rejection-samples full-rank k x n matrices: every k-dimensional
    subspace has exactly |GL_k(GF(q))| full-rank generator matrices, so
    conditioning on full rank gives the uniform distribution.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if k == 0:
        return zero_code(field, n)
    while True:
        m = rng.integers(0, field.q, size=(k, n)).astype(np.uint8)
        g, rank, piv = rref(field, m)
        if rank == k:
            return LinearCode(field, n, g, piv)


def sample_subcode(code: LinearCode, k2: int,
                   rng: np.random.Generator) -> LinearCode:
    """Uniformly random k2-dimensional subcode."""
    if k2 > code.k:
        raise ValueError(f"subcode dimension {k2} exceeds dim {code.k}")
    if k2 == 0:
        return zero_code(code.field, code.n)
    field = code.field
    while True:
        m = rng.integers(0, field.q, size=(k2, code.k)).astype(np.uint8)
        _, rank, _ = rref(field, m)
        if rank == k2:
            rows = gf_matmul(field, m, code.generator)
            return LinearCode.from_rows(field, rows, code.n)


# ----------------------------------------------------------------------
# exhaustive subspace enumeration
# ----------------------------------------------------------------------

def _subspace_count(n: int, k: int, q: int) -> int:
    count = 1
    for i in range(k):
        count = count * (q**(n - i) - 1) // (q**(i + 1) - 1)
    return count


def _rref_matrices(field: Field, n: int, k: int) -> Iterator[np.ndarray]:
    """Every k x n RREF matrix of rank k, in deterministic order."""
    if k == 0:
        yield np.zeros((0, n), dtype=np.uint8)
        return
    if k > n:
        return
    q = field.q
    for pivots in itertools.combinations(range(n), k):
        base = np.zeros((k, n), dtype=np.uint8)
        for i, p in enumerate(pivots):
            base[i, p] = 1
        pivset = set(pivots)
        cells = [(i, j) for i in range(k) for j in range(n)
                 if j not in pivset and j > pivots[i]]
        if not cells:
            yield base
            continue
        for values in itertools.product(range(q), repeat=len(cells)):
            m = base.copy()
            for (i, j), v in zip(cells, values):
                m[i, j] = v
            yield m


def enumerate_subspaces(ambient: LinearCode, k: int,
                        cap: int = DEFAULT_ENUM_CAP) -> Iterator[LinearCode]:
    """Every k-dimensional subcode of the ambient code, exactly once.

    Deterministic order: pivot-column sets of the coefficient RREF in
    lexicographic order, then free entries in odometer order.
    """
    if k < 0 or k > ambient.k:
        return
    count = _subspace_count(ambient.k, k, ambient.q)
    if count > cap:
        raise EnumerationCapError(
            f"{count} subspaces exceed enumeration cap {cap}")
    field = ambient.field
    for coeff in _rref_matrices(field, ambient.k, k):
        rows = gf_matmul(field, coeff, ambient.generator)
        yield LinearCode.from_rows(field, rows, ambient.n)


def enumerate_all_subcodes(ambient: LinearCode,
                           cap: int = DEFAULT_ENUM_CAP) -> Iterator[LinearCode]:
    """All subcodes of every dimension, ascending."""
    for k in range(ambient.k + 1):
        yield from enumerate_subspaces(ambient, k, cap)


# ----------------------------------------------------------------------
# file format
# ----------------------------------------------------------------------

def dumps_code(code: LinearCode) -> str:
    """Text form: field header, then ``n k``, then k generator rows."""
    lines = [code.field.header(), f"{code.n} {code.k}"]
    for row in code.generator:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"


def loads_code(text: str) -> LinearCode:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ValueError("truncated code file")
    field = Field.from_header(lines[0])
    try:
        n, k = (int(x) for x in lines[1].split())
    except Exception as exc:
        raise ValueError(f"malformed dimension line: {lines[1]!r}") from exc
    if len(lines) != 2 + k:
        raise ValueError(f"expected {k} generator rows, found {len(lines) - 2}")
    rows = []
    for ln in lines[2:]:
        row = [int(x) for x in ln.split()]
        if len(row) != n:
            raise ValueError(f"row of length {len(row)}, expected {n}")
        if any(not 0 <= x < field.q for x in row):
            raise ValueError("entry outside the field")
        rows.append(row)
    if not rows:
        return zero_code(field, n)
    return LinearCode.from_rows(field, np.array(rows, dtype=np.uint8), n)


def save_code(code: LinearCode, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(dumps_code(code))


def load_code(path) -> LinearCode:
    with open(path, "r", encoding="ascii") as fh:
        return loads_code(fh.read())
