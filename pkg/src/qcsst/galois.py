"""Arithmetic in finite fields GF(p^e) and the absolute trace map.

Field elements are plain Python integers in ``[0, q)``.  The integer
``sum(c[i] * p**i)`` stands for the residue class of the polynomial
``sum(c[i] * X**i)`` modulo a monic irreducible polynomial of degree ``e``
over GF(p).  This base-p encoding gives every element a total order, which
the rest of the library relies on for deterministic enumeration and
reproducible file formats.

Moduli are kept explicit.  When none is supplied, the monic irreducible of
degree ``e`` with the smallest integer encoding is chosen, so GF(4) always
means GF(2)[X]/(X^2+X+1), GF(8) means GF(2)[X]/(X^3+X+1), and so on, with
no dependence on external polynomial tables.

For q <= 256, multiplication and inversion run off log/antilog tables over
a primitive element; larger fields use polynomial arithmetic directly.
Dense q x q numpy operation tables (for vectorised matrix work) are built
lazily on first use.
"""

from __future__ import annotations

import functools
from typing import Iterable, Sequence

import numpy as np

TABLE_LIMIT = 256  # log/antilog and dense numpy tables up to this field order


def is_prime(m: int) -> bool:
    """Primality by trial division (sufficient for characteristic checks)."""
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


# ----------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient tuples, lowest degree first,
# normalised to have no trailing zeros (the zero polynomial is ())
# ----------------------------------------------------------------------

def _ptrim(a: Sequence[int]) -> tuple[int, ...]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        shift = len(a) - 1 - dm
        lead = a[-1]
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _ptrim(a)


def _poly_divides(d: Sequence[int], a: Sequence[int], p: int) -> bool:
    return _pmod(a, d, p) == ()


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial factorization: no monic divisor of degree 1..deg/2."""
    deg = len(poly) - 1
    if deg < 1 or poly[-1] != 1:
        return False
    if poly[0] == 0 and deg > 1:
        return False  # divisible by X
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            div = _int_to_coeffs(enc, d, p) + (1,)
            if _poly_divides(div, poly, p):
                return False
    return True


def _int_to_coeffs(enc: int, length: int, p: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        out.append(enc % p)
        enc //= p
    return tuple(out)


def _coeffs_to_int(coeffs: Iterable[int], p: int) -> int:
    enc = 0
    for c in reversed(list(coeffs)):
        enc = enc * p + c
    return enc


@functools.lru_cache(maxsize=None)
def _default_modulus(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e over GF(p) with smallest encoding."""
    for enc in range(p**e):
        poly = _int_to_coeffs(enc, e, p) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise RuntimeError(f"no irreducible polynomial of degree {e} over GF({p})")


class Field:
    """The finite field GF(p^e) with explicit modulus.

    Immutable after construction; all operations are pure, so instances are
    safe to share across threads.
    """

    def __init__(self, p: int, e: int, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if e < 1:
            raise ValueError(f"extension degree must be >= 1, got {e}")
        if modulus is None:
            modulus = _default_modulus(p, e)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError(
                    f"modulus must be monic of degree {e}: got {list(modulus)}")
            if not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
        self.p = p
        self.e = e
        self.q = p**e
        self.modulus: tuple[int, ...] = tuple(modulus)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if self.q <= TABLE_LIMIT:
            self._build_log_tables()
        self._dense: dict[str, np.ndarray] = {}

    # -- identity ------------------------------------------------------

    @property
    def key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.p, self.e, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        if self.e == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e})"

    # -- encoding ------------------------------------------------------

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Polynomial coefficients of element a, lowest degree first."""
        self._check(a)
        return _int_to_coeffs(a, self.e, self.p)

    def encode(self, coeffs: Iterable[int]) -> int:
        coeffs = [int(c) % self.p for c in coeffs]
        if len(coeffs) > self.e:
            raise ValueError("too many coefficients")
        coeffs += [0] * (self.e - len(coeffs))
        return _coeffs_to_int(coeffs, self.p)

    def elements(self) -> range:
        return range(self.q)

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of {self!r}")

    # -- scalar arithmetic ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if self.p == 2:
            return a ^ b
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.e):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        self._check(a)
        if self.p == 2:
            return a
        p = self.p
        out = 0
        mult = 1
        for _ in range(self.e):
            out += (-a % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        prod = _pmul(self.coeffs(a), self.coeffs(b), self.p)
        return self.encode(_pmod(prod, self.modulus, self.p))

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        if self._exp is not None:
            return self._exp[(self.q - 1) - self._log[a]]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        self._check(a)
        if n < 0:
            a = self.inv(a)
            n = -n
        out = 1
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def frobenius(self, a: int) -> int:
        """The Frobenius endomorphism a -> a^p."""
        return self.pow(a, self.p)

    def trace(self, a: int) -> int:
        """Absolute trace to GF(p): sum of a^(p^i) for i = 0..e-1.

        Returns an integer in [0, p), i.e. an element of the prime subfield.
        """
        t = 0
        x = a
        for _ in range(self.e):
            t = self.add(t, x)
            x = self.frobenius(x)
        assert t < self.p, "trace landed outside the prime subfield"
        return t

    # -- log/antilog tables ----------------------------------------------

    def _build_log_tables(self) -> None:
        g = self._find_primitive()
        exp = [0] * (2 * self.q)
        log = [0] * self.q
        val = 1
        for i in range(self.q - 1):
            exp[i] = val
            log[val] = i
            val = self._mul_poly(val, g)
        for i in range(self.q - 1, 2 * self.q):
            exp[i] = exp[i - (self.q - 1)]
        self._exp = exp
        self._log = log

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _pmul(_int_to_coeffs(a, self.e, self.p),
                     _int_to_coeffs(b, self.e, self.p), self.p)
        return self.encode(_pmod(prod, self.modulus, self.p))

    def _find_primitive(self) -> int:
        if self.q == 2:
            return 1
        for g in range(2, self.q):
            order = 1
            x = g
            while x != 1:
                x = self._mul_poly(x, g)
                order += 1
                if order > self.q:
                    raise RuntimeError("order computation ran away")
            if order == self.q - 1:
                return g
        raise RuntimeError(f"no primitive element found in {self!r}")

    # -- dense numpy tables (vectorised matrix work) ----------------------

    def _dense_table(self, name: str) -> np.ndarray:
        table = self._dense.get(name)
        if table is None:
            if self.q > TABLE_LIMIT:
                raise ValueError(
                    f"dense operation tables limited to q <= {TABLE_LIMIT}; "
                    f"{self!r} has order {self.q}")
            q = self.q
            if name == "add":
                table = np.array([[self.add(a, b) for b in range(q)]
                                  for a in range(q)], dtype=np.uint8)
            elif name == "sub":
                table = np.array([[self.sub(a, b) for b in range(q)]
                                  for a in range(q)], dtype=np.uint8)
            elif name == "mul":
                table = np.array([[self.mul(a, b) for b in range(q)]
                                  for a in range(q)], dtype=np.uint8)
            elif name == "neg":
                table = np.array([self.neg(a) for a in range(q)], dtype=np.uint8)
            elif name == "inv":
                table = np.array([0] + [self.inv(a) for a in range(1, q)],
                                 dtype=np.uint8)
            elif name == "trace":
                table = np.array([self.trace(a) for a in range(q)], dtype=np.uint8)
            else:
                raise KeyError(name)
            table.flags.writeable = False
            self._dense[name] = table
        return table

    @property
    def add_table(self) -> np.ndarray:
        return self._dense_table("add")

    @property
    def sub_table(self) -> np.ndarray:
        return self._dense_table("sub")

    @property
    def mul_table(self) -> np.ndarray:
        return self._dense_table("mul")

    @property
    def neg_table(self) -> np.ndarray:
        return self._dense_table("neg")

    @property
    def inv_table(self) -> np.ndarray:
        return self._dense_table("inv")

    @property
    def trace_table(self) -> np.ndarray:
        return self._dense_table("trace")

    # -- serialization ----------------------------------------------------

    def header(self) -> str:
        """Serialization header: ``GF p e m0 m1 ... me`` (low degree first)."""
        return "GF {} {} {}".format(self.p, self.e,
                                    " ".join(str(c) for c in self.modulus))

    @classmethod
    def from_header(cls, line: str) -> "Field":
        parts = line.split()
        if len(parts) < 4 or parts[0] != "GF":
            raise ValueError(f"malformed field header: {line!r}")
        p, e = int(parts[1]), int(parts[2])
        modulus = [int(c) for c in parts[3:]]
        return make_field(p, e, modulus)


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, e: int, modulus: tuple[int, ...] | None) -> Field:
    return Field(p, e, modulus)


def make_field(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> Field:
    """Construct (or fetch the cached copy of) GF(p^e).

    If modulus is omitted, the monic irreducible of degree e with the
    smallest integer encoding is used, deterministically.
    """
    mod = tuple(int(c) for c in modulus) if modulus is not None else None
    return _cached_field(p, e, mod)


def field_from_order(q: int) -> Field:
    """GF(q) with the default modulus; q must be a prime power."""
    if q < 2:
        raise ValueError(f"field order must be >= 2, got {q}")
    p = 2
    while p * p <= q and q % p:
        p += 1
    if q % p:
        p = q  # q itself is prime
    e = 0
    m = q
    while m > 1:
        if m % p:
            raise ValueError(f"{q} is not a prime power")
        m //= p
        e += 1
    return make_field(p, e)
