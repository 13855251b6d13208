"""Dense quantum-state oracle for tiny CSS instances.

States live in the q^n-dimensional complex tensor power, indexed by vectors
of GF(q)^n through the canonical integer encoding with the leftmost tensor
factor most significant.  Phases are powers of zeta = exp(2*pi*i/p) with
exponents computed in integer arithmetic mod p before any floating-point
call, so no phase drift accumulates.

Two numerical re-proofs are exposed: the local-unitary equivalence of the
two nested-pair constructions (applying the discrete-Fourier gate on every
factor maps one basis onto the other), and the injectivity of the pair ->
quantum-code map on basis-state sets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fqlinear
from .fqlinear import EnumerationCapError, LinearCode
from .galois import Field

DEFAULT_STATE_CAP = 1 << 20   # max dense dimension q^n
STATE_TOL = 1e-9              # state-level comparison tolerance
OPERATOR_TOL = 1e-12          # operator-level (unitarity, commutation)


@dataclass(frozen=True, eq=False)
class StateVector:
    field: Field
    n: int
    amps: np.ndarray  # complex128, length q^n

    def __post_init__(self):
        self.amps.flags.writeable = False

    @property
    def dim(self) -> int:
        return self.amps.shape[0]

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def distance_to(self, other: "StateVector") -> float:
        return float(np.abs(self.amps - other.amps).max())


@dataclass(frozen=True, eq=False)
class LocalOperator:
    """A q x q unitary acting on one tensor factor."""

    field: Field
    matrix: np.ndarray
    label: str

    def __post_init__(self):
        self.matrix.flags.writeable = False
        q = self.field.q
        resid = np.abs(self.matrix @ self.matrix.conj().T
                       - np.eye(q)).max()
        if resid > OPERATOR_TOL:
            raise ValueError(f"{self.label} is not unitary (residual {resid})")


def _zeta_powers(p: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(p) / p)


def _check_dim(field: Field, n: int, cap: int) -> int:
    dim = field.q**n
    if dim > cap:
        raise EnumerationCapError(f"dense dimension {dim} exceeds cap {cap}")
    return dim


def _indices(field: Field, vectors: np.ndarray, n: int) -> np.ndarray:
    """Canonical integer index of each row, leftmost coordinate significant."""
    place = field.q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return vectors.astype(np.int64) @ place


def _as_vector(field: Field, w, n: int) -> np.ndarray:
    w = np.asarray(w, dtype=np.uint8)
    if w.shape != (n,):
        raise ValueError(f"expected a length-{n} vector")
    if w.size and int(w.max()) >= field.q:
        raise ValueError("vector entry outside the field")
    return w


def css_ket_cs(c1: LinearCode, w, cap: int = DEFAULT_STATE_CAP) -> StateVector:
    """Character-weighted superposition over C1:
    (1/sqrt|C1|) * sum_c zeta^Tr(<c, w>) |c>."""
    field, n = c1.field, c1.n
    dim = _check_dim(field, n, cap)
    w = _as_vector(field, w, n)
    words = c1.codewords(cap)
    add, mul = field.add_table, field.mul_table
    inner = np.zeros(words.shape[0], dtype=np.uint8)
    for j in range(n):
        inner = add[inner, mul[words[:, j], w[j]]]
    phases = _zeta_powers(field.p)[field.trace_table[inner]]
    amps = np.zeros(dim, dtype=np.complex128)
    amps[_indices(field, words, n)] = phases / np.sqrt(words.shape[0])
    state = StateVector(field, n, amps)
    assert abs(state.norm() - 1.0) < STATE_TOL
    return state


def coset_ket(c2: LinearCode, w, cap: int = DEFAULT_STATE_CAP) -> StateVector:
    """Uniform superposition over the coset w + C2."""
    field, n = c2.field, c2.n
    dim = _check_dim(field, n, cap)
    w = _as_vector(field, w, n)
    words = field.add_table[c2.codewords(cap), w[None, :]]
    amps = np.zeros(dim, dtype=np.complex128)
    amps[_indices(field, words, n)] = 1.0 / np.sqrt(words.shape[0])
    state = StateVector(field, n, amps)
    assert abs(state.norm() - 1.0) < STATE_TOL
    return state


def dft_gate(field: Field) -> LocalOperator:
    """Discrete-Fourier gate: entry (j, b) is zeta^Tr(j*b)/sqrt(q).

    For q = 2 this is the Hadamard gate.
    """
    zeta = _zeta_powers(field.p)
    matrix = zeta[field.trace_table[field.mul_table]] / np.sqrt(field.q)
    return LocalOperator(field, matrix, f"H({field.q})")


def pauli_x(field: Field, a: int) -> LocalOperator:
    """Additive shift |v> -> |v + a> (the dit flip)."""
    field._check(a)
    q = field.q
    matrix = np.zeros((q, q), dtype=np.complex128)
    targets = field.add_table[np.arange(q), a]
    matrix[targets, np.arange(q)] = 1.0
    return LocalOperator(field, matrix, f"X({a})")


def pauli_z(field: Field, b: int) -> LocalOperator:
    """Diagonal phase |v> -> zeta^Tr(v*b) |v> (the phase shift)."""
    field._check(b)
    zeta = _zeta_powers(field.p)
    diag = zeta[field.trace_table[field.mul_table[np.arange(field.q), b]]]
    return LocalOperator(field, np.diag(diag), f"Z({b})")


def apply_everywhere(op: LocalOperator, state: StateVector) -> StateVector:
    """Apply the q x q operator to every tensor factor."""
    q, n = state.field.q, state.n
    amp = state.amps.reshape((q,) * n)
    for axis in range(n):
        amp = np.tensordot(op.matrix, amp, axes=(1, axis))
        amp = np.moveaxis(amp, 0, axis)
    return StateVector(state.field, n, np.ascontiguousarray(amp.reshape(-1)))


def coset_representatives(sup: LinearCode, sub: LinearCode,
                          cap: int = DEFAULT_STATE_CAP) -> np.ndarray:
    """Canonical representatives of sup/sub (residues mod the subcode)."""
    words = sup.codewords(cap)
    sub_mat = sub.generator
    field = sup.field
    res = np.array(words, copy=True)
    for i, p in enumerate(sub.pivots):
        col = res[:, p].copy()
        res = field.sub_table[res, field.mul_table[col[:, None],
                                                   sub_mat[i][None, :]]]
    return np.unique(res, axis=0)


def verify_cs_steane_equivalence(c1: LinearCode, c2: LinearCode,
                                 tol: float = STATE_TOL,
                                 cap: int = DEFAULT_STATE_CAP
                                 ) -> tuple[bool, float]:
    """Numerically verify that the two constructions are locally equivalent.

    For every coset representative w of dual(C2)/dual(C1): applying the
    Fourier gate on each factor of the character ket over (C1, w) must give
    the coset ket of -w + dual(C1), within tol.  Returns (all passed,
    largest residual).
    """
    if c1.field != c2.field or c1.n != c2.n:
        raise ValueError("component codes are incompatible")
    if not c1.contains_code(c2):
        raise ValueError("C2 is not a subcode of C1")
    field, n = c1.field, c1.n
    _check_dim(field, n, cap)
    gate = dft_gate(field)
    c1_perp = fqlinear.dual(c1)
    c2_perp = fqlinear.dual(c2)
    neg = field.neg_table
    max_resid = 0.0
    for w in coset_representatives(c2_perp, c1_perp, cap):
        lhs = apply_everywhere(gate, css_ket_cs(c1, w, cap))
        rhs = coset_ket(c1_perp, neg[w], cap)
        max_resid = max(max_resid, lhs.distance_to(rhs))
    return max_resid < tol, max_resid


def verify_pair_distinctness(field: Field, n: int,
                             cap: int = DEFAULT_STATE_CAP) -> bool:
    """Exhaustively check that distinct nested pairs give distinct codes.

    The basis states of a pair are the uniform coset kets {|w + C2> : w in
    C1}; each ket is determined exactly by its support index set, so the
    comparison is exact integer work with no tolerance.
    """
    _check_dim(field, n, cap)
    fingerprints: dict[frozenset, tuple] = {}
    ambient = fqlinear.full_space(field, n)
    for c1 in fqlinear.enumerate_all_subcodes(ambient):
        c1_words = c1.codewords(cap)
        for c2 in fqlinear.enumerate_all_subcodes(c1):
            c2_words = c2.codewords(cap)
            kets = set()
            for w in c1_words:
                coset = field.add_table[c2_words, w[None, :]]
                kets.add(frozenset(int(i) for i in
                                   _indices(field, coset, n)))
            fp = frozenset(kets)
            pair_key = (c1.key(), c2.key())
            other = fingerprints.get(fp)
            if other is not None and other != pair_key:
                return False
            fingerprints[fp] = pair_key
    return True
