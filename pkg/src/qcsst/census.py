"""Exact counting formulas and Monte Carlo density experiments.

Closed-form counts and bounds are evaluated in exact integer/rational
arithmetic; floating point only enters when a Monte Carlo ratio is finally
reported.  Trials derive their RNG streams from (seed, trial index), so a
run is reproducible and independent of scheduling.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import fqlinear
from .galois import field_from_order

Z95 = 1.959963984540054  # two-sided 95% normal quantile


def ball_volume(n: int, q: int, r: int) -> int:
    """Number of vectors of GF(q)^n within Hamming distance r of a point."""
    if not 0 <= r <= n:
        raise ValueError(f"radius must satisfy 0 <= r <= n, got r={r}, n={n}")
    return sum((q - 1) ** i * math.comb(n, i) for i in range(r + 1))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of a dimension-n space over GF(q)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    value = Fraction(1)
    for i in range(k):
        value *= Fraction(q ** (n - i) - 1, q ** (i + 1) - 1)
    assert value.denominator == 1
    return int(value)


def extension_bound(n: int, k: int, h: int, d: int, q: int) -> Fraction:
    """Upper bound on the number of h-dimensional supercodes of a fixed
    [n, k] code (of distance >= d) whose minimum distance drops below d.

    Exact rational; requires d >= 2 and k <= h <= n.
    """
    if not 0 <= k <= h <= n:
        raise ValueError(f"need 0 <= k <= h <= n, got k={k}, h={h}, n={n}")
    if d < 2:
        raise ValueError(f"the bound needs d >= 2, got d={d}")
    count = gaussian_binomial(n - k, h - k, q)
    ratio = Fraction(q**h - q**k, (q - 1) * (q**n - q**k))
    return count * ratio * (ball_volume(n, q, d - 1) - 1)


def density_lower_bound(n: int, k1: int, k2: int, alpha: int, beta: int,
                        q: int) -> Fraction:
    """Exact lower bound on the fraction of nested pairs (C1, C2) of
    dimensions (k1, k2) with d(C1) >= alpha and d(C2-dual) >= beta.

    Product of two bracketed factors; may be negative (vacuous) for small q.
    """
    if not 0 <= k2 <= k1 <= n:
        raise ValueError(f"need k2 <= k1 <= n, got k2={k2}, k1={k1}, n={n}")
    bb = ball_volume(n, q, beta - 1) - 1 if beta >= 1 else 0
    ba = ball_volume(n, q, alpha - 1) - 1 if alpha >= 1 else 0
    factor_sub = 1 - Fraction(q ** (n - k2) - q ** (n - k1),
                              (q - 1) * (q**n - q ** (n - k1))) * bb
    factor_amb = 1 - Fraction(q**k1 - 1, (q - 1) * (q**n - 1)) * ba
    return factor_sub * factor_amb


def density_bound_regime_ok(k2: int, beta: int) -> bool:
    """Whether k2 >= beta - 1 (necessary for the target dual distance)."""
    return k2 >= beta - 1


@dataclass
class DensityEstimate:
    """Monte Carlo estimate with binomial confidence information."""

    trials: int
    successes: int
    seed: int
    params: dict = field(default_factory=dict)

    @property
    def estimate(self) -> float:
        return self.successes / self.trials

    @property
    def std_error(self) -> float:
        p = self.estimate
        return math.sqrt(p * (1.0 - p) / self.trials)

    @property
    def ci_halfwidth(self) -> float:
        return Z95 * self.std_error


def _trial_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([seed, index])


def estimate_pair_density(n: int, k1: int, k2: int, alpha: int, beta: int,
                          q: int, trials: int, seed: int) -> DensityEstimate:
    """Fraction of uniform nested pairs meeting both distance targets.

    A trial draws C1 uniformly among [n, k1] codes, then C2 uniformly among
    its k2-dimensional subcodes; two-stage sampling is uniform on nested
    pairs because every C1 has the same number of subcodes.  Success means
    d(C1) >= alpha and d(C2-dual) >= beta.
    """
    if not 0 <= k2 <= k1 <= n:
        raise ValueError(f"need k2 <= k1 <= n, got k2={k2}, k1={k1}, n={n}")
    if trials <= 0:
        raise ValueError("need at least one trial")
    fld = field_from_order(q)
    if not density_bound_regime_ok(k2, beta):
        warnings.warn(
            f"k2={k2} < beta-1={beta - 1}: the target dual distance is "
            "unreachable and the closed-form bound is out of its regime",
            RuntimeWarning, stacklevel=2)
    successes = 0
    for i in range(trials):
        rng = _trial_rng(seed, i)
        c1 = fqlinear.sample_code(fld, n, k1, rng)
        c2 = fqlinear.sample_subcode(c1, k2, rng)
        if fqlinear.distance_at_least(c1, alpha) and \
                fqlinear.distance_at_least(fqlinear.dual(c2), beta):
            successes += 1
    params = {"q": q, "n": n, "k1": k1, "k2": k2, "alpha": alpha, "beta": beta}
    return DensityEstimate(trials=trials, successes=successes, seed=seed,
                           params=params)


def estimate_weightword_density(n: int, k: int, omega: int, q: int,
                                trials: int, seed: int) -> DensityEstimate:
    """Fraction of uniform [n, k] codes containing a word of weight omega."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if not 0 <= omega <= n:
        raise ValueError(f"need 0 <= omega <= n, got omega={omega}")
    if omega <= n - k + 1:
        warnings.warn(
            f"omega={omega} <= n-k+1={n - k + 1}: outside the regime where "
            "weight-omega words become generic", RuntimeWarning, stacklevel=2)
    fld = field_from_order(q)
    successes = 0
    for i in range(trials):
        rng = _trial_rng(seed, i)
        code = fqlinear.sample_code(fld, n, k, rng)
        hist = code.weight_histogram()
        if hist[omega] > 0:
            successes += 1
    params = {"q": q, "n": n, "k": k, "omega": omega}
    return DensityEstimate(trials=trials, successes=successes, seed=seed,
                           params=params)


DENSITY_CSV_HEADER = ("q,n,k1,k2,alpha,beta,N,seed,successes,estimate,"
                      "ci_halfwidth,lower_bound_num,lower_bound_den")


def density_csv_row(est: DensityEstimate, bound: Fraction) -> str:
    p = est.params
    return ",".join(str(x) for x in (
        p["q"], p["n"], p["k1"], p["k2"], p["alpha"], p["beta"],
        est.trials, est.seed, est.successes,
        repr(est.estimate), repr(est.ci_halfwidth),
        bound.numerator, bound.denominator))


WEIGHTWORD_CSV_HEADER = "q,n,k,omega,N,seed,successes,estimate,ci_halfwidth"


def weightword_csv_row(est: DensityEstimate) -> str:
    p = est.params
    return ",".join(str(x) for x in (
        p["q"], p["n"], p["k"], p["omega"], est.trials, est.seed,
        est.successes, repr(est.estimate), repr(est.ci_halfwidth)))
