"""Even-index polynomial structure of tau(p^{2k}).

Writing x = p^11 and y = tau(p)^2, the value tau(p^{2k}) is a homogeneous
degree-k integer polynomial G_k(x, y), monic in y, satisfying

    G_k = (y - 2x) G_{k-1} - x^2 G_{k-2},   G_0 = 1,  G_1 = y - x.

Dehomogenized at x = 1, G_k(1, y) has the k simple real roots
alpha_{j,k} = 4 cos^2(pi j / (2k+1)), j = 1..k, all in (0, 4).  The same
local roots give |tau(p^{n-1})| as a product of cyclotomic factor
magnitudes |Phi_d(alpha, beta)| over divisors d > 1 of n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple

import mpmath

from .errors import BudgetExceededError, DegenerateDiscriminantError
from .hecke import PrimeLocalData, tau_prime_powers

DEFAULT_MAX_K = 10_000


def _default_digits(k: int) -> int:
    return max(50, 4 * k)


@dataclass(frozen=True)
class EvenIndexPoly:
    """G_k as integer coefficients; coeffs[i] multiplies x^i y^{k-i}."""

    k: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.k < 0 or len(self.coeffs) != self.k + 1:
            raise ValueError("need exactly k+1 coefficients")
        if self.coeffs[0] != 1:
            raise ValueError("G_k is monic in y")


@dataclass(frozen=True)
class RootSet:
    """Roots of G_k(1, y) in decreasing order, at a recorded precision."""

    k: int
    alphas: tuple[mpmath.mpf, ...]
    precision_digits: int


@dataclass(frozen=True)
class RationalApproximant:
    """y/x in lowest terms with height max(|num|, den)."""

    numerator: int
    denominator: int
    height: int


class ApproximationQuality(NamedTuple):
    j_star: int
    distance: mpmath.mpf
    threshold: mpmath.mpf
    triggered: bool


def even_index_poly(k: int, *, max_k: int = DEFAULT_MAX_K) -> EvenIndexPoly:
    """Coefficients of G_k via the integer recurrence; k >= 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > max_k:
        raise BudgetExceededError(f"k = {k} exceeds the ceiling {max_k}")
    if k == 0:
        return EvenIndexPoly(0, (1,))
    prev = [1]            # G_0
    cur = [1, -1]         # G_1 = y - x
    for m in range(2, k + 1):
        nxt = [0] * (m + 1)
        for i, c in enumerate(cur):
            nxt[i] += c          # y * G_{m-1}
            nxt[i + 1] -= 2 * c  # -2x * G_{m-1}
        for i, c in enumerate(prev):
            nxt[i + 2] -= c      # -x^2 * G_{m-2}
        prev, cur = cur, nxt
    return EvenIndexPoly(k, tuple(cur))


def eval_even_poly(poly: EvenIndexPoly, x: int, y: int) -> int:
    """Exact integer value of G_k(x, y)."""
    k = poly.k
    ypow = [1] * (k + 1)
    for i in range(1, k + 1):
        ypow[i] = ypow[i - 1] * y
    total = 0
    xp = 1
    for i, c in enumerate(poly.coeffs):
        total += c * xp * ypow[k - i]
        xp *= x
    return total


def eval_dehomogenized(poly: EvenIndexPoly, y):
    """G_k(1, y) by Horner; y may be an int or an mpmath number."""
    total = poly.coeffs[0]
    for c in poly.coeffs[1:]:
        total = total * y + c
    return total


def root_set(k: int, precision_digits: int | None = None) -> RootSet:
    """alpha_{j,k} = 4 cos^2(pi j/(2k+1)), j = 1..k, strictly decreasing."""
    if k < 1:
        raise ValueError("k must be >= 1")
    digits = _default_digits(k) if precision_digits is None else precision_digits
    if digits < 20:
        raise ValueError("precision_digits must be >= 20")
    with mpmath.workdps(digits):
        alphas = tuple(4 * mpmath.cos(mpmath.pi * j / (2 * k + 1)) ** 2 for j in range(1, k + 1))
    return RootSet(k, alphas, digits)


def min_gap(k: int, precision_digits: int | None = None) -> mpmath.mpf:
    """Smallest distance between distinct roots of G_k(1, y); k >= 2."""
    if k < 2:
        raise ValueError("k must be >= 2 for a gap to exist")
    rs = root_set(k, precision_digits)
    with mpmath.workdps(rs.precision_digits):
        return min(rs.alphas[i] - rs.alphas[i + 1] for i in range(k - 1))


def _local_angle(local: PrimeLocalData, digits: int):
    if local.y_p >= 4 * local.x_p:
        raise DegenerateDiscriminantError(
            f"tau({local.p})^2 = {local.y_p} is not strictly below 4*p^11 = {4 * local.x_p}"
        )
    r = mpmath.sqrt(mpmath.mpf(local.x_p))
    theta = mpmath.acos(mpmath.mpf(local.tau_p) / (2 * r))
    return r, theta


def cyclotomic_factor_magnitudes(
    local: PrimeLocalData, n: int, precision_digits: int = 60
) -> list[tuple[int, mpmath.mpf]]:
    """|Phi_d(alpha, beta)| for each divisor d > 1 of n, ascending in d.

    alpha, beta are the conjugate local roots; the product over all listed
    d equals |tau(p^{n-1})| because alpha^n - beta^n factors through the
    homogenized cyclotomic polynomials.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    out = []
    with mpmath.workdps(precision_digits):
        r, theta = _local_angle(local, precision_digits)
        alpha = r * mpmath.exp(mpmath.mpc(0, theta))
        beta = mpmath.conj(alpha)
        for d in range(2, n + 1):
            if n % d:
                continue
            mag = mpmath.mpf(1)
            for m in range(1, d + 1):
                if gcd(m, d) == 1:
                    zeta = mpmath.expjpi(mpmath.mpf(2 * m) / d)
                    mag *= abs(alpha - zeta * beta)
            out.append((d, mag))
    return out


def growth_check(local: PrimeLocalData, k_max: int) -> list[tuple[int, bool]]:
    """Exact comparisons |tau(p^k)| > 2^k for k = 1..k_max."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    values = tau_prime_powers(local, k_max)
    return [(k, abs(values[k]) > 2**k) for k in range(1, k_max + 1)]


def reduce_ratio(y: int, x: int) -> RationalApproximant:
    """y/x in lowest terms; x must be positive."""
    if x < 1:
        raise ValueError("x must be >= 1")
    f = Fraction(y, x)
    return RationalApproximant(f.numerator, f.denominator, max(abs(f.numerator), f.denominator))


def approximation_quality(
    local: PrimeLocalData, k: int, precision_digits: int | None = None
) -> ApproximationQuality:
    """How closely tau(p)^2 / p^11 approaches a root of G_k(1, y).

    Returns the 1-based index j* of the nearest root alpha_{j,k}, the
    distance, and the height-based threshold 1 / (64 h^{5/2}); triggered
    means the distance dips below the threshold, which would contradict
    the count bounds if it happened often.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    digits = _default_digits(k) if precision_digits is None else precision_digits
    approx = reduce_ratio(local.y_p, local.x_p)
    rs = root_set(k, digits)
    with mpmath.workdps(digits):
        ratio = mpmath.mpf(approx.numerator) / approx.denominator
        distances = [abs(a - ratio) for a in rs.alphas]
        j_star = min(range(k), key=distances.__getitem__)
        distance = distances[j_star]
        threshold = 1 / (64 * mpmath.power(approx.height, mpmath.mpf(5) / 2))
        return ApproximationQuality(j_star + 1, distance, threshold, bool(distance < threshold))
