"""Explicit count bounds for prime tau values in arithmetic progressions mod 23.

All evaluations use natural logarithms at a configurable working precision
(default 50 digits, comfortably past the 30 significant digits the report
promises).  Constants that are ineffective in the underlying theorems are
never given numeric values; they ride along as caveat strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

import mpmath

DEFAULT_DPS = 50

CAVEATS = (
    "the zero-free-region constant in the progression prime counts is ineffective; "
    "the bracket below is asserted only for x beyond an unspecified threshold",
    "the root-separation constant for the even-index polynomials is effective in "
    "principle but not computed here; only its exponent structure is used",
    "the approximation-count constant 96000 is explicit, but the height inequality "
    "it feeds on holds only for k >= 3",
)


class DirichletSum(NamedTuple):
    partial_sum: mpmath.mpf
    normalizer: mpmath.mpf
    ratio: mpmath.mpf


@dataclass(frozen=True)
class BoundReport:
    """Every explicit bound evaluated at one ceiling N, plus caveat lines."""

    n: int
    k_lo: int
    k_hi: mpmath.mpf
    per_k_bound: dict[int, mpmath.mpf]
    attainable_ceiling: mpmath.mpf
    progression_floor: mpmath.mpf
    bracket: tuple[mpmath.mpf, mpmath.mpf]
    density: Fraction
    sqrt_sample_ceiling: mpmath.mpf
    census_sample_ceiling: mpmath.mpf
    caveats: tuple[str, ...] = CAVEATS


def admissible_k_range(n: int, dps: int = DEFAULT_DPS) -> tuple[int, mpmath.mpf]:
    """(3, log N / (2 log 2)): the k window where tau(p^{2k}) can be prime below N."""
    if n < 2:
        raise ValueError("N must be >= 2")
    with mpmath.workdps(dps):
        return 3, mpmath.log(n) / (2 * mpmath.log(2))


def bvdp_count_bound(k: int, dps: int = DEFAULT_DPS) -> mpmath.mpf:
    """4 log((k+1) log 4) + 96000 (log k)^2 log(200 log k), the per-k cap on
    rational approximations close enough to a root of G_k(1, y); k >= 3."""
    if k < 3:
        raise ValueError("k must be >= 3")
    with mpmath.workdps(dps):
        k_ = mpmath.mpf(k)
        return 4 * mpmath.log((k_ + 1) * mpmath.log(4)) + 96000 * mpmath.log(k_) ** 2 * mpmath.log(
            200 * mpmath.log(k_)
        )


def attainable_prime_ceiling(n: int, dps: int = DEFAULT_DPS) -> mpmath.mpf:
    """N^{9/10} log N / (2 log 2): cap on progression primes in [-N, N] that
    can occur as tau(p^{2k}) over the admissible k window."""
    if n < 1:
        raise ValueError("N must be >= 1")
    with mpmath.workdps(dps):
        n_ = mpmath.mpf(n)
        return mpmath.power(n_, mpmath.mpf(9) / 10) * mpmath.log(n_) / (2 * mpmath.log(2))


def progression_decade_floor(m, dps: int = DEFAULT_DPS) -> mpmath.mpf:
    """7 * 10^M / (11 log 10 (M+1)): floor on signed primes of one fixed
    nonzero class mod 23 with 10^M <= |l| <= 10^{M+1}; M >= 1."""
    with mpmath.workdps(dps):
        m_ = mpmath.mpf(m)
        if m_ < 1:
            raise ValueError("M must be >= 1")
        return 7 * mpmath.power(10, m_) / (11 * mpmath.log(10) * (m_ + 1))


def pi_bracket(x, dps: int = DEFAULT_DPS) -> tuple[mpmath.mpf, mpmath.mpf]:
    """(0.9, 1.1) * x / (11 log x) around the signed-class prime count up to x.

    Holds for x beyond an ineffective threshold; reported unconditionally
    with that caveat attached at the report level.
    """
    with mpmath.workdps(dps):
        x_ = mpmath.mpf(x)
        if x_ <= 1:
            raise ValueError("x must be > 1")
        center = x_ / (11 * mpmath.log(x_))
        return (mpmath.mpf(9) / 10 * center, mpmath.mpf(11) / 10 * center)


def density_fraction() -> Fraction:
    """Dirichlet density of the signed classes covered by the exclusion list."""
    return Fraction(18, 22)


def dirichlet_partial_sum(primes: Sequence[int], s, dps: int = DEFAULT_DPS) -> DirichletSum:
    """sum 1/|p|^s over signed primes, with the s->1 normalizer 2 log(1/(s-1))."""
    with mpmath.workdps(dps):
        s_ = mpmath.mpf(s)
        if s_ <= 1:
            raise ValueError("s must be > 1")
        for p in primes:
            if abs(p) < 2:
                raise ValueError(f"{p} is not a signed prime")
        total = mpmath.fsum(mpmath.power(abs(p), -s_) for p in primes)
        normalizer = 2 * mpmath.log(1 / (s_ - 1))
        # The normalizer is the s -> 1+ density scale; it vanishes at s = 2.
        ratio = total / normalizer if normalizer != 0 else mpmath.inf
        return DirichletSum(total, normalizer, ratio)


def decade_margin(m: int, dps: int = DEFAULT_DPS) -> mpmath.mpf:
    """Floor minus ceiling at N = 10^{M+1}: positive once the progression
    supply provably outruns the attainable tau values."""
    with mpmath.workdps(dps):
        n = 10 ** (m + 1)
        _, k_hi = admissible_k_range(n, dps)
        k_count = mpmath.ceil(k_hi) - 3
        return progression_decade_floor(m, dps) - attainable_prime_ceiling(n, dps) * k_count


def positivity_crossover(m_max: int = 200, dps: int = DEFAULT_DPS) -> int | None:
    """Smallest M with decade_margin positive from M through m_max, or None."""
    first = None
    for m in range(1, m_max + 1):
        if decade_margin(m, dps) > 0:
            if first is None:
                first = m
        else:
            first = None
    return first


def bound_report(n: int, dps: int = DEFAULT_DPS) -> BoundReport:
    """All bounds evaluated at ceiling N in one struct."""
    k_lo, k_hi = admissible_k_range(n, dps)
    with mpmath.workdps(dps):
        per_k = {k: bvdp_count_bound(k, dps) for k in range(k_lo, int(mpmath.ceil(k_hi)))}
        m = mpmath.log10(mpmath.mpf(n)) - 1
        floor = progression_decade_floor(m, dps) if m >= 1 else mpmath.mpf("nan")
        n_ = mpmath.mpf(n)
        sqrt_ceiling = mpmath.sqrt(n_)
        census_ceiling = sqrt_ceiling + mpmath.power(n_, mpmath.mpf(3) / 11)
    return BoundReport(
        n=n,
        k_lo=k_lo,
        k_hi=k_hi,
        per_k_bound=per_k,
        attainable_ceiling=attainable_prime_ceiling(n, dps),
        progression_floor=floor,
        bracket=pi_bracket(n, dps),
        density=density_fraction(),
        sqrt_sample_ceiling=sqrt_ceiling,
        census_sample_ceiling=census_ceiling,
    )
