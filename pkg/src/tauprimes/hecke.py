"""Multiplicative structure of tau.

tau is multiplicative on coprime arguments and satisfies the local
recurrence tau(p^m) = tau(p) tau(p^{m-1}) - p^11 tau(p^{m-2}), i.e. the
power sums of the roots of x^2 - tau(p) x + p^11.  Everything here is
exact big-integer arithmetic except closed_form_residual, which compares
the exact value against the trigonometric closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

import mpmath

from .errors import BudgetExceededError, DegenerateDiscriminantError, MissingPrimeError

DEFAULT_FACTOR_BUDGET = 10**12


@dataclass(frozen=True)
class PrimeLocalData:
    """A prime together with tau(p); x_p = p^11 and y_p = tau(p)^2 are derived."""

    p: int
    tau_p: int
    x_p: int = field(init=False, repr=False)
    y_p: int = field(init=False, repr=False)

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("p must be a prime >= 2")
        object.__setattr__(self, "x_p", self.p**11)
        object.__setattr__(self, "y_p", self.tau_p * self.tau_p)


@dataclass(frozen=True)
class Factorization:
    """n as an ordered list of (prime, exponent) pairs with product n."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError("factors must be (increasing prime, exponent >= 1) pairs")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factor product {prod} != n {self.n}")


def tau_prime_power(local: PrimeLocalData, k: int) -> int:
    """Exact tau(p^k) from the order-2 linear recurrence; k >= 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1
    prev, cur = 1, local.tau_p
    t, x = local.tau_p, local.x_p
    for _ in range(k - 1):
        prev, cur = cur, t * cur - x * prev
    return cur


def tau_prime_powers(local: PrimeLocalData, max_exponent: int) -> list[int]:
    """[tau(p^0), tau(p^1), ..., tau(p^max_exponent)] in one pass."""
    if max_exponent < 0:
        raise ValueError("max_exponent must be >= 0")
    out = [1]
    if max_exponent == 0:
        return out
    out.append(local.tau_p)
    t, x = local.tau_p, local.x_p
    for _ in range(max_exponent - 1):
        out.append(t * out[-1] - x * out[-2])
    return out


def tau_of_n(factorization: Factorization, tau_at_primes: Mapping[int, int]) -> int:
    """tau(n) assembled multiplicatively from tau at the prime factors."""
    total = 1
    for p, e in factorization.factors:
        if p not in tau_at_primes:
            raise MissingPrimeError(p)
        total *= tau_prime_power(PrimeLocalData(p, tau_at_primes[p]), e)
    return total


def deligne_check(local: PrimeLocalData) -> bool:
    """Exact test of Deligne's bound tau(p)^2 <= 4 p^11."""
    return local.y_p <= 4 * local.x_p


def closed_form_residual(local: PrimeLocalData, k: int, precision_digits: int = 60) -> float:
    """Relative gap between exact tau(p^k) and p^{11k/2} sin((k+1)t)/sin(t).

    Here t = arccos(tau(p) / (2 p^{11/2})); requires tau(p)^2 < 4 p^11 so
    the angle is real and nondegenerate.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if local.y_p >= 4 * local.x_p:
        raise DegenerateDiscriminantError(
            f"tau({local.p})^2 = {local.y_p} is not strictly below 4*p^11 = {4 * local.x_p}"
        )
    exact = tau_prime_power(local, k)
    with mpmath.workdps(precision_digits):
        root = mpmath.sqrt(mpmath.mpf(local.x_p))
        theta = mpmath.acos(mpmath.mpf(local.tau_p) / (2 * root))
        approx = root**k * mpmath.sin((k + 1) * theta) / mpmath.sin(theta)
        if exact == 0:
            # 0/0 convention: agree when the closed form is also negligible
            # at the working scale.
            scale = root**k * mpmath.mpf(10) ** (-(precision_digits - 10))
            return 0.0 if abs(approx) <= scale else float("inf")
        return float(abs(exact - approx) / abs(exact))


# Candidate generator for trial division: 2, 3, 5, 7, then numbers coprime
# to 210 stepped by a fixed wheel of 48 residue gaps.
_WHEEL_FIRST = (2, 3, 5, 7)
_WHEEL_RESIDUES = [r for r in range(11, 11 + 210) if all(r % q for q in _WHEEL_FIRST)]
_WHEEL_GAPS = tuple(
    _WHEEL_RESIDUES[(i + 1) % len(_WHEEL_RESIDUES)] - _WHEEL_RESIDUES[i]
    + (210 if i + 1 == len(_WHEEL_RESIDUES) else 0)
    for i in range(len(_WHEEL_RESIDUES))
)


def factorize(n: int, *, budget: int = DEFAULT_FACTOR_BUDGET) -> Factorization:
    """Trial-division factorization of n >= 1 within a size budget."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > budget:
        raise BudgetExceededError(f"n = {n} exceeds the factorization budget {budget}")
    original = n
    factors = []
    for p in _WHEEL_FIRST:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    c = _WHEEL_RESIDUES[0]
    gap_i = 0
    while c * c <= n:
        if n % c == 0:
            e = 0
            while n % c == 0:
                n //= c
                e += 1
            factors.append((c, e))
        c += _WHEEL_GAPS[gap_i]
        gap_i = (gap_i + 1) % len(_WHEEL_GAPS)
    if n > 1:
        factors.append((n, 1))
    return Factorization(original, tuple(factors))
