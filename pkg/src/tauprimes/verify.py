"""Self-contained verification suites behind `tauprimes verify`.

Each check recomputes a published or derivable fact through two routes
that share as little code as possible (sparse series vs naive expansion,
recurrence vs closed form, formula vs sieve) and reports pass/fail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import mpmath

from . import bounds as bnd
from .cache import read_cache
from .congruence import (
    Class23Tag,
    allowed_residues_for_prime_value,
    classify_mod23,
    excluded_b_set,
    parity_law,
    tau_mod23,
)
from .errors import CacheError
from .hecke import PrimeLocalData, closed_form_residual, factorize, tau_of_n, tau_prime_powers
from .primality import primes_up_to
from .search import Verdict, census_by_residue, search_prime_tau, smallest_prime_tau
from .series import TauTable, delta_series
from .spectral import (
    approximation_quality,
    cyclotomic_factor_magnitudes,
    eval_dehomogenized,
    eval_even_poly,
    even_index_poly,
    growth_check,
    min_gap,
    root_set,
)

SUITES = ("series", "congruence", "spectral", "search", "bounds")

EXPANSION_HEAD = (1, -24, 252, -1472, 4830)
LEHMER_N = 63001
LEHMER_VALUE = -80561663527802406257321747


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str


def brute_force_delta(limit: int) -> list[int]:
    """tau(1..limit) by 24 naive multiplications per Euler factor (1 - q^n).

    Deliberately ignorant of the sparse-series identity and of the packed
    convolution; this is the independent oracle.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    degree = limit - 1
    poly = [0] * (degree + 1)
    poly[0] = 1
    for n in range(1, degree + 1):
        for _ in range(24):
            for i in range(degree, n - 1, -1):
                poly[i] -= poly[i - n]
    return poly


class Verifier:
    """Runs suites, sharing one lazily grown tau table across checks."""

    def __init__(self, cache_path: str | Path | None = None):
        self.cache_path = Path(cache_path) if cache_path else None
        self._table: TauTable | None = None

    def table(self, limit: int) -> TauTable:
        if self._table is None and self.cache_path and self.cache_path.exists():
            try:
                self._table = read_cache(self.cache_path)
            except CacheError:
                self._table = None
        if self._table is None or self._table.limit < limit:
            self._table = delta_series(limit)
        return self._table.truncated(limit) if self._table.limit > limit else self._table

    def run(self, suite: str) -> list[CheckResult]:
        if suite == "all":
            out = []
            for name in SUITES:
                out.extend(self.run(name))
            return out
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}; choose from {SUITES + ('all',)}")
        return getattr(self, f"_suite_{suite}")()

    # -- series ------------------------------------------------------------

    def _suite_series(self) -> list[CheckResult]:
        out = []
        head = tuple(delta_series(5).coeffs)
        out.append(
            CheckResult(
                "series",
                "expansion head tau(1..5)",
                head == EXPANSION_HEAD,
                f"got {head}",
            )
        )

        oracle = brute_force_delta(500)
        table500 = self.table(500)
        agree = all(oracle[n - 1] == table500[n] for n in range(1, 501))
        out.append(
            CheckResult(
                "series",
                "naive Euler-product oracle, n <= 500",
                agree,
                "sparse-series and naive expansions agree" if agree else "MISMATCH",
            )
        )

        table = self.table(100_000)
        bad = sum(1 for n, t in table.items() if not parity_law(n, t))
        out.append(
            CheckResult(
                "series",
                "parity law, n <= 10^5",
                bad == 0,
                f"{bad} violations",
            )
        )

        ok, detail = _hecke_consistency(table.truncated(10_000))
        out.append(CheckResult("series", "Hecke recurrence + multiplicativity, n <= 10^4", ok, detail))

        got = table[LEHMER_N]
        route2 = tau_of_n(factorize(LEHMER_N), {251: table[251]})
        out.append(
            CheckResult(
                "series",
                "Lehmer value tau(63001)",
                got == LEHMER_VALUE and route2 == LEHMER_VALUE,
                f"series {got}, multiplicative route {route2}",
            )
        )

        below = smallest_prime_tau(LEHMER_N - 1, table=table)
        at = smallest_prime_tau(LEHMER_N, table=table)
        ok = below is None and at == (LEHMER_N, LEHMER_VALUE)
        out.append(
            CheckResult(
                "series",
                "first prime tau value appears at n = 63001",
                ok,
                f"below: {below}, at: {at}",
            )
        )
        return out

    # -- congruence ---------------------------------------------------------

    def _suite_congruence(self) -> list[CheckResult]:
        out = []
        table = self.table(10_000)
        expected = {
            Class23Tag.NON_RESIDUE: 0,
            Class23Tag.PRINCIPAL_FORM: 2,
            Class23Tag.SPLIT_NON_PRINCIPAL: 22,
        }
        bad = []
        for p in primes_up_to(10_000):
            cls = classify_mod23(p)
            if cls.tag is Class23Tag.IS_TWENTY_THREE:
                continue
            if cls.witness is not None:
                a, b = cls.witness
                if a * a + 23 * b * b != p:
                    bad.append((p, "witness"))
            if table[p] % 23 != expected[cls.tag]:
                bad.append((p, cls.tag.value))
        out.append(
            CheckResult(
                "congruence",
                "class determines tau(p) mod 23, p < 10^4",
                not bad,
                f"{len(bad)} violations {bad[:3]}" if bad else "all classes match",
            )
        )

        bad = 0
        table300 = table.truncated(300)
        for p in primes_up_to(299):
            if p == 23:
                continue
            cls = classify_mod23(p)
            exact = tau_prime_powers(PrimeLocalData(p, table300[p]), 100)
            bad += sum(1 for k in range(101) if exact[k] % 23 != tau_mod23(cls, k))
        out.append(
            CheckResult(
                "congruence",
                "recurrence mod 23 vs exact big-int, p < 300, k <= 100",
                bad == 0,
                f"{bad} mismatches",
            )
        )

        pats_ok = _pattern_check()
        out.append(
            CheckResult(
                "congruence",
                "periodic residue patterns, k <= 1000",
                pats_ok,
                "non-residue alternates 1,0; split class cycles 1,22,0; principal gives k+1",
            )
        )

        allowed1 = set(allowed_residues_for_prime_value(1))
        allowed11 = set(allowed_residues_for_prime_value(11))
        excl = excluded_b_set()
        k_min_ok = all(
            min(k for k in range(1, 24) if (2 * k + 1) % 23 == b) >= 3 for b in excl
        )
        ok = (
            allowed1 == {0, 1, 3, 22}
            and allowed11 == {0, 1, 22}
            and len(excl) == 18
            and excl.isdisjoint({0, 1, 3, 5, 22})
            and k_min_ok
        )
        out.append(
            CheckResult(
                "congruence",
                "allowed residue sets and the 18 excluded classes",
                ok,
                f"allowed(k=1)={sorted(allowed1)}, |excluded|={len(excl)}",
            )
        )
        return out

    # -- spectral ------------------------------------------------------------

    def _suite_spectral(self) -> list[CheckResult]:
        out = []
        table = self.table(20)
        bad = 0
        for p in primes_up_to(20):
            local = PrimeLocalData(p, table[p])
            values = tau_prime_powers(local, 16)
            for k in range(9):
                if eval_even_poly(even_index_poly(k), local.x_p, local.y_p) != values[2 * k]:
                    bad += 1
        out.append(
            CheckResult(
                "spectral",
                "G_k(p^11, tau(p)^2) = tau(p^{2k}), p <= 20, k <= 8",
                bad == 0,
                f"{bad} mismatches",
            )
        )

        worst = 0.0
        for k in range(1, 51):
            digits = max(50, 4 * k)
            poly = even_index_poly(k)
            norm1 = sum(abs(c) for c in poly.coeffs)
            rs = root_set(k, digits)
            # Guard digits so Horner rounding stays subordinate to the
            # digits-digit accuracy of the roots themselves.
            with mpmath.workdps(2 * digits + 20):
                tol = mpmath.mpf(10) ** (-(digits - 10)) * norm1
                for alpha in rs.alphas:
                    resid = abs(eval_dehomogenized(poly, alpha))
                    worst = max(worst, float(resid / tol))
        out.append(
            CheckResult(
                "spectral",
                "trig roots annihilate G_k(1, y), k <= 50",
                worst < 1.0,
                f"worst residual at {worst:.3g} of tolerance",
            )
        )

        gap_ok = True
        for k in range(3, 201):
            if not min_gap(k) > (mpmath.pi / (2 * k + 1)) ** 2:
                gap_ok = False
                break
        out.append(
            CheckResult(
                "spectral",
                "root separation beats (pi/(2k+1))^2, 3 <= k <= 200",
                gap_ok,
                "adjacent-gap lower bound holds" if gap_ok else f"fails at k={k}",
            )
        )

        worst_rel = 0.0
        for p in primes_up_to(13):
            local = PrimeLocalData(p, table[p])
            values = tau_prime_powers(local, 19)
            for n in range(2, 21):
                mags = cyclotomic_factor_magnitudes(local, n, 60)
                with mpmath.workdps(60):
                    prod = mpmath.mpf(1)
                    for _, m in mags:
                        prod *= m
                    exact = abs(values[n - 1])
                    if exact:
                        worst_rel = max(worst_rel, float(abs(prod - exact) / exact))
        out.append(
            CheckResult(
                "spectral",
                "cyclotomic magnitudes rebuild |tau(p^{n-1})|, p <= 13, n <= 20",
                worst_rel < 1e-9,
                f"worst relative error {worst_rel:.3g}",
            )
        )

        growth_ok = True
        resid_worst = 0.0
        for p in primes_up_to(50):
            local = PrimeLocalData(p, self.table(50)[p])
            if not all(flag for _, flag in growth_check(local, 60)):
                growth_ok = False
            for k in range(1, 31):
                resid_worst = max(resid_worst, closed_form_residual(local, k, 60))
        out.append(
            CheckResult(
                "spectral",
                "|tau(p^k)| > 2^k and closed form matches, p <= 50",
                growth_ok and resid_worst < 1e-20,
                f"worst closed-form residual {resid_worst:.3g}",
            )
        )

        triggered = []
        for p in primes_up_to(50):
            local = PrimeLocalData(p, self.table(50)[p])
            for k in range(1, 31):
                q = approximation_quality(local, k)
                if q.triggered:
                    triggered.append((p, k))
        out.append(
            CheckResult(
                "spectral",
                "no tau ratio approaches a root within 1/(64 h^{5/2})",
                not triggered,
                f"triggered at {triggered}" if triggered else "threshold never crossed",
            )
        )
        return out

    # -- search ---------------------------------------------------------------

    def _suite_search(self) -> list[CheckResult]:
        out = []
        table = self.table(2000)
        hits = search_prime_tau(2000, 6, 10**40, table=table)
        lehmer = [h for h in hits if h.p == 251 and h.k == 1]
        ok = (
            len(lehmer) == 1
            and lehmer[0].value == LEHMER_VALUE
            and lehmer[0].verdict is Verdict.PROBABLE_PRIME
            and lehmer[0].residue23 == 1
        )
        out.append(
            CheckResult(
                "search",
                "grid p <= 2000, k <= 6, cap 10^40 finds the Lehmer hit",
                ok,
                f"{len(hits)} hits, {sum(1 for h in hits if h.verdict is Verdict.PROBABLE_PRIME)} probable primes",
            )
        )

        census = census_by_residue(hits, 10**40)
        ok = (
            census.counts[1] >= 1
            and all(h.k >= 3 for h in census.excluded_class_hits)
            and not census.footnote_anomalies
        )
        out.append(
            CheckResult(
                "search",
                "census residues admissible, excluded classes need k >= 3",
                ok,
                f"counts {dict((r, c) for r, c in census.counts.items() if c)}",
            )
        )

        small = search_prime_tau(3, 1, 10**7, table=self.table(3))
        vals = {(h.p, h.k): (h.value, h.verdict) for h in small}
        ok = vals[(2, 1)] == (-1472, Verdict.COMPOSITE) and vals[(3, 1)] == (-113643, Verdict.COMPOSITE)
        out.append(
            CheckResult(
                "search",
                "tau(4) and tau(9) surface as composite hits",
                ok,
                f"{vals}",
            )
        )
        return out

    # -- bounds -----------------------------------------------------------------

    def _suite_bounds(self) -> list[CheckResult]:
        out = []
        checks = []
        with mpmath.workdps(100):
            _, k_hi = bnd.admissible_k_range(64, 100)
            checks.append(abs(k_hi - 3) < mpmath.mpf(10) ** -90)
            for k in (3, 10, 1000):
                v = bnd.bvdp_count_bound(k, 50)
                k_ = mpmath.mpf(k)
                alt = mpmath.fsum(
                    [
                        4 * (mpmath.log(k_ + 1) + mpmath.log(mpmath.log(4))),
                        96000 * mpmath.log(k_) ** 2 * (mpmath.log(200) + mpmath.log(mpmath.log(k_))),
                    ]
                )
                checks.append(abs(v - alt) / alt < mpmath.mpf(10) ** -29)
            for n in (10**6, 10**12):
                n_ = mpmath.mpf(n)
                a = bnd.attainable_prime_ceiling(n, 50)
                alt = mpmath.exp(mpmath.mpf(9) / 10 * mpmath.log(n_)) * mpmath.log(n_) / mpmath.log(4)
                checks.append(abs(a - alt) / alt < mpmath.mpf(10) ** -29)
            b7 = bnd.progression_decade_floor(7, 50)
            alt = 7 * mpmath.mpf(10**7) / (11 * mpmath.log(10) * 8)
            checks.append(abs(b7 - alt) / alt < mpmath.mpf(10) ** -29)
        out.append(
            CheckResult(
                "bounds",
                "formulas agree with independent re-evaluation to 30 digits",
                all(checks),
                f"{sum(checks)}/{len(checks)} comparisons",
            )
        )

        with mpmath.workdps(50):
            ratio_ok = all(
                abs(
                    bnd.progression_decade_floor(m + 1) / bnd.progression_decade_floor(m)
                    - mpmath.mpf(10 * (m + 1)) / (m + 2)
                )
                < mpmath.mpf(10) ** -40
                for m in range(1, 30)
            )
        neg_ok = all(bnd.decade_margin(m) < 0 for m in range(6, 13))
        crossover = bnd.positivity_crossover(200)
        out.append(
            CheckResult(
                "bounds",
                "decade growth law, early deficit, and positivity crossover",
                ratio_ok and neg_ok and crossover is not None,
                f"floor/ceiling margin turns positive at M = {crossover}",
            )
        )

        lower, upper = bnd.pi_bracket(10**6)
        count = _signed_class_count(10**6, 2)
        out.append(
            CheckResult(
                "bounds",
                "sieve census of a signed class sits in the Dirichlet bracket at 10^6",
                bool(lower < count < upper),
                f"count {count} in ({mpmath.nstr(lower, 8)}, {mpmath.nstr(upper, 8)})",
            )
        )

        ds = bnd.dirichlet_partial_sum([3, -3], 2)
        with mpmath.workdps(50):
            sum_ok = abs(ds.partial_sum - mpmath.mpf(2) / 9) < mpmath.mpf(10) ** -40
        ok = bnd.density_fraction() == Fraction(9, 11) and sum_ok
        out.append(
            CheckResult(
                "bounds",
                "density 18/22 and the two-term Dirichlet sum",
                ok,
                f"sum {mpmath.nstr(ds.partial_sum, 10)}, normalizer {mpmath.nstr(ds.normalizer, 10)}",
            )
        )
        return out


def _hecke_consistency(table: TauTable) -> tuple[bool, str]:
    limit = table.limit
    bad = 0
    for p in primes_up_to(limit):
        local = PrimeLocalData(p, table[p])
        m = 2
        while p**m <= limit:
            if table[p**m] != local.tau_p * table[p ** (m - 1)] - local.x_p * table[p ** (m - 2)]:
                bad += 1
            m += 1
    pairs = 0
    for m in range(2, limit + 1):
        for n in range(m, limit // m + 1):
            if math.gcd(m, n) == 1:
                pairs += 1
                if table[m * n] != table[m] * table[n]:
                    bad += 1
    return bad == 0, f"{bad} violations over prime powers and {pairs} coprime pairs"


def _pattern_check() -> bool:
    from .congruence import Class23

    nr = Class23(Class23Tag.NON_RESIDUE)
    sp = Class23(Class23Tag.SPLIT_NON_PRINCIPAL)
    pr = Class23(Class23Tag.PRINCIPAL_FORM, (6, 1))
    for k in range(1001):
        if tau_mod23(nr, k) != (1 if k % 2 == 0 else 0):
            return False
        if tau_mod23(sp, k) != (1, 22, 0)[k % 3]:
            return False
        if tau_mod23(pr, k) != (k + 1) % 23:
            return False
    return True


def _signed_class_count(x: int, b: int) -> int:
    """#{signed primes l, |l| <= x, l = b mod 23} by sieve; counts p = b and p = -b."""
    count = 0
    targets = {b % 23, (-b) % 23}
    for p in primes_up_to(x):
        if p % 23 in targets:
            count += 1
    return count


def format_results(results: list[CheckResult]) -> str:
    lines = []
    for r in results:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.suite}: {r.name} ({r.detail})")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)
