"""Target series, the divisor-sum Shimura lift, and divisibility verifiers.

The two scalar targets are

    phi = (eta(2z) eta(4z))^4 (1 - 96 psi(2z) + 256 psi(2z)^2) / (1 + 16 psi(2z))^2,
    64 * Delta / E_4^2,

and the lift of a weight-5/2 basis form G is the series with coefficients
a(n) = (-1)^((n-1)/2) sum over r | n of r * c(G, (n/r)^2), supported on odd n.
Verifiers check n | a(n) and the prime-cube congruences with exact integer
arithmetic; a non-integral coefficient anywhere is a hard error.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from ._highorder import family_square_table
from .cyclotomic import kronecker
from .series import EtaQuotientSpec, PrecisionError, PuiseuxSeries, eta_quotient, sigma
from .vvforms import BasisEntry, VVForm, basis_G

Rat = Union[int, Fraction]


@lru_cache(maxsize=None)
def psi_series(order: Rat) -> PuiseuxSeries:
    """The Hauptmodul eta^8 eta(4z)^16 / eta(2z)^24 = q + O(q^2) of X_0(4)."""
    return eta_quotient(EtaQuotientSpec([(1, 8), (4, 16), (2, -24)]), order)


@lru_cache(maxsize=None)
def phi_series(order: Rat) -> PuiseuxSeries:
    """The meromorphic weight-4 target, q - 132q^3 + 5630q^5 - ...; odd support."""
    order = Fraction(order)
    psi2 = psi_series(order / 2).rescale(2)
    pref = eta_quotient(EtaQuotientSpec([(2, 4), (4, 4)]), order)
    numer = 1 - psi2.scale(96) + (psi2 * psi2).scale(256)
    denom_inv = (1 + psi2.scale(16)).inverse()
    out = pref * numer * denom_inv * denom_inv
    if not out.is_integral():
        raise ArithmeticError("phi developed non-integral coefficients")
    return out


@lru_cache(maxsize=None)
def eisenstein_e4(order: Rat) -> PuiseuxSeries:
    order = Fraction(order)
    n_max = int(order) + 1
    terms = {0: Fraction(1)}
    for n in range(1, n_max + 1):
        terms[n] = Fraction(240 * sigma(n, 3))
    return PuiseuxSeries(1, terms, order)


@lru_cache(maxsize=None)
def scalar_magnetic_series(order: Rat) -> PuiseuxSeries:
    """64 * Delta / E_4^2 with Delta = eta^24."""
    order = Fraction(order)
    delta = eta_quotient(EtaQuotientSpec([(1, 24)]), order)
    e4_inv = eisenstein_e4(order).inverse()
    return (delta * e4_inv * e4_inv).scale(64)


# ---------------------------------------------------------------------- lift


@dataclass(frozen=True)
class LiftSeries:
    """Coefficients a(n) of the lifted series, supported on odd n."""

    coeffs: dict[int, int]
    nmax: int
    source: str

    def coeff(self, n: int) -> int:
        if n > self.nmax:
            raise PrecisionError(f"lift coefficient a({n}) beyond computed bound {self.nmax}")
        return self.coeffs.get(n, 0)


def _lift_from_square_values(sq, nmax: int, source: str) -> LiftSeries:
    coeffs = {}
    for n in range(1, nmax + 1, 2):
        acc = 0
        r = 1
        while r * r <= n:
            if n % r == 0:
                acc += r * sq(n // r)
                if r * r != n:
                    acc += (n // r) * sq(r)
            r += 1
        if n % 4 == 3:
            acc = -acc
        if acc:
            coeffs[n] = acc
    return LiftSeries(coeffs, nmax, source)


def shimura_lift(entry: BasisEntry | VVForm, nmax: int) -> LiftSeries:
    """The divisor-sum lift of a weight-5/2 basis form.

    Requires the form's truncation order to justify c(G, n^2) for all odd
    n <= nmax; raises PrecisionError otherwise.
    """
    form = entry.form if isinstance(entry, BasisEntry) else entry
    if form.rep != "rho":
        raise ValueError("the lift takes weight-5/2 forms")
    if form.trunc <= Fraction(nmax * nmax, 8):
        raise PrecisionError(
            f"need coefficients to q^({nmax}^2/8) but form is truncated at {form.trunc}"
        )

    def sq(k: int) -> int:
        c = form.coeff_q8(k * k)
        if c.denominator != 1:
            raise ArithmeticError("non-integral coefficient in the lift input")
        return c.numerator

    name = f"G_{entry.index}" if isinstance(entry, BasisEntry) else "form"
    return _lift_from_square_values(sq, nmax, name)


def family_lifts(ds: tuple[int, ...] | list[int], nmax: int) -> dict[int, LiftSeries]:
    """Lifts of the basis family via the deep-expansion backend."""
    tables = family_square_table(tuple(ds), nmax)
    return {
        d: _lift_from_square_values(lambda k, t=table: t[k], nmax, f"G_{d}")
        for d, table in tables.items()
    }


# ---------------------------------------------------------------------- verifiers


def _series_int_coeff(series: PuiseuxSeries, n: int) -> int:
    c = series.coeff(n)
    if c.denominator != 1:
        raise ArithmeticError(f"coefficient at q^{n} is not an integer: {c}")
    return c.numerator


def verify_divisibility(target, nmax: int, name: str = "series") -> dict:
    """Report on n | a(n) for n <= nmax.

    ``target`` is a PuiseuxSeries (checked on all integers n) or a
    LiftSeries (checked on its odd support).  Returns the JSON-ready report
    {target, nmax, failures, pass, runtime_ms}.
    """
    t0 = time.perf_counter()
    failures = []
    if isinstance(target, LiftSeries):
        for n in range(1, nmax + 1, 2):
            if target.coeff(n) % n != 0:
                failures.append(n)
        name = target.source if name == "series" else name
    else:
        for n in range(1, nmax + 1):
            if _series_int_coeff(target, n) % n != 0:
                failures.append(n)
    return {
        "target": name,
        "nmax": nmax,
        "failures": failures,
        "pass": not failures,
        "runtime_ms": int(1000 * (time.perf_counter() - t0)),
    }


def odd_primes_below(bound: int) -> list[int]:
    out = []
    for p in range(3, bound):
        if all(p % q for q in range(2, int(p**0.5) + 1)):
            out.append(p)
    return out


def verify_phi_prime_cubes(pmax: int) -> dict:
    """p^3 | (a(p) - p) for the phi target, for all odd primes p < pmax."""
    t0 = time.perf_counter()
    phi = phi_series(pmax + 1)
    failures = []
    for p in odd_primes_below(pmax):
        if (_series_int_coeff(phi, p) - p) % p**3 != 0:
            failures.append(p)
    return {
        "target": "phi prime-cube congruence",
        "nmax": pmax,
        "failures": failures,
        "pass": not failures,
        "runtime_ms": int(1000 * (time.perf_counter() - t0)),
    }


def verify_hecke_congruence(d: int, p: int, nmax: int) -> dict:
    """B(p^2 n, d) = p((-d/p) - (n/p)) B(n, d) mod p^3 for square-free d, n <= nmax."""
    t0 = time.perf_counter()
    entry = basis_G(d, Fraction(p * p * nmax + 8, 8))
    failures = []
    mod = p**3
    for n in range(1, nmax + 1):
        lhs = entry.coeff(p * p * n)
        rhs = p * (kronecker(-d, p) - kronecker(n, p)) * entry.coeff(n)
        if lhs.denominator != 1 or rhs.denominator != 1:
            raise ArithmeticError("non-integral basis coefficient")
        if (lhs.numerator - rhs.numerator) % mod != 0:
            failures.append(n)
    return {
        "target": f"Hecke congruence d={d} p={p}",
        "nmax": nmax,
        "failures": failures,
        "pass": not failures,
        "runtime_ms": int(1000 * (time.perf_counter() - t0)),
    }


def verify_p3_congruences(d: int, pmax: int, lift: LiftSeries | None = None) -> dict:
    """Per-prime verdicts for both prime-cube congruences.

    For every odd prime p < pmax: a_d(p) = p (d/p) B(1, d) mod p^3 on the
    lift of G_d, and p^3 | (a(p) - p) on the phi target.
    """
    t0 = time.perf_counter()
    lift_rep = verify_lift_prime_congruence(d, pmax, lift)
    phi_rep = verify_phi_prime_cubes(pmax)
    verdicts = {
        p: {
            "lift": p not in lift_rep["failures"],
            "phi": p not in phi_rep["failures"],
        }
        for p in odd_primes_below(pmax)
    }
    failures = sorted(set(lift_rep["failures"]) | set(phi_rep["failures"]))
    return {
        "target": f"prime-cube congruences d={d}",
        "nmax": pmax,
        "verdicts": verdicts,
        "failures": failures,
        "pass": not failures,
        "runtime_ms": int(1000 * (time.perf_counter() - t0)),
    }


def verify_lift_prime_congruence(d: int, pmax: int, lift: LiftSeries | None = None) -> dict:
    """a_d(p) = p (d/p) B(1, d) mod p^3 for odd primes p < pmax, square-free d."""
    t0 = time.perf_counter()
    primes = odd_primes_below(pmax)
    if lift is None:
        lift = family_lifts((d,), max(primes) if primes else 1)[d]
    b1 = basis_G(d, Fraction(2)).coeff(1)
    if b1.denominator != 1:
        raise ArithmeticError("non-integral basis coefficient")
    failures = []
    for p in primes:
        if (lift.coeff(p) - p * kronecker(d, p) * b1.numerator) % p**3 != 0:
            failures.append(p)
    return {
        "target": f"lift prime-cube congruence d={d}",
        "nmax": pmax,
        "failures": failures,
        "pass": not failures,
        "runtime_ms": int(1000 * (time.perf_counter() - t0)),
    }
