"""Weight-one weakly holomorphic forms on Gamma_1(4) as cusp-expansion triples.

A form g is carried around as the rationalized triple
    U = 2i * g,   V = 4 * (g|_1 S),   W = 2i * (g|_1 S T^2 S^{-1}),
i.e. its expansions at the cusps infinity, 0 and 1/2 with the scalars folded
in so that every series has rational coefficients.  Multiplying g by a
polynomial in the Hauptmodul of X_1(4) acts componentwise through that
Hauptmodul's own three cusp expansions, which is what the recursive family
construction below exploits.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Union

from .series import EtaQuotientSpec, PuiseuxSeries, eta_quotient

Rat = Union[int, Fraction]


def chi4(m: int) -> int:
    """The Kronecker character mod 4: 0 on evens, (-1)^((m-1)/2) on odds."""
    if m % 2 == 0:
        return 0
    return 1 if m % 4 == 1 else -1


@lru_cache(maxsize=None)
def sigma_chi4(n: int) -> int:
    """sum of chi4(m) over divisors m of n; equals r_2(n)/4."""
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += chi4(d)
            if d * d != n:
                total += chi4(n // d)
        d += 1
    return total


@dataclass(frozen=True)
class HauptTriple:
    """Cusp expansions of the Hauptmodul 2^4 eta^(-16) eta(2t)^24 eta(4t)^(-8)."""

    at_inf: PuiseuxSeries
    at_S: PuiseuxSeries
    at_ST2S: PuiseuxSeries


@dataclass(frozen=True)
class CuspTriple:
    """Rationalized cusp expansions (U, V, W) of a weight-one form.

    ``poly`` records the polynomial P with this triple = base_triple * P(psi~),
    as coefficients (c_0, ..., c_deg); the base Eisenstein triple has P = 1.
    """

    U: PuiseuxSeries
    V: PuiseuxSeries
    W: PuiseuxSeries
    poly: tuple[Fraction, ...] = (Fraction(1),)

    def add_scaled(self, other: CuspTriple, c: Rat) -> CuspTriple:
        pa, pb = list(self.poly), [x * c for x in other.poly]
        n = max(len(pa), len(pb))
        pa += [Fraction(0)] * (n - len(pa))
        pb += [Fraction(0)] * (n - len(pb))
        return CuspTriple(
            self.U + other.U.scale(c),
            self.V + other.V.scale(c),
            self.W + other.W.scale(c),
            tuple(a + b for a, b in zip(pa, pb)),
        )


@lru_cache(maxsize=None)
def base_eisenstein_triple(order: Rat) -> CuspTriple:
    """The triple of the weight-one Eisenstein generator of M_1(Gamma_1(4)).

    U = -(1 + 4 sum sigma_chi4(n) q^n), V = 1 + 4 sum sigma_chi4(n) q^(n/4),
    W = -4 sum over odd n of sigma_chi4(n) q^(n/2).
    """
    order = Fraction(order)
    n_max = ceil(order * 4) + 1
    u_terms = {0: Fraction(-1)}
    v_terms = {0: Fraction(1)}
    w_terms = {}
    for n in range(1, n_max + 1):
        s = sigma_chi4(n)
        if not s:
            continue
        v_terms[n] = Fraction(4 * s)
        if n <= n_max // 4 + 1:
            u_terms[n] = Fraction(-4 * s)
        if n % 2 == 1 and n <= n_max // 2 + 1:
            w_terms[n] = Fraction(-4 * s)
    return CuspTriple(
        PuiseuxSeries(1, u_terms, order),
        PuiseuxSeries(4, v_terms, order),
        PuiseuxSeries(2, w_terms, order),
    )


@lru_cache(maxsize=None)
def hauptmodul_triple(order: Rat) -> HauptTriple:
    at_inf = eta_quotient(EtaQuotientSpec([(1, -16), (2, 24), (4, -8)], 16), order)
    at_s = eta_quotient(
        EtaQuotientSpec([(1, -16), (Fraction(1, 2), 24), (Fraction(1, 4), -8)]), order
    )
    at_st2s = eta_quotient(EtaQuotientSpec([(1, -8), (4, 8)], -256), order)
    return HauptTriple(at_inf, at_s, at_st2s)


@lru_cache(maxsize=None)
def _power_triple(k: int, order: Rat) -> CuspTriple:
    """base triple times the k-th power of the Hauptmodul, componentwise."""
    if k == 0:
        return base_eisenstein_triple(order)
    prev = _power_triple(k - 1, order)
    h = hauptmodul_triple(order)
    poly = (Fraction(0),) * k + (Fraction(1),)
    return CuspTriple(prev.U * h.at_inf, prev.V * h.at_S, prev.W * h.at_ST2S, poly)


def _raw_order(m: int, order: Rat) -> Fraction:
    # multiplying by the deg-m Hauptmodul polynomial costs m/4 of truncation;
    # round up to a multiple of 16 so nearby requests share the power cache
    need = ceil(Fraction(order) + Fraction(m, 4)) + 2
    return Fraction(-(-need // 16) * 16)


def build_gtilde(m: int, order: Rat) -> CuspTriple:
    """The unique triple base * P(psi~), P monic integral of degree m, with
    V = q^(-m/4) + O(q^(1/4)).

    The m conditions (vanishing V-coefficients at exponents -(m-1)/4, ..., 0)
    are solved by descending back-substitution; all pivots are 1, so the
    polynomial is integral.
    """
    if m < 0:
        raise ValueError("family index must be nonnegative")
    raw = _raw_order(m, order)
    x = _power_triple(m, raw)
    for j in range(m - 1, -1, -1):
        c = x.V.coeff(Fraction(-j, 4))
        if c:
            if c.denominator != 1:
                raise ArithmeticError(f"non-integral elimination coefficient {c}")
            x = x.add_scaled(_power_triple(j, raw), -c)
    if x.V.coeff(Fraction(-m, 4)) != 1:
        raise ArithmeticError("V-component lost its monic leading term")
    return x


def build_gtilde_dual(m: int, order: Rat) -> CuspTriple:
    """The dual-family triple: V vanishes at exponents -(m-1)/4 ... -1/4 and
    the mixed constant condition V(0) - U(0) = 0 holds.

    Index m = 1 mod 4 is rejected (the dual lift of such a pole lands in an
    excluded component).  The last pivot is 2, so the constant polynomial
    coefficient may be a half-integer; integrality of the resulting
    vector-valued forms is asserted downstream.
    """
    if m < 0:
        raise ValueError("family index must be nonnegative")
    if m % 4 == 1:
        raise ValueError(f"dual family index {m} = 1 mod 4 is excluded")
    raw = _raw_order(m, order)
    x = _power_triple(m, raw)
    for j in range(m - 1, 0, -1):
        c = x.V.coeff(Fraction(-j, 4))
        if c:
            if c.denominator != 1:
                raise ArithmeticError(f"non-integral elimination coefficient {c}")
            x = x.add_scaled(_power_triple(j, raw), -c)
    if m > 0:
        base = _power_triple(0, raw)
        mismatch = x.V.coeff(0) - x.U.coeff(0)
        pivot = base.V.coeff(0) - base.U.coeff(0)  # equals 2
        c0 = mismatch / pivot
        if c0:
            x = x.add_scaled(base, -c0)
        if x.V.coeff(0) != x.U.coeff(0):
            raise ArithmeticError("dual constant condition failed to close")
    return x
