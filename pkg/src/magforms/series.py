"""Truncated Puiseux series over Q and eta-quotient expansions.

A series is a finite sum of terms c * q^(k/denom) together with an explicit
truncation order: coefficients are asserted correct exactly for exponents
below ``trunc``.  Every operation propagates the tightest truncation order
justified by its inputs; reading past it raises ``PrecisionError`` rather
than silently returning garbage.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, gcd
from typing import Iterable, Union

from . import _fastpoly

Rat = Union[int, Fraction]

#: Exponent lattice denominators must divide this bound (eta(tau/4)
#: intermediates need 96).
MAX_DENOM = 96

#: Extra lattice steps computed beyond what a caller asks for, so that
#: downstream truncation-order loss does not eat into requested coefficients.
ORDER_MARGIN_STEPS = 8

_FAST_MUL_THRESHOLD = 65536


class PrecisionError(Exception):
    """A coefficient beyond the justified truncation order was required."""


class LatticeError(Exception):
    """An exponent lattice outside the configured denominator bound arose."""


def _as_frac(x: Rat) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class PuiseuxSeries:
    """Truncated q-series with exponents in (1/denom)*Z and rational coefficients."""

    __slots__ = ("denom", "terms", "trunc")

    def __init__(self, denom: int, terms: dict[int, Fraction], trunc: Rat):
        trunc = _as_frac(trunc)
        bound = trunc * denom
        clean: dict[int, Fraction] = {}
        for k, c in terms.items():
            if c != 0 and k < bound:
                clean[k] = _as_frac(c)
        if clean:
            g = denom
            for k in clean:
                g = gcd(g, k)
                if g == 1:
                    break
            if g > 1:
                clean = {k // g: c for k, c in clean.items()}
                denom //= g
        else:
            denom = 1
        if MAX_DENOM % denom != 0:
            raise LatticeError(f"exponent denominator {denom} does not divide {MAX_DENOM}")
        self.denom = denom
        self.terms = clean
        self.trunc = trunc

    # ------------------------------------------------------------------ constructors
    @classmethod
    def zero(cls, trunc: Rat) -> PuiseuxSeries:
        return cls(1, {}, trunc)

    @classmethod
    def constant(cls, c: Rat, trunc: Rat) -> PuiseuxSeries:
        return cls(1, {0: _as_frac(c)}, trunc)

    @classmethod
    def monomial(cls, c: Rat, exponent: Rat, trunc: Rat) -> PuiseuxSeries:
        e = _as_frac(exponent)
        return cls(e.denominator, {e.numerator: _as_frac(c)}, trunc)

    @classmethod
    def from_terms(cls, terms: dict[Rat, Rat], trunc: Rat) -> PuiseuxSeries:
        exps = [_as_frac(e) for e in terms]
        denom = 1
        for e in exps:
            denom = denom * e.denominator // gcd(denom, e.denominator)
        keyed = {int(e * denom): _as_frac(c) for e, c in zip(exps, terms.values())}
        return cls(denom, keyed, trunc)

    # ------------------------------------------------------------------ views
    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Fraction]:
        return [Fraction(k, self.denom) for k in sorted(self.terms)]

    def items(self) -> list[tuple[Fraction, Fraction]]:
        return [(Fraction(k, self.denom), self.terms[k]) for k in sorted(self.terms)]

    def leading(self) -> tuple[Fraction, Fraction] | None:
        if not self.terms:
            return None
        k = min(self.terms)
        return Fraction(k, self.denom), self.terms[k]

    def _lead_exp(self) -> Fraction:
        # for truncation bookkeeping a zero series counts as O(q^trunc)
        return Fraction(min(self.terms), self.denom) if self.terms else self.trunc

    def coeff(self, exponent: Rat) -> Fraction:
        e = _as_frac(exponent)
        if e >= self.trunc:
            raise PrecisionError(f"coefficient at {e} not justified (trunc order {self.trunc})")
        if self.denom % e.denominator != 0:
            return Fraction(0)
        return self.terms.get(e.numerator * (self.denom // e.denominator), Fraction(0))

    def principal_part(self) -> list[tuple[Fraction, Fraction]]:
        return [(e, c) for e, c in self.items() if e < 0]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.terms.values())

    # ------------------------------------------------------------------ ring ops
    def _aligned(self, other: PuiseuxSeries) -> tuple[int, dict[int, Fraction], dict[int, Fraction]]:
        d = self.denom * other.denom // gcd(self.denom, other.denom)
        if MAX_DENOM % d != 0:
            raise LatticeError(f"combined lattice denominator {d} exceeds bound {MAX_DENOM}")
        fa, fb = d // self.denom, d // other.denom
        a = self.terms if fa == 1 else {k * fa: c for k, c in self.terms.items()}
        b = other.terms if fb == 1 else {k * fb: c for k, c in other.terms.items()}
        return d, a, b

    def __add__(self, other: PuiseuxSeries | Rat) -> PuiseuxSeries:
        if isinstance(other, (int, Fraction)):
            other = PuiseuxSeries.constant(other, self.trunc)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        d, a, b = self._aligned(other)
        out = dict(a)
        for k, c in b.items():
            out[k] = out.get(k, Fraction(0)) + c
        return PuiseuxSeries(d, out, min(self.trunc, other.trunc))

    __radd__ = __add__

    def __neg__(self) -> PuiseuxSeries:
        return PuiseuxSeries(self.denom, {k: -c for k, c in self.terms.items()}, self.trunc)

    def __sub__(self, other: PuiseuxSeries | Rat) -> PuiseuxSeries:
        if isinstance(other, (int, Fraction)):
            return self + (-other)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Rat) -> PuiseuxSeries:
        return (-self) + other

    def scale(self, c: Rat) -> PuiseuxSeries:
        c = _as_frac(c)
        if c == 0:
            return PuiseuxSeries.zero(self.trunc)
        return PuiseuxSeries(self.denom, {k: v * c for k, v in self.terms.items()}, self.trunc)

    def __mul__(self, other: PuiseuxSeries | Rat) -> PuiseuxSeries:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        d, a, b = self._aligned(other)
        trunc = min(self.trunc + other._lead_exp(), other.trunc + self._lead_exp())
        if not a or not b:
            return PuiseuxSeries(d, {}, trunc)
        bound = trunc * d  # keys strictly below this matter
        if len(a) * len(b) >= _FAST_MUL_THRESHOLD:
            fast = _fast_dict_conv(a, b, bound)
            if fast is not None:
                return PuiseuxSeries(d, fast, trunc)
        out: dict[int, Fraction] = {}
        b_items = sorted(b.items())
        for ka, ca in a.items():
            for kb, cb in b_items:
                k = ka + kb
                if k >= bound:
                    break
                out[k] = out.get(k, Fraction(0)) + ca * cb
        return PuiseuxSeries(d, out, trunc)

    __rmul__ = __mul__

    def __truediv__(self, other: Rat) -> PuiseuxSeries:
        return self.scale(Fraction(1) / _as_frac(other))

    def inverse(self) -> PuiseuxSeries:
        """Multiplicative inverse, justified below trunc - 2*leading_exponent."""
        lead = self.leading()
        if lead is None:
            raise ZeroDivisionError("inverse of a zero series")
        lam, c = lead
        trunc_out = self.trunc - 2 * lam
        d = self.denom
        lam_k = min(self.terms)
        n_steps = ceil(self.trunc * d - lam_k)
        u = [Fraction(0)] * n_steps
        for k, v in self.terms.items():
            j = k - lam_k
            if j < n_steps:
                u[j] = v / c
        v_out = [Fraction(0)] * n_steps
        v_out[0] = Fraction(1)
        for n in range(1, n_steps):
            acc = Fraction(0)
            for j in range(1, n + 1):
                if u[j]:
                    acc += u[j] * v_out[n - j]
            v_out[n] = -acc
        terms = {-lam_k + n: v_out[n] / c for n in range(n_steps) if v_out[n]}
        return PuiseuxSeries(d, terms, trunc_out)

    def __pow__(self, n: int) -> PuiseuxSeries:
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return PuiseuxSeries.constant(1, self.trunc)
        out = None
        base = self
        while n:
            if n & 1:
                out = base if out is None else out * base
            n >>= 1
            if n:
                base = base * base
        return out

    # ------------------------------------------------------------------ reshaping
    def rescale(self, c: Rat) -> PuiseuxSeries:
        """Substitute q -> q^c (tau -> c*tau): every exponent is multiplied by c."""
        c = _as_frac(c)
        if c <= 0:
            raise ValueError("rescale factor must be positive")
        if c == 1:
            return self
        terms = {k * c.numerator: v for k, v in self.terms.items()}
        return PuiseuxSeries(self.denom * c.denominator, terms, self.trunc * c)

    def sieve(self, r: int, M: int) -> PuiseuxSeries:
        """Keep only terms with exponent n/M where n is congruent to r mod M."""
        if M <= 0 or M % self.denom != 0:
            raise LatticeError(f"sieve modulus {M} incompatible with lattice denominator {self.denom}")
        f = M // self.denom
        kept = {k: c for k, c in self.terms.items() if (k * f) % M == r % M}
        return PuiseuxSeries(self.denom, kept, self.trunc)

    def truncate(self, new_trunc: Rat) -> PuiseuxSeries:
        new_trunc = _as_frac(new_trunc)
        if new_trunc > self.trunc:
            raise PrecisionError(f"cannot extend truncation order {self.trunc} to {new_trunc}")
        return PuiseuxSeries(self.denom, self.terms, new_trunc)

    # ------------------------------------------------------------------ comparison
    def agrees_with(self, other: PuiseuxSeries, below: Rat | None = None) -> bool:
        """Coefficientwise equality below the jointly justified order."""
        bound = min(self.trunc, other.trunc)
        if below is not None:
            bound = min(bound, _as_frac(below))
        for e, c in self.items():
            if e < bound and other.coeff(e) != c:
                return False
        for e, c in other.items():
            if e < bound and self.coeff(e) != c:
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        return self.denom == other.denom and self.trunc == other.trunc and self.terms == other.terms

    def __hash__(self):
        return hash((self.denom, self.trunc, tuple(sorted(self.terms.items()))))

    # ------------------------------------------------------------------ io
    def to_json(self) -> dict:
        return {
            "denom": self.denom,
            "trunc_order": f"{self.trunc.numerator}/{self.trunc.denominator}",
            "terms": [[k, f"{c.numerator}/{c.denominator}"] for k, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> PuiseuxSeries:
        terms = {int(k): Fraction(c) for k, c in data["terms"]}
        return cls(int(data["denom"]), terms, Fraction(data["trunc_order"]))

    def __repr__(self) -> str:
        parts = [f"{c}*q^({e})" for e, c in self.items()[:8]]
        if len(self.terms) > 8:
            parts.append("...")
        body = " + ".join(parts) if parts else "0"
        return f"<{body} + O(q^({self.trunc}))>"


def _fast_dict_conv(a: dict[int, Fraction], b: dict[int, Fraction], bound: Fraction) -> dict[int, Fraction] | None:
    """Dense integer convolution of two aligned term dicts, or None if unsuited."""
    da = db = 1
    for c in a.values():
        da = da * c.denominator // gcd(da, c.denominator)
        if da > 1 << 30:
            return None
    for c in b.values():
        db = db * c.denominator // gcd(db, c.denominator)
        if db > 1 << 30:
            return None
    ka0, kb0 = min(a), min(b)
    base = ka0 + kb0
    if bound <= base:
        return {}
    out_len = ceil(bound - base)
    arr_a = [0] * min(out_len, max(a) - ka0 + 1)
    arr_b = [0] * min(out_len, max(b) - kb0 + 1)
    for k, c in a.items():
        i = k - ka0
        if i < len(arr_a):
            arr_a[i] = int(c * da)
    for k, c in b.items():
        i = k - kb0
        if i < len(arr_b):
            arr_b[i] = int(c * db)
    prod = _fastpoly.conv(arr_a, arr_b, out_len)
    scale = da * db
    if scale == 1:
        return {base + i: Fraction(v) for i, v in enumerate(prod) if v}
    return {base + i: Fraction(v, scale) for i, v in enumerate(prod) if v}


# ---------------------------------------------------------------------- eta quotients

_SIGMA_CACHE: dict[int, int] = {}


def sigma(n: int, power: int = 1) -> int:
    """Divisor sum sigma_power(n) for n >= 1."""
    if power == 1 and n in _SIGMA_CACHE:
        return _SIGMA_CACHE[n]
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**power
            if d * d != n:
                total += (n // d) ** power
        d += 1
    if power == 1:
        _SIGMA_CACHE[n] = total
    return total


class EtaQuotientSpec:
    """A product prod_i eta(scale_i * tau)^exponent_i times a rational prefactor."""

    __slots__ = ("factors", "prefactor")

    def __init__(self, factors: Iterable[tuple[Rat, int]], prefactor: Rat = 1):
        fs = tuple((_as_frac(s), int(e)) for s, e in factors)
        if not fs:
            raise ValueError("eta quotient needs at least one factor")
        if any(s <= 0 for s, _ in fs):
            raise ValueError("eta arguments must be positive multiples of tau")
        self.factors = fs
        self.prefactor = _as_frac(prefactor)

    def concat(self, other: EtaQuotientSpec) -> EtaQuotientSpec:
        return EtaQuotientSpec(self.factors + other.factors, self.prefactor * other.prefactor)

    def leading_exponent(self) -> Fraction:
        return sum((s * e for s, e in self.factors), Fraction(0)) / 24

    def __repr__(self) -> str:
        body = " * ".join(f"eta({s}t)^{e}" for s, e in self.factors)
        return f"EtaQuotientSpec({self.prefactor} * {body})"


def eta_quotient(spec: EtaQuotientSpec, order: Rat) -> PuiseuxSeries:
    """Expansion of an eta quotient, exact below ``order``.

    Uses the logarithmic-derivative recurrence: with f = prod eta(c_i tau)^{e_i},
    (q d/dq)f / f = sum_i e_i c_i (1/24 - sum_m sigma(m) q^{c_i m}), which
    determines the coefficients of f from divisor sums alone.
    """
    order = _as_frac(order)
    alpha = spec.leading_exponent()
    # the support lattice above the leading exponent is generated by the scales
    den = 1
    for s, _ in spec.factors:
        den = den * s.denominator // gcd(den, s.denominator)
    num_gcd = 0
    for s, _ in spec.factors:
        num_gcd = gcd(num_gcd, s.numerator * (den // s.denominator))
    step = Fraction(num_gcd, den)
    full_denom = den * alpha.denominator // gcd(den, alpha.denominator)
    if MAX_DENOM % full_denom != 0:
        raise LatticeError(f"eta quotient needs lattice denominator {full_denom} > bound {MAX_DENOM}")
    n_steps = int((order - alpha) / step) + 1 + ORDER_MARGIN_STEPS
    if n_steps < 0:
        n_steps = 0
    lam = [Fraction(0)] * (n_steps + 1)
    for s, e in spec.factors:
        weight = s * e
        m = 1
        while True:
            j = s * m / step
            if j > n_steps:
                break
            lam[int(j)] += weight * sigma(m)
            m += 1
    b = [Fraction(0)] * (n_steps + 1)
    b[0] = Fraction(1)
    for n in range(1, n_steps + 1):
        acc = Fraction(0)
        for j in range(1, n + 1):
            if lam[j] and b[n - j]:
                acc += lam[j] * b[n - j]
        b[n] = -acc / (n * step)
    trunc = alpha + (n_steps + 1) * step
    e0 = alpha * full_denom
    st = step * full_denom
    terms = {int(e0 + n * st): b[n] * spec.prefactor for n in range(n_steps + 1) if b[n]}
    return PuiseuxSeries(full_denom, terms, trunc)


def eta_power(scale: Rat, exponent: int, order: Rat) -> PuiseuxSeries:
    """eta(scale*tau)**exponent, exact below ``order``."""
    return eta_quotient(EtaQuotientSpec([(scale, exponent)]), order)
