"""Vector-valued modular forms: lifts, canonical bases and Hecke operators.

Forms are triples of component series indexed ell = 0, 1, 2.  Four
representation tags occur:

* ``rho1`` / ``rho1*``: the weight-one side, component exponents in (1/4)Z
  with residues (0, 3/4, 1/2) resp. (0, 1/4, 1/2) mod 1;
* ``rho`` / ``rho*``: weights 5/2 and -1/2, exponents in (1/8)Z with
  residues (1/8, 7/8, 5/8) resp. (7/8, 1/8, 3/8) mod 1.

The canonical basis G_d (weight 5/2) is reached via cusp-expansion triples
-> averaging lift -> multiplication by eta^3 -> integral elimination of the
principal part; F_D (weight -1/2) mirrors this on the dual side with
division by eta^3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Union

from .cyclotomic import kronecker
from .discforms import ell_index
from .gamma1 import CuspTriple, build_gtilde, build_gtilde_dual
from .series import PrecisionError, PuiseuxSeries, eta_power

Rat = Union[int, Fraction]

FORMAT_VERSION = 1

RESIDUES: dict[str, tuple[Fraction, Fraction, Fraction]] = {
    "rho1": (Fraction(0), Fraction(3, 4), Fraction(1, 2)),
    "rho1*": (Fraction(0), Fraction(1, 4), Fraction(1, 2)),
    "rho": (Fraction(1, 8), Fraction(7, 8), Fraction(5, 8)),
    "rho*": (Fraction(7, 8), Fraction(1, 8), Fraction(3, 8)),
}

WEIGHTS = {
    "rho1": Fraction(1),
    "rho1*": Fraction(1),
    "rho": Fraction(5, 2),
    "rho*": Fraction(-1, 2),
}


@dataclass(frozen=True)
class VVForm:
    """A three-component vector-valued form with a representation tag."""

    comp: tuple[PuiseuxSeries, PuiseuxSeries, PuiseuxSeries]
    rep: str

    def __post_init__(self):
        if self.rep not in RESIDUES:
            raise ValueError(f"unknown representation tag {self.rep!r}")
        tmin = min(s.trunc for s in self.comp)
        if any(s.trunc != tmin for s in self.comp):
            object.__setattr__(self, "comp", tuple(s.truncate(tmin) for s in self.comp))
        res = RESIDUES[self.rep]
        for ell, series in enumerate(self.comp):
            for e in series.support():
                if (e - res[ell]) % 1 != 0:
                    raise ArithmeticError(
                        f"component {ell} of a {self.rep} form has exponent {e} "
                        f"outside residue {res[ell]} mod 1"
                    )

    @property
    def weight(self) -> Fraction:
        return WEIGHTS[self.rep]

    @property
    def trunc(self) -> Fraction:
        return min(s.trunc for s in self.comp)

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.comp)

    def is_integral(self) -> bool:
        return all(s.is_integral() for s in self.comp)

    # -- coefficient access in the q^(1/8) grading (rho / rho* only) --------
    def _component_of(self, m: int) -> int:
        if self.rep == "rho":
            return ell_index(m)
        if self.rep == "rho*":
            return ell_index(-m)
        raise ValueError("eighth-grading coefficients only exist in weights 5/2 and -1/2")

    def coeff_q8(self, m: int) -> Fraction:
        """The coefficient of q^(m/8) on the component that carries it.

        Indices whose residue mod 8 no component carries are identically
        zero by the T-eigenvalue structure, at any truncation order.
        """
        if self.rep not in ("rho", "rho*"):
            raise ValueError("eighth-grading coefficients only exist in weights 5/2 and -1/2")
        try:
            ell = self._component_of(m)
        except ValueError:
            return Fraction(0)
        return self.comp[ell].coeff(Fraction(m, 8))

    def q8_support(self) -> list[int]:
        out = []
        for s in self.comp:
            for e in s.support():
                out.append(int(e * 8))
        return sorted(out)

    def principal_indices(self) -> list[tuple[int, Fraction]]:
        return [(m, self.coeff_q8(m)) for m in self.q8_support() if m < 0]

    # -- linear structure ----------------------------------------------------
    def add_scaled(self, other: VVForm, c: Rat) -> VVForm:
        if other.rep != self.rep:
            raise ValueError("cannot combine forms of different representations")
        return VVForm(tuple(a + b.scale(c) for a, b in zip(self.comp, other.comp)), self.rep)

    def scale(self, c: Rat) -> VVForm:
        return VVForm(tuple(s.scale(c) for s in self.comp), self.rep)

    def __sub__(self, other: VVForm) -> VVForm:
        return self.add_scaled(other, -1)

    def __add__(self, other: VVForm) -> VVForm:
        return self.add_scaled(other, 1)

    def agrees_with(self, other: VVForm, below: Rat | None = None) -> bool:
        return self.rep == other.rep and all(
            a.agrees_with(b, below) for a, b in zip(self.comp, other.comp)
        )

    def to_json(self) -> dict:
        return {"rep": self.rep, "components": [s.to_json() for s in self.comp]}

    @classmethod
    def from_json(cls, data: dict) -> VVForm:
        return cls(tuple(PuiseuxSeries.from_json(s) for s in data["components"]), data["rep"])


# ---------------------------------------------------------------------- lifts


def lift_from_cusps(t: CuspTriple) -> VVForm:
    """Average a cusp triple into a weight-one form for rho1.

    Components: U plus the 0-mod-4 sieve of V, the 3-mod-4 sieve of V, and
    W plus the 2-mod-4 sieve of V.
    """
    comp0 = t.U + t.V.sieve(0, 4)
    comp1 = t.V.sieve(3, 4)
    comp2 = t.W + t.V.sieve(2, 4)
    return VVForm((comp0, comp1, comp2), "rho1")


def dual_lift_from_cusps(t: CuspTriple) -> VVForm:
    """The conjugate averaging, landing in the dual representation rho1*.

    Conjugating the averaging weights flips the signs of the U and W
    contributions, moves the middle sieve to residue 1 mod 4 and doubles it.
    """
    comp0 = t.V.sieve(0, 4) - t.U
    comp1 = t.V.sieve(1, 4).scale(2)
    comp2 = t.V.sieve(2, 4) - t.W
    return VVForm((comp0, comp1, comp2), "rho1*")


@lru_cache(maxsize=None)
def eta_cubed(order: Rat) -> PuiseuxSeries:
    return eta_power(1, 3, order)


def tensor_theta(f: VVForm) -> VVForm:
    """Multiply each component by eta^3: weight 1 (rho1) -> weight 5/2 (rho)."""
    if f.rep != "rho1":
        raise ValueError("tensor_theta expects a rho1 form")
    order = f.trunc - min(Fraction(0), *(s._lead_exp() for s in f.comp)) + 1
    eta3 = eta_cubed(order)
    return VVForm(tuple(s * eta3 for s in f.comp), "rho")


def untensor_theta(f: VVForm) -> VVForm:
    """Divide each component by eta^3: weight 5/2 (rho) -> weight 1 (rho1)."""
    if f.rep != "rho":
        raise ValueError("untensor_theta expects a rho form")
    order = f.trunc - min(Fraction(0), *(s._lead_exp() for s in f.comp)) + 1
    inv = eta_power(1, -3, order)
    return VVForm(tuple(s * inv for s in f.comp), "rho1")


def dual_divide_theta(f: VVForm) -> VVForm:
    """Divide each component by eta^3: weight 1 (rho1*) -> weight -1/2 (rho*)."""
    if f.rep != "rho1*":
        raise ValueError("dual_divide_theta expects a rho1* form")
    order = f.trunc - min(Fraction(0), *(s._lead_exp() for s in f.comp)) + 1
    inv = eta_power(1, -3, order)
    return VVForm(tuple(s * inv for s in f.comp), "rho*")


# ---------------------------------------------------------------------- bases


@dataclass(frozen=True)
class BasisEntry:
    """A canonical basis element with its elimination recipe."""

    kind: str  # "G" or "F"
    index: int
    form: VVForm
    weights: tuple[tuple[int, Fraction], ...]  # family index -> multiplier
    poly: tuple[Fraction, ...]  # combined Hauptmodul polynomial

    def coeff(self, m: int) -> Fraction:
        return self.form.coeff_q8(m)

    def to_json(self) -> dict:
        return {
            "format_version": FORMAT_VERSION,
            "kind": self.kind,
            "index": self.index,
            "order": f"{self.form.trunc.numerator}/{self.form.trunc.denominator}",
            "components": [s.to_json() for s in self.form.comp],
            "provenance": {
                "weights": [[k, f"{c.numerator}/{c.denominator}"] for k, c in self.weights],
                "poly": [f"{c.numerator}/{c.denominator}" for c in self.poly],
            },
        }

    @classmethod
    def from_json(cls, data: dict) -> BasisEntry:
        if data.get("format_version") != FORMAT_VERSION:
            raise ValueError("cache format version mismatch")
        comps = tuple(PuiseuxSeries.from_json(s) for s in data["components"])
        rep = "rho" if data["kind"] == "G" else "rho*"
        weights = tuple((int(k), Fraction(c)) for k, c in data["provenance"]["weights"])
        poly = tuple(Fraction(c) for c in data["provenance"]["poly"])
        return cls(data["kind"], int(data["index"]), VVForm(comps, rep), weights, poly)


def _combine_poly(weights: list[tuple[int, Fraction]], polys: dict[int, tuple[Fraction, ...]]) -> tuple[Fraction, ...]:
    deg = max(len(polys[k]) for k, _ in weights)
    out = [Fraction(0)] * deg
    for k, c in weights:
        for i, x in enumerate(polys[k]):
            out[i] += c * x
    return tuple(out)


@lru_cache(maxsize=None)
def _weight52_candidate(k: int, qorder: Rat) -> tuple[VVForm, tuple[Fraction, ...]]:
    t = build_gtilde(k, Fraction(qorder) + 1)
    return tensor_theta(lift_from_cusps(t)), t.poly


@lru_cache(maxsize=None)
def basis_G(d: int, qorder: Rat) -> BasisEntry:
    """The weight-5/2 basis form with principal part exactly q^(-d/8) e_{ell(-d)}.

    Justified for all coefficients of q^(m/8) with m/8 < qorder; integral
    coefficients by construction (every elimination pivot is 1).
    """
    if d <= 0 or d % 8 not in (1, 3, 7):
        raise ValueError(f"index {d} not allowed: need d = 1, 3, 7 mod 8")
    qorder = Fraction(qorder)
    m = (d + 1) // 2
    x, poly_m = _weight52_candidate(m, qorder)
    weights = [(m, Fraction(1))]
    polys = {m: poly_m}
    for e in range(d - 1, 0, -1):
        if e % 8 not in (1, 3, 7):
            continue
        c = x.coeff_q8(-e)
        if c:
            if c.denominator != 1:
                raise ArithmeticError(f"non-integral principal coefficient {c} at -{e}/8")
            k = (e + 1) // 2
            cand, poly_k = _weight52_candidate(k, qorder)
            x = x.add_scaled(cand, -c)
            weights.append((k, -c))
            polys[k] = poly_k
    if x.coeff_q8(-d) != 1 or [mm for mm, _ in x.principal_indices()] != [-d]:
        raise ArithmeticError(f"principal part of G_{d} did not normalize")
    if x.trunc < qorder:
        raise PrecisionError(f"requested order {qorder} but construction justified {x.trunc}")
    if not x.is_integral():
        raise ArithmeticError(f"G_{d} has non-integral coefficients")
    return BasisEntry("G", d, x, tuple(weights), _combine_poly(weights, polys))


@lru_cache(maxsize=None)
def _dual_candidate(k: int, qorder: Rat) -> tuple[VVForm, tuple[Fraction, ...]]:
    """Unit-leading dual-side candidate of pole depth (2k+1)/8, divided by eta^3."""
    t = build_gtilde_dual(k, Fraction(qorder) + 1)
    lifted = dual_lift_from_cusps(t)
    # leading coefficient is 2 when the pole sits on the doubled middle
    # component (k = 3 mod 4) or on the constant of the base element (k = 0)
    pivot = 2 if (k == 0 or k % 4 == 3) else 1
    if pivot != 1:
        halved = []
        for s in lifted.comp:
            if any(c.numerator % 2 for c in s.terms.values() if c.denominator == 1) or not s.is_integral():
                raise ArithmeticError("dual candidate is not evenly divisible")
            halved.append(s.scale(Fraction(1, 2)))
        lifted = VVForm(tuple(halved), "rho1*")
    form = dual_divide_theta(lifted)
    poly = tuple(c / pivot for c in t.poly)
    return form, poly


@lru_cache(maxsize=None)
def basis_F(D: int, qorder: Rat) -> BasisEntry:
    """The weight -1/2 dual basis form with principal part exactly q^(-D/8)."""
    if D <= 0 or D % 8 not in (1, 5, 7):
        raise ValueError(f"index {D} not allowed: need D = 1, 5, 7 mod 8")
    qorder = Fraction(qorder)
    m = (D - 1) // 2
    x, poly_m = _dual_candidate(m, qorder)
    weights = [(m, Fraction(1))]
    polys = {m: poly_m}
    for e in range(D - 1, 0, -1):
        if e % 8 not in (1, 5, 7):
            continue
        c = x.coeff_q8(-e)
        if c:
            if c.denominator != 1:
                raise ArithmeticError(f"non-integral principal coefficient {c} at -{e}/8")
            k = (e - 1) // 2
            cand, poly_k = _dual_candidate(k, qorder)
            x = x.add_scaled(cand, -c)
            weights.append((k, -c))
            polys[k] = poly_k
    if x.coeff_q8(-D) != 1 or [mm for mm, _ in x.principal_indices()] != [-D]:
        raise ArithmeticError(f"principal part of F_{D} did not normalize")
    if x.trunc < qorder:
        raise PrecisionError(f"requested order {qorder} but construction justified {x.trunc}")
    if not x.is_integral():
        raise ArithmeticError(f"F_{D} has non-integral coefficients")
    return BasisEntry("F", D, x, tuple(weights), _combine_poly(weights, polys))


# ---------------------------------------------------------------------- Hecke


def hecke_input_order(p: int, out_order: Rat) -> Fraction:
    """Truncation order the input form must carry for T_{p^2} output at out_order."""
    return Fraction(out_order) * p * p


def hecke_Tp2(f: VVForm, p: int) -> VVForm:
    """The Hecke operator T_{p^2} on a weight-5/2 form for rho, odd prime p.

    Acts on the eighth-graded coefficients by
        b(m) = c(p^2 m) + p (m/p) c(m) + p^3 c(m/p^2),
    and divides the justified truncation order by p^2.
    """
    if f.rep != "rho":
        raise ValueError("hecke_Tp2 expects a weight-5/2 rho form")
    if p < 3 or p % 2 == 0:
        raise ValueError("only odd primes are supported")
    out_trunc = f.trunc / (p * p)
    support = f.q8_support()
    m_lo = min(support) if support else 0
    m_min = m_lo * p * p if m_lo < 0 else m_lo
    comp_terms: list[dict[int, Fraction]] = [{}, {}, {}]
    for m in range(m_min, ceil(out_trunc * 8) + 1):
        if m % 8 not in (1, 5, 7):
            continue
        if Fraction(m, 8) >= out_trunc:
            break
        b = f.coeff_q8(p * p * m) + p * kronecker(m, p) * f.coeff_q8(m)
        if m % (p * p) == 0:
            b += p**3 * f.coeff_q8(m // (p * p))
        if b:
            ell = ell_index(m)
            comp_terms[ell][m] = b
    comps = tuple(
        PuiseuxSeries(8, terms, out_trunc) for terms in comp_terms
    )
    return VVForm(comps, "rho")


def hecke_identity_check(d: int, p: int, n_coeffs: int = 20) -> bool:
    """Check G_d | T_{p^2} = p^3 G_{p^2 d} + p (-d/p) G_d + G_{d/p^2} coefficientwise.

    Compares at least ``n_coeffs`` justified coefficients; the last summand
    is zero unless p^2 divides d.
    """
    bound_m = 0
    count = 0
    while count < n_coeffs:
        bound_m += 1
        if bound_m % 8 in (1, 5, 7):
            count += 1
    out_order = Fraction(bound_m + 1, 8)
    g_d_deep = basis_G(d, hecke_input_order(p, out_order))
    lhs = hecke_Tp2(g_d_deep.form, p)
    rhs = basis_G(p * p * d, out_order).form.scale(p**3)
    rhs = rhs.add_scaled(basis_G(d, out_order).form, p * kronecker(-d, p))
    if d % (p * p) == 0:
        rhs = rhs + basis_G(d // (p * p), out_order).form
    return lhs.agrees_with(rhs, out_order)
