"""The cyclotomic field Q(zeta_8) and the Kronecker symbol.

Rational numbers are ``fractions.Fraction`` throughout the package; this
module adds the one field extension the representation matrices need.
Elements are stored in the power basis {1, z, z^2, z^3} with z := zeta_8 and
the reduction z^4 = -1 applied eagerly.  The field contains i = z^2 and
sqrt(2) = z - z^3, which is all the Weil representation matrices require.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rat = Union[int, Fraction]


class CycEight:
    """An element c0 + c1*z + c2*z^2 + c3*z^3 of Q(zeta_8), z^4 = -1."""

    __slots__ = ("coords",)

    def __init__(self, c0: Rat = 0, c1: Rat = 0, c2: Rat = 0, c3: Rat = 0):
        object.__setattr__(self, "coords", (Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3)))

    def __setattr__(self, name, value):
        raise AttributeError("CycEight is immutable")

    @classmethod
    def from_rational(cls, r: Rat) -> CycEight:
        return cls(r, 0, 0, 0)

    @classmethod
    def zeta_pow(cls, k: int) -> CycEight:
        """zeta_8^k for any integer k."""
        k %= 8
        sign = 1 if k < 4 else -1
        coords = [0, 0, 0, 0]
        coords[k % 4] = sign
        return cls(*coords)

    def __add__(self, other: CycEight | Rat) -> CycEight:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coords, other.coords
        return CycEight(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    __radd__ = __add__

    def __neg__(self) -> CycEight:
        a = self.coords
        return CycEight(-a[0], -a[1], -a[2], -a[3])

    def __sub__(self, other: CycEight | Rat) -> CycEight:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Rat) -> CycEight:
        return (-self) + other

    def __mul__(self, other: CycEight | Rat) -> CycEight:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coords, other.coords
        # negacyclic convolution mod z^4 + 1
        return CycEight(
            a[0] * b[0] - a[1] * b[3] - a[2] * b[2] - a[3] * b[1],
            a[0] * b[1] + a[1] * b[0] - a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] + a[1] * b[1] + a[2] * b[0] - a[3] * b[3],
            a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0],
        )

    __rmul__ = __mul__

    def galois(self, k: int) -> CycEight:
        """The automorphism zeta_8 -> zeta_8^k for odd k."""
        if k % 2 == 0:
            raise ValueError("Galois automorphisms of Q(zeta_8) need odd k")
        a = self.coords
        out = [a[0], Fraction(0), Fraction(0), Fraction(0)]
        for j in (1, 2, 3):
            e = (j * k) % 8
            if e < 4:
                out[e] += a[j]
            else:
                out[e - 4] -= a[j]
        return CycEight(*out)

    def conjugate(self) -> CycEight:
        """Complex conjugation zeta_8 -> zeta_8^{-1}; fixes sqrt(2)."""
        return self.galois(7)

    def inverse(self) -> CycEight:
        y = self.galois(3) * self.galois(5) * self.galois(7)
        norm = self * y
        if not norm.is_rational():
            raise ArithmeticError("field norm computation went wrong")
        n = norm.coords[0]
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(zeta_8)")
        return y * Fraction(1, 1) / n

    def __truediv__(self, other: CycEight | Rat) -> CycEight:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_rational():
            n = other.coords[0]
            if n == 0:
                raise ZeroDivisionError
            a = self.coords
            return CycEight(a[0] / n, a[1] / n, a[2] / n, a[3] / n)
        return self * other.inverse()

    def __pow__(self, n: int) -> CycEight:
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_rational(self) -> bool:
        a = self.coords
        return a[1] == 0 and a[2] == 0 and a[3] == 0

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self) -> str:
        parts = []
        for c, name in zip(self.coords, ("", "z8", "z8^2", "z8^3")):
            if c == 0:
                continue
            term = str(c) if not name else (f"{c}*{name}" if c != 1 else name)
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _coerce(x) -> CycEight | None:
    if isinstance(x, CycEight):
        return x
    if isinstance(x, (int, Fraction)):
        return CycEight(x)
    return None


ZERO = CycEight(0)
ONE = CycEight(1)
ZETA8 = CycEight(0, 1)
I_UNIT = CycEight(0, 0, 1)
SQRT2 = CycEight(0, 1, 0, -1)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for odd positive n (the Jacobi symbol).

    Multiplicative in both arguments; zero exactly when gcd(a, n) > 1.
    The even-n extension is not needed here and is not provided.
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError("kronecker(a, n) requires odd positive n")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0
