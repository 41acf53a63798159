"""Deep q-expansions of the square-indexed basis coefficients.

The divisibility checks need c(G_d, n^2) for odd n up to ~200, i.e. the
component of G_d with exponents 1/8 mod 1 expanded past q^5000.  The general
engine is far too slow for that, so this module re-evaluates the closed
recipe

    comp_0(G_d) = eta^3 * ( U0 * P_d(psi~)  +  sieve_0( V0 * P_d(psi~|S) ) )

with dense integer-coefficient arrays: P_d is the integral Hauptmodul
polynomial recorded by the low-order elimination, U0/V0 are theta squares,
and all series products run through the Kronecker-packed convolution in
``_fastpoly``.  Results are cross-checked against the general engine on the
low-order coefficients before being returned.
"""

from __future__ import annotations

from fractions import Fraction

from ._fastpoly import conv, dilate, eta_unit, newton_inv, pow_trunc
from .vvforms import basis_G


def _theta_square(n: int) -> list[int]:
    """Coefficients of (sum_k x^(k^2))^2 = 1 + sum 4 sigma_chi4(n) x^n."""
    theta = [0] * n
    k = 0
    while k * k < n:
        theta[k * k] = 1 if k == 0 else 2
        k += 1
    return conv(theta, theta, n)


def _eta_cubed_sparse(n: int) -> list[tuple[int, int]]:
    """(exponent, coefficient) pairs of prod (1-x^j)^3 = sum (-1)^j (2j+1) x^(j(j+1)/2)."""
    out = []
    j = 0
    while j * (j + 1) // 2 < n:
        out.append((j * (j + 1) // 2, (2 * j + 1) * (-1 if j % 2 else 1)))
        j += 1
    return out


def _hauptmodul_at_inf(n: int) -> list[int]:
    """16 * eta^-16 eta(2t)^24 eta(4t)^-8 as an integer q-series."""
    p1 = eta_unit(n)
    a8 = pow_trunc(p1, 8, n)
    a16 = conv(a8, a8, n)
    a24 = conv(a16, a8, n)
    den = conv(a16, dilate(a8, 4, n), n)
    unit = conv(dilate(a24, 2, n), newton_inv(den, n), n)
    return [16 * c for c in unit]


def _hauptmodul_at_zero(n: int) -> list[int]:
    """eta^-16 eta(t/2)^24 eta(t/4)^-8 in the variable p = q^(1/4); leading p^-1.

    With tau = 4u the three factors become eta(4u)^-16 eta(2u)^24 eta(u)^-8.
    Returned as the unit part (constant term 1); the caller tracks the
    offset -1.
    """
    p1 = eta_unit(n)
    a8 = pow_trunc(p1, 8, n)
    a16 = conv(a8, a8, n)
    a24 = conv(a16, a8, n)
    den = conv(dilate(a16, 4, n), a8, n)
    return conv(dilate(a24, 2, n), newton_inv(den, n), n)


def _square_table_raw(polys: dict[int, list[int]], nmax: int) -> dict[int, dict[int, int]]:
    x_max = (nmax * nmax - 1) // 8  # largest q-exponent of the comp_0 unit part
    nq = x_max + 4
    degs = {d: len(p) - 1 for d, p in polys.items()}
    k_max = max(degs.values())
    off = max(deg // 4 + 1 for deg in degs.values())  # depth of negative q-exponents kept

    # ---- expansion-at-infinity side (integer q-exponents)
    psi = _hauptmodul_at_inf(nq)
    psi_pow = [[1] + [0] * (nq - 1)]
    for _ in range(k_max):
        psi_pow.append(conv(psi_pow[-1], psi, nq))
    theta2 = _theta_square(nq)
    u0 = [-c for c in theta2]

    # ---- expansion-at-zero side (variable p = q^(1/4)); the window covers
    # p-exponent 4*(nq-1) even after the offset -deg alignment below
    np_len = 4 * nq + k_max + 4
    q_unit = _hauptmodul_at_zero(np_len)  # offset -1 per factor
    q_pow = [[1] + [0] * (np_len - 1)]  # offset 0
    for _ in range(k_max):
        q_pow.append(conv(q_pow[-1], q_unit, np_len))  # offset -k
    v0 = _theta_square(np_len)

    eta3 = _eta_cubed_sparse(nq + off)

    tables: dict[int, dict[int, int]] = {}
    for d, poly in polys.items():
        deg = degs[d]
        # U-side: U0 * P(psi~), exponents >= 0
        p_of_psi = [0] * nq
        for k, ck in enumerate(poly):
            if ck:
                row = psi_pow[k]
                for i in range(nq):
                    p_of_psi[i] += ck * row[i]
        u_part = conv(u0, p_of_psi, nq)
        # V-side: V0 * P(psi~|S) in p, alignment at offset -deg
        y = [0] * np_len
        for k, ck in enumerate(poly):
            if ck:
                row = q_pow[k]
                shift = deg - k  # row has offset -k; array y has offset -deg
                for i in range(np_len - shift):
                    y[i + shift] += ck * row[i]
        v_part = conv(v0, y, np_len)  # offset -deg
        # sieve to p-exponents divisible by 4 -> q-series with offset -(deg//4)
        c_off = deg // 4
        c_series = [0] * (nq + c_off)
        for x in range(-c_off, nq):
            i = 4 * x + deg
            if 0 <= i < np_len:
                c_series[x + c_off] = v_part[i]
        for i in range(nq):
            c_series[i + c_off] += u_part[i]
        # multiply by eta^3's unit part and read off the square coefficients
        table: dict[int, int] = {}
        for n in range(1, nmax + 1, 2):
            x = (n * n - 1) // 8
            acc = 0
            for t, s in eta3:
                idx = x - t + c_off
                if idx < 0:
                    break
                acc += s * c_series[idx]
            table[n] = acc
        tables[d] = table
    return tables


def family_square_table(ds: tuple[int, ...] | list[int], nmax: int) -> dict[int, dict[int, int]]:
    """c(G_d, n^2) for odd n <= nmax for each index d, exactly.

    Elimination recipes are taken from the general engine at low order and
    the deep expansion is cross-checked against it on small squares.
    """
    ds = tuple(sorted(set(ds)))
    polys = {}
    for d in ds:
        if d <= 0 or d % 8 not in (1, 3, 7):
            raise ValueError(f"index {d} not allowed: need d = 1, 3, 7 mod 8")
        entry = basis_G(d, Fraction(2))
        coeffs = []
        for c in entry.poly:
            if c.denominator != 1:
                raise ArithmeticError("unexpected non-integral recipe polynomial")
            coeffs.append(c.numerator)
        polys[d] = coeffs
    tables = _square_table_raw(polys, nmax)
    check_order = Fraction(64, 8)
    for d in ds:
        entry = basis_G(d, check_order)
        for n in (1, 3, 5, 7):
            if n <= nmax and Fraction(n * n, 8) < check_order:
                expect = entry.coeff(n * n)
                if tables[d][n] != expect:
                    raise ArithmeticError(
                        f"deep expansion disagrees with the general engine at c(G_{d}, {n*n})"
                    )
    return tables
