"""Dense integer polynomial helpers for deep q-expansions.

Truncated power series with integer coefficients are plain ``list[int]``
(index = exponent offset).  Multiplication packs each operand into a single
big integer (Kronecker substitution, one signed digit per coefficient) so a
series product becomes one bignum multiply; gmpy2 supplies the FFT-backed
multiplication, with plain Python ints as a fallback.  All results are exact.
"""

from __future__ import annotations

try:
    from gmpy2 import mpz

    def _bigmul(a: int, b: int) -> int:
        return int(mpz(a) * mpz(b))
except ImportError:  # pragma: no cover
    def _bigmul(a: int, b: int) -> int:
        return a * b


def _pack(coeffs: list[int], width_bytes: int) -> int:
    """Sum of coeffs[i] * 256^(width_bytes*i), assembled as one integer."""
    pos = bytearray(width_bytes * len(coeffs))
    neg = bytearray(width_bytes * len(coeffs))
    has_neg = False
    for i, c in enumerate(coeffs):
        if c > 0:
            b = c.to_bytes((c.bit_length() + 7) // 8, "little")
            pos[i * width_bytes : i * width_bytes + len(b)] = b
        elif c < 0:
            has_neg = True
            c = -c
            b = c.to_bytes((c.bit_length() + 7) // 8, "little")
            neg[i * width_bytes : i * width_bytes + len(b)] = b
    packed = int.from_bytes(pos, "little")
    if has_neg:
        packed -= int.from_bytes(neg, "little")
    return packed


def _unpack(packed: int, width_bytes: int, n_out: int) -> list[int]:
    """Recover signed digits d_i with |d_i| < 256^width/2 from a packed int."""
    if packed < 0:
        return [-c for c in _unpack(-packed, width_bytes, n_out)]
    n_bytes = max(width_bytes * (n_out + 1) + 1, (packed.bit_length() + 7) // 8 + 1)
    raw = packed.to_bytes(n_bytes, "little")
    half = 1 << (8 * width_bytes - 1)
    full = half << 1
    out = []
    carry = 0
    for i in range(n_out):
        w = int.from_bytes(raw[i * width_bytes : (i + 1) * width_bytes], "little") + carry
        if w >= half:
            out.append(w - full)
            carry = 1
        else:
            out.append(w)
            carry = 0
    return out


def conv(a: list[int], b: list[int], n_out: int | None = None) -> list[int]:
    """Exact convolution of integer sequences, truncated to length n_out."""
    if n_out is None:
        n_out = len(a) + len(b) - 1
    a = a[:n_out]
    b = b[:n_out]
    if not a or not b:
        return [0] * n_out
    if min(len(a), len(b)) <= 16:
        return _conv_naive(a, b, n_out)
    max_a = max(abs(c) for c in a)
    max_b = max(abs(c) for c in b)
    if max_a == 0 or max_b == 0:
        return [0] * n_out
    bits = max_a.bit_length() + max_b.bit_length() + min(len(a), len(b)).bit_length() + 2
    width_bytes = (bits + 7) // 8
    prod = _bigmul(_pack(a, width_bytes), _pack(b, width_bytes))
    return _unpack(prod, width_bytes, n_out)


def _conv_naive(a: list[int], b: list[int], n_out: int) -> list[int]:
    out = [0] * n_out
    for i, ai in enumerate(a):
        if ai == 0 or i >= n_out:
            continue
        for j, bj in enumerate(b):
            if i + j >= n_out:
                break
            out[i + j] += ai * bj
    return out


def newton_inv(a: list[int], n_out: int) -> list[int]:
    """Inverse power series of a, truncated; requires a[0] in {1, -1}."""
    if not a or a[0] not in (1, -1):
        raise ValueError("newton_inv needs leading coefficient +-1")
    out = [a[0]]
    length = 1
    while length < n_out:
        length = min(2 * length, n_out)
        # out <- out * (2 - a * out) mod x^length
        t = conv(a[:length], out, length)
        t = [-c for c in t]
        t[0] += 2
        out = conv(out, t, length)
    return out[:n_out]


def pow_trunc(a: list[int], e: int, n_out: int) -> list[int]:
    """a**e truncated to length n_out, e >= 0."""
    out = [1] + [0] * (n_out - 1)
    base = a[:n_out]
    while e:
        if e & 1:
            out = conv(out, base, n_out)
        e >>= 1
        if e:
            base = conv(base, base, n_out)
    return out


def dilate(a: list[int], k: int, n_out: int) -> list[int]:
    """Substitute x -> x^k: coefficient i moves to k*i."""
    out = [0] * n_out
    for i, c in enumerate(a):
        if k * i >= n_out:
            break
        out[k * i] = c
    return out


def eta_unit(n_out: int) -> list[int]:
    """Euler product prod_{n>=1} (1 - x^n) truncated (pentagonal numbers)."""
    out = [0] * n_out
    k = 0
    while True:
        sign = -1 if k % 2 else 1
        placed = False
        for e in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if e < n_out:
                out[e] = sign
                placed = True
        if k and not placed:
            break
        k += 1
    return out
