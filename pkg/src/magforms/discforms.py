"""The discriminant form (Z/4Z)^3, its orthogonal group and Weil representation.

The quadratic form is Q((a,b,c)) = (b^2 - 2ac)/8 in Q/Z.  The module
enumerates the orthogonal group by brute force, constructs the order-2
character chi on it, the chi-isotypic projection, and the 64-dimensional
Weil representation matrices together with their restriction to the
3-dimensional chi-isotypic subspace and the tensor factors coming from the
splitting into the sublattices {(a,0,c)} and {(0,b,0)}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from functools import lru_cache
from itertools import product
from typing import Iterable, NamedTuple

from .cyclotomic import CycEight

_ZETA_BAR = CycEight.zeta_pow(-1)


class FqmElement(NamedTuple):
    """An element (a, b, c) of (Z/4Z)^3."""

    a: int
    b: int
    c: int

    @classmethod
    def make(cls, a: int, b: int, c: int) -> FqmElement:
        return cls(a % 4, b % 4, c % 4)

    def __neg__(self) -> FqmElement:
        return FqmElement.make(-self.a, -self.b, -self.c)

    def add(self, other: FqmElement) -> FqmElement:
        return FqmElement.make(self.a + other.a, self.b + other.b, self.c + other.c)


ALL_ELEMENTS: tuple[FqmElement, ...] = tuple(
    FqmElement(a, b, c) for a, b, c in product(range(4), repeat=3)
)


def element_index(h: FqmElement) -> int:
    return 16 * h[0] + 4 * h[1] + h[2]


def qform(h: FqmElement) -> Fraction:
    """Q(h) = (b^2 - 2ac)/8 as an element of Q/Z, represented in [0, 1)."""
    return Fraction((h[1] * h[1] - 2 * h[0] * h[2]) % 8, 8)


def bilinear(h: FqmElement, g: FqmElement) -> Fraction:
    """B(h, g) = Q(h+g) - Q(h) - Q(g) in Q/Z, represented in [0, 1)."""
    return Fraction((h[1] * g[1] - h[0] * g[2] - g[0] * h[2]) % 4, 4)


def isotropic_set() -> frozenset[FqmElement]:
    return frozenset(h for h in ALL_ELEMENTS if qform(h) == 0)


@dataclass(frozen=True)
class OrthMap:
    """A quadratic-form-preserving automorphism of (Z/4Z)^3, as a 3x3 matrix mod 4."""

    rows: tuple[tuple[int, int, int], ...]

    def __call__(self, h: FqmElement) -> FqmElement:
        r = self.rows
        return FqmElement(
            (r[0][0] * h[0] + r[0][1] * h[1] + r[0][2] * h[2]) % 4,
            (r[1][0] * h[0] + r[1][1] * h[1] + r[1][2] * h[2]) % 4,
            (r[2][0] * h[0] + r[2][1] * h[1] + r[2][2] * h[2]) % 4,
        )

    def compose(self, other: OrthMap) -> OrthMap:
        rows = tuple(
            tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(3)) % 4 for j in range(3))
            for i in range(3)
        )
        return OrthMap(rows)

    @property
    def det(self) -> int:
        r = self.rows
        d = (
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1])
            - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0])
            + r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0])
        )
        return d % 4

    def is_identity(self) -> bool:
        return self.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


IDENTITY = OrthMap(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
#: (a,b,c) -> (a, b+2a, 2a+2b+c)
GEN_R = OrthMap(((1, 0, 0), (2, 1, 0), (2, 2, 1)))
#: (a,b,c) -> (c, -b, a)
GEN_W = OrthMap(((0, 0, 1), (0, 3, 0), (1, 0, 0)))
GEN_U = GEN_W.compose(GEN_R).compose(GEN_W)
#: (a,b,c) -> (a, -b, c)
GEN_MU = OrthMap(((1, 0, 0), (0, 3, 0), (0, 0, 1)))
#: negative identity
GEN_NU = OrthMap(((3, 0, 0), (0, 3, 0), (0, 0, 3)))


@lru_cache(maxsize=None)
def orth_group() -> tuple[OrthMap, ...]:
    """All invertible 3x3 matrices mod 4 preserving Q, by exhaustive search."""
    found = []
    units = (1, 3)
    for entries in product(range(4), repeat=9):
        m = OrthMap((entries[0:3], entries[3:6], entries[6:9]))
        if m.det not in units:
            continue
        if all(qform(m(h)) == qform(h) for h in ALL_ELEMENTS):
            found.append(m)
    return tuple(found)


@lru_cache(maxsize=None)
def so_group() -> tuple[OrthMap, ...]:
    return tuple(m for m in orth_group() if m.det == 1)


@lru_cache(maxsize=None)
def chi_table() -> dict[OrthMap, int]:
    """The order-2 character with chi(R)=chi(U)=chi(W)=chi(mu)=-1, chi(nu)=+1.

    Extended multiplicatively from the generators over the whole group; the
    construction fails loudly if the prescribed values are inconsistent.
    """
    gens = [(GEN_R, -1), (GEN_W, -1), (GEN_MU, -1), (GEN_NU, 1)]
    table: dict[OrthMap, int] = {IDENTITY: 1}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for g in frontier:
            for s, vs in gens:
                h = g.compose(s)
                v = table[g] * vs
                if h in table:
                    if table[h] != v:
                        raise ArithmeticError("character values on generators are inconsistent")
                else:
                    table[h] = v
                    nxt.append(h)
        frontier = nxt
    group = orth_group()
    if set(table) != set(group):
        raise ArithmeticError("generators do not span the orthogonal group")
    if table[GEN_U] != -1:
        raise ArithmeticError("chi(U) inconsistent with the generator values")
    return table


def chi(s: OrthMap) -> int:
    table = chi_table()
    if s not in table:
        raise ValueError("not an element of the orthogonal group")
    return table[s]


@lru_cache(maxsize=None)
def chi_orbits() -> tuple[frozenset[FqmElement], ...]:
    """(A, A0, A1, A2): elements whose stabilizer avoids chi = -1, by orbit."""
    group = orth_group()
    table = chi_table()
    good = []
    for h in ALL_ELEMENTS:
        if all(table[s] == 1 for s in group if s(h) == h):
            good.append(h)
    a_set = frozenset(good)
    orbits = []
    for rep in (FqmElement(1, 1, 0), FqmElement(1, 1, 1), FqmElement(1, 1, 2)):
        orbits.append(frozenset(s(rep) for s in group))
    a0, a1, a2 = orbits
    if a_set != a0 | a1 | a2:
        raise ArithmeticError("chi-isotypic support does not match the three orbits")
    return a_set, a0, a1, a2


Vector = dict[FqmElement, CycEight]


def apply_orth(s: OrthMap, v: Vector) -> Vector:
    return {s(h): c for h, c in v.items()}


def project_chi(v: Vector) -> Vector:
    """The projection onto the chi-isotypic subspace of C[(Z/4Z)^3]."""
    table = chi_table()
    out: dict[FqmElement, CycEight] = {}
    for s, val in table.items():
        for h, c in v.items():
            k = s(h)
            cur = out.get(k)
            add = c if val == 1 else -c
            out[k] = add if cur is None else cur + add
    n = len(table)
    return {h: c / n for h, c in out.items() if not c.is_zero()}


@lru_cache(maxsize=None)
def chi_basis_vector(ell: int) -> dict[FqmElement, Fraction]:
    """e_ell := |O(A)| * projection of the basis vector at (1, 1, ell)."""
    table = chi_table()
    out: dict[FqmElement, int] = {}
    rep = FqmElement(1, 1, ell)
    for s, val in table.items():
        k = s(rep)
        out[k] = out.get(k, 0) + val
    return {h: Fraction(c) for h, c in out.items() if c}


def ell_index(m: int) -> int:
    """The component index ell(m) with 1 - m = 2*ell(m) mod 8."""
    r = m % 8
    table = {1: 0, 7: 1, 5: 2}
    if r not in table:
        raise ValueError(f"no component carries exponents m/8 with m = {m} (m mod 8 = {r})")
    return table[r]


def mult_map(p: int) -> OrthMap:
    """Multiplication by an odd integer p on the discriminant form."""
    if p % 2 == 0:
        raise ValueError("multiplication map only used for odd p")
    r = p % 4
    return OrthMap(((r, 0, 0), (0, r, 0), (0, 0, r)))


# ---------------------------------------------------------------------- matrices


class CycMatrix:
    """A dense matrix over Q(zeta_8)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[CycEight]]):
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def identity(cls, n: int) -> CycMatrix:
        one, zero = CycEight(1), CycEight(0)
        return cls(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def _int_coords(self) -> tuple[int, list]:
        """Common denominator and numerator arrays (one 2d array per coordinate)."""
        den = 1
        for row in self.rows:
            for x in row:
                for c in x.coords:
                    den = den * c.denominator // gcd(den, c.denominator)
        mats = [[[int(x.coords[e] * den) for x in row] for row in self.rows] for e in range(4)]
        return den, mats

    def __mul__(self, other: CycMatrix) -> CycMatrix:
        fast = self._mul_int64(other)
        if fast is not None:
            return fast
        bt = tuple(zip(*other.rows))
        out = []
        zero = CycEight(0)
        for row in self.rows:
            nz = [(k, x) for k, x in enumerate(row) if not x.is_zero()]
            new_row = []
            for col in bt:
                acc = zero
                for k, x in nz:
                    y = col[k]
                    if not y.is_zero():
                        acc = acc + x * y
                new_row.append(acc)
            out.append(tuple(new_row))
        return CycMatrix(out)

    def _mul_int64(self, other: CycMatrix) -> CycMatrix | None:
        """Exact product via numpy int64 after clearing denominators."""
        try:
            import numpy as np
        except ImportError:  # pragma: no cover
            return None
        da, a = self._int_coords()
        db, b = other._int_coords()
        max_a = max((abs(v) for m in a for r in m for v in r), default=0)
        max_b = max((abs(v) for m in b for r in m for v in r), default=0)
        if max_a * max_b * len(other.rows) * 4 >= 1 << 62:
            return None
        a_arr = [np.array(m, dtype=np.int64) for m in a]
        b_arr = [np.array(m, dtype=np.int64) for m in b]
        den = da * db
        out_coords = []
        for e in range(4):
            acc = np.zeros((len(self.rows), len(other.rows[0])), dtype=np.int64)
            for e1 in range(4):
                e2 = (e - e1) % 4
                term = a_arr[e1] @ b_arr[e2]
                if e1 + e2 == e:
                    acc += term
                else:  # zeta^4 = -1 wraparound
                    acc -= term
            out_coords.append(acc)
        rows = []
        for i in range(len(self.rows)):
            rows.append(
                tuple(
                    CycEight(
                        Fraction(int(out_coords[0][i, j]), den),
                        Fraction(int(out_coords[1][i, j]), den),
                        Fraction(int(out_coords[2][i, j]), den),
                        Fraction(int(out_coords[3][i, j]), den),
                    )
                    for j in range(len(other.rows[0]))
                )
            )
        return CycMatrix(rows)

    def __pow__(self, e: int) -> CycMatrix:
        out = CycMatrix.identity(self.n)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def scale(self, c: CycEight) -> CycMatrix:
        return CycMatrix(tuple(tuple(c * x for x in row) for row in self.rows))

    def conj_transpose(self) -> CycMatrix:
        return CycMatrix(tuple(tuple(x.conjugate() for x in col) for col in zip(*self.rows)))

    def apply(self, vec: list[CycEight]) -> list[CycEight]:
        return [sum((x * v for x, v in zip(row, vec) if not x.is_zero()), CycEight(0)) for row in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"CycMatrix({self.n}x{len(self.rows[0]) if self.rows else 0})"


def permutation_matrix(s: OrthMap) -> CycMatrix:
    one, zero = CycEight(1), CycEight(0)
    cols = {element_index(s(h)): element_index(h) for h in ALL_ELEMENTS}
    return CycMatrix(
        tuple(
            tuple(one if cols.get(i) == j else zero for j in range(64))
            for i in range(64)
        )
    )


@dataclass(frozen=True)
class WeilRepMatrices:
    """Generator matrices of the Weil representation and its restrictions."""

    rho_T: CycMatrix
    rho_S: CycMatrix
    varrho_T: CycMatrix
    varrho_S: CycMatrix
    varrho1_T: CycMatrix
    varrho1_S: CycMatrix
    varrho2_T: CycEight
    varrho2_S: CycEight

    @property
    def varrho_dual_T(self) -> CycMatrix:
        return self.varrho_T.conj_transpose()

    @property
    def varrho_dual_S(self) -> CycMatrix:
        return self.varrho_S.conj_transpose()

    @property
    def varrho1_dual_T(self) -> CycMatrix:
        return self.varrho1_T.conj_transpose()

    @property
    def varrho1_dual_S(self) -> CycMatrix:
        return self.varrho1_S.conj_transpose()


def _phase(x: Fraction) -> CycEight:
    """e(x) for x with denominator dividing 8."""
    r = x * 8
    if r.denominator != 1:
        raise ValueError(f"phase {x} is not an eighth root of unity")
    return CycEight.zeta_pow(r.numerator)


def _restrict(mat_apply, basis: list[dict[FqmElement, Fraction]], reps: list[FqmElement]) -> CycMatrix:
    """Matrix of a rho-equivariant map on the span of the given basis vectors.

    ``mat_apply`` sends a sparse vector to a dense {element: CycEight} dict.
    Raises if the image does not lie in the span, so using this on the
    chi-isotypic basis proves the subspace is invariant.
    """
    n = len(basis)
    cols = []
    for vec in basis:
        image = mat_apply(vec)
        coords = []
        for ell in range(n):
            pivot = basis[ell][reps[ell]]
            coords.append(image.get(reps[ell], CycEight(0)) / Fraction(pivot))
        # verify the image is exactly the claimed combination
        recon: dict[FqmElement, CycEight] = {}
        for x, bvec in zip(coords, basis):
            for h, c in bvec.items():
                cur = recon.get(h, CycEight(0))
                recon[h] = cur + x * Fraction(c)
        for h in set(recon) | set(image):
            if recon.get(h, CycEight(0)) != image.get(h, CycEight(0)):
                raise ArithmeticError("subspace is not invariant under the representation")
        cols.append(coords)
    return CycMatrix(tuple(zip(*cols)))


@lru_cache(maxsize=None)
def weil_matrices() -> WeilRepMatrices:
    """Build rho(T), rho(S) on C[(Z/4Z)^3] and the restricted 3x3 matrices.

    The signature of the underlying quadratic space is (2,1), so the S matrix
    carries the prefactor e(-1/8)/sqrt(64); rows/columns are indexed by
    16a + 4b + c.
    """
    zero = CycEight(0)
    n = 64
    rho_t_rows = [[zero] * n for _ in range(n)]
    for h in ALL_ELEMENTS:
        i = element_index(h)
        rho_t_rows[i][i] = _phase(qform(h))
    pref = _ZETA_BAR / 8
    rho_s_rows = []
    for g in ALL_ELEMENTS:
        row = []
        for h in ALL_ELEMENTS:
            row.append(pref * _phase(-bilinear(h, g) % 1))
        rho_s_rows.append(tuple(row))
    rho_T = CycMatrix(tuple(tuple(r) for r in rho_t_rows))
    rho_S = CycMatrix(tuple(rho_s_rows))

    basis = [chi_basis_vector(ell) for ell in range(3)]
    reps = [FqmElement(1, 1, ell) for ell in range(3)]

    def apply_dense(mat: CycMatrix):
        def inner(vec: dict[FqmElement, Fraction]) -> dict[FqmElement, CycEight]:
            out: dict[FqmElement, CycEight] = {}
            for h, c in vec.items():
                j = element_index(h)
                cf = Fraction(c)
                for g in ALL_ELEMENTS:
                    x = mat.rows[element_index(g)][j]
                    if x.is_zero():
                        continue
                    cur = out.get(g, zero)
                    out[g] = cur + x * cf
            return {h: v for h, v in out.items() if not v.is_zero()}

        return inner

    varrho_T = _restrict(apply_dense(rho_T), basis, reps)
    varrho_S = _restrict(apply_dense(rho_S), basis, reps)

    varrho1_T, varrho1_S = _sublattice1_matrices()
    varrho2_T, varrho2_S = _sublattice2_scalars()
    return WeilRepMatrices(
        rho_T=rho_T,
        rho_S=rho_S,
        varrho_T=varrho_T,
        varrho_S=varrho_S,
        varrho1_T=varrho1_T,
        varrho1_S=varrho1_S,
        varrho2_T=varrho2_T,
        varrho2_S=varrho2_S,
    )


# -- the split A = A1 + A2 with A1 = {(a,0,c)}, A2 = {(0,b,0)} ----------------

A1_ELEMENTS = tuple((a, c) for a, c in product(range(4), repeat=2))


def qform1(h: tuple[int, int]) -> Fraction:
    return Fraction((-2 * h[0] * h[1]) % 8, 8)


def bilinear1(h: tuple[int, int], g: tuple[int, int]) -> Fraction:
    return Fraction((-h[0] * g[1] - g[0] * h[1]) % 4, 4)


@lru_cache(maxsize=None)
def orth_group1() -> tuple[tuple[tuple[int, int], tuple[int, int]], ...]:
    """O(A1) for A1 = (Z/4Z)^2 with Q = -ac/4, as 2x2 matrices mod 4."""
    found = []
    for e in product(range(4), repeat=4):
        if (e[0] * e[3] - e[1] * e[2]) % 4 not in (1, 3):
            continue
        m = ((e[0], e[1]), (e[2], e[3]))
        if all(
            qform1(((m[0][0] * a + m[0][1] * c) % 4, (m[1][0] * a + m[1][1] * c) % 4)) == qform1((a, c))
            for a, c in A1_ELEMENTS
        ):
            found.append(m)
    return tuple(found)


def _apply1(m, h):
    return ((m[0][0] * h[0] + m[0][1] * h[1]) % 4, (m[1][0] * h[0] + m[1][1] * h[1]) % 4)


@lru_cache(maxsize=None)
def chi1_table() -> dict:
    """chi_1 on O(A1): +1 on the swap (a,c)->(c,a), -1 on the negation."""
    swap = ((0, 1), (1, 0))
    neg = ((3, 0), (0, 3))
    ident = ((1, 0), (0, 1))
    table = {ident: 1}
    frontier = [ident]
    gens = [(swap, 1), (neg, -1)]
    while frontier:
        nxt = []
        for g in frontier:
            for s, vs in gens:
                h = tuple(tuple(sum(g[i][k] * s[k][j] for k in range(2)) % 4 for j in range(2)) for i in range(2))
                v = table[g] * vs
                if h in table:
                    if table[h] != v:
                        raise ArithmeticError("chi_1 inconsistent")
                else:
                    table[h] = v
                    nxt.append(h)
        frontier = nxt
    group = set(orth_group1())
    if set(table) != group:
        raise ArithmeticError("swap and negation do not generate O(A1)")
    return table


@lru_cache(maxsize=None)
def b_basis_vector(ell: int) -> dict[tuple[int, int], Fraction]:
    """b_ell := sum over O(A1) of chi_1(s) at s(1, ell)."""
    out: dict[tuple[int, int], int] = {}
    for s, val in chi1_table().items():
        k = _apply1(s, (1, ell))
        out[k] = out.get(k, 0) + val
    return {h: Fraction(c) for h, c in out.items() if c}


def _sublattice1_matrices() -> tuple[CycMatrix, CycMatrix]:
    """The weight-one-side 3x3 matrices from restricting rho_1 (signature (1,1))."""
    basis = [dict(b_basis_vector(ell)) for ell in range(3)]
    reps = [(1, 0), (1, 1), (1, 2)]

    def apply_t(vec):
        return {h: _phase(qform1(h)) * Fraction(c) for h, c in vec.items()}

    def apply_s(vec):
        out = {}
        for g in A1_ELEMENTS:
            acc = CycEight(0)
            for h, c in vec.items():
                acc = acc + _phase(-bilinear1(h, g) % 1) * Fraction(c)
            acc = acc / 4
            if not acc.is_zero():
                out[g] = acc
        return out

    t_mat = _restrict_pairs(apply_t, basis, reps)
    s_mat = _restrict_pairs(apply_s, basis, reps)
    return t_mat, s_mat


def _restrict_pairs(mat_apply, basis, reps) -> CycMatrix:
    n = len(basis)
    cols = []
    for vec in basis:
        image = mat_apply(vec)
        coords = []
        for ell in range(n):
            pivot = basis[ell][reps[ell]]
            coords.append(image.get(reps[ell], CycEight(0)) / Fraction(pivot))
        recon: dict = {}
        for x, bvec in zip(coords, basis):
            for h, c in bvec.items():
                recon[h] = recon.get(h, CycEight(0)) + x * Fraction(c)
        for h in set(recon) | set(image):
            if recon.get(h, CycEight(0)) != image.get(h, CycEight(0)):
                raise ArithmeticError("rho_1 does not preserve the chi_1-isotypic subspace")
        cols.append(coords)
    return CycMatrix(tuple(zip(*cols)))


def _sublattice2_scalars() -> tuple[CycEight, CycEight]:
    """rho_2 on C[Z/4Z] (Q(b) = b^2/8, signature (1,0)) restricted to e_1 - e_3."""
    # T: the vector e_1 - e_3 is an eigenvector with eigenvalue e(1/8)
    t_val = _phase(Fraction(1, 8))
    # S: prefactor e(-1/8)/2, kernel e(-b b'/4)
    pref = _ZETA_BAR / 2
    image = {}
    for g in range(4):
        acc = pref * (_phase(Fraction(-g, 4) % 1) - _phase(Fraction(-3 * g, 4) % 1))
        if not acc.is_zero():
            image[g] = acc
    if set(image) != {1, 3} or image[1] != -image[3]:
        raise ArithmeticError("rho_2 does not preserve the span of e_1 - e_3")
    return t_val, image[1]


def commutes_with_weil(s: OrthMap) -> bool:
    """Whether the permutation action of s commutes with rho(T) and rho(S).

    P_s M = M P_s is equivalent to M[s(g)][s(h)] = M[g][h] entrywise, which
    avoids materializing the 64x64 products.
    """
    w = weil_matrices()
    perm = [element_index(s(h)) for h in ALL_ELEMENTS]
    for i in range(64):
        if w.rho_T.rows[perm[i]][perm[i]] != w.rho_T.rows[i][i]:
            return False
    for i in range(64):
        row, prow = w.rho_S.rows[i], w.rho_S.rows[perm[i]]
        for j in range(64):
            if prow[perm[j]] != row[j]:
                return False
    return True


# ---------------------------------------------------------------------- dumps


def dump() -> dict:
    """JSON-serializable description of the group, orbits and matrices."""
    a_set, a0, a1, a2 = chi_orbits()
    w = weil_matrices()

    def mat_json(m: CycMatrix):
        return [[[str(c) for c in x.coords] for x in row] for row in m.rows]

    return {
        "elements": [list(h) for h in ALL_ELEMENTS],
        "isotropic": sorted(list(h) for h in isotropic_set()),
        "orth_group": [list(map(list, s.rows)) for s in orth_group()],
        "so_group_size": len(so_group()),
        "chi": [[list(map(list, s.rows)), v] for s, v in chi_table().items()],
        "orbits": {
            "A0": sorted(list(h) for h in a0),
            "A1": sorted(list(h) for h in a1),
            "A2": sorted(list(h) for h in a2),
        },
        "varrho_T": mat_json(w.varrho_T),
        "varrho_S": mat_json(w.varrho_S),
        "varrho1_T": mat_json(w.varrho1_T),
        "varrho1_S": mat_json(w.varrho1_S),
        "varrho2_T": [str(c) for c in w.varrho2_T.coords],
        "varrho2_S": [str(c) for c in w.varrho2_S.coords],
    }
