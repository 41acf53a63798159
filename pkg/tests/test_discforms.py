from fractions import Fraction as F

import pytest

from magforms import discforms as df
from magforms.cyclotomic import CycEight, I_UNIT, SQRT2

Z = CycEight.zeta_pow


def test_qform_values():
    assert df.qform(df.FqmElement(0, 0, 0)) == 0
    assert df.qform(df.FqmElement(1, 1, 1)) == F(7, 8)
    assert df.qform(df.FqmElement(0, 0, 1)) == 0


def test_isotropic_set_matches_printed_list():
    expected = {
        (0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 0, 3), (1, 0, 0), (1, 2, 2),
        (2, 0, 0), (2, 0, 2), (2, 2, 1), (2, 2, 3), (3, 0, 0), (3, 2, 2),
    }
    assert {tuple(h) for h in df.isotropic_set()} == expected
    assert len(df.isotropic_set()) == 12


def test_group_orders():
    assert len(df.orth_group()) == 32
    assert len(df.so_group()) == 16


def test_group_contains_printed_generators():
    group = set(df.orth_group())
    assert df.GEN_R in group and df.GEN_W in group and df.GEN_U in group
    assert df.GEN_MU in group and df.GEN_NU in group
    # W(a, b, c) = (c, -b, a)
    assert df.GEN_W(df.FqmElement(1, 2, 3)) == df.FqmElement(3, 2, 1)
    # R(a, b, c) = (a, b + 2a, 2a + 2b + c)
    assert df.GEN_R(df.FqmElement(1, 1, 0)) == df.FqmElement(1, 3, 0)
    assert df.GEN_U == df.GEN_W.compose(df.GEN_R).compose(df.GEN_W)


def test_chi_values():
    assert df.chi(df.GEN_R) == -1
    assert df.chi(df.GEN_U) == -1
    assert df.chi(df.GEN_W) == -1
    assert df.chi(df.GEN_MU) == -1
    assert df.chi(df.GEN_NU) == 1
    assert df.chi(df.IDENTITY) == 1
    fake = df.OrthMap(((1, 1, 0), (0, 1, 0), (0, 0, 1)))
    with pytest.raises(ValueError):
        df.chi(fake)


def test_chi_is_multiplicative():
    table = df.chi_table()
    group = df.orth_group()
    for s in group[::5]:
        for t in group[::7]:
            assert table[s.compose(t)] == table[s] * table[t]


def test_orbits():
    a_set, a0, a1, a2 = df.chi_orbits()
    assert (len(a0), len(a1), len(a2)) == (8, 4, 8)
    assert df.FqmElement(1, 1, 1) in a1
    assert df.FqmElement(0, 0, 1) not in a_set
    assert a0 == {
        df.FqmElement(*t)
        for t in [(0, 1, 1), (3, 3, 0), (0, 3, 3), (1, 1, 0), (0, 3, 1), (1, 3, 0), (0, 1, 3), (3, 1, 0)]
    }
    assert a2 == {
        df.FqmElement(*t)
        for t in [(1, 1, 2), (2, 1, 1), (3, 3, 2), (2, 3, 3), (3, 1, 2), (2, 3, 1), (1, 3, 2), (2, 1, 3)]
    }


def test_projection():
    # a vector supported off the chi-support projects to zero
    v = {df.FqmElement(0, 0, 1): CycEight(1)}
    assert df.project_chi(v) == {}
    # the basis vector at (1,1,0) scaled by the group order gives e_0
    w = df.project_chi({df.FqmElement(1, 1, 0): CycEight(1)})
    e0 = df.chi_basis_vector(0)
    assert {h: c * 32 for h, c in w.items()} == {h: CycEight(c) for h, c in e0.items()}
    # idempotence
    v2 = {
        df.FqmElement(1, 1, 0): CycEight(2, 1, 0, 0),
        df.FqmElement(1, 1, 1): CycEight(0, 0, F(1, 3), 0),
        df.FqmElement(0, 0, 2): CycEight(5),
    }
    once = df.project_chi(v2)
    twice = df.project_chi(once)
    assert once == twice


def test_ell_index():
    assert df.ell_index(1) == 0
    assert df.ell_index(7) == 1
    assert df.ell_index(5) == 2
    assert df.ell_index(-1) == 1
    assert df.ell_index(-7) == 0
    for bad in (0, 2, 3, 4, 6):
        with pytest.raises(ValueError):
            df.ell_index(bad)


def test_varrho_matrices_match_printed_form():
    w = df.weil_matrices()
    assert w.varrho_T.rows[0][0] == Z(1)
    assert w.varrho_T.rows[1][1] == Z(7)
    assert w.varrho_T.rows[2][2] == Z(5)
    pref = Z(-1) / 2
    expected = ((1, 2, 1), (1, 0, -1), (1, -2, 1))
    for i in range(3):
        for j in range(3):
            assert w.varrho_S.rows[i][j] == pref * expected[i][j]


def test_varrho1_and_varrho2():
    w = df.weil_matrices()
    assert w.varrho1_T.rows[0][0] == CycEight(1)
    assert w.varrho1_T.rows[1][1] == -I_UNIT
    assert w.varrho1_T.rows[2][2] == CycEight(-1)
    pref = I_UNIT / 2
    expected = ((1, 2, 1), (1, 0, -1), (1, -2, 1))
    for i in range(3):
        for j in range(3):
            assert w.varrho1_S.rows[i][j] == pref * expected[i][j]
    assert w.varrho2_T == Z(1)
    # the S scalar consistent with the tensor factorization is -i * conj(zeta_8)
    assert w.varrho2_S == Z(5)
    assert (w.varrho2_S * w.varrho2_T) ** 3 == w.varrho2_S**2


def test_tensor_factorization():
    w = df.weil_matrices()
    assert w.varrho_T == w.varrho1_T.scale(w.varrho2_T)
    assert w.varrho_S == w.varrho1_S.scale(w.varrho2_S)


def test_metaplectic_relations_3dim():
    w = df.weil_matrices()
    i3 = df.CycMatrix.identity(3)
    s2 = w.varrho_S * w.varrho_S
    assert s2 == i3.scale(-I_UNIT)
    assert (w.varrho_S * w.varrho_T) ** 3 == s2
    # S has order 8 in the metaplectic group: S^4 = -1, S^8 = 1
    assert s2 * s2 == i3.scale(CycEight(-1))
    assert (s2 * s2) * (s2 * s2) == i3
    # integral-weight side: S^4 is already the identity
    s1_sq = w.varrho1_S * w.varrho1_S
    assert s1_sq == i3.scale(CycEight(-1))
    assert s1_sq * s1_sq == i3
    assert (w.varrho1_S * w.varrho1_T) ** 3 == s1_sq
    # duals satisfy the same relations
    sd = w.varrho_dual_S
    sd2 = sd * sd
    assert (sd * w.varrho_dual_T) ** 3 == sd2
    assert (sd2 * sd2) * (sd2 * sd2) == i3


def test_metaplectic_relations_64dim():
    w = df.weil_matrices()
    s2 = w.rho_S * w.rho_S
    nu = df.permutation_matrix(df.GEN_NU)
    assert s2 == nu.scale(-I_UNIT)
    assert (w.rho_S * w.rho_T) ** 3 == s2
    s4 = s2 * s2
    assert s4 == df.CycMatrix.identity(64).scale(CycEight(-1))


def test_rescaled_unitarity():
    w = df.weil_matrices()
    one, zero = CycEight(1), CycEight(0)
    d = df.CycMatrix([[one, zero, zero], [zero, SQRT2, zero], [zero, zero, one]])
    d_inv = df.CycMatrix([[one, zero, zero], [zero, SQRT2 / 2, zero], [zero, zero, one]])
    u = d * w.varrho_S * d_inv
    assert u * u.conj_transpose() == df.CycMatrix.identity(3)


def test_orth_group_commutes_with_weil():
    assert all(df.commutes_with_weil(s) for s in df.orth_group())


def test_mult_map_is_identity_or_negation():
    for p in (3, 5, 7, 11, 13):
        m = df.mult_map(p)
        assert m in (df.IDENTITY, df.GEN_NU)
        assert m in set(df.orth_group())


def test_component_exponent_residues_match_qform():
    """The eighth-root residue carried by component ell equals Q(h) on its support."""
    for ell in range(3):
        support = df.chi_basis_vector(ell)
        q_vals = {df.qform(h) for h in support}
        assert len(q_vals) == 1
        expected = {0: F(1, 8), 1: F(7, 8), 2: F(5, 8)}[ell]
        assert q_vals == {expected}


def test_matrix_fast_path_matches_object_path():
    w = df.weil_matrices()
    a, b = w.varrho_S, w.varrho1_S
    fast = a * b
    orig = df.CycMatrix._mul_int64
    try:
        df.CycMatrix._mul_int64 = lambda self, other: None
        slow = a * b
    finally:
        df.CycMatrix._mul_int64 = orig
    assert fast == slow
