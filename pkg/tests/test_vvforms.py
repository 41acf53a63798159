from fractions import Fraction as F

import pytest

from magforms import gamma1 as g1
from magforms import vvforms as vv
from magforms.series import PrecisionError
from magforms.tables import F_TABLE, G_TABLE


def test_lift_of_base_vanishes():
    assert vv.lift_from_cusps(g1.build_gtilde(0, F(10))).is_zero()


@pytest.mark.parametrize("m", [3, 7, 11, 15])
def test_lift_vanishes_for_three_mod_four(m):
    assert vv.lift_from_cusps(g1.build_gtilde(m, F(6))).is_zero()


def test_lift_of_gtilde_one():
    f = vv.lift_from_cusps(g1.build_gtilde(1, F(6)))
    assert f.rep == "rho1"
    assert f.comp[1].leading() == (F(-1, 4), F(1))


def test_tensor_theta_displayed_expansion():
    f = vv.tensor_theta(vv.lift_from_cusps(g1.build_gtilde(1, F(8))))
    comp0 = f.comp[0]
    assert [comp0.coeff(F(n, 8)) for n in (1, 9, 17, 25)] == [-4, -516, -4576, -22500]
    # leading exponent of the lifted family member: -(2m-1)/8
    assert f.comp[1].leading()[0] == F(-1, 8)


def test_tensor_theta_round_trip():
    f = vv.lift_from_cusps(g1.build_gtilde(4, F(6)))
    back = vv.untensor_theta(vv.tensor_theta(f))
    assert back.rep == "rho1"
    assert f.agrees_with(back, below=4)


@pytest.mark.parametrize("d", sorted(G_TABLE))
def test_g_table(d):
    entry = vv.basis_G(d, F(17, 8))
    for m, expected in G_TABLE[d].items():
        assert entry.coeff(m) == expected


@pytest.mark.parametrize("D", sorted(F_TABLE))
def test_f_table(D):
    entry = vv.basis_F(D, F(17, 8))
    for m, expected in F_TABLE[D].items():
        assert entry.coeff(m) == expected


def test_basis_rejects_bad_residues():
    with pytest.raises(ValueError):
        vv.basis_G(5, F(2))
    with pytest.raises(ValueError):
        vv.basis_G(13, F(2))
    with pytest.raises(ValueError):
        vv.basis_F(3, F(2))
    with pytest.raises(ValueError):
        vv.basis_F(11, F(2))


@pytest.mark.parametrize("d", [1, 3, 7, 9, 17, 23, 25, 31])
def test_basis_g_structure(d):
    entry = vv.basis_G(d, F(4))
    assert entry.form.is_integral()
    assert entry.form.principal_indices() == [(-d, F(1))]
    # residues are enforced by the VVForm constructor; re-run explicitly
    for ell, series in enumerate(entry.form.comp):
        res = vv.RESIDUES["rho"][ell]
        assert all((e - res) % 1 == 0 for e in series.support())


@pytest.mark.parametrize("D", [1, 5, 7, 9, 15, 17, 23, 25])
def test_basis_f_structure(D):
    entry = vv.basis_F(D, F(4))
    assert entry.form.is_integral()
    assert entry.form.principal_indices() == [(-D, F(1))]
    for ell, series in enumerate(entry.form.comp):
        res = vv.RESIDUES["rho*"][ell]
        assert all((e - res) % 1 == 0 for e in series.support())


def test_zagier_duality_on_tables():
    for D, row in F_TABLE.items():
        g_rows = {d: vv.basis_G(d, F(D + 2, 8)) for d in row if d % 8 in (1, 3, 7)}
        for d, a_val in row.items():
            assert a_val + g_rows[d].coeff(D) == 0


def test_uniqueness_under_extra_candidates():
    """Starting the elimination from a polluted combination recovers the same G_d."""
    qorder = F(3)
    target = vv.basis_G(7, qorder)
    extra, _ = vv._weight52_candidate(2, qorder)  # pole at -3/8
    x = target.form.add_scaled(extra, 5)
    c = x.coeff_q8(-3)
    x = x.add_scaled(extra, -c)
    for e in (1,):
        ce = x.coeff_q8(-e)
        if ce:
            cand, _ = vv._weight52_candidate(1, qorder)
            x = x.add_scaled(cand, -ce)
    assert x.agrees_with(target.form, below=2)


def test_basis_entry_json_round_trip():
    entry = vv.basis_G(3, F(3))
    data = entry.to_json()
    back = vv.BasisEntry.from_json(data)
    assert back.kind == "G" and back.index == 3
    assert back.form.agrees_with(entry.form)
    assert back.poly == entry.poly
    assert back.weights == entry.weights


def test_hecke_coefficient_example():
    g1_entry = vv.basis_G(1, F(9 * 24, 8))
    h = vv.hecke_Tp2(g1_entry.form, 3)
    # c(9) + 3*(1/3)*c(1) = -516 - 12
    assert h.coeff_q8(1) == -528
    # n coprime to p with c(p^2 n) = 0 leaves only p*(n/p)*c(n)
    assert h.coeff_q8(-9) == 27  # p^3 * c(-1)


def test_hecke_truncation_contract():
    entry = vv.basis_G(1, F(90, 8))
    h = vv.hecke_Tp2(entry.form, 3)
    assert h.trunc == entry.form.trunc / 9
    beyond = int(h.trunc * 8)
    while beyond % 8 not in (1, 5, 7):
        beyond += 1
    with pytest.raises(PrecisionError):
        h.coeff_q8(beyond)


def test_hecke_rejects_bad_input():
    entry = vv.basis_G(1, F(2))
    with pytest.raises(ValueError):
        vv.hecke_Tp2(entry.form, 2)
    dual = vv.basis_F(1, F(2))
    with pytest.raises(ValueError):
        vv.hecke_Tp2(dual.form, 3)


@pytest.mark.parametrize("d,p", [(1, 3), (3, 3), (9, 3)])
def test_hecke_identity(d, p):
    assert vv.hecke_identity_check(d, p, 12)


def test_hecke_identity_with_dividing_square():
    # d = 9, p = 3 exercises the G_{d/p^2} term
    assert vv.hecke_identity_check(9, 3, 10)


@pytest.mark.parametrize("m", [1, 2, 4, 5])
def test_tensor_theta_leading_exponent(m):
    f = vv.tensor_theta(vv.lift_from_cusps(g1.build_gtilde(m, F(4))))
    lead = min(s._lead_exp() for s in f.comp)
    assert lead == F(-(2 * m - 1), 8)


@pytest.mark.parametrize("d", [1, 3, 7])
def test_square_coefficient_divisibility(d):
    entry = vv.basis_G(d, F(172, 8))
    for m in range(1, 14):
        c = entry.coeff(m * m)
        assert c.denominator == 1 and c.numerator % m == 0


def test_embedding_into_group_algebra_respects_qform():
    """Placing component ell on the chi-isotypic vector e_ell gives a 64-vector
    whose exponents match e(Q(h)) on every group element carrying them."""
    from magforms import discforms as df

    entry = vv.basis_G(3, F(3))
    for ell, series in enumerate(entry.form.comp):
        for h in df.chi_basis_vector(ell):
            for e in series.support():
                assert (e - df.qform(h)) % 1 == 0


def test_coeff_q8_rejects_weight_one_forms():
    f = vv.lift_from_cusps(g1.build_gtilde(1, F(4)))
    with pytest.raises(ValueError):
        f.coeff_q8(1)


@pytest.mark.parametrize("d", [1, 9, 17])
def test_basis_independent_of_requested_order(d):
    lo = vv.basis_G(d, F(2))
    hi = vv.basis_G(d, F(13))
    assert hi.form.agrees_with(lo.form, below=2)
    assert hi.poly == lo.poly
