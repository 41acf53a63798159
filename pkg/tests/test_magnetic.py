from fractions import Fraction as F

import pytest

from magforms import magnetic as mg
from magforms import vvforms as vv
from magforms._highorder import family_square_table
from magforms.series import EtaQuotientSpec, PrecisionError, eta_quotient
from magforms.tables import LIFT_G1_COEFFS, PHI_COEFFS


def test_phi_expansion():
    phi = mg.phi_series(11)
    for n, c in PHI_COEFFS.items():
        assert phi.coeff(n) == c
    # supported on odd exponents only
    assert all(e.denominator == 1 and e.numerator % 2 == 1 for e in phi.support())


def test_scalar_magnetic_leading_terms():
    s = mg.scalar_magnetic_series(8)
    assert s.coeff(1) == 64
    assert s.coeff(2) == 64 * -504
    assert s.coeff(2) % 2 == 0


def test_scalar_magnetic_against_direct_oracle():
    """64 Delta E4^-2 expanded with plain series division as an oracle."""
    order = 8
    delta = eta_quotient(EtaQuotientSpec([(1, 24)]), order)
    e4 = mg.eisenstein_e4(order)
    oracle = (delta * (e4 * e4).inverse()).scale(64)
    assert mg.scalar_magnetic_series(order).agrees_with(oracle, below=order)


def test_verify_divisibility_on_phi():
    rep = mg.verify_divisibility(mg.phi_series(11), 9, "phi")
    assert rep["pass"] and rep["failures"] == []
    assert rep["target"] == "phi" and rep["nmax"] == 9
    assert set(rep) == {"target", "nmax", "failures", "pass", "runtime_ms"}


def test_verify_divisibility_delta_control():
    delta = eta_quotient(EtaQuotientSpec([(1, 24)]), 13)
    assert delta.coeff(11) == 534612
    rep = mg.verify_divisibility(delta, 11, "Delta")
    assert not rep["pass"] and rep["failures"] == [11]
    rep10 = mg.verify_divisibility(delta, 10, "Delta")
    assert rep10["pass"]


def test_verify_divisibility_vacuous_on_zero():
    from magforms.series import PuiseuxSeries

    rep = mg.verify_divisibility(PuiseuxSeries.zero(20), 15, "zero")
    assert rep["pass"]


def test_shimura_lift_small_values():
    entry = vv.basis_G(1, F(7 * 7, 8) + 1)
    lift = mg.shimura_lift(entry, 7)
    assert lift.coeff(1) == -4
    assert lift.coeff(3) == 528
    assert lift.coeff(5) == -22520
    assert lift.coeff(7) == 758688


def test_shimura_lift_precision_contract():
    entry = vv.basis_G(1, F(4))
    with pytest.raises(PrecisionError):
        mg.shimura_lift(entry, 99)
    lift = mg.shimura_lift(vv.basis_G(1, F(26, 8)), 5)
    with pytest.raises(PrecisionError):
        lift.coeff(7)


def test_family_lifts_match_engine_route():
    lifts = mg.family_lifts((1, 3), 11)
    engine = mg.shimura_lift(vv.basis_G(3, F(11 * 11, 8) + 1), 11)
    for n in range(1, 12, 2):
        assert lifts[3].coeff(n) == engine.coeff(n)
    for n, c in LIFT_G1_COEFFS.items():
        assert lifts[1].coeff(n) == c


def test_lift_equals_minus_four_phi():
    lifts = mg.family_lifts((1,), 19)
    phi = mg.phi_series(21)
    for n in range(1, 20, 2):
        assert lifts[1].coeff(n) == -4 * phi.coeff(n)


def test_square_table_rejects_bad_index():
    with pytest.raises(ValueError):
        family_square_table((5,), 9)


def test_phi_prime_cube_congruence():
    rep = mg.verify_phi_prime_cubes(20)
    assert rep["pass"]
    phi = mg.phi_series(5)
    assert (phi.coeff(3) - 3) == -135  # = -5 * 27


def test_hecke_congruence_examples():
    rep = mg.verify_hecke_congruence(1, 3, 12)
    assert rep["pass"]
    # spec arithmetic: B(9,1) - 3((-1/3) - (1/3)) B(1,1) = -516 - 24 = -540 = 0 mod 27
    entry = vv.basis_G(1, F(110, 8))
    assert entry.coeff(9) - 3 * (-1 - 1) * entry.coeff(1) == -540


def test_lift_prime_congruence():
    lift = mg.family_lifts((1,), 19)[1]
    rep = mg.verify_lift_prime_congruence(1, 20, lift)
    assert rep["pass"]
    # a_1(3) = 528 = -12 mod 27
    assert (lift.coeff(3) - 3 * 1 * -4) % 27 == 0


def test_p3_combined_report():
    rep = mg.verify_p3_congruences(1, 12)
    assert rep["pass"]
    assert set(rep["verdicts"]) == {3, 5, 7, 11}
    assert all(v["lift"] and v["phi"] for v in rep["verdicts"].values())


def test_family_lifts_tiny_bound():
    lifts = mg.family_lifts((7,), 3)
    assert lifts[7].coeff(1) == -7
    with pytest.raises(PrecisionError):
        lifts[7].coeff(5)


def test_deep_table_internal_hecke_congruences():
    """B((pk)^2, d) = p((-d/p) - (k^2/p)) B(k^2, d) mod p^3 inside the deep table.

    Ties deep coefficients to each other through the Hecke action at indices
    far beyond the general engine's range.
    """
    from magforms.cyclotomic import kronecker
    from magforms._highorder import family_square_table

    nmax = 75
    tables = family_square_table((3, 11), nmax)
    for d, table in tables.items():
        for p in (3, 5):
            for k in range(1, nmax // p + 1, 2):
                lhs = table[p * k]
                rhs = p * (kronecker(-d, p) - kronecker(k * k, p)) * table[k]
                assert (lhs - rhs) % p**3 == 0, (d, p, k)


def test_deep_table_prime_cube_corollary():
    lifts = mg.family_lifts((3,), 75)
    rep = mg.verify_lift_prime_congruence(3, 75, lifts[3])
    assert rep["pass"]
