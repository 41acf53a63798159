"""Exact arithmetic for magnetic modular forms.

Provides truncated Puiseux series over the rationals, the discriminant form
(Z/4Z)^3 with its Weil representation, the canonical bases G_d and F_D of
vector-valued modular forms in weights 5/2 and -1/2, Hecke operators T_{p^2},
the divisor-sum Shimura lift, and verifiers for the coefficient divisibility
n | a(n) of the lifted series.
"""

from .cyclotomic import CycEight, kronecker
from .series import EtaQuotientSpec, LatticeError, PrecisionError, PuiseuxSeries, eta_quotient
from .vvforms import VVForm, basis_F, basis_G, hecke_Tp2
from .magnetic import phi_series, scalar_magnetic_series, shimura_lift, verify_divisibility

__all__ = [
    "CycEight",
    "EtaQuotientSpec",
    "LatticeError",
    "PrecisionError",
    "PuiseuxSeries",
    "VVForm",
    "basis_F",
    "basis_G",
    "eta_quotient",
    "hecke_Tp2",
    "kronecker",
    "phi_series",
    "scalar_magnetic_series",
    "shimura_lift",
    "verify_divisibility",
]

__version__ = "0.1.0"
