"""Published coefficient tables used as regression anchors.

Keys are the basis index; inner keys are the exponent numerator m of q^(m/8).
These values are embedded data, independent of the builder, so a regression
in the construction pipeline cannot silently re-derive them.
"""

from __future__ import annotations

G_EXPONENTS = (1, 5, 7, 9, 13, 15)

G_TABLE: dict[int, dict[int, int]] = {
    1: {1: -4, 5: 112, 7: 19, 9: -516, 13: 1712, 15: -87},
    3: {1: -4, 5: -267, 7: 1024, 9: -3012, 13: -19666, 15: 44032},
    7: {1: -7, 5: -3136, 7: -20480, 9: -102396, 13: -1546048, 15: -5074944},
    9: {1: -20, 5: 16944, 7: -172, 9: -854548, 13: 18047344, 15: 5031},
    11: {1: -12, 5: -21303, 7: 216064, 9: -1566540, 13: -44627503, 15: 193840128},
    15: {1: -25, 5: -111552, 7: -1617920, 9: -15953955, 13: -770664640, 15: -4226125824},
}

F_EXPONENTS = (1, 3, 7, 9, 11, 15)

F_TABLE: dict[int, dict[int, int]] = {
    1: {1: 4, 3: 4, 7: 7, 9: 20, 11: 12, 15: 25},
    5: {1: -112, 3: 267, 7: 3136, 9: -16944, 11: 21303, 15: 111552},
    7: {1: -19, 3: -1024, 7: 20480, 9: 172, 11: -216064, 15: 1617920},
    9: {1: 516, 3: 3012, 7: 102396, 9: 854548, 11: 1566540, 15: 15953955},
    13: {1: -1712, 3: 19666, 7: 1546048, 9: -18047344, 11: 44627503, 15: 770664640},
    15: {1: 87, 3: -44032, 7: 5074944, 9: -5031, 11: -193840128, 15: 4226125824},
}

#: First few coefficients of the phi target, q - 132q^3 + ...
PHI_COEFFS = {1: 1, 3: -132, 5: 5630, 7: -189672, 9: 5768181}

#: Expected lift coefficients a(1..9) of the d = 1 family member (= -4 * phi).
LIFT_G1_COEFFS = {1: -4, 3: 528, 5: -22520, 7: 758688, 9: -23072724}
