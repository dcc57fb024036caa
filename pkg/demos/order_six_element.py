"""
An explicit element realising the smallest Reid-Tai sum
=======================================================

In Sp(4, Z) take the order-6 matrix [[1, -1], [1, 0]] on the (e1, f1) plane
and the identity on (e2, f2).  It fixes diag(e(1/6), i) in the Siegel upper
half space; its powers act on the tangent space of the Kuga family through
K = (C Ω + D)^-1.
"""
from fractions import Fraction

import numpy as np

from kuga_sing.reid_tai import reid_tai_sum, sym2_angles
from kuga_sing.siegel import factor_of_automorphy, moebius_act

M = np.array([[1, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]])
omega = np.diag([np.exp(1j * np.pi / 3), 1j])
print("M Ω - Ω =", np.abs(moebius_act(M, omega) - omega).max())


def angle(z):
    return Fraction((np.angle(z) / (2 * np.pi)) % 1).limit_denominator(12) % 1


for k in range(1, 6):
    Mk = np.linalg.matrix_power(M, k)
    C, D = Mk[2:, :2], Mk[2:, 2:]
    kappa = np.linalg.eigvals(np.linalg.inv(C @ omega + D))
    v = sorted(angle(z) for z in kappa)
    for n in (1, 2):
        rt = reid_tai_sum(v * n + list(sym2_angles(v)))
        print(f"M^{k}: V={[str(a) for a in v]}  n={n}  RT={rt}")
    print(f"      j(M^{k}, Ω) = {factor_of_automorphy(Mk, omega):.4f}")
