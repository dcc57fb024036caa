"""
Factor of automorphy and the Petersson density
==============================================

det Im(MΩ) |det(CΩ + D)|^2 = det Im Ω and the cocycle rule for j, checked on
random symplectic words.  Longer words have bigger entries, and the relative
error grows with them.
"""
import numpy as np

from kuga_sing.harness import siegel_trials
from kuga_sing.siegel import moebius_act, petersson_det_im, random_siegel_point
from kuga_sing.symplectic import random_word, to_float

rng = np.random.default_rng(1)
omega = random_siegel_point(2, rng)
M = to_float(random_word(2, 2, seed=4))
print(M)
print("det Im Ω   =", petersson_det_im(omega))
print("det Im MΩ  =", petersson_det_im(moebius_act(M, omega)))

for length in (1, 2, 3, 4):
    rep = siegel_trials((2, 3), 200, seed=7, tol=1e-9, word_length=length)
    print(f"word length {length}: max relative error {rep.max_error:.1e}, {len(rep.failures)} above 1e-9")
