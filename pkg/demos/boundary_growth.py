"""
Growth near the boundary
========================

Three radial models: the Petersson norm along Ω0 + itQ, the logarithmic
integral of a bounded section, and the pole integral r^(1 - 2ν/m).
"""
import numpy as np

from kuga_sing.asymptotics import (
    boundary_decay_profile,
    geometric_grid,
    petersson_flow_exponent,
    pole_model_classify,
)

for Q in (np.diag([1, 0, 0]), np.diag([1, 1, 0]), np.array([[2, 1, 0], [1, 2, 1], [0, 1, 2]])):
    print(f"rank {np.linalg.matrix_rank(Q)}: exponent {petersson_flow_exponent(np.eye(3), Q):.4f}")

# ε^α ∫ |log r|^a dr/r starts at 0, peaks, then decays to 0
grid = geometric_grid(count=120)[1:]
for a, alpha in ((1, 0.5), (3, 0.5), (1, 0.1)):
    prof = boundary_decay_profile(a, alpha, grid)
    k = int(np.argmax(prof))
    print(f"a={a} alpha={alpha}: peak {prof[k]:.3g} at eps={grid[k]:.1e}, value at eps={grid[-1]:.1e}: {prof[-1]:.3g}")

for m in (1, 2, 3, 5):
    print(f"m={m}: " + ", ".join(
        f"nu={nu} {c.kind}" + (f" ({c.exponent:.3f})" if c.exponent else "")
        for nu in (m - 1, m, m + 1) for c in [pole_model_classify(nu, m)]
    ))
