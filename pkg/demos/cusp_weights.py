"""
Canonical forms as cusp forms
=============================

m-canonical forms on the n-fold family have weight (g + n + 1) m, so the
smallest cusp-form weight bounds the n with a nonzero canonical form.
"""
from kuga_sing.cusp_tables import CUSP_FACTS, parity_vanishes, weight_of

for g, f in CUSP_FACTS.items():
    dim = f"{'>=' if f.dim_is_lower_bound else ''}{f.dim}"
    print(f"g={g}: weight {f.weight} (dim {dim}), kodaira {f.kodaira} from n={f.min_n}; weight_of -> {weight_of(g, f.min_n, 1)}")

print([k for k in range(1, 16) if parity_vanishes(3, k, True)])
