"""Reid-Tai checks for n-fold Kuga varieties, with exact and numerical
verification of the surrounding symplectic and Siegel-domain identities."""

from .cyclic_rep import (
    HodgeSplitting,
    RationalRep,
    component_angles,
    enumerate_reps,
    enumerate_splittings,
    euler_phi,
    parse_rep,
)
from .reid_tai import classify, reid_tai_sum, scan, tangent_spectrum

__version__ = "0.1.0"
