"""
Darboux transformations: seeds, the multi-step engine, Crum and
Krein-Adler deletions.
"""

from .deform import (
    CrumReport,
    DeformedSystem,
    NonsingularVerdict,
    adler_condition,
    certify_nonsingular,
    crum_tower,
    deform_system,
    deformed_weight,
    krein_adler,
    norm_ratio,
    order_independent,
    potential_delta,
)
from .seeds import (
    Boundary,
    SeedClass,
    SeedFunction,
    SeedKind,
    SeedSpec,
    boundary_behaviour,
    classify_seed,
    make_seed,
)
