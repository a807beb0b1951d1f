"""Norm-comparison toolkit for hyperbolic 3-manifolds.

Submodules group by the object being computed: radial profiles and the
density nu (radial), harmonic 1-forms on a ball (ballfield), Margulis-tube
model fields (tubefield), inequality plumbing between norms (bounds), the
symplectic homology action of a monodromy (homalg), Brown's fibering
criterion (fibering), parametric example families (families), and the
named invariant suites behind the CLI (verify).  The names most scripts
need are re-exported here.
"""

from .radial import dpsi, mode_norm, nu, psi
from .ballfield import (
    HarmonicExpansion,
    ball_l2_norm_sq,
    check_df_bound,
    expansion_field,
    mode_indices,
    omega_field,
    omega_gram,
    psi_gram,
)
from .tubefield import (
    TubeChart,
    competitor_norm_sq,
    remark_ratio,
    tube_form_norm,
    tube_l2_norm_sq,
    tube_lower_bound,
    tube_volume,
)
from .bounds import (
    NormDatum,
    PolytopeNorm,
    dual_norm,
    polytope_gauge,
    supnorm_factor,
    thm_main_bounds,
)
from .homalg import (
    GROWTH_RATE,
    MONODROMY,
    SYMPLECTIC_FORM,
    fbar_power,
    mv_generator,
    symplectic_check,
    transvection,
    twist_word_matrix,
)
from .fibering import (
    BrownStatus,
    X064_RELATOR,
    brown_status,
    fibered_characters,
    parse_word,
)
from .families import (
    CoverFamilyParams,
    FillingFamilyParams,
    GluingFamilyParams,
    cover_family,
    filling_family,
    gluing_family,
)
from .verify import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # radial
    "dpsi",
    "mode_norm",
    "nu",
    "psi",
    # ballfield
    "HarmonicExpansion",
    "ball_l2_norm_sq",
    "check_df_bound",
    "expansion_field",
    "mode_indices",
    "omega_field",
    "omega_gram",
    "psi_gram",
    # tubefield
    "TubeChart",
    "competitor_norm_sq",
    "remark_ratio",
    "tube_form_norm",
    "tube_l2_norm_sq",
    "tube_lower_bound",
    "tube_volume",
    # bounds
    "NormDatum",
    "PolytopeNorm",
    "dual_norm",
    "polytope_gauge",
    "supnorm_factor",
    "thm_main_bounds",
    # homalg
    "GROWTH_RATE",
    "MONODROMY",
    "SYMPLECTIC_FORM",
    "fbar_power",
    "mv_generator",
    "symplectic_check",
    "transvection",
    "twist_word_matrix",
    # fibering
    "BrownStatus",
    "X064_RELATOR",
    "brown_status",
    "fibered_characters",
    "parse_word",
    # families
    "CoverFamilyParams",
    "FillingFamilyParams",
    "GluingFamilyParams",
    "cover_family",
    "filling_family",
    "gluing_family",
    # verify
    "SUITES",
    "run_suite",
]
