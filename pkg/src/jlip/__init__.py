"""Distance-ratio metric on punctured disks and its Mobius Lipschitz constants.

The package evaluates the metric j(x, y) = log(1 + |x-y|/min(d(x), d(y))) on
punctured unit disks, applies disk automorphisms h(z) = (z+a)/(1+conj(a)z),
computes the sharp closed-form Lipschitz constants, certifies their sharpness
by global supremum search, and verifies the supporting inequalities by seeded
property testing.  The ``jlip`` CLI exposes all of it with reproducible
JSON/CSV reports.
"""

__version__ = "0.1.0"

from .constants import (
    ConstantsTable,
    ball_constant,
    case12_constant,
    constants_table,
    main_constant,
    s1_constant,
)
from .domains import (
    DISK_MINUS_ORIGIN,
    UNIT_DISK,
    BranchTag,
    PuncturedDisk,
    TBranch,
    boundary_distance,
    j_metric,
    t_branch,
)
from .geometry import (
    DiskAutomorphism,
    DomainError,
    chordal_image_distance,
    derivative_modulus,
    disk_identity_residual,
    dist_to_image_puncture,
    mobius_apply,
    power_map,
)
from .lemmas import (
    SuiteResult,
    XYPair,
    g_ratio,
    k_ratio,
    l3_part1_holds,
    l3_part2_ratio,
    le1_gap,
    run_all_suites,
    s1_condition_margin,
    s1_xy,
)
from .search import (
    AuditResult,
    PowerTable,
    RatioReport,
    SearchConfig,
    bound_audit,
    diagonal_limit,
    estimate_lipschitz,
    estimate_power_constant,
    power_monotonicity_table,
    q_scan,
    ratio_J,
)

__all__ = [
    "__version__",
    "AuditResult",
    "BranchTag",
    "ConstantsTable",
    "DISK_MINUS_ORIGIN",
    "DiskAutomorphism",
    "DomainError",
    "PowerTable",
    "PuncturedDisk",
    "RatioReport",
    "SearchConfig",
    "SuiteResult",
    "TBranch",
    "UNIT_DISK",
    "XYPair",
    "ball_constant",
    "bound_audit",
    "boundary_distance",
    "case12_constant",
    "chordal_image_distance",
    "constants_table",
    "derivative_modulus",
    "diagonal_limit",
    "disk_identity_residual",
    "dist_to_image_puncture",
    "estimate_lipschitz",
    "estimate_power_constant",
    "g_ratio",
    "j_metric",
    "k_ratio",
    "l3_part1_holds",
    "l3_part2_ratio",
    "le1_gap",
    "main_constant",
    "mobius_apply",
    "power_map",
    "power_monotonicity_table",
    "q_scan",
    "ratio_J",
    "run_all_suites",
    "s1_condition_margin",
    "s1_constant",
    "s1_xy",
    "t_branch",
]
