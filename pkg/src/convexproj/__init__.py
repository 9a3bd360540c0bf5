"""Goldman and Bonahon-Dreyer/Fock-Goncharov coordinates for convex
projective structures on surfaces.

Modules
-------
spectral : eigenvalue algebra for boundary holonomies
pants    : pair-of-pants coordinate systems and their closed-form conversions
flags    : flag configurations, wedge-product oracle, holonomy reconstruction
surface  : pants decompositions, surface-level bundles, twist/bulge flows
fileio   : the JSON coordinate-file format
render   : SVG picture of the normalized flag configuration
sampling : random tuples for tests and demos
cli      : the `convexproj` command line tool
"""

from .errors import (
    BoundaryCurve,
    ChartFailure,
    ClosureViolation,
    CoordinateError,
    CountMismatch,
    DegenerateConfiguration,
    DomainViolation,
    NonNegativeEuler,
    NonPositiveRatio,
    NoPositiveRoot,
    NoValidBranch,
    SchemaError,
    SlotReuse,
    UnknownCurve,
    WindowViolation,
)
from .spectral import (
    BoundaryInvariant,
    EigenTriple,
    LengthPair,
    boundary_from_eigen,
    check_window,
    eigen_from_boundary,
    length_functions,
    reverse_orientation,
)
from .pants import (
    FGPants,
    GoldmanPants,
    boundary_lengths,
    crossratios,
    fg_to_goldman,
    goldman_to_fg,
    internal_consistency,
    solve_s,
    validate_fg_domain,
)
from .flags import (
    Flag,
    PantsFlagConfig,
    ProjPoint,
    config_from_fg,
    fg_from_config,
    oracle_check,
    reconstruct_monodromy,
    shear_logs,
    triple_ratio_log,
    wedge2,
    wedge3,
)
from .surface import (
    ArcData,
    BoundarySlot,
    Gluing,
    PantsDecomposition,
    SurfaceBD,
    SurfaceGoldman,
    bd_to_goldman,
    build_decomposition,
    bulge_flow,
    coordinate_count,
    goldman_to_bd,
    twist_flow,
    validate_closure,
)

__version__ = "0.1.0"
