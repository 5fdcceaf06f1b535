"""Exact-arithmetic laboratory for expanding maps with an excluded hole.

Cut an open region out of the n-branch circle map or its two-sided planar
extension and study the subshift of codes whose orbits never enter it:
inner/outer finite-type brackets, stabilization and escape certificates,
transitive component filtrations, threshold shifts, even-shift
obstruction witnesses, and a deterministic rectangle-sampling experiment.
"""

from .beta import (
    FINITE_TYPE,
    NOT_SOFIC_WITHIN_HORIZON,
    SOFIC,
    BetaResReport,
    BetaThreshold,
    beta_code,
    beta_itinerary,
    beta_language,
    beta_res_hole,
    classify_beta_threshold,
    classify_digit_stream,
    expansion_length,
    is_beta_number,
    verify_beta_res,
)
from .brackets import (
    BoundaryWitness,
    BracketPair,
    Certificate,
    EscapeMethod,
    StabilizationMethod,
    Unknown,
    bracket_report,
    certify_escape,
    certify_stabilization,
    hole_from_sft,
    inner_sft,
    oracle_language,
    outer_sft,
)
from .components import (
    AmalgamationReport,
    BoundReport,
    ComponentForest,
    ComponentNode,
    GapStatus,
    amalgamate_gaps,
    check_component_bound,
    forest_dot,
    transitive_filtration,
)
from .errors import (
    AlphabetMismatchError,
    ConfigError,
    ExclusionLabError,
    NonConvergenceError,
    NonRecurringOrbitError,
    ResourceCapError,
)
from .evenshift import (
    Witness,
    WitnessPoint,
    even_language,
    ies_even_witness,
    is_even_code,
    res_even_witness,
)
from .genericity import (
    GenericityReport,
    SampleRecord,
    SplitMix64,
    sample_rectangle_genericity,
)
from .holes import Hole1D, Hole2D, Rect, hole1d_from_intervals, hole2d_from_rects
from .analysis import (
    AnalysisConfig,
    BetaConfig,
    HoleConfig,
    RectConfig,
    SystemConfig,
    export_dot,
    parse_config,
    run_analysis,
)
from .sft import (
    Sft,
    canonical_forbidden,
    decode_word,
    encode_word,
    sft_build,
    sft_components,
    sft_dot,
    sft_entropy,
    sft_equivalent,
    sft_from_json,
    sft_language,
)
from .systems import (
    BiWord,
    Point,
    SystemSpec,
    codes_of_point,
    cylinder_box,
    digit_at,
    map_step,
    map_step_inverse,
    orbit_summary,
    survivor_regions,
    survivor_x_projection,
    system_from_json,
)
from .words import Code, word, word_fraction, word_str, word_value

__version__ = "0.1.0"

__all__ = [
    "AlphabetMismatchError",
    "AmalgamationReport",
    "AnalysisConfig",
    "BetaConfig",
    "BetaResReport",
    "BetaThreshold",
    "BiWord",
    "BoundReport",
    "BoundaryWitness",
    "BracketPair",
    "Certificate",
    "Code",
    "ComponentForest",
    "ComponentNode",
    "ConfigError",
    "EscapeMethod",
    "ExclusionLabError",
    "FINITE_TYPE",
    "GapStatus",
    "GenericityReport",
    "Hole1D",
    "Hole2D",
    "HoleConfig",
    "NOT_SOFIC_WITHIN_HORIZON",
    "NonConvergenceError",
    "NonRecurringOrbitError",
    "Point",
    "Rect",
    "RectConfig",
    "ResourceCapError",
    "SOFIC",
    "SampleRecord",
    "Sft",
    "SplitMix64",
    "StabilizationMethod",
    "SystemConfig",
    "SystemSpec",
    "Unknown",
    "Witness",
    "WitnessPoint",
    "amalgamate_gaps",
    "beta_code",
    "beta_itinerary",
    "beta_language",
    "beta_res_hole",
    "bracket_report",
    "canonical_forbidden",
    "certify_escape",
    "certify_stabilization",
    "check_component_bound",
    "classify_beta_threshold",
    "classify_digit_stream",
    "codes_of_point",
    "cylinder_box",
    "decode_word",
    "digit_at",
    "encode_word",
    "even_language",
    "expansion_length",
    "export_dot",
    "forest_dot",
    "hole1d_from_intervals",
    "hole2d_from_rects",
    "hole_from_sft",
    "ies_even_witness",
    "inner_sft",
    "is_beta_number",
    "is_even_code",
    "map_step",
    "map_step_inverse",
    "oracle_language",
    "orbit_summary",
    "outer_sft",
    "parse_config",
    "res_even_witness",
    "run_analysis",
    "sample_rectangle_genericity",
    "sft_build",
    "sft_components",
    "sft_dot",
    "sft_entropy",
    "sft_equivalent",
    "sft_from_json",
    "sft_language",
    "survivor_regions",
    "survivor_x_projection",
    "system_from_json",
    "transitive_filtration",
    "verify_beta_res",
    "word",
    "word_fraction",
    "word_str",
    "word_value",
]
