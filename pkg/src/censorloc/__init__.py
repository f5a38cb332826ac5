"""Target localization from censored, noise-free binary detectors."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    CensorLocError,
    InvalidConfig,
    InvalidInput,
    InvalidObservation,
    OracleResolutionError,
)
from .geometry import (  # noqa: E402
    Circle,
    ConvexPolygon,
    Point,
    bounding_rectangle_center,
    convex_hull,
    min_enclosing_circle,
    polygon_area_centroid,
    steiner_center,
)
from .region import (  # noqa: E402
    ConvexArcRegion,
    RegionKind,
    intersect_disks,
    max_distance_to,
    region_area,
    region_centroid,
    region_contains,
)
from .stats import (  # noqa: E402
    LikelihoodParams,
    MssResult,
    Observation,
    completeness_witness,
    hull_corner_statistic,
    log_likelihood,
    minimal_sufficient_statistic,
    near_points_contains,
)
from .estimators import Estimate, EstimatorId, estimate, estimate_cm, estimate_slt  # noqa: E402
from .simulation import ScenarioConfig, counterexample_report, run_sweep, run_trial  # noqa: E402
