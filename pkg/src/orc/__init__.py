"""Ollivier-Ricci curvature of graph edges via exact discrete optimal
transport, with the community-structured graph families, curvature-sign
certificates, and Monte-Carlo harnesses built on top of it."""

from .bounds import (
    GUARANTEED,
    NOT_GUARANTEED,
    Threshold,
    bound_holds,
    min_community_bound,
    quadratic_holds,
    threshold,
)
from .curvature import (
    CurvatureReport,
    EdgeCurvature,
    all_curvatures,
    edge_curvature,
    lazy_measure,
)
from .errors import (
    GraphFormatError,
    InfiniteDistanceError,
    InvalidMeasureError,
    InvalidSizeError,
    IsolatedVertexError,
    NoInterEdgesError,
    OracleLimitError,
    PartitionContradictionError,
    PartitionMismatchError,
    PlanInfeasibleError,
    PotentialDomainError,
)
from .experiments import (
    SweepRow,
    TrialRecord,
    distribution_csv,
    proportion_nonpositive,
    run_distribution,
    run_sweep,
    save_distribution_svg,
    save_sweep_svg,
    sweep_csv,
)
from .families import (
    SplitMix64,
    TwoCommunitySpec,
    complete_community,
    dumbbell,
    mix_seed,
    prism,
    random_two_community,
    sample_without_replacement,
    zero_curvature_config,
)
from .graphs import (
    CommunityPartition,
    EdgeClass,
    Graph,
    bfs_distances,
    classify_edges,
    load_graph,
    save_graph,
)
from .modes import DEFAULT_EPS, EXACT, FLOAT, Scalar, check_alpha, parse_fraction
from .transport import (
    DiscreteMeasure,
    TransferencePlan,
    TransportSolution,
    dual_value,
    plan_cost,
    verify_lipschitz,
    w1,
    w1_oracle,
)
from .witness import (
    POTENTIAL_LEVELS,
    ProofPartition,
    WitnessReport,
    build_partition,
    explicit_plan_prism,
    explicit_plan_zero_config,
    relay_characterizations,
    table_potential,
    witness_upper_bound,
)

__version__ = "0.1.0"
