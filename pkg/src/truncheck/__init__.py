"""truncheck: feasibility preservation analysis for truncated retrieval.

Models a retrieval pipeline as a depth-indexed family of candidate evidence
sets and a query as a finite constraint-satisfaction instance over the
evidence universe. Decides whether feasibility in the limit survives
truncation to finite depth, per query and uniformly over query classes, and
produces witness certificates plus machine-readable reports.
"""

__version__ = "0.1.0"

from .certificates import (
    CertificateAssignment,
    InfeasibleInLimit,
    NotAllLimitFeasible,
    UniformReport,
    WitnessCertificate,
    basis,
    check_limit_completeness,
    check_soundness,
    extract_assignment,
    extract_certificate,
    is_finitely_generated,
    uniform_depth,
)
from .feasibility import (
    Diagnosis,
    FeasibilityOutcome,
    NrReport,
    ProductTooLarge,
    SlotIndexOutOfRange,
    brute_force_feasible,
    check_nr,
    diagnose,
    enumerate_witnesses,
    is_feasible_at,
    is_feasible_in,
    is_feasible_limit,
    min_feasible_depth,
    slot_domain,
    witness_based_min_depth,
)
from .fixtures import (
    ParamsOutOfRange,
    RandomScenarioParams,
    fixture_prop1,
    fixture_prop2,
    fixture_prop3,
    random_scenario,
)
from .model import (
    Query,
    QueryClass,
    ScenarioValidationError,
    Slot,
    ValidatedScenario,
    Witness,
    validate_scenario,
)
from .scenario_io import (
    ScenarioParseError,
    ScenarioSchemaError,
    load_scenario,
    parse_scenario,
    read_scenario,
    serialize_scenario,
    write_scenario,
)
from .schedule import (
    CumulativeSchedule,
    ExplicitSchedule,
    MonotonicityReport,
    Schedule,
    Tail,
    domain_at,
    effective_horizon,
    first_depth,
    is_monotone,
    limit_domain,
    monotone_closure,
)
