"""Published bounds and characterizations as executable checks."""

from .bounds import BoundError, BoundRow, closed_forms, family_sweep
from .checks import CATALOG, CHECKS_BY_ID, CheckDefinition, CheckResult, Profile, evaluate_check, replay_witness
from .products import PAIR_CHECKS, default_factors
from .reproductions import check_example_2_8, check_example_5_2, tree_reduction_gaps
from .runner import COVERAGE_MANIFEST, Report, family_report, product_sweep, registered_ids, run_suite

__all__ = [
    "BoundError",
    "BoundRow",
    "CATALOG",
    "CHECKS_BY_ID",
    "COVERAGE_MANIFEST",
    "CheckDefinition",
    "CheckResult",
    "PAIR_CHECKS",
    "Profile",
    "Report",
    "check_example_2_8",
    "check_example_5_2",
    "closed_forms",
    "default_factors",
    "evaluate_check",
    "family_report",
    "family_sweep",
    "product_sweep",
    "registered_ids",
    "replay_witness",
    "run_suite",
    "tree_reduction_gaps",
]
