"""basekit: base sizes and regular orbits of desk-scale permutation actions.

Everything is exact: groups are fully enumerated, tuple scans are exhaustive
with early-exit stabilizer intersection, and the wreath-product lifting is
certified structurally so it survives groups far beyond enumeration range.
"""

from .catalog import catalog, dump_group_text, load_group_text
from .cosets import CosetSpace
from .engine import (
    RegularOrbitReport,
    base_by_intersections,
    base_size,
    burnside_orbit_count,
    is_regular_tuple,
    lower_bound,
    reg_count,
    reg_count_direct,
    reg_floor_check,
    same_orbit,
)
from .errors import BasekitError, BudgetError, HypothesisError, ParseError
from .perm import GeneratedGroup, Permutation, compose, format_cycles, parse_cycles
from .sample import SampleRun, random_base_search
from .scan import backend_name
from .structure import (
    DerivedSeriesReport,
    SubgroupHandle,
    core,
    derived_series,
    is_maximal_solvable,
    is_solvable,
    normal_closure,
    normal_subgroups,
    normalizer,
    solvable_radical,
)
from .wreath import (
    PartitionColoring,
    WreathSpace,
    asymmetric_partition,
    distinct_regular_lifts,
    lift_regular_point,
    wreath_product,
)

__version__ = "0.1.0"

__all__ = [
    "BasekitError",
    "BudgetError",
    "CosetSpace",
    "DerivedSeriesReport",
    "GeneratedGroup",
    "HypothesisError",
    "ParseError",
    "PartitionColoring",
    "Permutation",
    "RegularOrbitReport",
    "SampleRun",
    "SubgroupHandle",
    "WreathSpace",
    "asymmetric_partition",
    "backend_name",
    "base_by_intersections",
    "base_size",
    "burnside_orbit_count",
    "catalog",
    "compose",
    "core",
    "derived_series",
    "distinct_regular_lifts",
    "dump_group_text",
    "format_cycles",
    "is_maximal_solvable",
    "is_regular_tuple",
    "is_solvable",
    "lift_regular_point",
    "load_group_text",
    "lower_bound",
    "normal_closure",
    "normal_subgroups",
    "normalizer",
    "parse_cycles",
    "random_base_search",
    "reg_count",
    "reg_count_direct",
    "reg_floor_check",
    "same_orbit",
    "solvable_radical",
    "wreath_product",
]
