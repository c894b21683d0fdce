"""Self-duality testing for positive DNFs / intersecting Sperner hypergraphs."""

from .core import (
    MAX_VERTICES,
    DualVerdict,
    Hypergraph,
    ParseError,
    PreconditionError,
    SelfDualVerdict,
    SizeLimitError,
    complement,
    connected_components,
    evaluate,
    find_containment_pair,
    find_disjoint_pair,
    is_intersecting,
    is_sperner,
    iter_submasks,
    mask_from_vertices,
    neighbourhood,
    occupied_vertices,
    remove_vertices,
    validate_pidnf,
    vertices_from_mask,
    weight,
)
from .counting import adjusted_zero_count, count_hit_subset, count_hitting_sets, selfdual_by_count
from .search import enumerate_fixed_weight, search_witness
from .brute import (
    algorithm_dual,
    brute_count_hitting_sets,
    brute_dualize,
    brute_selfdual,
    zero_count_by_evaluation,
)
from .fk import fk_check_dual, fk_selfdual, min_reduce
from .generator import GenConfig, binomial_family, default_trials, generate, splitmix64
from .instances import load_instance, parse_instance, save_instance, serialize_instance

__version__ = "0.1.0"
