"""Exact maximum average degree, Hakimi orientations, and the golden-ratio
degree-product inequality with its extremal tree family."""

__version__ = "0.1.0"

from .density import DensityWitness, brute_force_density, mad, max_density_exact
from .extremal import (
    ExtremalParams,
    analytic_report,
    blow_up,
    build_tree,
    ceil_power,
    choose_params,
    epsilon_bound,
    level_profile,
)
from .flow import (
    FlowNetwork,
    Orientation,
    max_flow,
    orient_bounded_outdegree,
    pseudoarboricity,
    verify_orientation,
)
from .golden import GoldenInt, geometric_sum_check, golden_constants, golden_pow
from .graph import Graph, degree_sequence, from_edge_list, induced_subgraph, to_edge_list
from .inequality import (
    arc_certificate,
    check_cubed_bound,
    check_main,
    degree_power_sum,
    edge_product_sum,
    weighted_amgm,
)
