"""Instance families: skewed combs, random trees and the reduction gadgets."""
from .combs import CombLevel, SkewedComb, gen_skewed_comb, validate_skewed_comb
from .gadgets import GadgetFragment, GadgetSpec, build_gadget
from .random_trees import gen_caterpillar, gen_tree_bounded_pw
from .reduction import (
    CensusEntry,
    ReductionInstance,
    ReductionPlan,
    ReductionSizes,
    census,
    demo_plan,
    honest_plan,
    materialize_reduction,
    reduction_sizes,
    validate_reduction,
)

__all__ = [
    "CensusEntry", "CombLevel", "GadgetFragment", "GadgetSpec", "ReductionInstance",
    "ReductionPlan", "ReductionSizes", "SkewedComb", "build_gadget", "census", "demo_plan",
    "gen_caterpillar", "gen_skewed_comb", "gen_tree_bounded_pw", "honest_plan",
    "materialize_reduction", "reduction_sizes", "validate_reduction", "validate_skewed_comb",
]
