"""Exact p-block data for finite permutation groups, at desk scale.

Compute character tables with exact cyclotomic arithmetic, decompose them
into p-blocks, reconstruct Brauer trees of cyclic blocks together with
their unitriangular decomposition matrices, enumerate weights, and verify
the counting-level Alperin-McKay / Alperin-weight statements per block.
"""

from .blocks import (
    block_partition,
    brauer_induced_block,
    central_character,
    defect_group,
    dominated_block,
    heights_and_height_zero,
)
from .chartab import CharacterTable, character_table, class_fusion, p_regular_classes, restrict
from .cyclicblocks import (
    analyze_cyclic_block,
    brauer_tree,
    derived_brauer_characters,
    is_nilpotent_cyclic,
    unitriangular_labeling,
)
from .cyclo import CycNum, FiniteFieldElem, galois_apply, is_p_rational_value_set, reduce_mod_p
from .lietype import LieTypeCase, cross_check_small_instance, cyclic_sylow_criterion
from .permcore import (
    PermGroup,
    Permutation,
    SubgroupHandle,
    conjugacy_classes,
    coset_action,
    group_order,
    normalizer,
    radical_p_subgroups,
    sylow_subgroup,
)
from .verify import am_check, equivariance_spot_check, full_group_report, in_refinement_check
from .weights import baw_count_check, dz_characters, weights_of_block

__all__ = [
    "CharacterTable",
    "CycNum",
    "FiniteFieldElem",
    "LieTypeCase",
    "PermGroup",
    "Permutation",
    "SubgroupHandle",
    "am_check",
    "analyze_cyclic_block",
    "baw_count_check",
    "block_partition",
    "brauer_induced_block",
    "brauer_tree",
    "central_character",
    "character_table",
    "class_fusion",
    "conjugacy_classes",
    "coset_action",
    "cross_check_small_instance",
    "cyclic_sylow_criterion",
    "defect_group",
    "derived_brauer_characters",
    "dominated_block",
    "dz_characters",
    "equivariance_spot_check",
    "full_group_report",
    "galois_apply",
    "group_order",
    "heights_and_height_zero",
    "in_refinement_check",
    "is_nilpotent_cyclic",
    "is_p_rational_value_set",
    "normalizer",
    "p_regular_classes",
    "radical_p_subgroups",
    "reduce_mod_p",
    "restrict",
    "sylow_subgroup",
    "unitriangular_labeling",
    "weights_of_block",
]

__version__ = "0.1.0"
