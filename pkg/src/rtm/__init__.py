"""Rooted tree maps on Q<x,y>, the Connes-Kreimer Hopf algebra of rooted forests,
and multiple zeta value relations.

The public surface is re-exported here; see the submodules for details.
"""

from rtm.errors import DomainError, ForestParseError, RtmError
from rtm.forest import (
    EMPTY,
    POINT,
    Forest,
    ForestSum,
    TensorSum,
    Tree,
    b_plus,
    canonical_encode,
    enumerate_forests,
    forest_sum_product,
    parse_forest,
    remove_root,
)
from rtm.hopf import antipode, coproduct, counit, dynkin, grading, ladder, ladder_product
from rtm.words import (
    WordSum,
    concat,
    dual,
    is_admissible,
    parse_word_sum,
    r_y_inverse,
    right_mult,
    z_decode,
    z_encode,
)
from rtm.tree_maps import apply, apply_letter, partial_as_forest_sum, partial_n

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "POINT",
    "DomainError",
    "Forest",
    "ForestParseError",
    "ForestSum",
    "RtmError",
    "TensorSum",
    "Tree",
    "WordSum",
    "antipode",
    "apply",
    "apply_letter",
    "b_plus",
    "canonical_encode",
    "concat",
    "coproduct",
    "counit",
    "dual",
    "dynkin",
    "enumerate_forests",
    "forest_sum_product",
    "grading",
    "is_admissible",
    "ladder",
    "ladder_product",
    "parse_forest",
    "parse_word_sum",
    "partial_as_forest_sum",
    "partial_n",
    "r_y_inverse",
    "remove_root",
    "right_mult",
    "z_decode",
    "z_encode",
]
