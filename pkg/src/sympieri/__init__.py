"""Tensor products and branching rules for symplectic group representations."""

from .branching import branch, doubly_interlaces, enumerate_down, enumerate_up, hom_dim, rho_profile
from .characters import decompose, dim, restrict_decompose, sp_character, tensor_decompose
from .decomposition import Decomposition
from .diagrams import RectBound, SkewShape, conjugate, fits, iota, is_vertical_strip, j_inverse, r_involution, skew
from .kostant import kostant_partition, lepowsky_mult
from .lr import lr_coeff
from .pieri import multi_fundamental_mult, skew_pieri
from .reciprocity import verify_cross, verify_duality, verify_main_theorem
from .sl2 import cg_multi, cg_multiplicity, cg_pair
from .stable import pieri_vertical_strip, stable_tensor

__all__ = [
    "Decomposition", "RectBound", "SkewShape",
    "branch", "cg_multi", "cg_multiplicity", "cg_pair", "conjugate", "decompose", "dim",
    "doubly_interlaces", "enumerate_down", "enumerate_up", "fits", "hom_dim", "iota",
    "is_vertical_strip", "j_inverse", "kostant_partition", "lepowsky_mult", "lr_coeff",
    "multi_fundamental_mult", "pieri_vertical_strip", "r_involution", "restrict_decompose",
    "rho_profile", "skew", "skew_pieri", "sp_character", "stable_tensor", "tensor_decompose",
    "verify_cross", "verify_duality", "verify_main_theorem",
]
