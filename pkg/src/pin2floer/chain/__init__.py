"""Chain-level model: the group algebra of G, G-chain complexes and Borel homology."""

from .borel import G, S1, abc_profile, borel_dims, resolution_of_F
from .complex import GChainComplex, build_standard, is_j_split, smash, suspend
