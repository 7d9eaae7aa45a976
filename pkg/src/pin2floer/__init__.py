"""
Pin(2)-equivariant Seiberg-Witten Floer homology of negative Seifert
homology spheres, computed in closed form from Heegaard Floer data and
checked against chain-level Borel homology.
"""

from .modules import GradedModule, Tower, pretty, rank_at, restrict_to_v, shift
from .pipeline import (
    HFDecomposition,
    compare,
    compute_invariants,
    compute_swfhg,
    connected_homology,
    extract_parameters,
    forward_s1,
    local_class,
    seifert_consistency,
    validate,
)
from .seifert import analyze, analyze_brieskorn, brieskorn_normalize, hf_from_tau, tau_function

__version__ = "0.1.0"
