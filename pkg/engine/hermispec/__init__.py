"""
Hermitian spectral engine for mixed graphs.

This package computes exact characteristic polynomials and spectra of mixed
graphs through their Hermitian adjacency matrices, canonicalizes them up to
switching, searches for cospectral mates and checks the known
spectral-determination claims.
"""

from .mixed_graph import MixedGraph, build_mixed_graph, hermitian_matrix, structure
from .switching import SwitchingFunction, apply_switching, switching_equivalent
from .charpoly import IntPolynomial, char_poly
from .spectra import Spectrum, closed_form, graph_spectrum
from .family_registry import default_registry, make_named
from .enumeration import SearchConstraints, enumerate_up_to_switching
from .mate_search import find_mates, is_dhs
from .reconstruction import reconstruct_admissible
from .identities import verify_family_identities
from .campaign_registry import replicate_out_campaign
from .verification_suite import run_verification

__all__ = [
    'MixedGraph',
    'build_mixed_graph',
    'hermitian_matrix',
    'structure',
    'SwitchingFunction',
    'apply_switching',
    'switching_equivalent',
    'IntPolynomial',
    'char_poly',
    'Spectrum',
    'closed_form',
    'graph_spectrum',
    'default_registry',
    'make_named',
    'SearchConstraints',
    'enumerate_up_to_switching',
    'find_mates',
    'is_dhs',
    'reconstruct_admissible',
    'verify_family_identities',
    'replicate_out_campaign',
    'run_verification',
]
