"""
Graph Families Package for the Hermitian spectral engine.

This package contains the named, parametrized families of mixed graphs:
paths, typed cycles, pendant-path extensions of C2_4, trees, theta graphs
and their orientation classes, complete graphs and the lettered admissible
graphs.
"""

from .base_family import FamilyParameterError, GraphFamily
from .path_family import PathFamily
from .cycle_family import CycleFamily, CyclePendantFamily, signed_cycle_minus
from .pendant_family import DoublePendantCycleFamily, PendantCycleFamily
from .tree_family import AffineDTreeFamily, DTreeFamily, StarFamily, StarLikeTreeFamily
from .theta_family import THETA_CLASS_KINDS, ThetaClassFamily, ThetaFamily, theta33_gains, theta_graph
from .complete_family import CompleteFamily
from .admissible_family import AdmissibleLetterFamily

__all__ = [
    'FamilyParameterError',
    'GraphFamily',
    'PathFamily',
    'CycleFamily',
    'CyclePendantFamily',
    'signed_cycle_minus',
    'PendantCycleFamily',
    'DoublePendantCycleFamily',
    'DTreeFamily',
    'StarLikeTreeFamily',
    'AffineDTreeFamily',
    'StarFamily',
    'THETA_CLASS_KINDS',
    'ThetaFamily',
    'ThetaClassFamily',
    'theta33_gains',
    'theta_graph',
    'CompleteFamily',
    'AdmissibleLetterFamily',
]
