"""
Complete graphs K_n on 0..n-1, all edges undirected.
"""

from itertools import combinations

from ..mixed_graph import build_mixed_graph
from .base_family import FamilyParameterError, GraphFamily


class CompleteFamily(GraphFamily):

    def __init__(self):
        super().__init__(name="K", arity=1, description="complete graph on 0..n-1")

    def validate(self, params):
        if params[0] < 1:
            raise FamilyParameterError(f"K_n needs n >= 1, got {params[0]}")

    def build(self, params):
        (n,) = self.check_params(params)
        return build_mixed_graph(n, combinations(range(n), 2))
