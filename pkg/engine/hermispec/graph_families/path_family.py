"""
Path family P_n: vertices 0..n-1 joined in order by undirected edges.
"""

from ..mixed_graph import build_mixed_graph
from ..spectra import Spectrum
from .base_family import FamilyParameterError, GraphFamily


def path_edges(vertices):
    """Consecutive pairs of a vertex sequence."""
    vertices = list(vertices)
    return list(zip(vertices, vertices[1:]))


class PathFamily(GraphFamily):
    """Undirected paths; every mixed orientation of a path is switching equivalent to it."""

    def __init__(self):
        super().__init__(name="P", arity=1, description="path on vertices 0..n-1 in order")

    def validate(self, params):
        if params[0] < 1:
            raise FamilyParameterError(f"Path order must be at least 1, got {params[0]}")

    def build(self, params):
        (n,) = self.check_params(params)
        return build_mixed_graph(n, path_edges(range(n)))

    def closed_form(self, params):
        """Spec(P_n) = {2cos(k*pi/(n+1)) : k = 1..n}."""
        (n,) = self.check_params(params)
        return Spectrum.from_exact((k, n + 1) for k in range(1, n + 1))
