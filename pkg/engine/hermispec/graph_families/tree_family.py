"""
Tree families: D_n, star-like trees T(a, b, c), the affine trees D~_n and stars.

Every mixed forest is switching equivalent to its underlying forest, so trees
are built undirected.
"""

from ..mixed_graph import build_mixed_graph
from ..spectra import Spectrum
from .base_family import FamilyParameterError, GraphFamily
from .path_family import path_edges


class DTreeFamily(GraphFamily):
    """D_n: the path 0..n-2 plus leaf n-1 attached to vertex 1."""

    def __init__(self):
        super().__init__(name="D", arity=1, description="path 0..n-2 with leaf n-1 on vertex 1")

    def validate(self, params):
        if params[0] < 3:
            raise FamilyParameterError(f"D_n needs n >= 3, got {params[0]}")

    def build(self, params):
        (n,) = self.check_params(params)
        return build_mixed_graph(n, path_edges(range(n - 1)) + [(1, n - 1)])

    def closed_form(self, params):
        """{0} plus {2cos((2k+1)pi/(2n-2)) : k = 0..n-2}."""
        (n,) = self.check_params(params)
        return Spectrum.from_exact([(1, 2)] + [(2 * k + 1, 2 * n - 2) for k in range(n - 1)])


class StarLikeTreeFamily(GraphFamily):
    """
    T(a, b, c): center 0 with three arms of a, b and c vertices.

    Arm vertices are numbered consecutively outward, first arm first.
    """

    def __init__(self):
        super().__init__(name="T", arity=3, description="center 0 with arms of lengths a, b, c")

    def validate(self, params):
        if min(params) < 1:
            raise FamilyParameterError(f"T(a,b,c) arms must have at least one vertex, got {params}")

    def build(self, params):
        arms = self.check_params(params)
        edges, next_vertex = [], 1
        for length in arms:
            arm = list(range(next_vertex, next_vertex + length))
            edges += path_edges([0] + arm)
            next_vertex += length
        return build_mixed_graph(next_vertex, edges)


class AffineDTreeFamily(GraphFamily):
    """D~_n on n+1 vertices: path 0..n-4 with two leaves at each end (K_1,4 for n = 4)."""

    def __init__(self):
        super().__init__(name="Dt", arity=1, description="path 0..n-4 plus two leaves on each end vertex")

    def validate(self, params):
        if params[0] < 4:
            raise FamilyParameterError(f"D~_n needs n >= 4, got {params[0]}")

    def build(self, params):
        (n,) = self.check_params(params)
        last = n - 4
        edges = path_edges(range(last + 1))
        edges += [(0, last + 1), (0, last + 2), (last, last + 3), (last, last + 4)]
        return build_mixed_graph(n + 1, edges)


class StarFamily(GraphFamily):
    """K_1,k: center 0 and leaves 1..k."""

    def __init__(self):
        super().__init__(name="S", arity=1, description="star with center 0 and leaves 1..k")

    def validate(self, params):
        if params[0] < 1:
            raise FamilyParameterError(f"Star needs at least one leaf, got {params[0]}")

    def build(self, params):
        (k,) = self.check_params(params)
        return build_mixed_graph(k + 1, [(0, v) for v in range(1, k + 1)])
