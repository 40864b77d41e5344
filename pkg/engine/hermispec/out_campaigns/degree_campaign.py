"""
Degree Campaign for the computer-search replications.

This module implements the campaign over all connected mixed graphs of a
fixed order having a vertex of a given degree.
"""

from ..enumeration import connected_underlying_graphs
from ..mixed_graph import build_mixed_graph
from .base_campaign import OutCampaign


class DegreeOrderCampaign(OutCampaign):
    """Connected mixed graphs of one order with a vertex of the given degree."""

    def __init__(self, name, order, degree, description=None, claim=None):
        super().__init__(
            name=name,
            description=description or f"Connected mixed graphs on {order} vertices with a vertex of degree {degree}",
            claim=claim,
        )
        self.order = order
        self.degree = degree

    def underlying_graphs(self):
        """Edge lists of the qualifying underlying graphs."""
        graphs = []
        for edges in connected_underlying_graphs(self.order):
            degrees = [0] * self.order
            for u, v in edges:
                degrees[u] += 1
                degrees[v] += 1
            if self.degree in degrees:
                graphs.append(edges)
        return graphs

    def members(self):
        for index, edges in enumerate(self.underlying_graphs()):
            yield from self.classes_of(f"n{self.order}g{index}", build_mixed_graph(self.order, edges))
