"""
Theta Campaigns for the computer-search replications.

This module implements the campaigns over mixed graphs whose underlying
graph is a theta graph: a list of theta(p, q, r) triples, and the family
theta_(3,3,r) together with the Y1 and Y2 evaluations at 2.
"""

from ..charpoly import eval_at
from ..graph_families import theta_graph
from .base_campaign import OutCampaign


class ThetaCampaign(OutCampaign):
    """Every switching class on each listed theta(p, q, r)."""

    def __init__(self, name, triples, description=None, claim=None):
        super().__init__(name=name, description=description or "Mixed theta graphs", claim=claim)
        self.triples = [tuple(int(x) for x in triple) for triple in triples]

    def members(self):
        for p, q, r in self.triples:
            yield from self.classes_of(f"theta:{p},{q},{r}", theta_graph(p, q, r))


class Theta33Campaign(ThetaCampaign):
    """
    theta_(3,3,r) for a range of r.

    Y1 and Y2 are out because phi(Y1, 2) = 6 - 2r <= 0 and phi(Y2, 2) = 0;
    both evaluations are reported as checks.
    """

    def __init__(self, name, r_values, registry, description=None, claim=None):
        self.r_values = [int(r) for r in r_values]
        super().__init__(
            name=name,
            triples=[(3, 3, r) for r in self.r_values],
            description=description or "Mixed graphs on theta_(3,3,r)",
            claim=claim,
        )
        self.registry = registry

    def extra_checks(self):
        checks = []
        for r in self.r_values:
            y1 = eval_at(self.registry.polynomial("Y1", (r,)), 2)
            y2 = eval_at(self.registry.polynomial("Y2", (r,)), 2)
            checks.append({"check": f"phi(Y1:{r}, 2) = {6 - 2 * r}", "value": int(y1), "passed": y1 == 6 - 2 * r})
            checks.append({"check": f"phi(Y2:{r}, 2) = 0", "value": int(y2), "passed": y2 == 0})
        return checks
