"""
Complete-graph Campaign: every switching class on an underlying K_n.
"""

from .base_campaign import OutCampaign


class CompleteCampaign(OutCampaign):

    def __init__(self, name, order, registry, description=None, claim=None):
        super().__init__(name=name, description=description or f"Mixed graphs on K{order}", claim=claim)
        self.order = order
        self.registry = registry

    def members(self):
        yield from self.classes_of(f"K:{self.order}", self.registry.make_named("K", (self.order,)))
