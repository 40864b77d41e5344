"""
Named-family Campaign for the computer-search replications.

This module implements the campaign over explicit family members built by
name, such as the Smith trees and the Type 1 cycles with a pendant vertex.
Only the named member is tested, not the other classes on its underlying
graph.
"""

from .base_campaign import OutCampaign


class NamedFamilyCampaign(OutCampaign):
    """Explicit (family, params) members."""

    def __init__(self, name, members, registry, description=None, claim=None):
        """
        Args:
            members: Iterable of (family name, params) pairs
            registry: FamilyRegistry used to build them
        """
        super().__init__(name=name, description=description, claim=claim)
        self.member_specs = [(family, tuple(params)) for family, params in members]
        self.registry = registry

    def members(self):
        for family, params in self.member_specs:
            yield self.registry.shorthand(family, params), self.registry.make_named(family, params)
