"""
Campaign Registry for the computer-search replications.

This module implements the registry that builds the out campaigns from the
YAML definitions file and runs them by name.
"""

import yaml

from .config import CAMPAIGN_DEFINITIONS_PATH
from .out_campaigns import (
    CompleteCampaign,
    DegreeOrderCampaign,
    NamedFamilyCampaign,
    Theta33Campaign,
    ThetaCampaign,
)


class CampaignDefinitionError(ValueError):
    """Raised when a campaign definition is malformed."""


class CampaignRegistry:
    """Registry for managing out campaigns."""

    def __init__(self, definitions_path=None, family_registry=None):
        """
        Initialize the registry from the campaign definitions.

        Args:
            definitions_path: YAML file (the packaged out_campaigns.yaml when omitted)
            family_registry: FamilyRegistry used to build named graphs
        """
        if family_registry is None:
            from .family_registry import default_registry

            family_registry = default_registry()
        self.family_registry = family_registry
        self.definitions_path = definitions_path or CAMPAIGN_DEFINITIONS_PATH
        self.campaigns = {}

        for name, definition in self._load(self.definitions_path).items():
            self.register_campaign(self._build(name, definition))

    @staticmethod
    def _load(path):
        with open(path, "r") as f:
            data = yaml.safe_load(f) or {}
        campaigns = data.get("campaigns")
        if not isinstance(campaigns, dict):
            raise CampaignDefinitionError(f"{path}: expected a 'campaigns' mapping")
        return campaigns

    def _build(self, name, definition):
        kind = definition.get("kind")
        common = {"description": definition.get("description"), "claim": definition.get("claim")}
        try:
            if kind == "degree":
                campaign = DegreeOrderCampaign(name, int(definition["order"]), int(definition["degree"]), **common)
            elif kind == "theta":
                campaign = ThetaCampaign(name, definition["triples"], **common)
            elif kind == "theta33":
                campaign = Theta33Campaign(name, definition["r"], self.family_registry, **common)
            elif kind == "complete":
                campaign = CompleteCampaign(name, int(definition["order"]), self.family_registry, **common)
            elif kind == "named":
                members = [
                    (entry["family"], params)
                    for entry in definition["members"]
                    for params in entry["params"]
                ]
                campaign = NamedFamilyCampaign(name, members, self.family_registry, **common)
            else:
                raise CampaignDefinitionError(f"Campaign {name}: unknown kind {kind!r}")
        except KeyError as e:
            raise CampaignDefinitionError(f"Campaign {name}: missing field {e.args[0]!r}")
        campaign.add_note(definition.get("note"))
        return campaign

    def register_campaign(self, campaign):
        """
        Register an out campaign.

        Args:
            campaign: OutCampaign instance

        Returns:
            bool: True if registration was successful
        """
        if campaign.name in self.campaigns:
            return False

        self.campaigns[campaign.name] = campaign
        return True

    def get_campaign(self, name):
        """
        Get an out campaign by name.

        Returns:
            OutCampaign: The requested campaign or None if not found
        """
        return self.campaigns.get(name)

    def get_available_campaigns(self):
        """
        Get a list of available campaigns.

        Returns:
            list: Campaign names in definition order
        """
        return list(self.campaigns.keys())

    def run_campaign(self, name):
        """
        Run one campaign.

        Raises:
            ValueError: If name is not found
        """
        campaign = self.get_campaign(name)
        if not campaign:
            raise ValueError(f"Unknown out campaign: {name}")
        return campaign.run()

    def run_all(self):
        return [self.run_campaign(name) for name in self.get_available_campaigns()]


def replicate_out_campaign(name, registry=None):
    """
    Run a named out campaign.

    Args:
        name: Campaign name (e.g. "deg4-order5", "theta", "K4-based")
        registry: CampaignRegistry (built from the packaged definitions when omitted)

    Returns:
        dict: Campaign report
    """
    registry = registry or CampaignRegistry()
    return registry.run_campaign(name)
