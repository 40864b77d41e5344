"""
Out Campaigns Package for the Hermitian spectral engine.

This package contains the campaigns replicating the computer-search claims:
every switching class of the listed underlying graphs has an eigenvalue
outside (-2, 2).
"""

from .base_campaign import OutCampaign
from .degree_campaign import DegreeOrderCampaign
from .theta_campaign import Theta33Campaign, ThetaCampaign
from .complete_campaign import CompleteCampaign
from .named_campaign import NamedFamilyCampaign

__all__ = [
    'OutCampaign',
    'DegreeOrderCampaign',
    'ThetaCampaign',
    'Theta33Campaign',
    'CompleteCampaign',
    'NamedFamilyCampaign',
]
