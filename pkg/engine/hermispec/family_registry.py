"""
Family Registry for the named-graph builders.

This module implements the registry that owns every graph family and answers
lookups by shorthand name, so that command-line arguments, identity checks
and guided searches build graphs the same way.
"""

import threading

from .admissible_registry import AdmissibleRegistry
from .graph_families import (
    THETA_CLASS_KINDS,
    AdmissibleLetterFamily,
    AffineDTreeFamily,
    CompleteFamily,
    CycleFamily,
    CyclePendantFamily,
    DoublePendantCycleFamily,
    DTreeFamily,
    PathFamily,
    PendantCycleFamily,
    StarFamily,
    StarLikeTreeFamily,
    ThetaClassFamily,
    ThetaFamily,
)


class UnknownFamilyError(KeyError):
    """Raised when a family name is not registered."""

    def __str__(self):
        return str(self.args[0]) if self.args else "Unknown family"


class FamilyRegistry:
    """Registry for managing graph families by shorthand name."""

    def __init__(self, admissible=None):
        """
        Initialize the registry with the default families.

        Args:
            admissible: AdmissibleRegistry backing the lettered graphs and theta classes
        """
        self.admissible = admissible or AdmissibleRegistry()
        self.families = {}

        self.register_family(PathFamily())
        for tag in (0, 1, 2):
            self.register_family(CycleFamily(tag))
        self.register_family(CyclePendantFamily())
        self.register_family(PendantCycleFamily())
        self.register_family(DoublePendantCycleFamily())
        self.register_family(DTreeFamily())
        self.register_family(StarLikeTreeFamily())
        self.register_family(AffineDTreeFamily())
        self.register_family(StarFamily())
        self.register_family(CompleteFamily())
        self.register_family(ThetaFamily())
        for kind in THETA_CLASS_KINDS:
            self.register_family(ThetaClassFamily(kind, self.admissible))
        for letter in self.admissible.get_letters():
            self.register_family(AdmissibleLetterFamily(letter, self.admissible))

    def register_family(self, family):
        """
        Register a graph family.

        Args:
            family: GraphFamily instance

        Returns:
            bool: True if registration was successful
        """
        if family.name in self.families:
            return False

        self.families[family.name] = family
        return True

    def get_family(self, name):
        """
        Get a graph family by name.

        Args:
            name: Shorthand name; letters may be given as "o" or "(o)"

        Returns:
            GraphFamily: The requested family or None if not found
        """
        name = str(name).strip()
        if name.startswith("(") and name.endswith(")"):
            name = name[1:-1]
        return self.families.get(name)

    def get_available_families(self):
        """
        Get a list of available family names.

        Returns:
            list: Family names in registration order
        """
        return list(self.families.keys())

    def _require(self, name):
        family = self.get_family(name)
        if not family:
            raise UnknownFamilyError(f"Unknown graph family: {name}")
        return family

    def make_named(self, name, params=()):
        """
        Build a named family member.

        Raises:
            UnknownFamilyError: If name is not registered
            FamilyParameterError: If the parameters are out of range
        """
        return self._require(name).build(tuple(params))

    def closed_form(self, name, params=()):
        """Closed-form spectrum of a named family member."""
        family = self._require(name)
        return family.closed_form(family.check_params(params))

    def polynomial(self, name, params=()):
        """Exact characteristic polynomial of a named family member."""
        return self._require(name).polynomial(tuple(params))

    def shorthand(self, name, params=()):
        return self._require(name).shorthand(tuple(params))

    def letter_families(self):
        """Lettered admissible families, sorted by letter."""
        return [f for f in self.families.values() if isinstance(f, AdmissibleLetterFamily)]


_default_lock = threading.Lock()
_default_registry = None


def default_registry():
    """Shared registry over the configured admissible registry file."""
    global _default_registry
    with _default_lock:
        if _default_registry is None:
            _default_registry = FamilyRegistry()
        return _default_registry


def set_default_registry(path=None):
    """Rebuild the shared registry, e.g. after --registry or a reconstruction run."""
    global _default_registry
    registry = FamilyRegistry(AdmissibleRegistry(path))
    with _default_lock:
        _default_registry = registry
    return registry


def make_named(name, params=()):
    """Build a named family member from the shared registry."""
    return default_registry().make_named(name, params)
