"""
Base Graph Family for the named-graph builders.

This module defines the base class for every parametrized family of mixed
graphs the engine can build by name (paths, typed cycles, G_t, theta graphs,
trees, admissible letters).
"""

from ..charpoly import char_poly
from ..spectra import ClosedFormError


class FamilyParameterError(ValueError):
    """Raised when family parameters are missing or out of range."""


class GraphFamily:
    """Base class for all graph families."""

    def __init__(self, name, arity, description=None):
        """
        Initialize a graph family.

        Args:
            name: Shorthand name used on the command line (e.g. "P", "C1", "Gttm")
            arity: Number of integer parameters the family takes
            description: Human-readable description of the labelled construction
        """
        self.name = name
        self.arity = arity
        self.description = description or ""

    def check_params(self, params):
        """
        Validate and normalize parameters.

        Args:
            params: Sequence of integers

        Returns:
            tuple: The parameters as a tuple of ints

        Raises:
            FamilyParameterError: If the count is wrong or a value is out of range
        """
        params = tuple(params)
        if len(params) != self.arity:
            raise FamilyParameterError(
                f"Family {self.name} takes {self.arity} parameter(s), got {len(params)}")
        try:
            params = tuple(int(p) for p in params)
        except (TypeError, ValueError):
            raise FamilyParameterError(f"Family {self.name} parameters must be integers, got {params}")
        self.validate(params)
        return params

    def validate(self, params):
        """Range checks; subclasses raise FamilyParameterError on violations."""

    def build(self, params):
        """
        Build the labelled family member.
        Must be implemented by subclasses.

        Args:
            params: Family parameters

        Returns:
            MixedGraph: The family member
        """
        raise NotImplementedError("Subclasses must implement build()")

    def closed_form(self, params):
        """
        Closed-form spectrum of a family member.

        Families without a 2cos(p*pi/q) formula raise ClosedFormError.

        Returns:
            Spectrum: Exact-form spectrum
        """
        raise ClosedFormError(f"Family {self.name} has no closed-form spectrum")

    def polynomial(self, params):
        """Exact characteristic polynomial, from the closed form when one exists."""
        params = self.check_params(params)
        try:
            return self.closed_form(params).exact_polynomial()
        except ClosedFormError:
            return char_poly(self.build(params))

    def shorthand(self, params):
        """Command-line name of a member, e.g. "C1:12"."""
        if not params:
            return self.name
        return f"{self.name}:{','.join(str(p) for p in params)}"
