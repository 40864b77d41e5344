"""
Admissible Graph Registry.

This module loads, validates and saves the data file recording the lettered
admissible graphs: their exact spectra (as 2cos(p*pi/q) pairs), the structural
filter that separates cospectral letters, and the graph reconstructed (or
derived by hand) for each letter. It also records the cycle-value patterns
fixing the E, Y1 and Y2 classes on theta_{3,3,r}.
"""

import copy
import json
import os
import threading

import networkx as nx

from .analysis_logger import analysis_logger
from .config import get_registry_path
from .graph_io import GraphParseError, graph_from_json, validate_document
from .mixed_graph import GaussianUnit
from .spectra import Spectrum

FILTERS = ("none", "requires_induced_c6", "forbids_induced_c6")


class RegistryError(LookupError):
    """Raised when the registry file is missing, invalid, or lacks a requested entry."""


def normalize_letter(name):
    """Accept "o", "(o)" or "O"."""
    letter = str(name).strip().strip("()").lower()
    if len(letter) != 1 or not letter.isalpha():
        raise RegistryError(f"Not a registry letter: {name!r}")
    return letter


def has_induced_cycle(g, length):
    """True when the underlying graph has a chordless cycle of the given length."""
    return any(len(cycle) == length for cycle in nx.chordless_cycles(g.to_networkx(), length_bound=length))


def satisfies_filter(g, structure_filter):
    """
    Check the structural filter separating cospectral letters.

    Raises:
        RegistryError: On an unknown filter name
    """
    if structure_filter not in FILTERS:
        raise RegistryError(f"Unknown structure filter {structure_filter!r}; expected one of {FILTERS}")
    if structure_filter == "none":
        return True
    found = has_induced_cycle(g, 6)
    return found if structure_filter == "requires_induced_c6" else not found


class AdmissibleRegistry:
    """Registry of lettered admissible graphs and theta-class patterns."""

    def __init__(self, path=None):
        """
        Load the registry.

        Args:
            path: Registry file (HERMISPEC_REGISTRY or the packaged file when omitted)

        Raises:
            RegistryError: If the file cannot be read or fails validation
        """
        self.path = get_registry_path(path)
        self._lock = threading.Lock()
        self.data = self._load(self.path)

    @staticmethod
    def _load(path):
        if not os.path.exists(path):
            raise RegistryError(f"Registry file not found: {path}")
        try:
            with open(path, "r") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise RegistryError(f"{path}:{e.lineno}:{e.colno}: {e.msg}")
        try:
            validate_document(data, "registry")
        except GraphParseError as e:
            raise RegistryError(f"Invalid registry {path}: {e}")
        return data

    def get_letters(self):
        """Sorted letter names."""
        return sorted(self.data["letters"])

    def _entry(self, letter):
        letter = normalize_letter(letter)
        entry = self.data["letters"].get(letter)
        if entry is None:
            raise RegistryError(f"Unknown registry letter ({letter})")
        return entry

    def has_letter(self, letter):
        try:
            self._entry(letter)
        except RegistryError:
            return False
        return True

    def spectrum(self, letter):
        """Exact-form spectrum of a letter."""
        return Spectrum.from_exact(tuple(pair) for pair in self._entry(letter)["spectrum"])

    def order(self, letter):
        return len(self._entry(letter)["spectrum"])

    def structure_filter(self, letter):
        return self._entry(letter)["filter"]

    def has_graph(self, letter):
        return self._entry(letter).get("graph") is not None

    def graph(self, letter):
        """
        Recorded graph of a letter.

        Raises:
            RegistryError: If the letter has not been reconstructed yet
        """
        entry = self._entry(letter)
        if entry.get("graph") is None:
            raise RegistryError(
                f"Graph ({normalize_letter(letter)}) has no recorded structure; "
                f"run `hermispec reconstruct {normalize_letter(letter)}` first")
        return graph_from_json(entry["graph"])

    def graph_letters(self):
        """Letters with a recorded graph."""
        return [letter for letter in self.get_letters() if self.has_graph(letter)]

    def set_graph(self, letter, g, source="reconstructed", matches=None):
        """Record the graph of a letter (in memory; call save() to persist)."""
        entry = self._entry(letter)
        with self._lock:
            entry["graph"] = g.to_json()
            entry["source"] = source
            entry["matches"] = matches
        analysis_logger.log_event(
            "registry",
            f"Recorded graph ({normalize_letter(letter)}) from {source}",
            {"subject": f"({normalize_letter(letter)})", "source": source, "matches": matches},
        )

    def theta_pattern(self, kind):
        """
        Cycle-value pattern (alpha, beta) of a theta_{3,3,r} class.

        Raises:
            RegistryError: If the class has no recorded pattern
        """
        pattern = self.data["theta_classes"].get(kind)
        if pattern is None:
            raise RegistryError(f"No pattern recorded for theta class {kind}")
        return GaussianUnit.from_label(pattern["alpha"]), GaussianUnit.from_label(pattern["beta"])

    def set_theta_pattern(self, kind, alpha, beta, source="reconstructed"):
        with self._lock:
            self.data["theta_classes"][kind] = {"alpha": alpha.label, "beta": beta.label, "source": source}
        analysis_logger.log_event(
            "registry",
            f"Recorded theta class {kind} pattern ({alpha}, {beta})",
            {"subject": kind, "alpha": alpha.label, "beta": beta.label, "source": source},
        )

    def to_json(self):
        with self._lock:
            return copy.deepcopy(self.data)

    def save(self, path=None):
        """
        Validate and write the registry with sorted keys.

        Returns:
            str: The path written
        """
        path = path or self.path
        data = self.to_json()
        try:
            validate_document(data, "registry")
        except GraphParseError as e:
            raise RegistryError(f"Refusing to write an invalid registry: {e}")
        with open(path, "w") as f:
            json.dump(data, f, indent=2, sort_keys=True)
            f.write("\n")
        return path
