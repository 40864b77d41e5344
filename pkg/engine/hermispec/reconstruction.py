"""
Reconstruction of graphs known only by their spectra.

The lettered admissible graphs, the trees D_n and the orientation classes
E, Y1 and Y2 on theta_{3,3,r} are fixed by exact characteristic polynomials.
This module searches the switching classes of the right order and size for
those polynomials and records the winners in the admissible registry.
"""

import time
from itertools import product as cartesian

from .admissible_registry import RegistryError, normalize_letter, satisfies_filter
from .analysis_logger import analysis_logger
from .charpoly import IntPolynomial, char_poly
from .enumeration import connected_classes, same_class
from .graph_families import THETA_CLASS_KINDS, theta33_gains
from .mixed_graph import UNITS
from .spectra import Spectrum
from .switching import realize_gains

# Every eigenvalue of an admissible graph lies in (-2, 2), so Delta <= rho^2 < 4
ADMISSIBLE_MAX_DEGREE = 3


class ReconstructionError(LookupError):
    """Raised when no graph matches a registry fingerprint."""


def _registry(registry):
    if registry is not None:
        return registry
    from .family_registry import default_registry

    return default_registry()


def _fingerprint_polynomial(fingerprint):
    if isinstance(fingerprint, IntPolynomial):
        return fingerprint
    if isinstance(fingerprint, Spectrum):
        return fingerprint.exact_polynomial()
    raise TypeError(f"Fingerprint must be a Spectrum or IntPolynomial, got {type(fingerprint).__name__}")


def reconstruct_admissible(name, fingerprint=None, order=None, size=None, structure_filter=None, registry=None):
    """
    Find every connected switching class matching a letter's spectrum.

    Args:
        name: Registry letter, "o" or "(o)"
        fingerprint: Spectrum or IntPolynomial (the registry spectrum when omitted)
        order: Vertex count (the polynomial degree when omitted)
        size: Edge count (minus the x^(n-2) coefficient when omitted)
        structure_filter: Filter name (the registry's when omitted)
        registry: FamilyRegistry

    Returns:
        list: Matching MixedGraph representatives in enumeration order

    Raises:
        ReconstructionError: If nothing matches
    """
    started = time.time()
    registry = _registry(registry)
    letter = normalize_letter(name)
    admissible = registry.admissible
    if fingerprint is None:
        fingerprint = admissible.spectrum(letter)
    target = _fingerprint_polynomial(fingerprint)
    order = target.degree if order is None else order
    if size is None:
        size = -target.coefficient(order - 2) if order >= 2 else 0
    if structure_filter is None:
        structure_filter = admissible.structure_filter(letter)

    candidates = connected_classes(order, size, ADMISSIBLE_MAX_DEGREE)
    found = [g for g in candidates if char_poly(g) == target and satisfies_filter(g, structure_filter)]
    analysis_logger.log_reconstruction(f"({letter})", len(candidates), len(found), time.time() - started)
    if not found:
        raise ReconstructionError(
            f"No connected mixed graph of order {order} and size {size} matches the spectrum of ({letter})"
            f" under filter {structure_filter}; the registry formula may be wrong")
    return found


def reconstruct_letter(name, registry=None, force=False):
    """
    Reconstruct one letter and record the first match in the registry (in memory).

    A letter that already has a graph is checked instead of replaced unless
    force is set.

    Returns:
        list: All matching representatives

    Raises:
        ReconstructionError: If nothing matches, or a recorded graph is not among the matches
    """
    registry = _registry(registry)
    letter = normalize_letter(name)
    admissible = registry.admissible
    found = reconstruct_admissible(letter, registry=registry)
    if admissible.has_graph(letter) and not force:
        recorded = admissible.graph(letter)
        if not any(same_class(recorded, g) for g in found):
            raise ReconstructionError(f"Recorded graph ({letter}) does not match its spectrum and filter")
        source = admissible.to_json()["letters"][letter].get("source") or "reconstructed"
        admissible.set_graph(letter, recorded, source=source, matches=len(found))
    else:
        admissible.set_graph(letter, found[0], source="reconstructed", matches=len(found))
    return found


def reconstruct_tree_family(n, registry=None):
    """
    All trees on n vertices whose spectrum is that of D_n.

    Returns:
        list: Matching trees (undirected MixedGraphs)
    """
    started = time.time()
    registry = _registry(registry)
    target = registry.polynomial("D", (n,))
    candidates = connected_classes(n, n - 1)
    found = [g for g in candidates if char_poly(g) == target]
    analysis_logger.log_reconstruction(f"D:{n}", len(candidates), len(found), time.time() - started)
    return found


def _theta_targets(kind, r, registry):
    if kind not in THETA_CLASS_KINDS:
        raise RegistryError(f"Unknown theta class {kind}; expected one of {THETA_CLASS_KINDS}")
    family = registry.get_family(kind)
    values = [r] if isinstance(r, int) else list(r)
    return {value: family.target_polynomial(value) for value in values}


def _pattern_graphs(targets, alpha, beta):
    """Realizations of a pattern for every r, or None when one misses its target."""
    graphs = {}
    for value, target in targets.items():
        g = realize_gains(value + 2, theta33_gains(value, alpha, beta))
        if g is None or char_poly(g) != target:
            return None
        graphs[value] = g
    return graphs


def theta_pattern_matches(kind, alpha, beta, r, registry=None):
    """True when the pattern reproduces the class polynomial for every requested r."""
    targets = _theta_targets(kind, r, _registry(registry))
    return _pattern_graphs(targets, alpha, beta) is not None


def reconstruct_theta_class(kind, r, registry=None):
    """
    Cycle-value patterns (alpha, beta) on theta_{3,3,r} with the char poly of a theta class.

    E is restricted to real patterns. A pattern is kept when it matches for
    every requested r; patterns giving the same class are reported once.

    Args:
        kind: "E", "Y1" or "Y2"
        r: Chain parameter, or an iterable of them

    Returns:
        list: (alpha, beta) GaussianUnit pairs, one per class

    Raises:
        RegistryError: On an unknown kind
    """
    started = time.time()
    targets = _theta_targets(kind, r, _registry(registry))
    first = min(targets)

    kept, representatives = [], []
    for alpha, beta in cartesian(UNITS, repeat=2):
        if kind == "E" and not (alpha.is_real and beta.is_real):
            continue
        graphs = _pattern_graphs(targets, alpha, beta)
        if graphs is None:
            continue
        if any(same_class(graphs[first], other) for other in representatives):
            continue
        representatives.append(graphs[first])
        kept.append((alpha, beta))
    analysis_logger.log_reconstruction(f"{kind}:{','.join(map(str, sorted(targets)))}", 16, len(kept),
                                       time.time() - started)
    return kept


def update_registry(letters=None, registry=None, force=False, theta_r=(3, 4, 5, 6), save=True, path=None):
    """
    Reconstruct letters and theta classes and persist the registry.

    Args:
        letters: Letters to reconstruct (every registry letter when omitted)
        registry: FamilyRegistry
        force: Replace recorded graphs instead of checking them
        theta_r: Chain parameters a theta pattern must match
        save: Write the registry file afterwards
        path: Output path (the registry's own file when omitted)

    Returns:
        dict: letter or theta kind -> number of matching classes

    Raises:
        ReconstructionError: If a letter has no match
        RegistryError: If a theta class has no pattern
    """
    registry = _registry(registry)
    admissible = registry.admissible
    letters = admissible.get_letters() if letters is None else [normalize_letter(x) for x in letters]
    summary = {}
    for letter in letters:
        summary[f"({letter})"] = len(reconstruct_letter(letter, registry, force))
    for kind in THETA_CLASS_KINDS:
        patterns = reconstruct_theta_class(kind, theta_r, registry)
        if not patterns:
            raise RegistryError(f"No theta_(3,3,r) pattern reproduces {kind} for r in {tuple(theta_r)}")
        alpha, beta = admissible.theta_pattern(kind)
        if force or not theta_pattern_matches(kind, alpha, beta, theta_r, registry):
            alpha, beta = patterns[0]
            admissible.set_theta_pattern(kind, alpha, beta, source="reconstructed")
        summary[kind] = len(patterns)
    if save:
        admissible.save(path)
    return summary
