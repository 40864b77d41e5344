"""
Cospectral-mate search and DHS verdicts.

A mate of X is a graph with the same characteristic polynomial that is not
a switching of a relabeling of X. Since the char poly of a disjoint union is
the product of the component char polys, candidates are assembled from
components whose polynomial divides the target's, and exact division of the
remaining quotient decides.

Free mode draws components from the exhaustive enumeration of connected
switching classes, pruned by two exact-safe bounds (maximum degree at most
the squared spectral radius, edge count fixed by trace(H^2) = 2m) and an
advisory floating pre-filter. Guided mode draws components from the
closed-form catalogue (paths, typed cycles, D_n, G_t, G_t^(t+m) and the
lettered admissible graphs) and reaches larger orders, but is not
exhaustive.
"""

import math
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from .admissible_registry import RegistryError, satisfies_filter
from .analysis_logger import analysis_logger
from .charpoly import ONE_POLY, IntPolynomial, char_poly, char_polys, product
from .config import get_max_order, get_thread_count
from .enumeration import SearchConstraints, SearchGuardExceeded, class_certificate, connected_classes, same_class
from .graph_families import FamilyParameterError
from .mixed_graph import MixedGraph, component_subgraphs, disjoint_union
from .spectra import ClosedFormError, numeric_eigenvalues

MODES = ("free", "guided")
FLOAT_PREFILTER_TOL = 1e-6

DHS = "DHS"
NOT_DHS = "NotDHS"
INCONCLUSIVE = "Inconclusive"

# Families offered as guided components, in catalogue order
GUIDED_FAMILIES = ("P", "C", "C1", "C2", "D", "Gt", "Gttm")
# Additional families tried when naming a component
LABEL_FAMILIES = ("C1P", "Dt", "E", "Y1", "Y2", "K")


@dataclass(frozen=True)
class CatalogEntry:
    """One candidate component; graph is None for letters without a recorded structure."""

    label: Optional[str]
    order: int
    size: int
    polynomial: IntPolynomial
    graph: Optional[MixedGraph] = None


@dataclass(frozen=True)
class MateEntry:
    """One cospectral mate, given by its components."""

    label: str
    components: Tuple[str, ...]
    polynomial: IntPolynomial
    graph: Optional[MixedGraph] = None
    certificate: Optional[Dict[str, Any]] = None

    def to_json(self):
        data = {
            "label": self.label,
            "components": list(self.components),
            "char_poly": self.polynomial.to_json(),
        }
        if self.graph is not None:
            data["graph"] = self.graph.to_json()
        if self.certificate is not None:
            data["certificate"] = self.certificate
        return data


@dataclass
class MateReport:
    """Result of a mate search; exhaustive is True only when the whole order/size space was covered."""

    target: MixedGraph
    target_label: str
    mode: str
    mates: List[MateEntry] = field(default_factory=list)
    exhaustive: bool = False
    catalog_size: int = 0
    elapsed: float = 0.0

    def mate_labels(self):
        return [mate.label for mate in self.mates]

    def verify(self):
        """
        Re-check every mate.

        Returns:
            list: Problems found, empty when every mate is cospectral and inequivalent
        """
        problems = []
        phi = char_poly(self.target)
        for mate in self.mates:
            if mate.polynomial != phi:
                problems.append(f"{mate.label}: char poly differs from the target")
            if mate.graph is not None:
                if char_poly(mate.graph) != phi:
                    problems.append(f"{mate.label}: recomputed char poly differs from the target")
                if same_class(mate.graph, self.target):
                    problems.append(f"{mate.label}: switching equivalent to the target")
        return problems

    def to_json(self):
        return {
            "target": self.target_label,
            "target_graph": self.target.to_json(),
            "char_poly": char_poly(self.target).to_json(),
            "mode": self.mode,
            "exhaustive": self.exhaustive,
            "catalog_size": self.catalog_size,
            "mates": [mate.to_json() for mate in self.mates],
        }


@dataclass
class DHSVerdict:
    """DHS, NotDHS (with the mates) or Inconclusive (with the guard that stopped the search)."""

    status: str
    target_label: str
    reason: str
    report: Optional[MateReport] = None

    @property
    def mates(self):
        return self.report.mates if self.report is not None else []

    def to_json(self):
        data = {"target": self.target_label, "status": self.status, "reason": self.reason}
        if self.report is not None:
            data["report"] = self.report.to_json()
        return data


def _registry(registry):
    if registry is not None:
        return registry
    from .family_registry import default_registry

    return default_registry()


def _size_from_polynomial(p):
    # the x^(n-2) coefficient of a Hermitian char poly is -m
    return -p.coefficient(p.degree - 2) if p.degree >= 2 else 0


# -- component naming -------------------------------------------------------------------

def _family_params(name, order):
    """Parameter tuples of a family member with the given order."""
    if name == "P":
        return [(order,)]
    if name in ("C", "C1", "C2", "K"):
        return [(order,)] if order >= (3 if name != "K" else 1) else []
    if name == "D":
        return [(order,)] if order >= 4 else []
    if name == "Gt":
        return [(order - 4,)] if order >= 5 else []
    if name == "Gttm":
        return [(t, order - 4 - t) for t in range(1, (order - 4) // 2 + 1)]
    if name == "C1P":
        return [(order - 1,)] if order >= 4 else []
    if name == "Dt":
        return [(order - 1,)] if order >= 5 else []
    if name == "E":
        return [(order - 2,)] if order >= 4 else []
    if name in ("Y1", "Y2"):
        return [(order - 2,)] if order >= 5 else []
    return []


def _member_polynomial(family, params):
    try:
        return family.polynomial(params)
    except (FamilyParameterError, ClosedFormError, RegistryError):
        return None


def _member_graph(family, params):
    try:
        return family.build(params)
    except (FamilyParameterError, RegistryError):
        return None


def label_component(g, registry=None):
    """
    Name a connected mixed graph by family fingerprint.

    Family members with the same char poly are compared with same_class;
    letters without a recorded graph are matched by polynomial and
    structure filter when that leaves a single letter.

    Returns:
        str: A shorthand such as "P:2", "C1:5" or "(o)", or "G[n,m]" when nothing matches
    """
    registry = _registry(registry)
    phi = char_poly(g)
    for name in GUIDED_FAMILIES + LABEL_FAMILIES:
        family = registry.get_family(name)
        for params in _family_params(name, g.n):
            if _member_polynomial(family, params) != phi:
                continue
            member = _member_graph(family, params)
            if member is not None and same_class(member, g):
                return family.shorthand(params)
    admissible = registry.admissible
    unresolved = []
    for family in registry.letter_families():
        letter = family.letter
        if admissible.order(letter) != g.n or _member_polynomial(family, ()) != phi:
            continue
        if admissible.has_graph(letter):
            if same_class(admissible.graph(letter), g):
                return family.shorthand(())
        elif satisfies_filter(g, admissible.structure_filter(letter)):
            unresolved.append(family.shorthand(()))
    if len(unresolved) == 1:
        return unresolved[0]
    return f"G[{g.n},{g.size}]"


def _sort_labels(labels_with_order):
    return [label for _, label in sorted(labels_with_order)]


def label_graph(g, registry=None):
    """Label of a graph as its component labels joined with " + ", smallest components first."""
    if g.n == 0:
        return "empty"
    labels = [(h.n, label_component(h, registry)) for _, h in component_subgraphs(g)]
    return " + ".join(_sort_labels(labels))


# -- catalogues -------------------------------------------------------------------

def degree_cap(target):
    """Largest maximum degree a mate can have: Delta <= rho(H)^2."""
    values = numeric_eigenvalues(target)
    radius = max((abs(float(v)) for v in values), default=0.0)
    return int(math.floor(radius * radius + FLOAT_PREFILTER_TOL))


def _prefilter(values, target_values):
    """Every component eigenvalue must sit near some target eigenvalue."""
    if len(values) == 0:
        return True
    gaps = np.abs(np.asarray(target_values)[:, None] - np.asarray(values)[None, :])
    return bool(np.all(gaps.min(axis=0) <= FLOAT_PREFILTER_TOL))


def _free_catalog(target, phi, constraints):
    n, m = target.n, target.size
    cap = degree_cap(target)
    if constraints.max_degree is not None:
        cap = min(cap, constraints.max_degree)
    target_values = numeric_eigenvalues(target)
    orders = [n] if constraints.connected else range(1, n + 1)
    candidates = []
    for k in orders:
        top = min(k * (k - 1) // 2, m, k * cap // 2)
        sizes = [m] if k == n else range(k - 1, top + 1)
        for s in sizes:
            if constraints.max_corank is not None and s - k + 1 > constraints.max_corank:
                continue
            for g in connected_classes(k, s, cap):
                if _prefilter(numeric_eigenvalues(g), target_values):
                    candidates.append(g)
                    if constraints.max_classes is not None and len(candidates) > constraints.max_classes:
                        raise SearchGuardExceeded(
                            f"More than {constraints.max_classes} candidate components for order {n}")
    polynomials = char_polys(candidates, get_thread_count())
    return [
        CatalogEntry(None, g.n, g.size, p, g)
        for g, p in zip(candidates, polynomials)
        if p.divides(phi)
    ]


def _guided_catalog(target, phi, constraints, registry):
    allowed = None
    if constraints.components is not None:
        allowed = {name.strip().strip("()") for name in constraints.components}
    catalog = []
    for name in GUIDED_FAMILIES:
        if allowed is not None and name not in allowed:
            continue
        family = registry.get_family(name)
        for k in range(1, target.n + 1):
            for params in _family_params(name, k):
                p = _member_polynomial(family, params)
                if p is None or not p.divides(phi):
                    continue
                catalog.append(CatalogEntry(family.shorthand(params), k, _size_from_polynomial(p), p))
    for family in registry.letter_families():
        if allowed is not None and family.letter not in allowed:
            continue
        p = _member_polynomial(family, ())
        if p is None or p.degree > target.n or not p.divides(phi):
            continue
        graph = registry.admissible.graph(family.letter) if registry.admissible.has_graph(family.letter) else None
        catalog.append(CatalogEntry(family.shorthand(()), p.degree, _size_from_polynomial(p), p, graph))
    return catalog


# -- assembling candidates ---------------------------------------------------------------

def _decompositions(catalog, phi, order, size, connected=False):
    """Multisets of catalogue entries whose orders, sizes and char polys add up to the target's."""
    results = []
    divides = {}

    def fits(index, quotient):
        key = (index, quotient)
        if key not in divides:
            divides[key] = catalog[index].polynomial.divides(quotient)
        return divides[key]

    def extend(start, quotient, order_left, size_left, chosen):
        if order_left == 0:
            if size_left == 0 and quotient == ONE_POLY:
                results.append(tuple(chosen))
            return
        for index in range(start, len(catalog)):
            entry = catalog[index]
            if entry.order > order_left or entry.size > size_left:
                continue
            if connected and entry.order != order:
                continue
            if not fits(index, quotient):
                continue
            chosen.append(entry)
            extend(index, quotient.exact_quotient(entry.polynomial),
                   order_left - entry.order, size_left - entry.size, chosen)
            chosen.pop()

    extend(0, phi, order, size, [])
    return results


def _catalog_key(entry):
    return (entry.order, entry.size, entry.polynomial.coefficients, entry.label or "")


def find_mates(target, constraints=None, mode="free", max_order=None, label=None, registry=None):
    """
    Find the cospectral mates of a mixed graph.

    Args:
        target: MixedGraph
        constraints: SearchConstraints (order and size are pinned to the target's)
        mode: "free" (exhaustive enumeration) or "guided" (closed-form catalogue)
        max_order: Order guard override (HERMISPEC_MAX_ORDER / HERMISPEC_GUIDED_MAX_ORDER)
        label: Name used in reports and logs
        registry: FamilyRegistry (the shared one when omitted)

    Returns:
        MateReport: Mates sorted by label

    Raises:
        ValueError: On an unknown mode
        SearchGuardExceeded: If the target is beyond the order guard or a search guard trips
    """
    if mode not in MODES:
        raise ValueError(f"Unknown search mode {mode!r}; expected one of {MODES}")
    started = time.time()
    registry = _registry(registry)
    label = label or label_graph(target, registry)
    guard = get_max_order(mode, max_order)
    if constraints is None:
        constraints = SearchConstraints(max_order=max(target.n, 1))
    if target.n > guard:
        raise SearchGuardExceeded(f"Order {target.n} exceeds the {mode} search guard {guard}")
    if target.n > constraints.max_order:
        raise SearchGuardExceeded(f"Order {target.n} exceeds max_order {constraints.max_order}")

    phi = char_poly(target)
    if mode == "free":
        catalog = _free_catalog(target, phi, constraints)
    else:
        catalog = _guided_catalog(target, phi, constraints, registry)
    catalog.sort(key=_catalog_key)

    target_labels = None
    mates = []
    for parts in _decompositions(catalog, phi, target.n, target.size, constraints.connected):
        graphs = [entry.graph for entry in parts]
        if all(graph is not None for graph in graphs):
            union = disjoint_union(*graphs)
            if same_class(union, target):
                continue
            if constraints.max_degree is not None and max(union.degrees(), default=0) > constraints.max_degree:
                continue
            components = [(graph.n, entry.label or label_component(graph, registry))
                          for entry, graph in zip(parts, graphs)]
            names = tuple(_sort_labels(components))
            mates.append(MateEntry(" + ".join(names), names, product(e.polynomial for e in parts),
                                   union, class_certificate(union)))
        else:
            if target_labels is None:
                target_labels = tuple(sorted(label.split(" + ")))
            names = tuple(_sort_labels([(entry.order, entry.label) for entry in parts]))
            if tuple(sorted(names)) == target_labels:
                continue
            mates.append(MateEntry(" + ".join(names), names, product(e.polynomial for e in parts)))
    mates.sort(key=lambda mate: (len(mate.components), mate.label))

    report = MateReport(
        target=target,
        target_label=label,
        mode=mode,
        mates=mates,
        exhaustive=(mode == "free"),
        catalog_size=len(catalog),
        elapsed=time.time() - started,
    )
    analysis_logger.log_mate_search(label, mode, len(catalog), len(mates), report.exhaustive, report.elapsed)
    return report


def is_dhs(target, constraints=None, mode="free", max_order=None, label=None, registry=None):
    """
    Decide whether a mixed graph is determined by its Hermitian spectrum.

    DHS is only returned after an exhaustive search; a guard hit or a
    mate-free guided search is Inconclusive.

    Returns:
        DHSVerdict
    """
    registry = _registry(registry)
    label = label or label_graph(target, registry)
    try:
        report = find_mates(target, constraints, mode, max_order, label, registry)
    except SearchGuardExceeded as e:
        verdict = DHSVerdict(INCONCLUSIVE, label, str(e))
    else:
        if report.mates:
            verdict = DHSVerdict(NOT_DHS, label, f"{len(report.mates)} cospectral mate(s)", report)
        elif report.exhaustive:
            verdict = DHSVerdict(DHS, label, "exhaustive search found no mate", report)
        else:
            verdict = DHSVerdict(INCONCLUSIVE, label, "guided search found no mate but is not exhaustive", report)
    analysis_logger.log_dhs_verdict(label, verdict.status, verdict.reason)
    return verdict
