"""
Theta graphs and the orientation classes on theta_{3,3,r}.

theta(p, q, r) has endpoints 0 and 1 joined by three internally disjoint paths
with p, q and r vertices (endpoints included); internal vertices are numbered
from 2 upward, path by path, in path order from 0 to 1.

On theta_{3,3,r} (a = 2, b = 3, chain 4..r+1) every edge carries gain 1
except H[a][1] = alpha and H[b][1] = beta. The three cycles then have values
alpha (through a and the chain), beta (through b and the chain) and
alpha * conj(beta) (through a and b). E, Y1 and Y2 are fixed by their
(alpha, beta) patterns, which are read from the admissible registry.
"""

from collections import Counter

from ..admissible_registry import RegistryError
from ..mixed_graph import ONE, build_mixed_graph
from ..spectra import Spectrum, normalize_cosine
from ..switching import realize_gains
from .base_family import FamilyParameterError, GraphFamily
from .cycle_family import CycleFamily
from .path_family import PathFamily, path_edges
from .tree_family import DTreeFamily

THETA_CLASS_KINDS = ("E", "Y1", "Y2")


def theta_paths(p, q, r):
    """Vertex sequences of the three paths from 0 to 1."""
    for length in (p, q, r):
        if length < 2:
            raise FamilyParameterError(f"Theta path needs at least 2 vertices, got {length}")
    if sorted((p, q, r))[1] == 2:
        raise FamilyParameterError("At most one theta path may be a direct edge")
    paths, next_vertex = [], 2
    for length in (p, q, r):
        internal = list(range(next_vertex, next_vertex + length - 2))
        next_vertex += length - 2
        paths.append([0] + internal + [1])
    return paths, next_vertex


def theta_graph(p, q, r, arcs=()):
    """
    Build theta(p, q, r) with the listed pairs oriented as arcs.

    Args:
        p, q, r: Vertex counts of the three paths, endpoints included
        arcs: (tail, head) pairs; each must be an edge of the theta graph

    Raises:
        FamilyParameterError: On bad path lengths or an arc that is not an edge
    """
    paths, n = theta_paths(p, q, r)
    edges = {tuple(sorted(e)) for path in paths for e in path_edges(path)}
    arcs = [tuple(a) for a in arcs]
    for tail, head in arcs:
        key = tuple(sorted((tail, head)))
        if key not in edges:
            raise FamilyParameterError(f"Arc ({tail}, {head}) is not an edge of theta({p},{q},{r})")
        edges.discard(key)
    return build_mixed_graph(n, sorted(edges), arcs)


class ThetaFamily(GraphFamily):
    """Undirected theta graphs theta(p, q, r)."""

    def __init__(self):
        super().__init__(name="theta", arity=3, description="three paths of p, q, r vertices between 0 and 1")

    def validate(self, params):
        theta_paths(*params)

    def build(self, params):
        return theta_graph(*self.check_params(params))


def theta33_gains(r, alpha, beta):
    """Gain map on theta_{3,3,r}, keyed (u, v) with u < v."""
    paths, _ = theta_paths(3, 3, r)
    gains = {}
    for path in paths:
        for u, v in path_edges(path):
            gains[tuple(sorted((u, v)))] = ONE
    # H[a][1] = alpha is stored as H[1][a] = conj(alpha)
    gains[(1, 2)] = alpha.conjugate()
    gains[(1, 3)] = beta.conjugate()
    return gains


class ThetaClassFamily(GraphFamily):
    """E_r, Y1_r or Y2_r: one orientation class on theta_{3,3,r}, on r+2 vertices."""

    def __init__(self, kind, registry):
        if kind not in THETA_CLASS_KINDS:
            raise FamilyParameterError(f"Unknown theta class {kind}; expected one of {THETA_CLASS_KINDS}")
        super().__init__(name=kind, arity=1, description=f"{kind} class on theta_(3,3,r)")
        self.kind = kind
        self.registry = registry

    def validate(self, params):
        minimum = 2 if self.kind == "E" else 3
        if params[0] < minimum:
            raise FamilyParameterError(f"{self.kind}_r needs r >= {minimum}, got {params[0]}")

    def build(self, params):
        (r,) = self.check_params(params)
        alpha, beta = self.registry.theta_pattern(self.kind)
        g = realize_gains(r + 2, theta33_gains(r, alpha, beta))
        if g is None:
            raise RegistryError(
                f"Pattern ({alpha}, {beta}) for {self.kind} has no mixed-graph representative")
        return g

    def closed_form(self, params):
        """E_r = Spec(C_(2r+2)) minus Spec(P_r); Y1 and Y2 are known by polynomial only."""
        (r,) = self.check_params(params)
        if self.kind != "E":
            return Spectrum.from_polynomial(self.target_polynomial(r))
        remaining = Counter(normalize_cosine(2 * k, 2 * r + 2) for k in range(2 * r + 2))
        remaining.subtract(normalize_cosine(k, r + 1) for k in range(1, r + 1))
        return Spectrum.from_exact(remaining.elements())

    def polynomial(self, params):
        (r,) = self.check_params(params)
        return self.target_polynomial(r)

    def target_polynomial(self, r):
        """
        Characteristic polynomial the class must have.

        E_r: phi(C_(2r+2)) / phi(P_r).
        Y1_r: x phi(D_(r+1)) - 2 phi(P_r) - phi(D_r) + 2x.
        Y2_r: x phi(D_(r+1)) - 2 phi(P_r) - phi(D_r) + 2 phi(P_(r-2)).
        """
        paths, cycles, trees = PathFamily(), CycleFamily(0), DTreeFamily()
        if self.kind == "E":
            return cycles.polynomial((2 * r + 2,)).exact_quotient(paths.polynomial((r,)))
        x = paths.polynomial((1,))
        base = x * trees.polynomial((r + 1,)) - 2 * paths.polynomial((r,)) - trees.polynomial((r,))
        if self.kind == "Y1":
            return base + 2 * x
        return base + 2 * paths.polynomial((r - 2,))
