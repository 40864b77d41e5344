"""
Mixed graph data model.

A mixed graph on the vertices 0..n-1 carries undirected edges and arcs, with
at most one connection per vertex pair. Its Hermitian adjacency matrix has 1
for an undirected edge, i at (u, v) and -i at (v, u) for an arc (u, v), and 0
elsewhere. Signed graphs (undirected, with a +1/-1 sign per edge) share the
same vertex conventions.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np


class GraphValidationError(ValueError):
    """Raised when a graph is not simple, has a loop or names a vertex out of range."""


class WalkError(ValueError):
    """Raised when consecutive walk vertices are not adjacent."""


_UNIT_LABELS = ("1", "i", "-1", "-i")
_UNIT_COMPLEX = (1 + 0j, 1j, -1 + 0j, -1j)
_UNIT_GAUSSIAN = ((1, 0), (0, 1), (-1, 0), (0, -1))


@dataclass(frozen=True, order=True)
class GaussianUnit:
    """One of 1, i, -1, -i, stored as the exponent k of i**k (k mod 4)."""

    power: int

    def __post_init__(self):
        object.__setattr__(self, "power", int(self.power) % 4)

    def __mul__(self, other):
        if not isinstance(other, GaussianUnit):
            return NotImplemented
        return GaussianUnit(self.power + other.power)

    def conjugate(self):
        return GaussianUnit(-self.power)

    def inverse(self):
        return self.conjugate()

    @property
    def is_real(self):
        return self.power % 2 == 0

    @property
    def label(self):
        return _UNIT_LABELS[self.power]

    def to_complex(self):
        return _UNIT_COMPLEX[self.power]

    def to_gaussian(self):
        """Return the unit as an exact (real, imaginary) integer pair."""
        return _UNIT_GAUSSIAN[self.power]

    @classmethod
    def from_label(cls, label):
        """
        Parse "1", "-1", "i" or "-i".

        Raises:
            ValueError: If the label is not one of the four units
        """
        text = str(label).strip().replace("+", "")
        if text not in _UNIT_LABELS:
            raise ValueError(f"Not a Gaussian unit: {label!r} (expected one of 1, -1, i, -i)")
        return cls(_UNIT_LABELS.index(text))

    def __str__(self):
        return self.label

    def __repr__(self):
        return f"GaussianUnit({self.label!r})"


ONE = GaussianUnit(0)
I = GaussianUnit(1)
MINUS_ONE = GaussianUnit(2)
MINUS_I = GaussianUnit(3)
UNITS = (ONE, I, MINUS_ONE, MINUS_I)


@dataclass(frozen=True)
class HermitianMatrix:
    """Hermitian adjacency matrix; zero entries are None."""

    n: int
    entries: Tuple[Tuple[Optional[GaussianUnit], ...], ...]

    def entry(self, i, j):
        return self.entries[i][j]

    def is_hermitian(self):
        """Check entry(j, i) == conj(entry(i, j)) and a zero diagonal."""
        for i in range(self.n):
            if self.entries[i][i] is not None:
                return False
            for j in range(i + 1, self.n):
                a, b = self.entries[i][j], self.entries[j][i]
                if (a is None) != (b is None):
                    return False
                if a is not None and b != a.conjugate():
                    return False
        return True

    def gaussian_rows(self):
        """Rows as lists of exact (real, imaginary) integer pairs."""
        return [[(0, 0) if value is None else value.to_gaussian() for value in row]
                for row in self.entries]

    def to_numpy(self):
        matrix = np.zeros((self.n, self.n), dtype=complex)
        for i, row in enumerate(self.entries):
            for j, value in enumerate(row):
                if value is not None:
                    matrix[i, j] = value.to_complex()
        return matrix

    def real_embedding(self):
        """Real symmetric [[A, -B], [B, A]] for H = A + iB."""
        matrix = self.to_numpy()
        a, b = matrix.real, matrix.imag
        return np.block([[a, -b], [b, a]])


@dataclass(frozen=True)
class WalkSpec:
    """Ordered vertex list of a walk; closed when the last vertex repeats the first."""

    vertices: Tuple[int, ...]

    @property
    def is_closed(self):
        return len(self.vertices) > 1 and self.vertices[0] == self.vertices[-1]

    def reversed(self):
        return WalkSpec(tuple(reversed(self.vertices)))


def _pair(u, v):
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class MixedGraph:
    """
    Mixed graph on vertices 0..n-1.

    Undirected edges are stored as (u, v) with u < v; arcs as (tail, head).
    Instances are validated on construction and immutable afterwards.
    """

    n: int
    undirected: FrozenSet[Tuple[int, int]]
    arcs: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise GraphValidationError(f"Vertex count must be non-negative, got {self.n}")
        undirected = frozenset(_pair(int(u), int(v)) for u, v in self.undirected)
        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        seen = set()
        for u, v in list(undirected) + list(arcs):
            for x in (u, v):
                if not 0 <= x < self.n:
                    raise GraphValidationError(f"Vertex {x} out of range [0, {self.n})")
            if u == v:
                raise GraphValidationError(f"Loop detected at vertex {u}")
            key = _pair(u, v)
            if key in seen:
                raise GraphValidationError(f"Conflicting edge on pair {{{key[0]}, {key[1]}}}")
            seen.add(key)
        object.__setattr__(self, "undirected", undirected)
        object.__setattr__(self, "arcs", arcs)

    @property
    def size(self):
        return len(self.undirected) + len(self.arcs)

    def edge_value(self, u, v):
        """
        Get the Hermitian matrix entry H[u][v].

        Returns:
            GaussianUnit or None when u and v are not adjacent
        """
        if _pair(u, v) in self.undirected:
            return ONE
        if (u, v) in self.arcs:
            return I
        if (v, u) in self.arcs:
            return MINUS_I
        return None

    def edges(self):
        """All connections as sorted (u, v) pairs with u < v."""
        return sorted(set(self.undirected) | {_pair(u, v) for u, v in self.arcs})

    def gains(self):
        """Map (u, v) with u < v to H[u][v]."""
        return {(u, v): self.edge_value(u, v) for u, v in self.edges()}

    @cached_property
    def _adjacency(self):
        neighbors = {v: [] for v in range(self.n)}
        for u, v in self.edges():
            neighbors[u].append(v)
            neighbors[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in neighbors.items()}

    def neighbors(self, u):
        return self._adjacency[u]

    def degree(self, u):
        return len(self._adjacency[u])

    def degrees(self):
        return [len(self._adjacency[v]) for v in range(self.n)]

    def to_networkx(self):
        """Underlying simple graph as a networkx Graph on 0..n-1."""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def relabel(self, mapping):
        """
        Rename vertices.

        Args:
            mapping: Sequence or dict sending old vertex to new vertex (a permutation)

        Returns:
            MixedGraph: The relabeled graph
        """
        if isinstance(mapping, Mapping):
            image = [mapping[v] for v in range(self.n)]
        else:
            image = list(mapping)
        if sorted(image) != list(range(self.n)):
            raise GraphValidationError("Relabeling must be a permutation of the vertices")
        return MixedGraph(
            self.n,
            frozenset(_pair(image[u], image[v]) for u, v in self.undirected),
            frozenset((image[u], image[v]) for u, v in self.arcs),
        )

    def delete_vertices(self, removed):
        """Induced subgraph on the remaining vertices, renumbered in order."""
        removed = set(removed)
        return induced_subgraph(self, [v for v in range(self.n) if v not in removed])

    def delete_edge(self, u, v):
        key = _pair(u, v)
        if self.edge_value(u, v) is None:
            raise GraphValidationError(f"No edge between {u} and {v}")
        return MixedGraph(
            self.n,
            frozenset(e for e in self.undirected if e != key),
            frozenset(a for a in self.arcs if _pair(*a) != key),
        )

    def to_json(self):
        return {
            "n": self.n,
            "undirected": [list(e) for e in sorted(self.undirected)],
            "arcs": [list(a) for a in sorted(self.arcs)],
        }


def build_mixed_graph(n, undirected=(), arcs=()):
    """
    Build a validated mixed graph.

    Args:
        n: Vertex count
        undirected: Iterable of unordered vertex pairs
        arcs: Iterable of ordered (tail, head) pairs

    Returns:
        MixedGraph: The validated graph

    Raises:
        GraphValidationError: On loops, repeated or conflicting pairs, or vertices out of range
    """
    undirected = [tuple(e) for e in undirected]
    arcs = [tuple(a) for a in arcs]
    seen = set()
    for u, v in undirected + arcs:
        if u == v:
            raise GraphValidationError(f"Loop detected at vertex {u}")
        key = _pair(u, v)
        if key in seen:
            raise GraphValidationError(f"Conflicting edge on pair {{{key[0]}, {key[1]}}}")
        seen.add(key)
    return MixedGraph(int(n), frozenset(undirected), frozenset(arcs))


def from_gains(n, gains):
    """
    Encode a map of Hermitian entries as a mixed graph.

    Args:
        n: Vertex count
        gains: Mapping from (u, v) to the GaussianUnit H[u][v]

    Returns:
        MixedGraph: Graph whose H matches the gains

    Raises:
        GraphValidationError: If some entry is -1, which no mixed graph realizes
    """
    undirected, arcs = [], []
    for (u, v), value in gains.items():
        if value == ONE:
            undirected.append((u, v))
        elif value == I:
            arcs.append((u, v))
        elif value == MINUS_I:
            arcs.append((v, u))
        else:
            raise GraphValidationError(f"Entry ({u}, {v}) is -1; not a mixed graph")
    return build_mixed_graph(n, undirected, arcs)


def hermitian_matrix(g):
    """
    Build the Hermitian adjacency matrix of a mixed graph.

    Args:
        g: MixedGraph

    Returns:
        HermitianMatrix: H with 1 for undirected edges, i/-i for arcs
    """
    rows = [[None] * g.n for _ in range(g.n)]
    for u, v in g.undirected:
        rows[u][v] = ONE
        rows[v][u] = ONE
    for u, v in g.arcs:
        rows[u][v] = I
        rows[v][u] = MINUS_I
    return HermitianMatrix(g.n, tuple(tuple(row) for row in rows))


@dataclass(frozen=True)
class GraphStructure:
    order: int
    size: int
    max_degree: int
    components: Tuple[Tuple[int, ...], ...]
    rank: int
    corank: int


def structure(g):
    """
    Structural summary of a mixed graph.

    Returns:
        GraphStructure: order, size, max degree, components, rank n-c, corank m-n+c
    """
    components = tuple(tuple(sorted(c)) for c in nx.connected_components(g.to_networkx()))
    components = tuple(sorted(components))
    c = len(components)
    return GraphStructure(
        order=g.n,
        size=g.size,
        max_degree=max(g.degrees(), default=0),
        components=components,
        rank=g.n - c,
        corank=g.size - g.n + c,
    )


def underlying_graph(g):
    """Replace every arc with an undirected edge."""
    return MixedGraph(g.n, frozenset(g.edges()), frozenset())


def induced_subgraph(g, vertices):
    """
    Induced subgraph on a vertex set, renumbered order-preservingly.

    Raises:
        GraphValidationError: If a vertex is out of range
    """
    kept = sorted(set(vertices))
    for v in kept:
        if not 0 <= v < g.n:
            raise GraphValidationError(f"Vertex {v} out of range [0, {g.n})")
    index = {v: i for i, v in enumerate(kept)}
    return MixedGraph(
        len(kept),
        frozenset((index[u], index[v]) for u, v in g.undirected if u in index and v in index),
        frozenset((index[u], index[v]) for u, v in g.arcs if u in index and v in index),
    )


def disjoint_union(*graphs):
    """Disjoint union; each graph's labels are offset by the orders before it."""
    offset = 0
    undirected, arcs = set(), set()
    for g in graphs:
        undirected.update((u + offset, v + offset) for u, v in g.undirected)
        arcs.update((u + offset, v + offset) for u, v in g.arcs)
        offset += g.n
    return MixedGraph(offset, frozenset(undirected), frozenset(arcs))


def component_subgraphs(g):
    """Connected components as (vertex tuple, induced MixedGraph), smallest vertex first."""
    return [(vertices, induced_subgraph(g, vertices)) for vertices in structure(g).components]


def walk_value(g, walk):
    """
    Product of Hermitian entries along a walk.

    Args:
        g: MixedGraph
        walk: WalkSpec or vertex sequence

    Returns:
        GaussianUnit: h(W)

    Raises:
        WalkError: If two consecutive vertices are not adjacent
    """
    vertices = walk.vertices if isinstance(walk, WalkSpec) else tuple(walk)
    value = ONE
    for u, v in zip(vertices, vertices[1:]):
        entry = g.edge_value(u, v) if 0 <= u < g.n and 0 <= v < g.n else None
        if entry is None:
            raise WalkError(f"Vertices {u} and {v} are not adjacent")
        value = value * entry
    return value


def canonical_cycle_order(cycle):
    """Rotate a vertex cycle to start at its smallest vertex and step toward the smaller neighbour."""
    cycle = list(cycle)
    start = cycle.index(min(cycle))
    rotated = cycle[start:] + cycle[:start]
    if len(rotated) > 2 and rotated[-1] < rotated[1]:
        rotated = [rotated[0]] + rotated[:0:-1]
    return tuple(rotated)


def simple_cycles(g, length_bound=None):
    """
    Every simple cycle of the underlying graph, canonically oriented and sorted.

    Returns:
        list: Vertex tuples; the closed walk is the tuple plus its first vertex
    """
    found = {canonical_cycle_order(c)
             for c in nx.simple_cycles(g.to_networkx(), length_bound=length_bound)
             if len(c) >= 3}
    return sorted(found, key=lambda c: (len(c), c))


def cycle_walk_value(g, cycle):
    """Value of the closed walk around a vertex cycle."""
    return walk_value(g, tuple(cycle) + (cycle[0],))


@dataclass(frozen=True)
class SignedGraph:
    """Undirected graph with a sign per edge; only the negative edges are stored."""

    underlying: MixedGraph
    negative: FrozenSet[Tuple[int, int]]

    def __post_init__(self):
        if self.underlying.arcs:
            raise GraphValidationError("The underlying graph of a signed graph has no arcs")
        negative = frozenset(_pair(u, v) for u, v in self.negative)
        for edge in negative:
            if edge not in self.underlying.undirected:
                raise GraphValidationError(f"Signed edge {edge} is not an edge of the graph")
        object.__setattr__(self, "negative", negative)

    @property
    def n(self):
        return self.underlying.n

    def sign(self, u, v):
        if _pair(u, v) not in self.underlying.undirected:
            raise GraphValidationError(f"No edge between {u} and {v}")
        return -1 if _pair(u, v) in self.negative else 1

    def cycle_sign(self, cycle):
        product = 1
        for u, v in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
            product *= self.sign(u, v)
        return product

    def adjacency(self):
        matrix = np.zeros((self.n, self.n))
        for u, v in self.underlying.undirected:
            matrix[u, v] = matrix[v, u] = self.sign(u, v)
        return matrix


def signed_graph(n, edges, negative=()):
    """Build a signed graph from its edges and the subset of negative edges."""
    return SignedGraph(build_mixed_graph(n, edges), frozenset(tuple(e) for e in negative))
