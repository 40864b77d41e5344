"""
Switching functions and switching-equivalence of mixed graphs.

A switching function theta assigns a Gaussian unit to every vertex; switching
replaces H by D(theta) H D(theta)^-1, so the entry for (u, v) becomes
theta(u) * H[u][v] * conj(theta(v)). The result is again a mixed graph only
when no entry lands on -1. Switching preserves the exact value of every closed
walk, hence the spectrum.
"""

from collections import deque
from dataclasses import dataclass
from typing import Tuple

import networkx as nx

from .mixed_graph import (
    I,
    MINUS_I,
    MINUS_ONE,
    ONE,
    UNITS,
    GaussianUnit,
    GraphValidationError,
    MixedGraph,
    SignedGraph,
    canonical_cycle_order,
    cycle_walk_value,
    from_gains,
    structure,
    underlying_graph,
)


class SwitchingError(ValueError):
    """Raised when a switching request does not apply to the given graph."""


class PatternMismatchError(SwitchingError):
    """Raised when the local pattern of a Sw move is absent at the chosen center."""


@dataclass(frozen=True)
class SwitchingFunction:
    """Gaussian unit per vertex, indexed by vertex."""

    values: Tuple[GaussianUnit, ...]

    @classmethod
    def identity(cls, n):
        return cls(tuple(ONE for _ in range(n)))

    @classmethod
    def from_mapping(cls, mapping, n):
        """
        Build from a vertex -> unit (or label) mapping.

        Raises:
            SwitchingError: If the mapping is not total on 0..n-1
        """
        values = []
        for v in range(n):
            if v not in mapping and str(v) not in mapping:
                raise SwitchingError(f"Switching function has no value for vertex {v}")
            raw = mapping[v] if v in mapping else mapping[str(v)]
            values.append(raw if isinstance(raw, GaussianUnit) else GaussianUnit.from_label(raw))
        return cls(tuple(values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, vertex):
        return self.values[vertex]

    def compose(self, other):
        """Switching by other, then by self."""
        if len(self) != len(other):
            raise SwitchingError("Cannot compose switching functions of different lengths")
        return SwitchingFunction(tuple(a * b for a, b in zip(self.values, other.values)))

    def inverse(self):
        return SwitchingFunction(tuple(value.conjugate() for value in self.values))

    def to_json(self):
        return {str(v): value.label for v, value in enumerate(self.values)}


@dataclass(frozen=True)
class CycleType:
    """Switching class of a mixed cycle: tag 0, 1 or 2 and its order."""

    tag: int
    order: int

    @property
    def name(self):
        return f"Type{self.tag}"

    @classmethod
    def from_value(cls, value, order):
        """Type 0 for value 1, Type 1 for +-i, Type 2 for -1."""
        if value == ONE:
            return cls(0, order)
        if value == MINUS_ONE:
            return cls(2, order)
        return cls(1, order)


def switched_gains(g, theta):
    """Entries theta(u) * H[u][v] * conj(theta(v)) for every edge (u, v), u < v."""
    return {(u, v): theta[u] * value * theta[v].conjugate() for (u, v), value in g.gains().items()}


def apply_switching(g, theta):
    """
    Switch a mixed graph: H(g') = D(theta) H(g) D(theta)^-1.

    Args:
        g: MixedGraph
        theta: SwitchingFunction total on the vertices of g

    Returns:
        MixedGraph: The switched graph, same underlying graph

    Raises:
        SwitchingError: If theta is not total, or an entry would become -1
    """
    if len(theta) != g.n:
        raise SwitchingError(f"Switching function covers {len(theta)} vertices, graph has {g.n}")
    try:
        return from_gains(g.n, switched_gains(g, theta))
    except GraphValidationError as e:
        raise SwitchingError(str(e))


_MOVE_VALUES = {1: MINUS_ONE, 2: I, 3: MINUS_I, 4: I}


def _local_pattern(g, center):
    """Classify the two edges at a degree-2 center as 'in', 'out' or 'edge'."""
    if not 0 <= center < g.n:
        raise PatternMismatchError(f"Vertex {center} out of range")
    neighbors = g.neighbors(center)
    if len(neighbors) != 2:
        raise PatternMismatchError(
            f"Sw moves act on a vertex of degree 2; vertex {center} has degree {len(neighbors)}")
    kinds = []
    for w in neighbors:
        value = g.edge_value(w, center)
        kinds.append("in" if value == I else "out" if value == MINUS_I else "edge")
    return neighbors, kinds


def sw_moves(g, which, center):
    """
    Apply one of the four local rewrite moves at a center vertex.

    Sw.1 (theta(v) = -1) reverses arcs (u,v),(v,w); Sw.2 (theta(v) = i) turns
    arcs (u,v),(w,v) into edges; Sw.3 (theta(v) = -i) turns arcs (v,u),(v,w)
    into edges; Sw.4 (theta(v) = i) turns arc (u,v) plus edge vw into edge uv
    plus arc (v,w).

    Args:
        g: MixedGraph
        which: Move number 1..4
        center: The vertex v

    Returns:
        MixedGraph: The rewritten graph

    Raises:
        PatternMismatchError: If the move's precondition does not hold at center
    """
    if which not in _MOVE_VALUES:
        raise SwitchingError(f"Unknown move Sw.{which}; expected 1, 2, 3 or 4")
    _, kinds = _local_pattern(g, center)
    required = {
        1: ["in", "out"],
        2: ["in", "in"],
        3: ["out", "out"],
        4: ["edge", "in"],
    }[which]
    if sorted(kinds) != sorted(required):
        raise PatternMismatchError(
            f"Sw.{which} needs {' + '.join(required)} at vertex {center}, found {' + '.join(kinds)}")
    values = [ONE] * g.n
    values[center] = _MOVE_VALUES[which]
    return apply_switching(g, SwitchingFunction(tuple(values)))


def _propagate(g, target_value):
    """
    Spanning-forest propagation.

    Fixes theta(root) = 1 per component and chooses theta along BFS tree edges
    so that every tree edge (a, b) takes the value target_value(a, b).
    """
    values = [None] * g.n
    for root in range(g.n):
        if values[root] is not None:
            continue
        values[root] = ONE
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b in g.neighbors(a):
                if values[b] is None:
                    # theta(a) h(a,b) conj(theta(b)) = t  =>  theta(b) = theta(a) h(a,b) conj(t)
                    values[b] = values[a] * g.edge_value(a, b) * target_value(a, b).conjugate()
                    queue.append(b)
    return SwitchingFunction(tuple(values))


def find_switching(g1, g2):
    """
    Find theta with apply_switching(g1, theta) == g2 at fixed labels.

    Returns:
        SwitchingFunction or None when the graphs are not switching equivalent

    Raises:
        SwitchingError: If the underlying graphs differ
    """
    if g1.n != g2.n or g1.edges() != g2.edges():
        raise SwitchingError("Underlying graphs differ; align the vertex labels first")
    theta = _propagate(g1, g2.edge_value)
    for (u, v), value in switched_gains(g1, theta).items():
        if value != g2.edge_value(u, v):
            return None
    return theta


def switching_equivalent(g1, g2):
    """
    Decide switching equivalence at fixed labels.

    Values i and -i on the same cycle are not equivalent here; only a relabeling
    reversing the cycle (done by the caller) merges them.

    Returns:
        tuple: (bool, SwitchingFunction or None)
    """
    theta = find_switching(g1, g2)
    return theta is not None, theta


def normalize_forest(g):
    """
    Switching function that makes every edge of a mixed forest undirected.

    Raises:
        SwitchingError: If g has a cycle
    """
    if structure(g).corank != 0:
        raise SwitchingError("Graph has a cycle; forest normalization does not apply")
    return _propagate(g, lambda a, b: ONE)


def cycle_order(g):
    """
    Canonical traversal of a mixed cycle: start at 0, step toward the smaller neighbour.

    Raises:
        SwitchingError: If the underlying graph is not a single cycle
    """
    info = structure(g)
    if g.n < 3 or len(info.components) != 1 or any(d != 2 for d in g.degrees()):
        raise SwitchingError("Underlying graph is not a cycle")
    order = [0]
    previous, current = None, 0
    while True:
        options = [w for w in g.neighbors(current) if w != previous]
        nxt = min(options) if previous is None else options[0]
        if nxt == 0:
            break
        order.append(nxt)
        previous, current = current, nxt
    return tuple(order)


def cycle_value(g):
    """Value of a mixed cycle along its canonical traversal."""
    return cycle_walk_value(g, cycle_order(g))


def _canonical_cycle_gains(order, value):
    """
    Entries of the canonical cycle on a given traversal.

    Value 1: all undirected; i: arc (o0, o1); -i: arc (o1, o0); -1: arcs (o0, o1), (o1, o2).
    """
    gains = {}
    closed = tuple(order) + (order[0],)
    for a, b in zip(closed, closed[1:]):
        gains[(a, b)] = ONE
    if value == I:
        gains[(order[0], order[1])] = I
    elif value == MINUS_I:
        gains[(order[0], order[1])] = MINUS_I
    elif value == MINUS_ONE:
        gains[(order[0], order[1])] = I
        gains[(order[1], order[2])] = I
    return gains


def _oriented(gains):
    """Store gains under (u, v) with u < v."""
    result = {}
    for (a, b), value in gains.items():
        if a < b:
            result[(a, b)] = value
        else:
            result[(b, a)] = value.conjugate()
    return result


def canonical_cycle(order, value):
    """
    Canonical representative of a cycle class on the labels of a traversal.

    Args:
        order: Vertex traversal of the cycle
        value: Cycle value along that traversal

    Returns:
        MixedGraph on len(order) vertices
    """
    return from_gains(len(order), _oriented(_canonical_cycle_gains(order, value)))


def canonicalize_cycle(g):
    """
    Switch a mixed cycle to its canonical Type 0, 1 or 2 representative.

    Returns:
        tuple: (CycleType, SwitchingFunction)

    Raises:
        SwitchingError: If g is not a cycle
    """
    order = cycle_order(g)
    value = cycle_walk_value(g, order)
    theta = find_switching(g, canonical_cycle(order, value))
    if theta is None:
        raise SwitchingError("Cycle failed to reach its canonical representative")
    return CycleType.from_value(value, g.n), theta


def canonicalize_unicyclic(g):
    """
    Switch a connected unicyclic graph so the cycle is canonical and the trees undirected.

    Returns:
        tuple: (CycleType, SwitchingFunction)

    Raises:
        SwitchingError: If g is not connected with corank 1
    """
    info = structure(g)
    if len(info.components) != 1 or info.corank != 1:
        raise SwitchingError("Graph is not unicyclic")
    cycle = canonical_cycle_order([u for u, _ in nx.find_cycle(g.to_networkx())])
    value = cycle_walk_value(g, cycle)
    gains = {edge: ONE for edge in g.edges()}
    gains.update(_oriented(_canonical_cycle_gains(cycle, value)))
    theta = find_switching(g, from_gains(g.n, gains))
    if theta is None:
        raise SwitchingError("Unicyclic graph failed to reach its canonical representative")
    return CycleType.from_value(value, len(cycle)), theta


def canonical_unicyclic(g):
    """The canonical representative reached by canonicalize_unicyclic."""
    _, theta = canonicalize_unicyclic(g)
    return apply_switching(g, theta)


def signing_function(g):
    """
    Switching function that makes H(g) a real +-1 matrix.

    Raises:
        SwitchingError: If some cycle of g has a non-real value
    """
    theta = _propagate(g, lambda a, b: ONE)
    for (u, v), value in switched_gains(g, theta).items():
        if not value.is_real:
            raise SwitchingError(
                f"Wrong type: the cycle closed by edge ({u}, {v}) has a non-real value")
    return theta


def to_signed(g):
    """
    Switch a real mixed graph (every cycle value +-1) to a signed graph.

    A Type 2 unicyclic graph yields exactly one negative edge on its cycle.

    Raises:
        SwitchingError: If some cycle value is non-real
    """
    theta = signing_function(g)
    negative = [edge for edge, value in switched_gains(g, theta).items() if value == MINUS_ONE]
    return SignedGraph(underlying_graph(g), frozenset(negative))


def realize_gains(n, gains):
    """
    Find a mixed graph switching equivalent to a gain assignment.

    Gains may contain -1; a backtracking search over theta looks for a
    switching that moves every -1 away.

    Args:
        n: Vertex count
        gains: Mapping (u, v), u < v, to GaussianUnit

    Returns:
        MixedGraph or None when the switching class holds no mixed graph
    """
    if all(value != MINUS_ONE for value in gains.values()):
        return from_gains(n, gains)

    neighbors = {v: [] for v in range(n)}
    for (u, v), value in gains.items():
        neighbors[u].append((v, value))
        neighbors[v].append((u, value.conjugate()))

    # BFS order per component so every vertex after a root meets an assigned neighbour
    order, seen = [], set()
    for root in range(n):
        if root in seen:
            continue
        seen.add(root)
        queue = deque([root])
        while queue:
            a = queue.popleft()
            order.append(a)
            for b, _ in sorted(neighbors[a]):
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
    position = {v: i for i, v in enumerate(order)}
    roots = set()
    for v in order:
        if all(position[w] > position[v] for w, _ in neighbors[v]):
            roots.add(v)

    theta = [None] * n

    def assign(index):
        if index == len(order):
            return True
        v = order[index]
        candidates = (ONE,) if v in roots else UNITS
        for unit in candidates:
            # entry (w, v) becomes theta(w) h(w, v) conj(theta(v))
            if all(theta[w] is None or theta[w] * value.conjugate() * unit.conjugate() != MINUS_ONE
                   for w, value in neighbors[v]):
                theta[v] = unit
                if assign(index + 1):
                    return True
        theta[v] = None
        return False

    if not assign(0):
        return None
    switched = {(u, v): theta[u] * value * theta[v].conjugate() for (u, v), value in gains.items()}
    return from_gains(n, switched)
