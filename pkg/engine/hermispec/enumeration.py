"""
Enumeration of mixed graphs up to switching and relabeling.

Underlying connected graphs are generated by single-edge augmentation of the
non-isomorphic trees, with isomorphism rejection through Weisfeiler-Lehman
hash buckets and an exact isomorphism test. Orientations are collapsed with
the forest normalization: on a fixed spanning tree every switching class has
exactly one gain vector on the chords, so classes of a connected graph are
chord vectors modulo automorphisms. Only the 2-core carries cycles, so the
automorphisms are taken on the 2-core, with the hanging trees as vertex
colours. Disconnected graphs are multisets of connected classes.
"""

import threading
import time
from collections import deque
from functools import lru_cache
from itertools import combinations, product
from typing import List, Optional

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .analysis_logger import analysis_logger
from .charpoly import char_poly
from .mixed_graph import (
    GaussianUnit,
    MixedGraph,
    component_subgraphs,
    cycle_walk_value,
    disjoint_union,
    simple_cycles,
)
from .switching import find_switching, realize_gains

# Chord vectors beyond 4**MAX_CHORDS are refused
MAX_CHORDS = 8


class SearchGuardExceeded(RuntimeError):
    """Raised when a requested enumeration is beyond the configured guards."""


class SearchConstraints(BaseModel):
    """
    Side conditions of an enumeration or mate search.

    Sizes are edge counts; components whitelists family names resolved in the
    family registry (guided searches only).
    """

    model_config = ConfigDict(frozen=True)

    max_order: int = Field(ge=1)
    min_order: int = Field(default=1, ge=1)
    size: Optional[int] = Field(default=None, ge=0)
    max_size: Optional[int] = Field(default=None, ge=0)
    max_degree: Optional[int] = Field(default=None, ge=0)
    max_corank: Optional[int] = Field(default=None, ge=0)
    connected: bool = False
    components: Optional[List[str]] = None
    max_classes: Optional[int] = Field(default=None, ge=1)

    @field_validator("components")
    @classmethod
    def _components_resolve(cls, value):
        if value is None:
            return value
        from .family_registry import default_registry

        registry = default_registry()
        for name in value:
            if registry.get_family(name) is None:
                raise ValueError(f"Component family {name!r} is not registered")
        return value

    @model_validator(mode="after")
    def _orders_consistent(self):
        if self.min_order > self.max_order:
            raise ValueError(f"min_order {self.min_order} exceeds max_order {self.max_order}")
        return self

    def size_allowed(self, m):
        if self.size is not None and m != self.size:
            return False
        return self.max_size is None or m <= self.max_size


# -- underlying graphs ----------------------------------------------------------------

def _edge_key(graph):
    return tuple(sorted(tuple(sorted(e)) for e in graph.edges()))


def _bucket_key(graph):
    degrees = tuple(sorted((d for _, d in graph.degree()), reverse=True))
    return degrees, nx.weisfeiler_lehman_graph_hash(graph, iterations=3)


def _trees(order, max_degree):
    if order == 1:
        single = nx.Graph()
        single.add_node(0)
        return [single]
    trees = []
    for tree in nx.nonisomorphic_trees(order):
        tree = nx.convert_node_labels_to_integers(tree, ordering="sorted")
        if max_degree is None or max(d for _, d in tree.degree()) <= max_degree:
            trees.append(tree)
    return trees


_LAYERS = {}
_LAYERS_LOCK = threading.Lock()


def _augment(order, previous, max_degree):
    """Connected graphs with one more edge than those in previous, up to isomorphism."""
    buckets, layer = {}, []
    for edges in previous:
        graph = nx.Graph()
        graph.add_nodes_from(range(order))
        graph.add_edges_from(edges)
        for u, v in combinations(range(order), 2):
            if graph.has_edge(u, v):
                continue
            if max_degree is not None and max(graph.degree(u), graph.degree(v)) >= max_degree:
                continue
            graph.add_edge(u, v)
            bucket = buckets.setdefault(_bucket_key(graph), [])
            if not any(nx.is_isomorphic(graph, other) for other in bucket):
                stored = graph.copy()
                bucket.append(stored)
                layer.append(_edge_key(stored))
            graph.remove_edge(u, v)
    return layer


def _connected_layer(order, size, max_degree):
    """Edge lists of the connected graphs of one order and size, built layer by layer."""
    with _LAYERS_LOCK:
        layers = _LAYERS.setdefault((order, max_degree), {})
        if not layers:
            layers[order - 1] = [_edge_key(t) for t in _trees(order, max_degree)]
        top = max(layers)
        while top < size:
            layers[top + 1] = _augment(order, layers[top], max_degree)
            top += 1
        return list(layers.get(size, []))


def connected_underlying_graphs(order, size=None, max_degree=None):
    """
    Non-isomorphic connected simple graphs of a given order.

    Args:
        order: Vertex count
        size: Exact edge count (all sizes when None)
        max_degree: Degree cap

    Returns:
        list: Edge lists (sorted pairs) on vertices 0..order-1
    """
    if order < 1:
        return []
    top = order * (order - 1) // 2
    if size is not None:
        if size < order - 1 or size > top:
            return []
        return _connected_layer(order, size, max_degree)
    return [edges for m in range(order - 1, top + 1) for edges in _connected_layer(order, m, max_degree)]


# -- switching classes of one underlying graph -------------------------------------

def _tree_code(graph, root, parent, core):
    """AHU code of the tree hanging from root, away from parent and the 2-core."""
    children = sorted(
        _tree_code(graph, child, root, core)
        for child in graph.neighbors(root)
        if child != parent and child not in core
    )
    return "(" + "".join(children) + ")"


def _core_data(n, edges):
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(edges)
    core = nx.k_core(graph, 2).copy()
    core_vertices = set(core.nodes())
    for v in core.nodes():
        core.nodes[v]["code"] = _tree_code(graph, v, None, core_vertices)
    return graph, core


def _bfs_tree(core):
    """BFS order, parents and the chord list of the 2-core."""
    order, parent = [], {}
    for root in sorted(core.nodes()):
        if root in parent:
            continue
        parent[root] = None
        queue = deque([root])
        while queue:
            a = queue.popleft()
            order.append(a)
            for b in sorted(core.neighbors(a)):
                if b not in parent:
                    parent[b] = a
                    queue.append(b)
    tree = {tuple(sorted((v, p))) for v, p in parent.items() if p is not None}
    chords = sorted(tuple(sorted(e)) for e in core.edges() if tuple(sorted(e)) not in tree)
    return order, parent, chords


def _normalize(order, parent, chords, power):
    """Chord powers after switching every BFS tree edge to 1; power(a, b) gives H[a][b] as k of i**k."""
    theta = {}
    for v in order:
        p = parent[v]
        # theta(p) h(p, v) conj(theta(v)) = 1  =>  theta(v) = theta(p) h(p, v)
        theta[v] = 0 if p is None else (theta[p] + power(p, v)) % 4
    return tuple((theta[u] + power(u, v) - theta[v]) % 4 for u, v in chords)


def _automorphisms(core):
    matcher = GraphMatcher(core, core, node_match=lambda a, b: a["code"] == b["code"])
    return list(matcher.isomorphisms_iter())


def _class_orbits(core, chords, order, parent):
    """Canonical chord vectors: the least member of each automorphism orbit."""
    automorphisms = _automorphisms(core)
    seen, canonical = set(), []
    for vector in product(range(4), repeat=len(chords)):
        if vector in seen:
            continue
        canonical.append(vector)
        for sigma in automorphisms:
            # tree edges of the image are not tree edges in general; renormalize
            image = _normalize(order, parent, chords, _image_power(chords, vector, sigma, core))
            seen.add(image)
    return canonical


def _image_power(chords, vector, sigma, core):
    """Entries of sigma(X) where X has the chord vector on the BFS tree."""
    values = {}
    chord_power = dict(zip(chords, vector))
    for u, v in core.edges():
        key = (u, v) if u < v else (v, u)
        k = chord_power.get(key, 0)
        a, b = sigma[key[0]], sigma[key[1]]
        values[(a, b)] = k
        values[(b, a)] = -k % 4

    def power(a, b):
        return values[(a, b)]

    return power


def switching_classes(n, edges):
    """
    One mixed graph per switching class (modulo automorphisms) on a connected underlying graph.

    Args:
        n: Vertex count
        edges: Edge list of a connected simple graph on 0..n-1

    Returns:
        list: MixedGraph representatives, classes with no mixed-graph member omitted

    Raises:
        SearchGuardExceeded: If the corank exceeds the chord guard
    """
    edges = [tuple(sorted(e)) for e in edges]
    corank = len(edges) - n + 1
    if corank <= 0:
        return [MixedGraph(n, frozenset(edges), frozenset())]
    if corank > MAX_CHORDS:
        raise SearchGuardExceeded(f"Corank {corank} exceeds the chord guard {MAX_CHORDS}")
    _, core = _core_data(n, edges)
    order, parent, chords = _bfs_tree(core)
    representatives = []
    for vector in _class_orbits(core, chords, order, parent):
        gains = {e: GaussianUnit(0) for e in edges}
        for chord, k in zip(chords, vector):
            gains[chord] = GaussianUnit(k)
        g = realize_gains(n, gains)
        if g is not None:
            representatives.append(g)
    return representatives


def _sort_key(g):
    degrees = tuple(sorted(g.degrees(), reverse=True))
    return (g.n, g.size, degrees, tuple(g.edges()), tuple(sorted(g.arcs)))


@lru_cache(maxsize=None)
def _connected_classes_cached(order, size, max_degree):
    classes = []
    for edges in connected_underlying_graphs(order, size, max_degree):
        classes.extend(switching_classes(order, edges))
    return tuple(sorted(classes, key=_sort_key))


def connected_classes(order, size=None, max_degree=None, max_corank=None):
    """
    Switching classes of connected mixed graphs of a given order.

    Returns:
        tuple: MixedGraph representatives in (n, m, degree sequence, edge list) order
    """
    started = time.time()
    if size is None:
        top = order * (order - 1) // 2
        if max_corank is not None:
            top = min(top, order - 1 + max_corank)
        result = tuple(g for m in range(max(order - 1, 0), top + 1)
                       for g in _connected_classes_cached(order, m, max_degree))
    else:
        if max_corank is not None and size - order + 1 > max_corank:
            return ()
        result = _connected_classes_cached(order, size, max_degree)
    analysis_logger.log_enumeration(order, size, len(result), time.time() - started)
    return result


# -- disjoint unions ---------------------------------------------------------------

def _partitions(total, largest):
    """Integer partitions of total with parts <= largest, parts non-increasing."""
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def _component_choices(orders, constraints):
    """
    Multisets of connected classes with the given component orders.

    Equal orders are taken in non-decreasing (size, index) order so every
    multiset appears once. The size budget of a component leaves room for
    the spanning trees of the components after it.
    """
    budget = constraints.size if constraints.size is not None else constraints.max_size
    corank_cap = constraints.max_corank

    def sizes(k, remaining, later, corank_left):
        top = k * (k - 1) // 2
        if remaining is not None:
            top = min(top, remaining - later)
        if corank_left is not None:
            top = min(top, k - 1 + corank_left)
        return range(max(k - 1, 0), top + 1)

    def extend(index, remaining, corank_left, last):
        if index == len(orders):
            if constraints.size is None or remaining == 0:
                yield ()
            return
        k = orders[index]
        later = sum(j - 1 for j in orders[index + 1:])
        for m in sizes(k, remaining, later, corank_left):
            pool = _connected_classes_cached(k, m, constraints.max_degree)
            for i, g in enumerate(pool):
                if last is not None and last[0] == k and (m, i) < last[1:]:
                    continue
                rest = None if remaining is None else remaining - m
                left = None if corank_left is None else corank_left - (m - k + 1)
                for tail in extend(index + 1, rest, left, (k, m, i)):
                    yield (g,) + tail

    yield from extend(0, budget, corank_cap, None)


def _component_sizes(n, constraints):
    if constraints.size is not None:
        if constraints.max_corank is not None and constraints.size - n + 1 > constraints.max_corank:
            return []
        return [constraints.size]
    top = n * (n - 1) // 2
    if constraints.max_size is not None:
        top = min(top, constraints.max_size)
    if constraints.max_corank is not None:
        top = min(top, n - 1 + constraints.max_corank)
    return range(max(n - 1, 0), top + 1)


def enumerate_up_to_switching(constraints):
    """
    Stream one representative per switching-and-relabeling class.

    Args:
        constraints: SearchConstraints

    Yields:
        MixedGraph: Representatives in (n, m, degree sequence, edge list) order per order

    Raises:
        SearchGuardExceeded: If max_classes is hit or a chord guard is exceeded
    """
    emitted = 0
    for n in range(constraints.min_order, constraints.max_order + 1):
        started = time.time()
        batch = []
        if constraints.connected:
            for m in _component_sizes(n, constraints):
                batch.extend(_connected_classes_cached(n, m, constraints.max_degree))
        else:
            for orders in _partitions(n, n):
                for parts in _component_choices(list(orders), constraints):
                    g = disjoint_union(*parts)
                    if not constraints.size_allowed(g.size):
                        continue
                    batch.append(g)
        analysis_logger.log_enumeration(n, constraints.size, len(batch), time.time() - started)
        for g in sorted(batch, key=_sort_key):
            emitted += 1
            if constraints.max_classes is not None and emitted > constraints.max_classes:
                raise SearchGuardExceeded(f"More than {constraints.max_classes} classes requested")
            yield g


# -- equivalence up to relabeling ------------------------------------------------------

def _connected_same_class(g1, g2):
    if g1.n != g2.n or g1.size != g2.size:
        return False
    graph1, core1 = _core_data(g1.n, g1.edges())
    graph2, core2 = _core_data(g2.n, g2.edges())
    if not nx.is_isomorphic(graph1, graph2):
        return False
    if core1.number_of_nodes() == 0:
        return True
    # hanging trees are switched to undirected edges, so only the core matters
    core_graph1 = _core_mixed(g1, core1)
    core_graph2 = _core_mixed(g2, core2)
    matcher = GraphMatcher(core1, core2, node_match=lambda a, b: a["code"] == b["code"])
    for mapping in matcher.isomorphisms_iter():
        relabeled = _relabel_core(core_graph1, mapping)
        if find_switching(relabeled, core_graph2) is not None:
            return True
    return False


def _core_mixed(g, core):
    """g restricted to the 2-core, keeping the original vertex numbers (other vertices isolated)."""
    kept = set(core.nodes())
    return MixedGraph(
        g.n,
        frozenset(e for e in g.undirected if e[0] in kept and e[1] in kept),
        frozenset(a for a in g.arcs if a[0] in kept and a[1] in kept),
    )


def _relabel_core(g, mapping):
    image = list(range(g.n))
    free_targets = sorted(set(range(g.n)) - set(mapping.values()))
    free_sources = sorted(set(range(g.n)) - set(mapping))
    for source, target in zip(free_sources, free_targets):
        image[source] = target
    for source, target in mapping.items():
        image[source] = target
    return g.relabel(image)


def same_class(g1, g2):
    """
    Decide whether g2 is a switching of some relabeling of g1.

    Components are matched greedily; equivalence of connected graphs searches
    the hanging-tree-preserving isomorphisms of the 2-cores and tests each
    with find_switching.
    """
    if g1.n != g2.n or g1.size != g2.size or char_poly(g1) != char_poly(g2):
        return False
    parts1 = [h for _, h in component_subgraphs(g1)]
    parts2 = [h for _, h in component_subgraphs(g2)]
    if len(parts1) != len(parts2):
        return False
    unmatched = list(parts2)
    for h in parts1:
        for index, candidate in enumerate(unmatched):
            if char_poly(h) == char_poly(candidate) and _connected_same_class(h, candidate):
                del unmatched[index]
                break
        else:
            return False
    return True


def _value_class(value):
    if value.is_real:
        return value.label
    return "+-i"


def class_certificate(g):
    """
    Switching-and-relabeling invariants of a mixed graph.

    Two graphs with different certificates are not equivalent; equal
    certificates prove nothing.
    """
    graph = g.to_networkx()
    cycles = sorted((len(c), _value_class(cycle_walk_value(g, c))) for c in simple_cycles(g))
    return {
        "wl_hash": nx.weisfeiler_lehman_graph_hash(graph, iterations=3),
        "degree_sequence": sorted(g.degrees(), reverse=True),
        "char_poly": char_poly(g).to_json(),
        "cycle_classes": [[length, label] for length, label in cycles],
    }
