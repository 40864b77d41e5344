"""
Typed mixed cycles and their signed counterparts.

The cycle is 0..n-1 in cyclic order. Type 0 is all undirected, Type 1 has the
single arc (0, 1), Type 2 has the consecutive same-direction arcs (0, 1) and
(1, 2). (C_n, -) is C_n with the single negative edge {0, 1}.
"""

from ..mixed_graph import I, MINUS_ONE, ONE, build_mixed_graph, signed_graph
from ..spectra import Spectrum
from ..switching import canonical_cycle
from .base_family import FamilyParameterError, GraphFamily
from .path_family import path_edges

CYCLE_VALUES = {0: ONE, 1: I, 2: MINUS_ONE}
CYCLE_NAMES = {0: "C", 1: "C1", 2: "C2"}


class CycleFamily(GraphFamily):
    """Mixed cycles of one switching type."""

    def __init__(self, tag):
        if tag not in CYCLE_VALUES:
            raise FamilyParameterError(f"Cycle type must be 0, 1 or 2, got {tag}")
        super().__init__(
            name=CYCLE_NAMES[tag],
            arity=1,
            description=f"Type {tag} cycle on 0..n-1 with cycle value {CYCLE_VALUES[tag]}",
        )
        self.tag = tag

    def validate(self, params):
        if params[0] < 3:
            raise FamilyParameterError(f"Cycle order must be at least 3, got {params[0]}")

    def build(self, params):
        (n,) = self.check_params(params)
        return canonical_cycle(tuple(range(n)), CYCLE_VALUES[self.tag])

    def closed_form(self, params):
        """
        Type 0: 2cos(2k*pi/n); Type 1: 2cos((2k+1)*pi/(2n)); Type 2: 2cos((2k+1)*pi/n).
        """
        (n,) = self.check_params(params)
        if self.tag == 0:
            pairs = [(2 * k, n) for k in range(n)]
        elif self.tag == 1:
            pairs = [(2 * k + 1, 2 * n) for k in range(n)]
        else:
            pairs = [(2 * k + 1, n) for k in range(n)]
        return Spectrum.from_exact(pairs)


def signed_cycle_minus(n):
    """
    (C_n, -): the cycle 0..n-1 with exactly one negative edge, {0, 1}.

    Raises:
        FamilyParameterError: If n < 3
    """
    if n < 3:
        raise FamilyParameterError(f"Cycle order must be at least 3, got {n}")
    edges = path_edges(range(n)) + [(n - 1, 0)]
    return signed_graph(n, edges, negative=[(0, 1)])


class CyclePendantFamily(GraphFamily):
    """Type 1 cycle C1_j with one pendant vertex j attached to vertex 0."""

    def __init__(self):
        super().__init__(name="C1P", arity=1, description="C1_j on 0..j-1 plus pendant vertex j on 0")

    def validate(self, params):
        if params[0] < 3:
            raise FamilyParameterError(f"Cycle order must be at least 3, got {params[0]}")

    def build(self, params):
        (j,) = self.check_params(params)
        cycle = canonical_cycle(tuple(range(j)), I)
        return build_mixed_graph(j + 1, sorted(cycle.undirected) + [(0, j)], sorted(cycle.arcs))
