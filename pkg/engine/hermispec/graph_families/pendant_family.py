"""
Type 2 four-cycles with pendant paths.

G_t is C2_4 on 0..3 (arcs (0, 1), (1, 2), edges {2, 3}, {3, 0}) with the
pendant path 4..t+3 hanging from vertex 0. G_t^s (s = t + m) adds a second
pendant path t+4..t+s+3 hanging from the opposite vertex 2.
"""

from ..mixed_graph import build_mixed_graph
from ..spectra import Spectrum
from .base_family import FamilyParameterError, GraphFamily
from .path_family import path_edges

_C2_4_EDGES = [(2, 3), (3, 0)]
_C2_4_ARCS = [(0, 1), (1, 2)]


def _hang(anchor, first, length):
    """Edges of a pendant path first..first+length-1 attached at anchor."""
    return path_edges([anchor] + list(range(first, first + length)))


class PendantCycleFamily(GraphFamily):
    """G_t: C2_4 plus one pendant path P_t."""

    def __init__(self):
        super().__init__(name="Gt", arity=1, description="C2_4 on 0..3 with pendant path 4..t+3 at vertex 0")

    def validate(self, params):
        if params[0] < 1:
            raise FamilyParameterError(f"Pendant length t must be at least 1, got {params[0]}")

    def build(self, params):
        (t,) = self.check_params(params)
        return build_mixed_graph(t + 4, _C2_4_EDGES + _hang(0, 4, t), _C2_4_ARCS)

    def closed_form(self, params):
        """{2cos((2k+1)pi/(2t+4)) : k = 0..t+1} plus {2cos(pi/4), 2cos(3pi/4)}."""
        (t,) = self.check_params(params)
        pairs = [(2 * k + 1, 2 * t + 4) for k in range(t + 2)] + [(1, 4), (3, 4)]
        return Spectrum.from_exact(pairs)


class DoublePendantCycleFamily(GraphFamily):
    """G_t^(t+m): C2_4 plus pendant paths P_t and P_(t+m) on opposite vertices."""

    def __init__(self):
        super().__init__(
            name="Gttm",
            arity=2,
            description="C2_4 on 0..3, path 4..t+3 at vertex 0, path t+4..t+s+3 at vertex 2 (s = t+m)",
        )

    def validate(self, params):
        t, s = params
        if t < 1 or s < t:
            raise FamilyParameterError(f"Gttm needs 1 <= t <= t+m, got t={t}, t+m={s}")

    def build(self, params):
        t, s = self.check_params(params)
        edges = _C2_4_EDGES + _hang(0, 4, t) + _hang(2, t + 4, s)
        return build_mixed_graph(t + s + 4, edges, _C2_4_ARCS)

    def closed_form(self, params):
        """{2cos((2k+1)pi/(2s+4)) : k = 0..s+1} plus {2cos((2k+1)pi/(2t+4)) : k = 0..t+1}."""
        t, s = self.check_params(params)
        pairs = [(2 * k + 1, 2 * s + 4) for k in range(s + 2)]
        pairs += [(2 * k + 1, 2 * t + 4) for k in range(t + 2)]
        return Spectrum.from_exact(pairs)
