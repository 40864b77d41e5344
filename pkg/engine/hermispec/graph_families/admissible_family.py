"""
Lettered admissible graphs, backed by the admissible registry.

Every eigenvalue of these graphs is simple and lies in (-2, 2). Spectra are
fixed data; structures are recorded once reconstructed (or derived by hand).
"""

from .base_family import GraphFamily


class AdmissibleLetterFamily(GraphFamily):
    """One lettered graph; takes no parameters."""

    def __init__(self, letter, registry):
        super().__init__(name=letter, arity=0, description=f"admissible graph ({letter})")
        self.letter = letter
        self.registry = registry

    def build(self, params=()):
        self.check_params(params)
        return self.registry.graph(self.letter)

    def closed_form(self, params=()):
        self.check_params(params)
        return self.registry.spectrum(self.letter)

    def shorthand(self, params=()):
        return f"({self.letter})"
