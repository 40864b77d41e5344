"""
JSON codecs and command-line graph arguments.

Graph JSON is {"n": int, "undirected": [[u, v], ...], "arcs": [[tail, head], ...]}
with u < v in every undirected entry. Graph arguments are a JSON file path,
a family shorthand ("P:8", "C1:12", "Gttm:2,4", "o", "(o)") or several of
those joined with "+" for a disjoint union.
"""

import json
import os
from functools import lru_cache

import jsonschema

from .config import SCHEMA_DIR
from .mixed_graph import GraphValidationError, build_mixed_graph, disjoint_union
from .switching import SwitchingFunction


class GraphParseError(ValueError):
    """Raised when a graph argument or document cannot be parsed."""


@lru_cache(maxsize=None)
def load_schema(name):
    """Load a JSON schema from the package schema directory by file stem."""
    path = os.path.join(SCHEMA_DIR, f"{name}.schema.json")
    with open(path, "r") as f:
        return json.load(f)


def _field(error):
    parts = []
    for part in error.absolute_path:
        parts.append(f"[{part}]" if isinstance(part, int) else f".{part}")
    return "".join(parts).lstrip(".") or "<root>"


def validate_document(data, schema_name):
    """
    Validate a document against a packaged schema.

    Raises:
        GraphParseError: Naming the offending field
    """
    try:
        jsonschema.validate(instance=data, schema=load_schema(schema_name))
    except jsonschema.exceptions.ValidationError as e:
        raise GraphParseError(f"{schema_name} field {_field(e)}: {e.message}")


def graph_from_json(data):
    """
    Decode graph JSON.

    Raises:
        GraphParseError: On schema violations or unordered undirected pairs
        GraphValidationError: On loops, conflicts or out-of-range vertices
    """
    validate_document(data, "graph")
    for index, (u, v) in enumerate(data["undirected"]):
        if not u < v:
            raise GraphParseError(f"graph field undirected[{index}]: expected u < v, got [{u}, {v}]")
    return build_mixed_graph(data["n"], data["undirected"], data["arcs"])


def graph_to_json(g):
    return g.to_json()


def load_graph_file(path):
    """Read and decode a graph JSON file, reporting line and column on syntax errors."""
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise GraphParseError(f"{path}:{e.lineno}:{e.colno}: {e.msg}")
    except OSError as e:
        raise GraphParseError(f"Cannot read {path}: {e.strerror}")
    return graph_from_json(data)


def switching_from_json(data, n):
    validate_document(data, "switching")
    return SwitchingFunction.from_mapping(data, n)


def switching_to_json(theta):
    return theta.to_json()


def _parse_term(term, registry):
    term = term.strip()
    if not term:
        raise GraphParseError("Empty graph term")
    if term.endswith(".json") or os.path.sep in term:
        return load_graph_file(term), os.path.basename(term)
    name, _, raw = term.partition(":")
    name = name.strip()
    if name.startswith("(") and name.endswith(")"):
        name = name[1:-1]
    try:
        params = tuple(int(p) for p in raw.split(",")) if raw.strip() else ()
    except ValueError:
        raise GraphParseError(f"Parameters of {term!r} must be comma-separated integers")
    family = registry.get_family(name)
    if family is None:
        raise GraphParseError(
            f"Unknown family {name!r}; available: {', '.join(registry.get_available_families())}")
    return family.build(params), family.shorthand(params)


def parse_graph_argument(text, registry=None):
    """
    Parse a command-line graph argument.

    Args:
        text: File path, shorthand, or "+"-joined union of those
        registry: FamilyRegistry (the default registry when omitted)

    Returns:
        tuple: (MixedGraph, label)

    Raises:
        GraphParseError: On unknown families, bad parameters or unreadable files
    """
    from .family_registry import default_registry
    from .graph_families import FamilyParameterError

    registry = registry or default_registry()
    graphs, labels = [], []
    for term in text.split("+"):
        try:
            g, label = _parse_term(term, registry)
        except (GraphValidationError, FamilyParameterError) as e:
            raise GraphParseError(f"{term.strip()}: {e}")
        graphs.append(g)
        labels.append(label)
    if len(graphs) == 1:
        return graphs[0], labels[0]
    return disjoint_union(*graphs), " + ".join(labels)
