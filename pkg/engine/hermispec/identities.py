"""
Exact cospectrality identities between named graphs.

Each identity states that two disjoint unions of family members have the
same characteristic polynomial. Terms with a closed-form spectrum use its
exact polynomial; theta classes and lettered graphs with a recorded
structure use the char poly of the built graph, so their identities also
check the recorded structures.
"""

from dataclasses import dataclass

from .admissible_registry import RegistryError
from .analysis_logger import analysis_logger
from .charpoly import char_poly, product
from .graph_families import AdmissibleLetterFamily, ThetaClassFamily


class IdentityFailure(AssertionError):
    """Raised when a cospectrality identity does not hold."""


# Mate lists of P_(4k+1), k = 1..7, each member cospectral with the path
P_4K1_MATES = {
    5: ["C1:3 + P:2"],
    9: ["C1:5 + P:4"],
    13: ["C1:7 + P:6", "p + P:6"],
    17: ["C1:9 + P:8", "C1:9 + P:2 + o", "v + P:8 + P:1", "v + o + P:2 + P:1"],
    21: ["C1:11 + P:10"],
    25: ["C1:13 + P:12"],
    29: [
        "C1:15 + P:14",
        "C1:15 + P:2 + P:4 + u",
        "C1:15 + P:2 + P:4 + h",
        "z + P:14 + t",
        "z + P:2 + P:4 + u + t",
        "z + P:2 + P:4 + h + t",
    ],
}


@dataclass(frozen=True)
class Identity:
    """left and right are unions written as "name:params + name:params"."""

    name: str
    left: str
    right: str

    def describe(self):
        return f"{self.left} ~ {self.right}"


def _terms(text):
    terms = []
    for part in text.split("+"):
        part = part.strip()
        name, _, params = part.partition(":")
        values = tuple(int(p) for p in params.split(",")) if params else ()
        terms.append((name.strip().strip("()"), values))
    return terms


def term_polynomial(name, params, registry):
    """Exact char poly of one named term."""
    family = registry.get_family(name)
    if family is None:
        raise RegistryError(f"Unknown graph family: {name}")
    if isinstance(family, ThetaClassFamily):
        return char_poly(family.build(params))
    if isinstance(family, AdmissibleLetterFamily) and registry.admissible.has_graph(family.letter):
        recorded = char_poly(family.build(params))
        if recorded != family.polynomial(params):
            raise IdentityFailure(f"Recorded graph ({family.letter}) does not have its registry spectrum")
        return recorded
    if isinstance(family, AdmissibleLetterFamily):
        analysis_logger.log_event(
            "registry",
            f"Graph ({family.letter}) has no recorded structure; using its registry spectrum",
            {"subject": f"({family.letter})", "unverified": True},
        )
    return family.polynomial(params)


def union_polynomial(text, registry):
    return product(term_polynomial(name, params, registry) for name, params in _terms(text))


def unrecorded_letters(text, registry):
    """Letters in a union whose polynomial comes from the registry spectrum alone."""
    letters = []
    for name, _ in _terms(text):
        family = registry.get_family(name)
        if isinstance(family, AdmissibleLetterFamily) and not registry.admissible.has_graph(family.letter):
            letters.append(family.letter)
    return letters


def family_identities():
    """Every identity checked by verify_family_identities, in a fixed order."""
    identities = []
    for k in range(1, 9):
        identities.append(Identity("path-4k+1", f"P:{4 * k + 1}", f"P:{2 * k} + C1:{2 * k + 1}"))
    identities.append(Identity("path-7", "P:7", "Gt:2 + P:1"))
    for k in range(2, 9):
        identities.append(Identity("path-4k+3-G", f"P:{4 * k + 3}", f"Gttm:{k - 1},{2 * k} + P:{k}"))
        identities.append(Identity("path-4k+3-C1", f"P:{4 * k + 3}", f"C1:{2 * k + 2} + P:{2 * k + 1}"))
    for n in range(3, 11):
        identities.append(Identity("cycle-even", f"C:{2 * n}", f"C:{n} + C2:{n}"))
        identities.append(Identity("cycle2-even", f"C2:{2 * n}", f"C1:{n} + C1:{n}"))
    for r in range(3, 9):
        identities.append(Identity("cycle-theta", f"C:{2 * r}", f"P:{r - 1} + E:{r - 1}"))
        identities.append(Identity("cycle2-pendant", f"C2:{2 * r}", f"Gttm:{r - 2},{r - 2}"))
    identities.append(Identity("path-8", "P:8", "P:2 + o"))
    identities.append(Identity("path-14-u", "P:14", "P:2 + P:4 + u"))
    identities.append(Identity("path-14-h", "P:14", "P:2 + P:4 + h"))
    for n, mates in P_4K1_MATES.items():
        for mate in mates:
            identities.append(Identity("path-4k+1-list", f"P:{n}", mate))
    identities.append(Identity("cycle1-7", "C1:7", "p"))
    identities.append(Identity("cycle1-9", "C1:9", "v + P:1"))
    identities.append(Identity("cycle1-12", "C1:12", "C1:4 + q"))
    identities.append(Identity("cycle1-15", "C1:15", "z + t"))
    identities.append(Identity("letters-g-r", "g", "r"))
    identities.append(Identity("letters-h-u", "h", "u"))
    return identities


def verify_family_identities(strict=True, registry=None):
    """
    Check every family identity exactly.

    Args:
        strict: Raise IdentityFailure when any identity fails
        registry: FamilyRegistry (the shared one when omitted)

    Returns:
        list: One dict per identity with "name", "identity" and "holds", plus
            "unrecorded" when a letter term has no recorded graph

    Raises:
        IdentityFailure: In strict mode, listing the failing identities
    """
    if registry is None:
        from .family_registry import default_registry

        registry = default_registry()
    results = []
    for identity in family_identities():
        try:
            holds = union_polynomial(identity.left, registry) == union_polynomial(identity.right, registry)
            error = None
        except (IdentityFailure, RegistryError) as e:
            holds, error = False, str(e)
        analysis_logger.log_identity_check(identity.describe(), holds)
        entry = {"name": identity.name, "identity": identity.describe(), "holds": holds}
        unrecorded = unrecorded_letters(identity.left, registry) + unrecorded_letters(identity.right, registry)
        if unrecorded:
            entry["unrecorded"] = sorted(set(unrecorded))
        if error:
            entry["error"] = error
        results.append(entry)
    failures = [r["identity"] for r in results if not r["holds"]]
    if strict and failures:
        raise IdentityFailure(f"{len(failures)} identity failure(s): " + "; ".join(failures))
    return results
