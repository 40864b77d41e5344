"""
Base Out Campaign for the computer-search replications.

This module defines the base class for every campaign that enumerates the
switching classes of a family of underlying graphs and checks, by exact
Sturm counting, that each class has an eigenvalue outside (-2, 2).
"""

import time

from ..analysis_logger import analysis_logger
from ..charpoly import char_poly, count_roots_in
from ..enumeration import switching_classes


class OutCampaign:
    """Base class for all out campaigns."""

    def __init__(self, name, description=None, claim=None):
        """
        Initialize an out campaign.

        Args:
            name: Campaign name used on the command line (e.g. "deg4-order5")
            description: What the campaign enumerates
            claim: The statement being replicated
        """
        self.name = name
        self.description = description or ""
        self.claim = claim or "every switching class is (-2,2)-out"
        self.notes = []

    def add_note(self, note):
        """
        Attach a note to the campaign report.

        Args:
            note: Free text, e.g. a scope decision

        Returns:
            list: All notes
        """
        if note:
            self.notes.append(" ".join(str(note).split()))
        return self.notes

    def members(self):
        """
        Yield (label, MixedGraph) for every switching class in the campaign.

        Must be implemented by subclasses.
        """
        raise NotImplementedError("Subclasses must implement members()")

    def extra_checks(self):
        """
        Additional exact checks reported alongside the out test.

        Returns:
            list: Dictionaries with "check" and "passed" keys
        """
        return []

    @staticmethod
    def classes_of(label, g):
        """Switching classes on the underlying graph of g, labelled label#k."""
        for index, member in enumerate(switching_classes(g.n, g.edges())):
            yield f"{label}#{index}", member

    def run(self):
        """
        Enumerate the members and test each one.

        Returns:
            dict: Campaign report with counts, counterexamples, checks and notes
        """
        started = time.time()
        members, out_members, counterexamples = 0, 0, []
        for label, g in self.members():
            members += 1
            p = char_poly(g)
            inside = count_roots_in(p, -2, 2)
            if inside < g.n:
                out_members += 1
            else:
                counterexamples.append({"label": label, "graph": g.to_json(), "char_poly": p.to_json()})
        checks = self.extra_checks()
        elapsed = time.time() - started
        analysis_logger.log_campaign_result(self.name, members, out_members, len(counterexamples), elapsed)
        return {
            "campaign": self.name,
            "description": self.description,
            "claim": self.claim,
            "members": members,
            "out_members": out_members,
            "counterexamples": counterexamples,
            "checks": checks,
            "notes": list(self.notes),
            "passed": not counterexamples and members > 0 and all(c["passed"] for c in checks),
            "elapsed_s": round(elapsed, 4),
        }
