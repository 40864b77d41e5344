"""
Analysis Logger Module for the Hermitian spectral engine.

This module keeps a bounded, thread-safe, in-memory record of the analysis
steps the engine performs (enumerations, reconstructions, mate searches,
out campaigns, identity checks) so the CLI and the verification suite can
show what was done and how long it took.
"""

import threading
from datetime import datetime
from typing import Any, Dict, List, Optional

# Thread-safe log storage
_log_lock = threading.Lock()
_logs = []
_max_logs = 500  # Maximum number of logs to keep in memory

STEP_TYPES = (
    "enumeration",
    "reconstruction",
    "mate_search",
    "dhs_verdict",
    "out_campaign",
    "identity_check",
    "verification",
    "registry",
    "error",
)


class AnalysisLogger:
    """
    Class for logging analysis steps and events of the spectral engine.
    Provides methods for logging different types of events and retrieving logs.
    """

    def log_event(self, event_type: str, message: str, details: Dict[str, Any]) -> Dict[str, Any]:
        """
        Log a general event.

        Args:
            event_type: Type of event (one of STEP_TYPES)
            message: Human-readable message describing the event
            details: Additional details about the event

        Returns:
            The created log entry
        """
        if event_type not in STEP_TYPES:
            raise ValueError(f"Unknown step type: {event_type}")

        log_entry = {
            "timestamp": datetime.now().isoformat(),
            "step_type": event_type,
            "subject": details.get("subject", "general"),
            "message": message,
            "details": details,
        }

        with _log_lock:
            _logs.append(log_entry)
            # Trim logs if they exceed the maximum
            if len(_logs) > _max_logs:
                _logs.pop(0)

        return log_entry

    def get_logs(self, log_type: Optional[str] = None, subject: Optional[str] = None,
                 limit: int = 50) -> List[Dict[str, Any]]:
        """
        Get logs with optional filtering.

        Args:
            log_type: Filter logs by step type
            subject: Filter logs by subject (graph name, campaign, check id)
            limit: Maximum number of logs to return

        Returns:
            List of log entries matching the filters, newest first
        """
        return get_logs(limit=limit, subject=subject, step_type=log_type)

    def log_enumeration(self, order: int, size: Optional[int], classes: int, elapsed: float) -> Dict[str, Any]:
        """Log one completed enumeration of switching classes."""
        details = {
            "subject": f"order={order},size={size}",
            "order": order,
            "size": size,
            "classes": classes,
            "elapsed_s": round(elapsed, 4),
        }
        message = f"Enumerated {classes} switching classes of order {order}"
        return self.log_event("enumeration", message, details)

    def log_reconstruction(self, name: str, candidates: int, matches: int, elapsed: float) -> Dict[str, Any]:
        """
        Log a graph reconstruction from an exact spectrum.

        Args:
            name: Letter or family name being reconstructed
            candidates: Number of switching classes examined
            matches: Number of classes whose char poly matched
            elapsed: Wall time in seconds

        Returns:
            The created log entry
        """
        details = {
            "subject": name,
            "candidates": candidates,
            "matches": matches,
            "elapsed_s": round(elapsed, 4),
        }
        message = f"Reconstruction of {name}: {matches} matching classes out of {candidates}"
        return self.log_event("reconstruction", message, details)

    def log_mate_search(self, target: str, mode: str, catalog_size: int, mates: int,
                        exhaustive: bool, elapsed: float) -> Dict[str, Any]:
        """
        Log a cospectral-mate search.

        Args:
            target: Label of the target graph
            mode: "free" or "guided"
            catalog_size: Number of candidate components that divide the target char poly
            mates: Number of mates found
            exhaustive: Whether the search covered the whole order/size space
            elapsed: Wall time in seconds

        Returns:
            The created log entry
        """
        details = {
            "subject": target,
            "mode": mode,
            "catalog_size": catalog_size,
            "mates": mates,
            "exhaustive": exhaustive,
            "elapsed_s": round(elapsed, 4),
        }
        message = f"Mate search for {target} ({mode}): {mates} mates"
        return self.log_event("mate_search", message, details)

    def log_dhs_verdict(self, target: str, status: str, reason: str) -> Dict[str, Any]:
        """Log a DHS verdict."""
        details = {"subject": target, "status": status, "reason": reason}
        return self.log_event("dhs_verdict", f"{target}: {status}", details)

    def log_campaign_result(self, campaign: str, members: int, out_members: int,
                            counterexamples: int, elapsed: float) -> Dict[str, Any]:
        """
        Log an out-campaign result.

        Args:
            campaign: Campaign name
            members: Switching classes examined
            out_members: Classes with an eigenvalue outside (-2, 2)
            counterexamples: Classes that are not out
            elapsed: Wall time in seconds

        Returns:
            The created log entry
        """
        details = {
            "subject": campaign,
            "members": members,
            "out_members": out_members,
            "counterexamples": counterexamples,
            "elapsed_s": round(elapsed, 4),
        }
        status = "all out" if counterexamples == 0 else f"{counterexamples} counterexamples"
        message = f"Out campaign {campaign}: {members} classes, {status}"
        return self.log_event("out_campaign", message, details)

    def log_identity_check(self, identity: str, holds: bool) -> Dict[str, Any]:
        """Log one spectral identity check."""
        details = {"subject": identity, "holds": holds}
        status = "holds" if holds else "FAILS"
        return self.log_event("identity_check", f"Identity {identity} {status}", details)

    def log_verification_check(self, check_id: str, passed: bool, elapsed: float,
                               budget: Optional[float] = None) -> Dict[str, Any]:
        """Log one verification check."""
        details = {
            "subject": check_id,
            "passed": passed,
            "elapsed_s": round(elapsed, 4),
            "budget_s": budget,
        }
        status = "PASSED" if passed else "FAILED"
        return self.log_event("verification", f"Check {check_id}: {status}", details)

    def log_error(self, subject: str, error: Exception) -> Dict[str, Any]:
        """Log an error that was surfaced to the caller."""
        details = {"subject": subject, "error_type": type(error).__name__, "error": str(error)}
        return self.log_event("error", f"{subject}: {error}", details)


def get_logs(limit: int = 50, subject: Optional[str] = None,
             step_type: Optional[str] = None) -> List[Dict[str, Any]]:
    """
    Get logs with optional filtering.

    Args:
        limit: Maximum number of logs to return
        subject: Filter logs by subject
        step_type: Filter logs by step type

    Returns:
        List of log entries matching the filters, newest first
    """
    with _log_lock:
        filtered_logs = _logs.copy()

    if subject:
        filtered_logs = [log for log in filtered_logs if log["subject"] == subject]

    if step_type:
        filtered_logs = [log for log in filtered_logs if log["step_type"] == step_type]

    # Newest first; equal timestamps keep reverse insertion order
    filtered_logs.reverse()
    filtered_logs.sort(key=lambda x: x["timestamp"], reverse=True)

    return filtered_logs[:limit]


def clear_logs() -> None:
    """Drop every stored log entry."""
    with _log_lock:
        _logs.clear()


# Shared instance used by the engine modules
analysis_logger = AnalysisLogger()
