"""Audit registry and report model.

`registry` binds every catalogued identity id to an executable check and an
expected outcome; `report` runs the checks and serializes the results.
"""

from .registry import (
    REGISTRY,
    STATUSES,
    IdentityCheck,
    Outcome,
    discover_linear_relation,
)
from .report import AuditEntry, AuditReport, run_audit

__all__ = [
    "REGISTRY",
    "STATUSES",
    "IdentityCheck",
    "Outcome",
    "discover_linear_relation",
    "AuditEntry",
    "AuditReport",
    "run_audit",
]
