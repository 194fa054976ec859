"""Idempotent tests, exhaustive enumeration over prime fields, and parametric family checks."""

from ._idempotents import (
    IdempotentList,
    check_enumeration_size,
    enumerate_idempotents_ff,
    is_idempotent,
    verify_idempotent_family,
)

__all__ = [
    "IdempotentList",
    "check_enumeration_size",
    "enumerate_idempotents_ff",
    "is_idempotent",
    "verify_idempotent_family",
]
