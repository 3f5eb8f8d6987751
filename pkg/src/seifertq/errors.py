"""Exception hierarchy shared across the package.

Each class carries the process exit code the command line tool maps it to,
so the CLI never needs a type table of its own.
"""

from __future__ import annotations


class SeifertQError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class MalformedInputError(SeifertQError):
    """Unparseable input: bad JSON, missing fields, broken triangulation file."""

    exit_code = 3


class TriangulationError(MalformedInputError):
    """Structurally invalid triangulation (non-involutive gluings etc.)."""


class DomainError(SeifertQError, ValueError):
    """Semantically invalid input or violated precondition."""

    exit_code = 4


class NonInvertibleError(DomainError):
    """Modular inverse requested for a non-coprime residue."""


class DegenerateSystemError(DomainError):
    """Operation undefined on a degenerate congruence system (no multiple fibers)."""


class NumericInconsistencyError(SeifertQError):
    """A numerical self-check failed; signals a formula or convention bug."""

    exit_code = 5
