"""Exception types shared across the package.

Everything raised on bad *domain* input derives from :class:`FrobiusError`,
so callers (notably the CLI) can distinguish domain failures from bugs.
"""

from __future__ import annotations

__all__ = [
    "FrobiusError",
    "TermSyntaxError",
    "TypeMismatch",
    "NotTauTerm",
    "NotParallel",
    "ArityMismatch",
    "BadMatching",
    "SignClash",
    "SignMismatch",
    "ShapeMismatch",
    "OutOfRange",
    "SizeGuardExceeded",
    "NonCommutativeData",
    "NonFrobeniusWarning",
]


class FrobiusError(Exception):
    """Base class for all domain errors."""


class TermSyntaxError(FrobiusError):
    """Unparseable term text; carries the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class TypeMismatch(FrobiusError):
    """A composition g . f where target(f) != source(g)."""

    def __init__(self, expected: int, found: int, path: str) -> None:
        super().__init__(
            f"type mismatch at {path or 'top'}: expected {expected}, found {found}"
        )
        self.expected = expected
        self.found = found
        self.path = path


class NotTauTerm(FrobiusError):
    """A term containing mu/eta/delta/eps where a wiring-only term is required."""


class NotParallel(FrobiusError):
    """factor_out_pair called on wires that are not adjacent in the preimage."""


class ArityMismatch(FrobiusError):
    """Gluing two arrows whose middle boundaries disagree in size."""


class BadMatching(FrobiusError):
    """A matching that is not a perfect matching of the endpoint set."""


class SignClash(FrobiusError):
    """A matched pair of endpoints violating the orientation sign rules."""


class SignMismatch(FrobiusError):
    """Composing diagrams whose middle sign sequences differ."""


class ShapeMismatch(FrobiusError):
    """Matrix arguments with incompatible shapes."""


class OutOfRange(FrobiusError):
    """A number too large for the requested digit expansion."""


class SizeGuardExceeded(FrobiusError):
    """A requested matrix would exceed the configured entry budget."""


class NonCommutativeData(FrobiusError):
    """Blockwise evaluation requested for algebra data that is not commutative."""


class NonFrobeniusWarning(UserWarning):
    """Evaluation ran on data failing one of the Frobenius axioms."""
