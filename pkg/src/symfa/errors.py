"""Exception types shared across the package."""


class SfaError(Exception):
    """Base for all structured errors raised by this package."""


class FormatError(SfaError):
    """Malformed serialized input (bad JSON shape, unknown field, bad atom)."""


class BindingMismatch(SfaError):
    """Two automata combined over different algebra bindings."""


class UnsupportedAlgebra(SfaError):
    """Operation not defined for the given algebra kind."""


class NondeterministicInput(SfaError):
    """Operation requires a deterministic automaton and got one that is not."""
