"""Exception types shared across the toolkit."""


class ReversibleLogicError(Exception):
    """Base class for all revlogic errors."""


class WidthMismatchError(ReversibleLogicError):
    """A bit pattern's width does not match the gate or circuit using it."""


class DuplicateOutputError(ReversibleLogicError):
    """Two inputs map to the same output: the mapping is not reversible."""


class IncompleteMappingError(ReversibleLogicError):
    """A gate or table mapping misses (or repeats) an input pattern."""


class ConstantViolationError(ReversibleLogicError):
    """An input contradicts a constant-line declaration, or a reconstructed
    constant of an inverted circuit failed its check."""


class NetlistError(ReversibleLogicError):
    """Parse error in a netlist, gate, or table file.

    Carries the source name and 1-based line number when known, and folds
    them into the message as ``source:line: message``.
    """

    def __init__(self, message: str, source: str | None = None, line: int | None = None):
        self.source = source
        self.line = line
        prefix = ""
        if source is not None:
            prefix += f"{source}:"
        if line is not None:
            prefix += f"{line}:"
        if prefix:
            prefix += " "
        super().__init__(prefix + message)


class UnknownGateError(NetlistError):
    """A netlist applies a gate that is not in the gate library."""
