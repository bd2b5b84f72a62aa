"""Exception types shared across the package."""


class SPSError(Exception):
    """Base class for every error raised by spsdiagram."""


class LatticeError(SPSError, ValueError):
    """A cover relation that does not describe a finite bounded lattice.

    ``kind`` is a short stable phrase ("cycle", "no maximum", ...) and
    ``witness`` holds the offending element ids.
    """

    def __init__(self, kind, witness=()):
        self.kind = kind
        self.witness = tuple(witness)
        super().__init__(f"{kind}: witness {self.witness}")


class DiagramError(SPSError, ValueError):
    def __init__(self, message, witness=()):
        self.witness = tuple(witness)
        super().__init__(message)


class ScriptError(SPSError, ValueError):
    """A construction script step that cannot be carried out.

    ``step`` is the 0-based position of the failing step, or None for
    whole-script problems.
    """

    def __init__(self, message, step=None):
        self.step = step
        prefix = f"step {step}: " if step is not None else ""
        super().__init__(prefix + message)


class ParseError(SPSError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
