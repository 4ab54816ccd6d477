"""Exception types shared by every module.

Input errors (bad names, carrier mismatches, unmet preconditions) are kept
distinct from axiom failures: the validators report those through
ValidationReport values, and only the document parser raises them, as
AxiomError, when a source file declares a lawless structure.
"""


class InputError(Exception):
    """A structurally ill-formed input: unresolved name, carrier mismatch,
    violated precondition. Maps to CLI exit code 2."""


class ParseError(InputError):
    """A rejected source document. Carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, col {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class AxiomError(ParseError):
    """A document that parses but declares a structure failing its axioms
    (category or preorder laws). Maps to CLI exit code 1 under `validate`,
    so that callers can tell bad mathematics from bad syntax."""
