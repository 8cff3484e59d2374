"""Exception hierarchy.

Errors raised while reading input derive from :class:`InputError` (CLI exit
code 1); violated mathematical preconditions derive from
:class:`MathError` (CLI exit code 2).
"""


class QuiverCoxError(Exception):
    pass


class InputError(QuiverCoxError):
    pass


class DSLSyntaxError(InputError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class UnknownVertex(InputError):
    pass


class UnknownArrow(InputError):
    pass


class NonParallelRelation(InputError):
    pass


class NonComposablePath(InputError):
    pass


class NonAdmissibleRelation(InputError):
    pass


class DuplicateName(InputError):
    pass


class MissingDegree(InputError):
    pass


class MathError(QuiverCoxError):
    pass


class CyclicQuiver(MathError):
    pass


class Singular(MathError):
    pass


class NotUnimodular(MathError):
    pass


class NonMonic(MathError):
    pass


class ShapeMismatch(MathError):
    pass


class IndexOutOfRange(MathError):
    pass


class OrbitsNotTerminated(MathError):
    pass
