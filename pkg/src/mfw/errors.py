"""Exception hierarchy shared by every layer of the package."""


class MFWError(Exception):
    """Base class for all errors raised by mfw."""


class FieldError(MFWError):
    pass


class RingError(MFWError):
    """Bad ring declaration or operands living in different rings."""


class ParseError(MFWError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class DegreeError(MFWError):
    """An entry of a graded matrix is inhomogeneous or has the wrong degree."""


class ShapeError(MFWError):
    """Twist tuples or matrix shapes do not match."""


class FactorizationError(MFWError):
    """phi*psi or psi*phi differs from f times the identity."""


class CocycleError(MFWError):
    """A morphism pair fails to commute with the factorization maps."""


class SectionError(MFWError):
    """Hyperplane-section data violates its hypotheses (e.g. g not in wS)."""


class CapExceeded(MFWError):
    """A linear system would exceed the configured unknown-count cap."""


class ExponentMatrixError(MFWError):
    pass
