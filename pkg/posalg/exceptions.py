# posalg/exceptions.py

class PosalgError(Exception):
    """Base exception for workbench errors"""
    pass


class DimensionMismatchError(PosalgError):
    """Raised when the components of an algebra disagree on dimension"""

    def __init__(self, expected, actual, what="component"):
        """
        Initialize with the mismatching dimensions

        Args:
            expected (int): Dimension the carrier declares
            actual (int): Dimension found on the offending component
            what (str): Name of the offending component
        """
        self.expected = expected
        self.actual = actual
        self.what = what
        super().__init__(f"Dimension mismatch in {what}: expected {expected}, got {actual}")


class ParseError(PosalgError):
    """Raised when a serialized object violates its schema"""

    def __init__(self, field, message, line=None, column=None):
        """
        Initialize with the offending field and position

        Args:
            field (str): Dotted path of the field, e.g. 'mult[3][3]'
            message (str): What is wrong with it
            line (int, optional): Line of the document, when known
            column (int, optional): Column of the document, when known
        """
        self.field = field
        self.message = message
        self.line = line
        self.column = column
        position = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"Parse error in '{field}'{position}: {message}")


class SizeCapError(PosalgError):
    """Raised when an object would exceed a configured size cap"""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what} of size {size} exceeds the configured cap {cap}")


class CyclotomicZeroDivisionError(PosalgError, ZeroDivisionError):
    """Raised on inversion of the zero cyclotomic"""

    def __init__(self):
        super().__init__("Cyclotomic division by zero")


class StructureError(PosalgError):
    """Raised when an input does not carry the required algebraic structure"""
    pass


class NotAssociativeError(StructureError):
    """Raised when a multiplication table is not associative"""

    def __init__(self, a, b, c):
        self.triple = (a, b, c)
        super().__init__(f"Table is not associative at ({a}, {b}, {c})")


class NotInverseSemigroupError(StructureError):
    """Raised when a semigroup construction needs unique inverses"""
    pass


class NotSubgroupError(StructureError):
    """Raised when an index set is not closed under product and inverse"""
    pass


class NotAutomorphismError(StructureError):
    """Raised when a map is not an automorphism of the table"""
    pass


class EmbeddingError(StructureError):
    """Raised when a map fails to be a unit-, involution- and coinvolution-preserving algebra embedding"""
    pass


class SplittingError(StructureError):
    """Raised when a commutative algebra does not split as required"""
    pass


class NormalizationError(StructureError):
    """Raised when a projected comultiplication cannot be made grouplike"""
    pass


class QuasiCharacterError(StructureError):
    """Raised when a matrix violates the quasi-character conditions"""
    pass


class UsageError(PosalgError):
    """Raised for malformed command lines or algebra addresses"""
    pass
