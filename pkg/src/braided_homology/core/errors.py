"""Exception hierarchy.

Validating constructors raise these; check-style operations return reports
instead. Every error may carry a JSON-serializable witness.
"""

from typing import Any, Dict, List, Optional


class BraidedHomologyError(Exception):
    """Root of all library errors."""

    exit_code = 1

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        result: Dict[str, Any] = {"error": type(self).__name__, "message": self.message}
        if self.witness is not None:
            result["witness"] = _jsonable(self.witness)
        return result


def _jsonable(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value


# Malformed input (CLI exit code 2)


class InputError(BraidedHomologyError):
    exit_code = 2


class RangeError(InputError):
    pass


class ParseError(InputError):
    pass


class SizeMismatch(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class DegreeOutOfRange(InputError):
    pass


class UnsupportedDegree(InputError):
    pass


# Mathematical violations (CLI exit code 1)


class ViolationError(BraidedHomologyError):
    pass


class YbeViolation(ViolationError):
    pass


class CycleViolation(ViolationError):
    pass


class RowNotPermutation(ViolationError):
    pass


class SelfDistributivityViolation(ViolationError):
    pass


class ModuleViolation(ViolationError):
    pass


class NotAssociative(ViolationError):
    pass


class NotUnit(ViolationError):
    pass


class NotACocycle(ViolationError):
    pass


class NotCompatible(ViolationError):
    pass


class NotASection(ViolationError):
    pass


class NotAComplex(ViolationError):
    pass


class SplittingFailure(ViolationError):
    pass


# Missing structural properties


class PreconditionFailed(BraidedHomologyError):
    """Raised when an input lacks a property an operation needs."""

    def __init__(self, message: str, missing: Optional[str] = None, witness: Any = None):
        super().__init__(message, witness)
        self.missing = missing

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        if self.missing:
            result["missing"] = self.missing
        return result


class NotLeftNondegenerate(PreconditionFailed):
    def __init__(self, message: str = "braiding is not left non-degenerate", witness: Any = None):
        super().__init__(message, "left_nondegenerate", witness)


class NotInvertible(PreconditionFailed):
    def __init__(self, message: str = "braiding is not invertible", witness: Any = None):
        super().__init__(message, "invertible", witness)


class NoDegeneracies(PreconditionFailed):
    def __init__(self, message: str = "model carries no degeneracies", witness: Any = None):
        super().__init__(message, "degeneracies", witness)


class Degenerate(PreconditionFailed):
    def __init__(self, message: str = "squaring map is not bijective", witness: Any = None):
        super().__init__(message, "nondegenerate", witness)


class NotSquareFree(PreconditionFailed):
    def __init__(self, message: str = "cycle set is not square-free", witness: Any = None):
        super().__init__(message, "square_free", witness)


# Resource limits


class LimitError(BraidedHomologyError):
    pass


class TooLarge(LimitError):
    pass


class BudgetExceeded(LimitError):
    """Search budget ran out; whatever was found so far is attached."""

    def __init__(
        self,
        message: str,
        partial: Optional[List[Any]] = None,
        completed_size: Optional[int] = None,
    ):
        super().__init__(message)
        self.partial = partial or []
        self.incomplete = True
        self.completed_size = completed_size

    def to_dict(self) -> Dict[str, Any]:
        result = super().to_dict()
        result["incomplete"] = True
        result["partial_count"] = len(self.partial)
        if self.completed_size is not None:
            result["completed_size"] = self.completed_size
        return result
