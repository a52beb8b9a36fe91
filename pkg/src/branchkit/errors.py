class BranchkitError(Exception):
    pass


class ValidationError(BranchkitError, ValueError):
    """Malformed weight, label, family or literal."""


class NotACharacterError(BranchkitError, ArithmeticError):
    """Highest-weight peeling produced a negative multiplicity."""


class NotInSupportError(BranchkitError, ValueError):
    pass


class UnsupportedOperandError(BranchkitError, TypeError):
    pass


class ResourceError(BranchkitError, RuntimeError):
    """A configured resource cap (e.g. generator count) was exceeded."""
