"""Exception types shared across the package.

Two failure modes are distinguished: a caller handing in parameters outside
a function's documented domain (ValidationError), and a request whose exact
answer would require more enumeration work than the hard built-in budget
allows (ResourceLimitError).  Internal arithmetic that breaks an invariant
(for instance an alternating sum that fails to collapse to an integer)
raises ArithmeticError directly; that always indicates a bug, not bad input.
"""


class ValidationError(ValueError):
    """Parameters violate a documented precondition or invariant."""


class ResourceLimitError(RuntimeError):
    """An exhaustive enumeration would exceed the hard step budget."""
