from typing import Optional


class BrownianClausiusError(Exception):
    """Base class for all errors raised by this package."""


class NumericDomainError(BrownianClausiusError):
    """A requested quantity is not defined (or not computable) at the given arguments."""


class PoleError(NumericDomainError):
    pass


class ParameterDomainError(NumericDomainError):
    pass


class CriticalDampingError(NumericDomainError):
    pass


class UncertaintyViolationError(NumericDomainError):
    pass


class PureStateError(NumericDomainError):
    pass


class NonFiniteError(NumericDomainError):
    pass


class DegenerateStateError(NumericDomainError):
    pass


class PathCrossingError(NumericDomainError):
    pass


class ConvergenceError(NumericDomainError):
    pass


class MatrixOverflowError(NumericDomainError):
    def __init__(self, message: str, advisory_n_cut: int) -> None:
        super().__init__(f"{message} (advisory n_cut: {advisory_n_cut})")
        self.advisory_n_cut = advisory_n_cut


class ConsistencyError(NumericDomainError):
    def __init__(self, message: str, quantity: Optional[str] = None) -> None:
        super().__init__(message if quantity is None else f"{quantity}: {message}")
        self.quantity = quantity


class SelfTestFailure(BrownianClausiusError):
    def __init__(self, failed: list[str]) -> None:
        super().__init__(f"Self-test checks out of tolerance: {', '.join(failed)}")
        self.failed = failed


__all__ = [
    "BrownianClausiusError",
    "NumericDomainError",
    "PoleError",
    "ParameterDomainError",
    "CriticalDampingError",
    "UncertaintyViolationError",
    "PureStateError",
    "NonFiniteError",
    "DegenerateStateError",
    "PathCrossingError",
    "ConvergenceError",
    "MatrixOverflowError",
    "ConsistencyError",
    "SelfTestFailure",
]
