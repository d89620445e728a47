class ExtremalToolkitError(Exception):
    pass


class DimensionMismatchError(ExtremalToolkitError, ValueError):
    pass


class DomainError(ExtremalToolkitError, ValueError):
    pass


class ConfigurationError(ExtremalToolkitError):
    pass


class InputDataError(ExtremalToolkitError, ValueError):

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class PreconditionError(ExtremalToolkitError):

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class GuardExceededError(ExtremalToolkitError):

    def __init__(self, guard_name: str, limit: int, requested: int):
        super().__init__(f"{guard_name} guard exceeded: requested {requested}, limit is {limit}")
        self.guard_name = guard_name
        self.limit = limit
        self.requested = requested


class ContractViolationError(ExtremalToolkitError, RuntimeError):
    pass
