# Exception hierarchy shared by every engine module


class EngineError(Exception):
    # Base class for all engine failures
    pass


class InputError(EngineError, ValueError):
    # Malformed input: dimension/basis mismatch, bad literal, unknown key, broken constraint
    pass


class PreconditionError(InputError):
    # An operation was called outside its documented precondition
    pass


class ResourceLimitError(EngineError):
    # Cochain space larger than the configured size guard

    def __init__(self, degree: int, dimension: int, limit: int):
        self.degree = degree
        self.dimension = dimension
        self.limit = limit
        super().__init__(
            f"dim C^{degree} = {dimension} exceeds the size guard of {limit} monomials"
        )


class DegenerateFormError(EngineError):
    # The bilinear form is degenerate where a non-degenerate one is required
    pass
