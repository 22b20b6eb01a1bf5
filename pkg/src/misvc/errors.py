"""Exception types shared across the package."""


class InputError(ValueError):
    """Raised when caller-supplied data violates a precondition.

    The CLI maps this to exit code 2.
    """


class InternalError(RuntimeError):
    """Raised when an internal consistency check fails.

    Indicates a bug (e.g. a fold produced a self-loop, or a reconstructed
    certificate is not independent). The CLI maps this to exit code 3.
    """
