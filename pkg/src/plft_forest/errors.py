"""Shared exception types."""


class InternalInvariantError(RuntimeError):
    """Two routes that must agree produced different answers.

    Raised when an internal cross-check fails (never for bad user input);
    the CLI maps it to exit status 3.
    """
