"""Exceptions shared across the package."""


class InputError(ValueError):
    """Invalid user-supplied data or options (bad file, bad flag, bad shape).

    The CLI maps this to exit code 2; anything else that escapes is an
    internal failure (exit code 1).
    """
