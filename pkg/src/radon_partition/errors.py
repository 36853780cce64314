class InvalidInputError(ValueError):
    """Malformed input: wrong dimensions, duplicate points, bad file contents."""


class DegenerateInputError(ValueError):
    """Input violates general position (or an apex is not a hull vertex).

    ``subset`` names the offending labels.
    """

    def __init__(self, message: str, subset: tuple[int, ...] = ()):
        super().__init__(message)
        self.subset = tuple(subset)


class InvariantError(RuntimeError):
    """An internal invariant that must hold for general-position input failed."""


class GeneratorFailure(RuntimeError):
    """Rejection sampling ran out of attempts."""
