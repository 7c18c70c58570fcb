"""Exception types shared by the pure-Python and compiled kernels."""


class CosetLimitExceeded(RuntimeError):
    """Coset enumeration defined more cosets than allowed."""


class NotInSubgroup(ValueError):
    """A word expected to lie in the subgroup traces to a nonzero coset."""

    def __init__(self, message: str, coset: int):
        super().__init__(message)
        self.coset = coset


class NotWellDefined(ValueError):
    """Generator images do not kill every relator."""
